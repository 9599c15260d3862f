"""
Sumas dobles Σ_{0<γ₁≤T} Σ_{−T≤γ₂≤T} k(γ₁,γ₂) por bloques fijos de γ₁.

Cada fila γ₁ se suma entera con sum_enclosure; los parciales de fila se
combinan con fsum en orden de índice, así el resultado es idéntico bit a
bit para cualquier número de procesos.
"""
import logging
import time
from typing import Dict, List, Tuple

import numpy as np

from app.config import PAIR_BLOCK_SIZE
from app.modules.zeros.schemas import ZeroTable
from app.shared.enclosure import Interval, SumPolicy, combine_partials, sum_enclosure
from app.shared.enums import PairKernel
from app.shared.parallel import block_ranges, ordered_map
from .kernels import KERNELS

logger = logging.getLogger(__name__)

# Estado de cada proceso, fijado por el inicializador
_STATE: Dict[str, object] = {}


def _init_worker(lo: np.ndarray, hi: np.ndarray, kernel: str) -> None:
    _STATE["gamma1"] = Interval(lo, hi)
    _STATE["gamma2"] = Interval(np.concatenate([lo, -hi]), np.concatenate([hi, -lo]))
    _STATE["kernel"] = KERNELS[PairKernel(kernel)]


def _block(bounds: Tuple[int, int]) -> List[Tuple[float, float]]:
    a, b = bounds
    gamma1: Interval = _STATE["gamma1"]
    gamma2: Interval = _STATE["gamma2"]
    kernel = _STATE["kernel"]
    rows = []
    for i in range(a, b):
        row = sum_enclosure(kernel(gamma1[i], gamma2), SumPolicy.chunked())
        rows.append((float(row.lo), float(row.hi)))
    return rows


def pair_sum(table: ZeroTable, n: int, kernel: PairKernel, workers: int = 1) -> Interval:
    """Σ_{i≤n} Σ_{j≤n, ±} k(γ̂_i, ±γ̂_j) sobre las primeras n ordenadas"""
    if n == 0:
        return Interval(0.0)
    kernel = PairKernel(kernel)
    g = table.ordinates[:n]
    blocks = block_ranges(n, PAIR_BLOCK_SIZE)
    logger.info(f"Suma doble {kernel.value}: {n} ceros, {len(blocks)} bloques, {workers} proceso(s)")
    started = time.perf_counter()
    results = ordered_map(
        _block,
        blocks,
        workers=workers,
        initializer=_init_worker,
        initargs=(np.array(g.lo), np.array(g.hi), kernel.value),
    )
    total = combine_partials(row for block in results for row in block)
    logger.debug(f"Suma doble {kernel.value} terminada en {time.perf_counter() - started:.2f}s")
    return total
