"""
I(X) = ∫_X^{2X} (ψ(x) − x)² dx y J(X) = ∫_0^X (ψ(x) − x)² dx sobre enteros.

ψ es constante en [n, n+1), así que ∫_n^{n+1} (ψ(x) − x)² dx es

    piece(n) = ((n+1−ψ(n))³ − (n−ψ(n))³)/3 = d² + d + 1/3,   d = n − ψ(n),

J(X) = Σ_{n<X} piece(n) e I(X) = J(2X) − J(X). Es la misma identidad de
ventana deslizante I(X+1) = I(X) + piece(2X) + piece(2X+1) − piece(X)
resuelta con prefijos.

La corrida tiene tres fases sobre segmentos fijos de la criba:
  1. Σ Λ por segmento, en paralelo; el prefijo exacto da ψ al inicio de cada uno.
  2. Σ piece por segmento, en paralelo; el prefijo exacto da J al inicio de cada uno.
  3. Por cada segmento s con registros se recalculan los J de s, 2s y 2s+1.
Todas las sumas son enteras y exactas, y la representación se normaliza
antes de pasar a float: los registros son idénticos bit a bit para
cualquier número de procesos.
"""
import logging
import time
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
import pandas as pd

from app.config import SIEVE_SEGMENT
from app.shared.errors import DomainError
from app.shared.fixed_point import ExactSum, quantize
from app.shared.parallel import ordered_iter, ordered_map
from .schemas import CSV_COLUMNS, CSV_COLUMNS_WITH_J, MeanSquareSeries
from .sieve import PSI_COARSE_BITS, PSI_FINE_BITS, BasePrimes, lambda_segment, segment_bounds

logger = logging.getLogger(__name__)

J_COARSE_BITS = 0
J_FINE_BITS = 40
# n·2^30 debe caber en int64 para n ≤ 2·X
MAX_X = 1 << 31

Seed = Tuple[int, int]
Sink = Callable[[pd.DataFrame], None]

_STATE: Dict[str, object] = {}


def _init_worker(limit: int, segment: int, psi_seeds: List[Seed], j_seeds: List[Seed]) -> None:
    _STATE["base"] = BasePrimes(limit)
    _STATE["limit"] = limit
    _STATE["segment"] = segment
    _STATE["psi_seeds"] = psi_seeds
    _STATE["j_seeds"] = j_seeds


def _carry(coarse: np.ndarray, fine: np.ndarray, shift: int) -> Tuple[np.ndarray, np.ndarray]:
    """Forma normal 0 ≤ fine < 2^shift, vectorial"""
    return coarse + np.right_shift(fine, shift), np.bitwise_and(fine, (1 << shift) - 1)


def _bounds(k: int) -> Tuple[int, int]:
    return segment_bounds(k, _STATE["limit"], _STATE["segment"])


def _psi_segment_sum(k: int) -> Seed:
    start, stop = _bounds(k)
    coarse, fine = quantize(lambda_segment(start, stop, _STATE["base"]), PSI_COARSE_BITS, PSI_FINE_BITS)
    return int(coarse.sum(dtype=np.int64)), int(fine.sum(dtype=np.int64))


def _segment_pieces(k: int) -> np.ndarray:
    """piece(n) para n en el segmento k, con ψ exacto desde la semilla"""
    start, stop = _bounds(k)
    coarse, fine = quantize(lambda_segment(start, stop, _STATE["base"]), PSI_COARSE_BITS, PSI_FINE_BITS)
    seed_c, seed_f = _STATE["psi_seeds"][k]
    psi_c, psi_f = _carry(np.cumsum(coarse) + np.int64(seed_c), np.cumsum(fine) + np.int64(seed_f),
                          PSI_FINE_BITS - PSI_COARSE_BITS)
    n = np.arange(start, stop, dtype=np.int64)
    d_coarse = np.left_shift(n, PSI_COARSE_BITS) - psi_c
    d = d_coarse.astype(np.float64) * 2.0 ** -PSI_COARSE_BITS - psi_f.astype(np.float64) * 2.0 ** -PSI_FINE_BITS
    return d * d + d + 1.0 / 3.0


def _j_segment_sum(k: int) -> Seed:
    coarse, fine = quantize(_segment_pieces(k), J_COARSE_BITS, J_FINE_BITS)
    return int(coarse.sum(dtype=np.int64)), int(fine.sum(dtype=np.int64))


def _j_segment(k: int) -> Tuple[int, np.ndarray, np.ndarray]:
    """(inicio, J_grueso, J_fino) con J(n) = Σ_{m<n} piece(m) para n en el segmento"""
    start, _ = _bounds(k)
    coarse, fine = quantize(_segment_pieces(k), J_COARSE_BITS, J_FINE_BITS)
    seed_c, seed_f = _STATE["j_seeds"][k]
    j_c = np.cumsum(coarse) - coarse + np.int64(seed_c)
    j_f = np.cumsum(fine) - fine + np.int64(seed_f)
    return start, j_c, j_f


def _prefix(sums: List[Seed], coarse_bits: int, fine_bits: int) -> List[Seed]:
    """Semillas normalizadas: la entrada k es la suma exacta de los segmentos < k"""
    acc = ExactSum(coarse_bits, fine_bits)
    seeds = []
    for c, f in sums:
        acc.normalize()
        seeds.append((acc.coarse, acc.fine))
        acc.add_exact(ExactSum(coarse_bits, fine_bits, c, f))
    acc.normalize()
    seeds.append((acc.coarse, acc.fine))
    return seeds


class PrefixRun:
    """Semillas de ψ y J por segmento hasta ``limit``"""

    def __init__(self, limit: int, workers: int = 1, segment: int = SIEVE_SEGMENT):
        if limit > 2 * MAX_X:
            raise DomainError(f"el rango supera 2·{MAX_X}")
        self.limit = limit
        self.workers = workers
        self.segment = segment
        self.n_segments = limit // segment + 1
        segments = range(self.n_segments)

        started = time.perf_counter()
        psi_sums = ordered_map(_psi_segment_sum, segments, workers, _init_worker, (limit, segment, [], []))
        self.psi_seeds = _prefix(psi_sums, PSI_COARSE_BITS, PSI_FINE_BITS)
        j_sums = ordered_map(_j_segment_sum, segments, workers, _init_worker, (limit, segment, self.psi_seeds, []))
        self.j_seeds = _prefix(j_sums, J_COARSE_BITS, J_FINE_BITS)
        logger.info(f"Semillas de ψ y J hasta {limit}: {self.n_segments} segmentos en {time.perf_counter() - started:.2f}s")

    @property
    def initargs(self):
        return (self.limit, self.segment, self.psi_seeds, self.j_seeds)

    def j(self, n: int) -> ExactSum:
        """J(n) exacto, 0 ≤ n ≤ limit"""
        if not 0 <= n <= self.limit:
            raise DomainError(f"J({n}) fuera de [0, {self.limit}]")
        _init_worker(*self.initargs)
        start, j_c, j_f = _j_segment(n // self.segment)
        i = n - start
        return ExactSum(J_COARSE_BITS, J_FINE_BITS, int(j_c[i]), int(j_f[i])).normalize()


def j_prefix(X: int) -> float:
    """J(X) = ∫_0^X (ψ(x) − x)² dx"""
    if X < 1:
        raise DomainError(f"j_prefix requiere X ≥ 1 (X = {X})")
    return PrefixRun(X).j(X).value()


def mean_square_I(X: int) -> float:
    """I(X) = J(2X) − J(X), restados en exacto"""
    if X < 1:
        raise DomainError(f"mean_square_I requiere X ≥ 1 (X = {X})")
    run = PrefixRun(2 * X)
    return float(run.j(2 * X).as_fraction() - run.j(X).as_fraction())


def _to_float(coarse: np.ndarray, fine: np.ndarray) -> np.ndarray:
    coarse, fine = _carry(coarse, fine, J_FINE_BITS - J_COARSE_BITS)
    return coarse.astype(np.float64) + fine.astype(np.float64) * 2.0 ** -J_FINE_BITS


def _records(job: Tuple[int, int, int, int, bool]) -> pd.DataFrame:
    s, x_lo, x_hi, stride, with_j = job
    start, stop = _bounds(s)
    first = max(x_lo, start)
    first += (-(first - x_lo)) % stride
    X = np.arange(first, min(x_hi, stop - 1) + 1, stride, dtype=np.int64)
    columns = CSV_COLUMNS_WITH_J if with_j else CSV_COLUMNS
    if X.size == 0:
        return pd.DataFrame(columns=columns)

    low_start, low_c, low_f = _j_segment(s)
    high_parts = [_j_segment(k) for k in (2 * s, 2 * s + 1) if _bounds(k)[0] <= _STATE["limit"]]
    high_start = high_parts[0][0]
    high_c = np.concatenate([p[1] for p in high_parts])
    high_f = np.concatenate([p[2] for p in high_parts])

    lo_idx = X - low_start
    hi_idx = 2 * X - high_start
    I = _to_float(high_c[hi_idx] - low_c[lo_idx], high_f[hi_idx] - low_f[lo_idx])
    X2 = X.astype(np.float64) ** 2
    frame = {"X": X, "I": I, "I_over_X2": I / X2}
    if with_j:
        J = _to_float(low_c[lo_idx], low_f[lo_idx])
        frame["J"] = J
        frame["two_J_over_X2"] = 2.0 * J / X2
    return pd.DataFrame(frame, columns=columns)


def stream_mean_square(
    x_lo: int,
    x_hi: int,
    stride: int = 1,
    sink: Optional[Sink] = None,
    workers: int = 1,
    with_j: bool = False,
    segment: int = SIEVE_SEGMENT,
) -> MeanSquareSeries:
    """
    Registros (X, I(X), I(X)/X²) para X = x_lo, x_lo + stride, … ≤ x_hi.

    Con ``sink`` cada bloque de registros se entrega al sumidero en orden y
    no se guarda; la serie devuelta solo lleva los extremos.
    """
    if not 1 <= x_lo <= x_hi:
        raise DomainError(f"rango inválido [{x_lo}, {x_hi}]")
    if stride < 1:
        raise DomainError("stride debe ser ≥ 1")
    if x_hi > MAX_X:
        raise DomainError(f"x_hi supera {MAX_X}")

    run = PrefixRun(2 * x_hi, workers, segment)
    jobs = [(s, x_lo, x_hi, stride, with_j) for s in range(x_lo // segment, x_hi // segment + 1)]
    kept: List[pd.DataFrame] = []
    count = 0
    min_ratio, max_ratio, min_I = np.inf, -np.inf, np.inf
    for block in ordered_iter(_records, jobs, workers, _init_worker, run.initargs):
        if block.empty:
            continue
        count += len(block)
        min_ratio = min(min_ratio, float(block["I_over_X2"].min()))
        max_ratio = max(max_ratio, float(block["I_over_X2"].max()))
        min_I = min(min_I, float(block["I"].min()))
        if sink is not None:
            sink(block)
        else:
            kept.append(block)

    columns = CSV_COLUMNS_WITH_J if with_j else CSV_COLUMNS
    records = pd.concat(kept, ignore_index=True) if kept else pd.DataFrame(columns=columns)
    logger.info(f"{count} registros en [{x_lo}, {x_hi}]; I/X² ∈ [{min_ratio:.6g}, {max_ratio:.6g}]")
    return MeanSquareSeries(
        records=records,
        stride=stride,
        count=count,
        min_ratio=min_ratio,
        max_ratio=max_ratio,
        min_I=min_I,
        with_j=with_j,
    )


class CsvSink:
    """Escribe los bloques como CSV con 17 cifras significativas"""

    def __init__(self, handle, with_j: bool = False):
        self.handle = handle
        self.handle.write(",".join(CSV_COLUMNS_WITH_J if with_j else CSV_COLUMNS) + "\n")

    def __call__(self, block: pd.DataFrame) -> None:
        block.to_csv(self.handle, header=False, index=False, float_format="%.17g")
