"""
Validación de la tabla contra la fórmula de conteo de ceros

    N(T) = (T/2π) log(T/2π) − T/2π + 7/8 + Q(T),   |Q(T)| ≤ A log T.
"""
import logging
from typing import Union

import numpy as np
import pandas as pd

from app.config import COUNTING_CONSTANT_A
from app.shared.enclosure import E, TWO_PI, Interval, as_interval, make_interval, next_up
from app.shared.enums import CheckpointMode
from app.shared.errors import DomainError
from .schemas import ValidationReport, ZeroTable

logger = logging.getLogger(__name__)

SEVEN_EIGHTHS = make_interval("0.875")
# Cota incondicional |Q(T)| ≤ 0.11 log T + 0.29 log log T + 2.29 + 0.2/T, T ≥ 2πe
BACKLUND_COEFFS = (make_interval("0.11"), make_interval("0.29"), make_interval("2.29"), make_interval("0.2"))

Height = Union[float, np.ndarray, Interval]


def counting_main_term(T: Height) -> Interval:
    """Encierro de (T/2π)log(T/2π) − T/2π + 7/8"""
    T = as_interval(T)
    if np.any(T.hi < TWO_PI.lo):
        raise DomainError("counting_main_term requiere T ≥ 2π")
    t = T / TWO_PI
    return t * t.ln() - t + SEVEN_EIGHTHS


def backlund_error_bound(T: Height) -> Interval:
    T = as_interval(T)
    if np.any(T.hi < (TWO_PI * E).lo):
        raise DomainError("la cota de Backlund requiere T ≥ 2πe")
    a, b, c, d = BACKLUND_COEFFS
    L = T.ln()
    return a * L + b * L.ln() + c + d / T


def backlund_crossover(A: float = float(COUNTING_CONSTANT_A)) -> float:
    """
    Altura a partir de la cual la cota de Backlund ya implica |Q(T)| ≤ A log T.

    Bisección sobre log T; el valor devuelto está del lado seguro.
    """
    A_iv = make_interval(repr(A))

    def holds(log_t: float) -> bool:
        T = float(np.exp(log_t))
        return bool(backlund_error_bound(T).hi <= (A_iv * Interval(T).ln()).lo)

    lo, hi = float(np.log(2 * np.pi * np.e)) + 1e-9, 200.0
    if not holds(hi):
        return float("inf")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if holds(mid):
            hi = mid
        else:
            lo = mid
    return float(np.exp(hi))


def _checkpoints(table: ZeroTable, mode: CheckpointMode):
    g = table.ordinates
    n = len(table)
    if mode == CheckpointMode.MIDPOINTS:
        heights = np.concatenate([0.5 * g.hi[:-1] + 0.5 * g.lo[1:], [next_up(g.hi[-1], 2)]])
        counts = np.arange(1, n + 1)
        return heights, counts
    # Extremos de cada hueco: el término principal es creciente, así que
    # basta comparar en ambos bordes para cubrir todo el hueco.
    heights = np.concatenate([[float(TWO_PI.hi), g.lo[0]], g.hi, g.lo[1:]])
    counts = np.concatenate([[0, 0], np.arange(1, n + 1), np.arange(1, n)])
    order = np.argsort(heights, kind="stable")
    return heights[order], counts[order]


def validate_counting(
    table: ZeroTable,
    A: float = float(COUNTING_CONSTANT_A),
    mode: CheckpointMode = CheckpointMode.MIDPOINTS,
) -> ValidationReport:
    """Comprueba |N(T) − término principal| ≤ A log T en cada punto de control"""
    mode = CheckpointMode(mode)
    heights, counts = _checkpoints(table, mode)
    T = Interval(heights)
    main = counting_main_term(T)
    margin = abs(Interval(counts.astype(np.float64)) - main)
    bound = make_interval(repr(A)) * T.ln()
    ok = margin.hi < bound.lo

    ratio = margin.hi / bound.lo
    worst = int(np.argmax(ratio))
    crossover = backlund_crossover(A)

    frame = pd.DataFrame({
        "T": heights,
        "N": counts,
        "main_lo": main.lo,
        "main_hi": main.hi,
        "margin_lo": margin.lo,
        "margin_hi": margin.hi,
        "bound_lo": bound.lo,
        "ok": ok,
    })
    passed = bool(np.all(ok))
    if not passed:
        logger.warning(f"Conteo de ceros: {int((~ok).sum())} puntos de control fallan con A = {A}")
    logger.info(f"Validación de conteo hasta {table.max_height:.3f}: peor razón {float(ratio[worst]):.6f}")

    return ValidationReport(
        A=A,
        mode=mode,
        checkpoints=frame,
        worst_margin=margin[worst],
        worst_height=float(heights[worst]),
        worst_ratio=float(ratio[worst]),
        passed=passed,
        height_ceiling=table.max_height,
        backlund_crossover=crossover,
        reaches_backlund=table.max_height >= crossover,
    )
