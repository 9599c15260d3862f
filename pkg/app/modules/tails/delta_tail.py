"""
Cota de la cola del δ de la cota inferior:

    ∫_T^∞ h_λ(t) log(t/2π) dt + 2A·h_λ(T) log T + A ∫_T^∞ h_λ(t)/t dt

con cuadratura certificada en [T, T_cut] y un mayorante cerrado más allá.
"""
import logging
from typing import Union

import numpy as np

from app.config import COUNTING_CONSTANT_A
from app.shared.enclosure import LN2, TWO_PI, Interval, SumPolicy, as_interval, make_interval, next_down, sum_enclosure
from app.shared.enums import HNormalization, TailMode
from app.shared.errors import DomainError
from .bounds import THRESHOLD_2PI_E, log_power_integrals

logger = logging.getLogger(__name__)

ALPHA = LN2 / 6.0
# Con el intervalo completo evaluado en cada tramo la sobreestimación relativa
# es ≈ 2.5·log(T_cut/T)/piezas; 2^18 piezas la dejan por debajo de 1e-4.
QUADRATURE_PIECES = 1 << 18
# Con T_cut = 4T la cola cerrada sola pasa de 3.5e-9 en T = 446000
CUT_FACTOR = 256.0

Real = Union[float, Interval]


def _lambda_interval(lam: Real) -> Interval:
    if isinstance(lam, Interval):
        return lam
    if lam <= 0:
        raise DomainError("λ debe ser positivo")
    return make_interval(repr(float(lam)))


def h_lambda(
    t: Real,
    lam: Real,
    gamma1: Interval,
    normalization: HNormalization = HNormalization.DIVIDED,
) -> Interval:
    """
    h_λ(t) = (t−λ−γ₁)/(t(α(t−γ₁))³) + (t+λ+γ₁)/(t(α(t+γ₁))³).

    Con la normalización ``divided`` se divide además por λ, que es el factor
    de |1 − z/λ| = |z − λ|/λ en |g(z)|; ``printed`` deja el display sin ese
    factor y es más conservadora para λ > 1.
    """
    t = as_interval(t)
    lam_iv = _lambda_interval(lam)
    near = t - lam_iv - gamma1
    if np.any(near.lo <= 0.0):
        raise DomainError("h_λ requiere t > γ₁ + λ")
    first = near / (t * (ALPHA * (t - gamma1)).powi(3))
    second = (t + lam_iv + gamma1) / (t * (ALPHA * (t + gamma1)).powi(3))
    h = first + second
    if HNormalization(normalization) == HNormalization.DIVIDED:
        h = h / lam_iv
    return h


def delta_tail_bound(
    T: float,
    lam: float,
    gamma1: Interval,
    A: str = COUNTING_CONSTANT_A,
    normalization: HNormalization = HNormalization.DIVIDED,
    pieces: int = QUADRATURE_PIECES,
) -> Interval:
    gamma1 = as_interval(gamma1)
    lam_iv = _lambda_interval(lam)
    if not T > float((gamma1 + lam_iv).hi):
        raise DomainError(f"delta_tail_bound requiere T > γ̂₁ + λ (T = {T!r})")
    if T < float(THRESHOLD_2PI_E.hi):
        raise DomainError("delta_tail_bound requiere T > 2πe")
    A_iv = make_interval(A)

    # Tramo [T, T_cut]: cota del integrando en cada subintervalo por su ancho
    T_cut = max(CUT_FACTOR * T, 20.0 * float((gamma1 + lam_iv).hi))
    edges = np.geomspace(T, T_cut, pieces + 1)
    edges[0], edges[-1] = T, T_cut
    pieces_iv = Interval(edges[:-1], edges[1:])
    widths = Interval(edges[1:]) - Interval(edges[:-1])
    h = h_lambda(pieces_iv, lam_iv, gamma1, normalization)
    main = sum_enclosure(h * (pieces_iv / TWO_PI).ln() * widths, SumPolicy.chunked())
    over_t = sum_enclosure(h / pieces_iv * widths, SumPolicy.chunked())

    # Más allá de T_cut: h_λ(t) ≤ 4/(α³(t−γ₁)³); con u = t − γ̂₁.hi y u ≥ γ₁/(2π−1)
    # vale log(t/2π) ≤ log u, y se usan las integrales cerradas en u.
    U = float(next_down((Interval(T_cut) - gamma1.hi).lo))
    majorant = 4.0 / ALPHA.powi(3)
    if HNormalization(normalization) == HNormalization.DIVIDED:
        majorant = majorant / lam_iv
    U_iv = Interval(U)
    tail_main = majorant * log_power_integrals(1, U, TailMode.OVER_T3) / (U_iv * U_iv)
    tail_over_t = majorant / (U_iv.powi(3) * 3.0)

    at_T = h_lambda(T, lam_iv, gamma1, normalization) * as_interval(T).ln() * A_iv * 2.0
    # Las colas cerradas solo aportan al extremo superior
    beyond_main = Interval(0.0, tail_main.hi)
    beyond_over_t = Interval(0.0, tail_over_t.hi)
    bound = main + beyond_main + at_T + A_iv * (over_t + beyond_over_t)
    logger.info(f"Cola de δ en T = {T!r}, λ = {lam!r}: ≤ {float(bound.hi):.6e}")
    return bound
