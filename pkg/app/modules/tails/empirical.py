"""
Cantidades que combinan la tabla de ceros con las cotas cerradas.
"""
import logging

from app.config import COUNTING_CONSTANT_A
from app.modules.zeros.schemas import ZeroTable
from app.modules.zeros.table import count_zeros
from app.shared.enclosure import PI, TWO_PI, Interval, SumPolicy, sum_enclosure
from app.shared.errors import HeightError
from .bounds import THRESHOLD_4PI_E, lehman_pair_term
from .schemas import TailParams

logger = logging.getLogger(__name__)


def _reciprocal_sum(table: ZeroTable, T: float) -> Interval:
    if T > table.max_height:
        raise HeightError(f"la tabla llega a {table.max_height!r}, se pidió T = {T!r}")
    n = count_zeros(table, T)
    if n == 0:
        return Interval(0.0)
    return sum_enclosure(1.0 / table.ordinates[:n], SumPolicy.chunked())


def epsilon_threshold(table: ZeroTable, T1: float, A: str = COUNTING_CONSTANT_A) -> Interval:
    """ε(T1) = Σ_{0<γ≤T1} 1/γ − L̂²/(4π) + A(2 log T1 + 1)/T1"""
    p = TailParams.from_height(T1, THRESHOLD_4PI_E, "epsilon_threshold", A)
    partial = _reciprocal_sum(table, T1)
    correction = p.A * (p.L * 2.0 + 1.0) / p.T_interval
    return partial - p.Lhat * p.Lhat / (PI * 4.0) + correction


def h_constant_estimate(table: ZeroTable, T: float) -> Interval:
    """
    Σ_{0<γ≤T} 1/γ − L̂²/(4π).

    Estima la constante H; el defecto respecto del límite es O(log T / T)
    y no está encerrado.
    """
    Lhat = TailParams.from_height(T, THRESHOLD_4PI_E, "h_constant_estimate").Lhat
    partial = _reciprocal_sum(table, T)
    estimate = partial - Lhat * Lhat / (PI * 4.0)
    logger.info(f"H ≈ {float(estimate.mid()):.7f} con {count_zeros(table, T)} ceros (defecto O(log T/T))")
    return estimate


def empirical_moment_sum(table: ZeroTable, k: int, T_prime: float) -> Interval:
    """Σ_{T′<γ≤máx} log^k(γ/2π)/γ² sobre las ordenadas tabuladas"""
    n = count_zeros(table, T_prime)
    g = table.ordinates[n:]
    if len(g) == 0:
        return Interval(0.0)
    terms = 1.0 / (g * g)
    if k:
        terms = terms * (g / TWO_PI).ln().powi(k)
    return sum_enclosure(terms, SumPolicy.chunked())


def reciprocal_partial_sum(table: ZeroTable, T: float) -> Interval:
    """Σ_{0<γ≤T} 1/γ sobre la tabla"""
    return _reciprocal_sum(table, T)


def inner_pair_sum(table: ZeroTable, k: int) -> Interval:
    """Σ_{−γ̂_k≤γ₂≤γ̂_k} t(γ̂_k, γ₂) con todos los ceros tabulados hasta γ̂_k"""
    g1 = table.gamma(k)
    below = table.ordinates[:k]
    signed = Interval.concat([below, -below])
    return sum_enclosure(lehman_pair_term(g1, signed), SumPolicy.chunked())
