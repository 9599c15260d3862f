"""
Cadena de la cota inferior: δ finito − cola → |H(X)| → lim inf I(X)/X².
"""
import logging

from app.config import COUNTING_CONSTANT_A
from app.modules.tails.delta_tail import delta_tail_bound
from app.modules.zeros.schemas import ZeroTable
from app.modules.zeros.table import count_zeros
from app.shared.enclosure import Interval, SumPolicy, sum_enclosure
from app.shared.enums import HNormalization
from app.shared.errors import DomainError
from .schemas import LowerBoundCertificate, TestFunctionParams
from .test_function import G_HAT_MAX, test_function_g

logger = logging.getLogger(__name__)


def delta_finite(table: ZeroTable, n_zeros: int, lam: float) -> Interval:
    """
    1/|ρ₁| − Σ_{n=2..N} |g(γ̂_n − γ̂₁)|/|ρ_n| − Σ_{n=1..N} |g(−γ̂_n − γ̂₁)|/|ρ_n|

    Las ordenadas negativas se obtienen reflejando la tabla.
    """
    if n_zeros < 1 or n_zeros > len(table):
        raise DomainError(f"delta_finite necesita 1 ≤ N ≤ {len(table)} (N = {n_zeros})")
    params = TestFunctionParams(lam=lam)
    g = table.ordinates[:n_zeros]
    gamma1 = table.gamma(1)
    moduli = table.moduli(n_zeros)

    reflected = abs(test_function_g(-g - gamma1, params)) / moduli
    total = sum_enclosure(reflected, SumPolicy.chunked())
    if n_zeros > 1:
        same_side = abs(test_function_g(g[1:] - gamma1, params)) / moduli[1:]
        total = total + sum_enclosure(same_side, SumPolicy.chunked())
    return 1.0 / moduli[0] - total


def certify_lower_bound(
    table: ZeroTable,
    T: float,
    lam: float,
    A: str = COUNTING_CONSTANT_A,
    normalization: HNormalization = HNormalization.DIVIDED,
) -> LowerBoundCertificate:
    normalization = HNormalization(normalization)
    gamma1 = table.gamma(1)
    tail = delta_tail_bound(T, lam, gamma1, A, normalization)
    n = count_zeros(table, T)
    finite = delta_finite(table, n, lam)

    delta = float((Interval(finite.lo) - Interval(tail.hi)).lo)
    valid = delta > 0.0
    if valid:
        h_bound = float((Interval(delta) / G_HAT_MAX).lo)
        i_constant = float((Interval(h_bound) * Interval(h_bound)).lo)
        ratio = float((Interval(i_constant) * 40000.0).lo)
        logger.info(f"δ ≥ {delta!r}, |H(X)| ≥ {h_bound!r}, I(X)/X² ≥ {i_constant!r} (1/{1.0 / i_constant:.1f})")
    else:
        h_bound = i_constant = ratio = 0.0
        logger.warning(f"δ ≤ 0 con λ = {lam!r}, T = {T!r}: el certificado no prueba nada")

    return LowerBoundCertificate(
        delta_finite=finite,
        delta_tail=tail,
        delta=delta,
        h_bound=h_bound,
        i_constant=i_constant,
        T=T,
        lam=lam,
        zeros_used=n,
        normalization=normalization,
        popov_stechkin_ratio=ratio,
        valid=valid,
        source=table.source_path,
    )
