"""
Certificados de B, S(T), c₁, c₂ (cota inferior por S(Y)) y c₃.
"""
import logging

from app.config import MAX_TRIG_ARGUMENT
from app.modules.tails.bounds import b_tail_bound, tail_moment_bound
from app.modules.zeros.schemas import ZeroTable
from app.modules.zeros.table import count_zeros
from app.shared.enclosure import LN2, Interval, SumPolicy, as_interval, sum_enclosure
from app.shared.enums import PairKernel
from app.shared.errors import DomainError
from .kernels import rho_sq
from .pair_sums import pair_sum
from .schemas import BoundCertificate

logger = logging.getLogger(__name__)


def _positive_certificate(
    name: str, table: ZeroTable, height: float, n: int, finite: Interval, tail: Interval, label: str = "T"
) -> BoundCertificate:
    # Serie de términos positivos: la parte finita ya es cota inferior
    total = finite + Interval(0.0, float(tail.hi))
    return BoundCertificate(
        name=name,
        finite_part=finite,
        tail_part=tail,
        total_lower=float(finite.lo),
        total_upper=float(total.hi),
        height=height,
        height_label=label,
        zeros_used=n,
        source=table.source_path,
    )


def _check_trig_ceiling(T: float) -> None:
    # θ = γ₁ − γ₂ llega a 2T y el coseno se evalúa en θ·log 2
    if (as_interval(2.0 * T) * LN2).hi > MAX_TRIG_ARGUMENT:
        raise DomainError(f"T = {T!r} excede el argumento trigonométrico confiable")


def b_finite_sum(table: ZeroTable, T: float, workers: int = 1) -> Interval:
    """Σ_{|γ₁|,|γ₂|≤T} b(γ₁,γ₂) = 2·Σ_{0<γ₁≤T} Σ_{−T≤γ₂≤T} b(γ₁,γ₂) por conjugación"""
    _check_trig_ceiling(T)
    n = count_zeros(table, T)
    return pair_sum(table, n, PairKernel.B_SERIES, workers) * 2.0


def b_bounds(table: ZeroTable, T: float, sharp: bool = False, workers: int = 1) -> BoundCertificate:
    tail = b_tail_bound(T, sharp=sharp)
    finite = b_finite_sum(table, T, workers)
    cert = _positive_certificate("B", table, T, count_zeros(table, T), finite, tail)
    logger.info(f"B ∈ [{cert.total_lower!r}, {cert.total_upper!r}]")
    return cert


def s_kernel_sum(table: ZeroTable, T: float, workers: int = 1) -> Interval:
    """S(T): la suma de B con numerador 1"""
    n = count_zeros(table, T)
    return pair_sum(table, n, PairKernel.S_SERIES, workers) * 2.0


def s_of_y(table: ZeroTable, Y: float, workers: int = 1) -> Interval:
    """S(Y) = Σ_{0<γ₁≤Y} Σ_{−Y≤γ₂≤Y} T(γ₁,γ₂), cota inferior de c₂"""
    n = count_zeros(table, Y)
    return pair_sum(table, n, PairKernel.C2_SERIES, workers)


def c2_lower_certificate(table: ZeroTable, Y: float, workers: int = 1) -> BoundCertificate:
    # S(Y) no decrece y tiende a c₂: solo hay cota inferior
    s = s_of_y(table, Y, workers)
    return BoundCertificate(
        name="c2",
        finite_part=s,
        tail_part=Interval(0.0),
        total_lower=float(s.lo),
        total_upper=float("inf"),
        height=Y,
        height_label="Y",
        zeros_used=count_zeros(table, Y),
        source=table.source_path,
    )


def c1_bound(table: ZeroTable, T: float) -> BoundCertificate:
    """c₁ = Σ_ρ 1/|ρ|² = 2·Σ_{γ>0} 1/(¼+γ²)"""
    tail = tail_moment_bound(0, T) * 2.0
    n = count_zeros(table, T)
    finite = sum_enclosure(1.0 / rho_sq(table.ordinates[:n]), SumPolicy.chunked()) * 2.0 if n else Interval(0.0)
    return _positive_certificate("c1", table, T, n, finite, tail)


def c3_bound(table: ZeroTable, T: float) -> BoundCertificate:
    """c₃ = Σ_{γ>0} 1/γ²"""
    tail = tail_moment_bound(0, T)
    n = count_zeros(table, T)
    finite = sum_enclosure(1.0 / table.ordinates[:n].powi(2), SumPolicy.chunked()) if n else Interval(0.0)
    return _positive_certificate("c3", table, T, n, finite, tail)


def c1_c2_separation(table: ZeroTable, Y: float, T: float, workers: int = 1) -> BoundCertificate:
    """Cota inferior certificada de c₂ − c₁ ≥ S(Y) − c₁"""
    s = s_of_y(table, Y, workers)
    c1 = c1_bound(table, T)
    gap = Interval(s.lo) - Interval(c1.total_upper)
    if gap.lo <= 0.0:
        logger.warning(f"S({Y!r}) no separa c₂ de c₁: cota {float(gap.lo)!r}")
    return BoundCertificate(
        name="c2_minus_c1",
        finite_part=s,
        tail_part=Interval(0.0),
        total_lower=float(gap.lo),
        total_upper=float("inf"),
        height=Y,
        height_label="Y",
        zeros_used=count_zeros(table, Y),
        source=table.source_path,
        extras={"c1_T": T, "c1_upper": c1.total_upper},
    )
