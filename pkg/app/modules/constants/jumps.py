"""
Saltos de S(Y) al cruzar una ordenada.

Al pasar Y por γ = γ̂_k, S crece en

    J(γ) = T(γ,γ) + T(γ,−γ) + 2·Σ_{−γ<γ₂<γ} T(γ,γ₂)

y la suma interior se parte en A = (−γ,0], B = (0,(3−√8)γ), C = [(3−√8)γ,γ).
"""
import logging
from typing import Dict

from app.modules.zeros.schemas import ZeroTable
from app.shared.enclosure import Interval, SumPolicy, combine_partials, make_interval, sum_enclosure
from .kernels import c2_diagonal, c2_term
from .schemas import JumpDecomposition

logger = logging.getLogger(__name__)

SQRT8 = Interval(8.0).sqrt()
RATIO_LOW = 3.0 - SQRT8
RATIO_HIGH = 3.0 + SQRT8
JUMP_FLOOR = make_interval("1.11")
DIAGONAL_FLOOR = make_interval("1.99")


def _sums(terms: Interval):
    if len(terms) == 0:
        return Interval(0.0), Interval(0.0)
    return sum_enclosure(terms, SumPolicy.chunked()), sum_enclosure(abs(terms), SumPolicy.chunked())


def jump_at(table: ZeroTable, k: int) -> JumpDecomposition:
    gamma = table.gamma(k)
    below = table.ordinates[: k - 1]

    diagonal = c2_diagonal(gamma)
    antidiagonal = c2_term(gamma, -gamma)
    sum_a, abs_sum_a = _sums(c2_term(gamma, -below))

    # Solo van a C las ordenadas que están con certeza sobre (3−√8)γ
    in_c = below.lo >= (RATIO_LOW * gamma).hi
    sum_b, abs_sum_b = _sums(c2_term(gamma, below[~in_c]))
    sum_c, _ = _sums(c2_term(gamma, below[in_c]))

    total = diagonal + antidiagonal + (sum_a + sum_b + sum_c) * 2.0
    return JumpDecomposition(
        k=k,
        gamma=gamma,
        total=total,
        diagonal=diagonal,
        antidiagonal=antidiagonal,
        sum_a=sum_a,
        sum_b=sum_b,
        sum_c=sum_c,
        abs_sum_a=abs_sum_a,
        abs_sum_b=abs_sum_b,
    )


def jump_bounds_hold(jump: JumpDecomposition, c3_lower: float) -> Dict[str, bool]:
    """
    Comprueba por intervalos las cotas de cada componente del salto.

    ``c3_lower`` es una cota inferior certificada de c₃ (por ejemplo
    c3_bound(...).total_lower): las cotas en c₃ se verifican con ella.
    """
    g2 = jump.gamma.powi(2)
    c3 = Interval(c3_lower)
    checks = {
        "total": (JUMP_FLOOR / g2).certainly_le(jump.total),
        "diagonal": (DIAGONAL_FLOOR / g2).certainly_le(jump.diagonal),
        "region_a": (abs(jump.antidiagonal) / 2.0 + jump.abs_sum_a).certainly_le(c3 * 16.0 / g2),
        "region_b": jump.abs_sum_b.certainly_le(RATIO_HIGH * c3 / (g2 * 2.0)),
        "region_c": Interval(0.0).certainly_le(jump.sum_c),
    }
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        logger.warning(f"Salto en γ̂_{jump.k}: fallan {', '.join(failed)}")
    return checks


def s_of_y_from_jumps(table: ZeroTable, k: int) -> Interval:
    """Σ_{j≤k} J(γ̂_j), que es S(Y) con Y entre γ̂_k y γ̂_{k+1}"""
    partials = []
    for j in range(1, k + 1):
        total = jump_at(table, j).total
        partials.append((float(total.lo), float(total.hi)))
    return combine_partials(partials)
