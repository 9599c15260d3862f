"""
Núcleos de las series dobles sobre pares de ceros.

Todos aceptan encierros escalares o vectoriales y actúan elemento a elemento.
"""
from app.shared.enclosure import LN2, Interval
from app.shared.enums import PairKernel


def rho_sq(gamma: Interval) -> Interval:
    """|ρ|² = ¼ + γ²"""
    return gamma.powi(2) + 0.25


def b_numerator(theta: Interval) -> Interval:
    # |2^{2+iθ} − 1|² = |4e^{iθ log 2} − 1|² = 16 − 8cos(θ log 2) + 1 = 17 − 8cos(θ log 2)
    return (17.0 - (theta * LN2).cos() * 8.0).sqrt()


def b_term(gamma1: Interval, gamma2: Interval) -> Interval:
    """|2^{2+iθ}−1| / (|ρ₁||ρ₂||2+iθ|) con θ = γ₁ − γ₂"""
    theta = gamma1 - gamma2
    denominator = rho_sq(gamma1).sqrt() * rho_sq(gamma2).sqrt() * (theta.powi(2) + 4.0).sqrt()
    return b_numerator(theta) / denominator


def s_kernel_term(gamma1: Interval, gamma2: Interval) -> Interval:
    """El término de S(T): la serie B con numerador 1"""
    theta = gamma1 - gamma2
    return 1.0 / (rho_sq(gamma1).sqrt() * rho_sq(gamma2).sqrt() * (theta.powi(2) + 4.0).sqrt())


def c2_numerator(gamma1: Interval, gamma2: Interval) -> Interval:
    return (gamma1 * gamma2 * 6.0 - gamma1.powi(2) - gamma2.powi(2) + 1.0) * 2.0


def c2_term(gamma1: Interval, gamma2: Interval) -> Interval:
    """
    T(γ₁,γ₂) = 2(1 + 6γ₁γ₂ − γ₁² − γ₂²) / ((¼+γ₁²)(¼+γ₂²)(4+(γ₁−γ₂)²)).

    Puede ser negativo; es ≥ 0 cuando γ₂/γ₁ está en [3−√8, 3+√8].
    """
    theta = gamma1 - gamma2
    return c2_numerator(gamma1, gamma2) / (rho_sq(gamma1) * rho_sq(gamma2) * (theta.powi(2) + 4.0))


def c2_diagonal(gamma: Interval) -> Interval:
    """T(γ,γ) = 2/(¼+γ²), sin la cancelación de evaluar c2_term(γ, γ)"""
    return 2.0 / rho_sq(gamma)


KERNELS = {
    PairKernel.B_SERIES: b_term,
    PairKernel.S_SERIES: s_kernel_term,
    PairKernel.C2_SERIES: c2_term,
}
