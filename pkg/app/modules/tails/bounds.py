"""
Cotas cerradas para sumas sobre ceros por encima de una altura T.

Todas devuelven un encierro de la fórmula; aguas abajo solo se usa el
extremo superior.
"""
from typing import Union

import numpy as np

from app.shared.enclosure import E, PI, TWO_PI, Interval, as_interval, make_interval
from app.shared.enums import TailMode
from app.shared.errors import DomainError
from .schemas import TailParams

Height = Union[float, Interval]

C_1_39 = make_interval("1.39")
C_2_46 = make_interval("2.46")
C_2_22 = make_interval("2.22")
C_9_81 = make_interval("9.81")
C_8_87 = make_interval("8.87")
C_1_1 = make_interval("1.1")
C_0_4 = make_interval("0.4")

# Umbrales de validez de cada cota
THRESHOLD_2PI_E = TWO_PI * E
THRESHOLD_4PI_E = TWO_PI * E * 2.0
THRESHOLD_LEHMAN = 100.0
THRESHOLD_SHARP = 80000.0
MOMENT_THRESHOLDS = {0: THRESHOLD_2PI_E, 1: THRESHOLD_4PI_E, 2: THRESHOLD_LEHMAN}


def require_height(T: Height, threshold, name: str) -> Interval:
    T = as_interval(T)
    threshold = as_interval(threshold)
    if np.any(T.hi < threshold.lo):
        raise DomainError(f"{name} requiere T ≥ {float(threshold.lo):.6g}")
    return T


def log_power_integrals(k: int, T: float, mode: TailMode = TailMode.OVER_T2) -> Interval:
    """
    over_t2: T∫_T^∞ log^k t / t² dt por la recurrencia I_k = L^k + k·I_{k−1}.
    over_t3: T²∫_T^∞ log^k t / t³ dt, solo k ∈ {1, 2}.
    """
    mode = TailMode(mode)
    T_iv = require_height(T, 1.0, "log_power_integrals")
    L = T_iv.ln()
    if mode == TailMode.OVER_T2:
        if not 0 <= k <= 3:
            raise DomainError(f"log_power_integrals no soporta k = {k} con over_t2")
        value = Interval(1.0)
        for j in range(1, k + 1):
            value = L.powi(j) + value * float(j)
        return value
    if k == 1:
        return (L * 2.0 + 1.0) / 4.0
    if k == 2:
        return (L * L * 2.0 + L * 2.0 + 1.0) / 4.0
    raise DomainError(f"log_power_integrals no soporta k = {k} con over_t3")


def tail_moment_bound(k: int, T: float) -> Interval:
    """Cota de Σ_{γ>T} log^k(γ/2π)/γ²"""
    if k not in MOMENT_THRESHOLDS:
        raise DomainError(f"tail_moment_bound no soporta k = {k}")
    p = TailParams.from_height(T, MOMENT_THRESHOLDS[k], f"la cota de momento {k}")
    L = p.L
    if k == 0:
        numerator = L
    elif k == 1:
        numerator = L * L - L
    else:
        numerator = L.powi(3) - C_1_39 * L * L
    return numerator / (TWO_PI * p.T_interval)


def recip_gamma_partial_bound(T: float) -> Interval:
    """Cota L̂²/(4π) de Σ_{0<γ≤T} 1/γ"""
    Lhat = TailParams.from_height(T, THRESHOLD_4PI_E, "recip_gamma_partial_bound").Lhat
    return Lhat * Lhat / (PI * 4.0)


def abcd_outer_bound(T: float, sharp: bool = False) -> Interval:
    """Cota de Σ_{γ₁>T, |γ₂|≤γ₁} t(γ₁,γ₂): (L³ + 1.1L²)/(2π²T), o (L³ + 0.4L²) si sharp"""
    if sharp:
        p = TailParams.from_height(T, THRESHOLD_SHARP, "la cota afinada")
        coeff = C_0_4
    else:
        p = TailParams.from_height(T, THRESHOLD_LEHMAN, "abcd_outer_bound")
        coeff = C_1_1
    L = p.L
    return (L.powi(3) + coeff * L * L) / (PI * PI * 2.0 * p.T_interval)


def b_tail_bound(T: float, sharp: bool = False) -> Interval:
    """
    Cota 5E(T) del error de truncar la serie B: (10L³ + 11L²)/(π²T).

    Es 20 veces abcd_outer_bound (4 por simetría, 5 por el numerador |2^{2+iθ}−1|).
    Con sharp=True (T ≥ 80000) usa (10L³ + 4L²)/(π²T).
    """
    if sharp:
        return abcd_outer_bound(T, sharp=True) * 20.0
    p = TailParams.from_height(T, THRESHOLD_LEHMAN, "b_tail_bound")
    L = p.L
    return (L.powi(3) * 10.0 + L * L * 11.0) / (PI * PI * p.T_interval)


def _inner_lhat(gamma1: Height):
    g = as_interval(gamma1)
    if np.any(g.lo < THRESHOLD_LEHMAN):
        raise DomainError("las cotas internas requieren γ₁ ≥ 100")
    return g, (g / TWO_PI).ln()


def inner_abcd_bound(gamma1: Height) -> Interval:
    """Cota de Σ_{−γ₁≤γ₂≤γ₁} t(γ₁,γ₂)"""
    g, Lh = _inner_lhat(gamma1)
    return (Lh * Lh + C_2_46 * Lh + C_2_22) / (PI * g * g)


def inner_positive_bound(gamma1: Height) -> Interval:
    """Cota de Σ_{0<γ₂≤γ₁} t(γ₁,γ₂)"""
    g, Lh = _inner_lhat(gamma1)
    return (Lh * Lh * 3.0 + C_9_81 * Lh + C_8_87) / (PI * 4.0 * g * g)


def inner_negative_bound(gamma1: Height) -> Interval:
    """Cota de Σ_{−γ₁≤γ₂<0} t(γ₁,γ₂)"""
    g, Lh = _inner_lhat(gamma1)
    return Lh * Lh / (PI * 4.0 * g * g)


def lehman_pair_term(gamma1: Interval, gamma2: Interval) -> Interval:
    """t(γ₁,γ₂) = 1/(|γ₁γ₂|·√(4+(γ₁−γ₂)²)), el término que acotan las cotas internas"""
    theta = gamma1 - gamma2
    return 1.0 / (abs(gamma1) * abs(gamma2) * (theta.powi(2) + 4.0).sqrt())


def tail_table(T: float, sharp: bool = False) -> dict:
    """Todas las cotas cerradas en una altura, para el subcomando tails"""
    params = TailParams.from_height(T, name="tail_table")
    T = params.T

    def reaches(threshold) -> bool:
        return T >= float(as_interval(threshold).hi)

    row = {"T": T}
    for k, threshold in MOMENT_THRESHOLDS.items():
        row[f"moment{k}"] = float(tail_moment_bound(k, T).hi) if reaches(threshold) else float("nan")
    row["recip_partial"] = float(recip_gamma_partial_bound(T).hi) if reaches(THRESHOLD_4PI_E) else float("nan")
    if reaches(THRESHOLD_LEHMAN):
        row["inner_abcd"] = float(inner_abcd_bound(T).hi)
        row["abcd_outer"] = float(abcd_outer_bound(T).hi)
        row["b_tail"] = float(b_tail_bound(T).hi)
    else:
        row["inner_abcd"] = row["abcd_outer"] = row["b_tail"] = float("nan")
    if sharp:
        row["b_tail_sharp"] = float(b_tail_bound(T, sharp=True).hi) if reaches(THRESHOLD_SHARP) else float("nan")
    return row
