"""
Contraste de la criba con los ceros por la fórmula explícita.
"""
import logging
import math

import numpy as np

from app.modules.zeros.schemas import ZeroTable
from app.modules.zeros.table import count_zeros
from app.shared.errors import DomainError
from .sieve import psi_prefix

logger = logging.getLogger(__name__)


def explicit_formula_residual(x: float, table: ZeroTable, T: float) -> float:
    """
    ψ(x) − x + 2Σ_{0<γ≤T} Re(x^ρ/ρ) + log 2π + ½log(1 − x⁻²)

    con Re(x^ρ/ρ) = √x(½cos(γ log x) + γ sin(γ log x))/(¼ + γ²). No es un
    encierro: mide cuánto se aleja la suma truncada en T.
    """
    if not x > 1.0:
        raise DomainError(f"explicit_formula_residual requiere x > 1 (x = {x!r})")
    if float(x).is_integer():
        raise DomainError(f"x = {x!r} es entero: ψ salta en x")
    n = count_zeros(table, T)
    gamma = np.asarray(table.ordinates.mid()[:n], dtype=np.float64)
    log_x = math.log(x)
    phase = gamma * log_x
    terms = math.sqrt(x) * (0.5 * np.cos(phase) + gamma * np.sin(phase)) / (0.25 + gamma * gamma)
    zero_sum = 2.0 * math.fsum(terms.tolist())
    residual = psi_prefix(math.floor(x)) - x + zero_sum + math.log(2.0 * math.pi) + 0.5 * math.log1p(-1.0 / (x * x))
    logger.debug(f"Residuo de la fórmula explícita en x = {x!r} con {n} ceros: {residual:.3e}")
    return residual
