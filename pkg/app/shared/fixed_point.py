"""
Acumulación exacta en punto fijo de dos niveles.

Un valor float v se parte en ``coarse·2^-c + fine·2^-f`` con enteros; las
sumas de enteros son exactas y asociativas, así que un prefijo calculado
por bloques en paralelo coincide bit a bit con el secuencial.
"""
from fractions import Fraction
from typing import Tuple

import numpy as np


def quantize(values: np.ndarray, coarse_bits: int, fine_bits: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Parte cada valor en dos enteros int64.

    El nivel grueso se redondea a múltiplos de 2^-coarse_bits; el resto es
    exacto en float y se redondea a múltiplos de 2^-fine_bits, con error
    ≤ 2^-(fine_bits+1) por término.
    """
    coarse = np.rint(values * (2.0 ** coarse_bits))
    rest = values - coarse * (2.0 ** -coarse_bits)
    fine = np.rint(rest * (2.0 ** fine_bits))
    return coarse.astype(np.int64), fine.astype(np.int64)


class ExactSum:
    """Suma exacta con acarreos en enteros de Python (sin desbordamiento)"""

    __slots__ = ("coarse_bits", "fine_bits", "coarse", "fine")

    def __init__(self, coarse_bits: int, fine_bits: int, coarse: int = 0, fine: int = 0):
        self.coarse_bits = coarse_bits
        self.fine_bits = fine_bits
        self.coarse = int(coarse)
        self.fine = int(fine)

    def add(self, coarse: np.ndarray, fine: np.ndarray) -> None:
        # Los bloques son ≤ 2^20 términos: la suma por bloque cabe en int64
        self.coarse += int(coarse.sum(dtype=np.int64))
        self.fine += int(fine.sum(dtype=np.int64))

    def add_exact(self, other: "ExactSum") -> None:
        self.coarse += other.coarse
        self.fine += other.fine

    def normalize(self) -> "ExactSum":
        """Lleva el acarreo del nivel fino al grueso: 0 ≤ fine < 2^(fine_bits−coarse_bits)"""
        shift = self.fine_bits - self.coarse_bits
        self.coarse += self.fine >> shift
        self.fine &= (1 << shift) - 1
        return self

    def as_fraction(self) -> Fraction:
        return Fraction(self.coarse, 1 << self.coarse_bits) + Fraction(self.fine, 1 << self.fine_bits)

    def value(self) -> float:
        """Valor correctamente redondeado a float"""
        return float(self.as_fraction())

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactSum) and self.as_fraction() == other.as_fraction()

    def __repr__(self) -> str:
        return f"ExactSum({self.value()!r})"
