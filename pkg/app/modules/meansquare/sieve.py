"""
Criba segmentada de Λ(n) y ψ(n) = Σ_{m≤n} Λ(m) con acumulación exacta.
"""
import logging
import math
from typing import Tuple

import numpy as np

from app.config import SIEVE_SEGMENT
from app.shared.errors import DomainError
from app.shared.fixed_point import ExactSum, quantize
from .schemas import VonMangoldtValue

logger = logging.getLogger(__name__)

# log p ∈ [½, 25] es múltiplo de 2^-53: con 60 bits finos la partición es exacta
PSI_COARSE_BITS = 30
PSI_FINE_BITS = 60


def von_mangoldt(n: int) -> VonMangoldtValue:
    if n < 1:
        raise DomainError(f"von_mangoldt requiere n ≥ 1 (n = {n})")
    if n == 1:
        return VonMangoldtValue(n=1)
    p = next((d for d in range(2, math.isqrt(n) + 1) if n % d == 0), n)
    m = n
    while m % p == 0:
        m //= p
    if m == 1:
        return VonMangoldtValue(n=n, p=p, is_prime_power=True)
    return VonMangoldtValue(n=n)


def simple_sieve(limit: int) -> np.ndarray:
    """Primos ≤ limit"""
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p : limit + 1 : p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


class BasePrimes:
    """Primos hasta √limit y sus logaritmos, calculados una vez por corrida"""

    def __init__(self, limit: int):
        self.limit = limit
        self.primes = simple_sieve(math.isqrt(max(limit, 1)) + 1)
        self.logs = np.log(self.primes.astype(np.float64))


def lambda_segment(start: int, stop: int, base: BasePrimes) -> np.ndarray:
    """Λ(n) para n en [start, stop)"""
    if stop - 1 > base.limit:
        raise DomainError(f"los primos base llegan a {base.limit}, se pidió {stop - 1}")
    size = stop - start
    n = np.arange(start, stop, dtype=np.int64)
    composite = n < 2
    for p in base.primes.tolist():
        p2 = p * p
        if p2 >= stop:
            break
        first = max(p2, ((start + p - 1) // p) * p)
        composite[first - start :: p] = True

    lam = np.zeros(size, dtype=np.float64)
    primes_here = np.flatnonzero(~composite)
    lam[primes_here] = np.log(n[primes_here].astype(np.float64))

    # potencias p^k con k ≥ 2: valen log p
    for p, log_p in zip(base.primes.tolist(), base.logs.tolist()):
        pk = p * p
        if pk >= stop:
            break
        while pk < stop:
            if pk >= start:
                lam[pk - start] = log_p
            pk *= p
    return lam


def segment_bounds(k: int, limit: int, segment: int = SIEVE_SEGMENT) -> Tuple[int, int]:
    """Segmento k: enteros [k·S, mín((k+1)·S, limit+1))"""
    return k * segment, min((k + 1) * segment, limit + 1)


class PsiAccumulator:
    """
    Posición n y ψ(n) exacto en punto fijo; avanza por segmentos de criba.
    """

    def __init__(self, limit: int, segment: int = SIEVE_SEGMENT):
        self.base = BasePrimes(limit)
        self.segment = segment
        self.n = 0
        self.psi = ExactSum(PSI_COARSE_BITS, PSI_FINE_BITS)

    def advance(self, target: int) -> ExactSum:
        if target < self.n:
            raise DomainError("PsiAccumulator solo avanza")
        start = self.n + 1
        while start <= target:
            stop = min(start + self.segment, target + 1)
            coarse, fine = quantize(lambda_segment(start, stop, self.base), PSI_COARSE_BITS, PSI_FINE_BITS)
            self.psi.add(coarse, fine)
            start = stop
        self.n = max(self.n, target)
        return self.psi

    def value(self) -> float:
        return self.psi.value()


def psi_prefix(n: int) -> float:
    """ψ(n), correctamente redondeado a partir de la suma exacta de los log p en float"""
    if n < 0:
        raise DomainError(f"psi_prefix requiere n ≥ 0 (n = {n})")
    acc = PsiAccumulator(max(n, 1))
    acc.advance(n)
    return acc.value()
