"""
Aritmética de intervalos con redondeo hacia afuera.

Los extremos son float64 de numpy (escalares 0-d o arreglos). Tras cada
operación redondeada al más cercano el resultado se empuja hacia afuera con
``np.nextafter``; para log/sin/cos, que numpy no garantiza correctamente
redondeados, la holgura es mayor. Un ``Interval`` con extremos vectoriales
representa una familia de intervalos y todas las operaciones actúan
elemento a elemento.
"""
import math
import re
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, Field

from app.config import MAX_TRIG_ARGUMENT, SUM_CHUNK_SIZE
from app.shared.enums import ArithOp, ElementaryFn, SumPolicyKind
from app.shared.errors import DomainError, ParseError

UNIT_ROUNDOFF = 2.0 ** -53
# numpy puede usar implementaciones vectoriales de log con error de hasta 4 ulp
_LOG_ULPS = 4
# holgura absoluta de sin/cos; su imagen está en [-1, 1]
_TRIG_SLACK = 2.0 ** -50

DECIMAL_PATTERN = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$")

Number = Union[int, float, np.floating, np.ndarray]


def _down(x, steps: int = 1):
    for _ in range(steps):
        x = np.nextafter(x, -np.inf)
    return x


def _up(x, steps: int = 1):
    for _ in range(steps):
        x = np.nextafter(x, np.inf)
    return x


next_down = _down
next_up = _up


def _two_sum(a, b):
    """Suma redondeada y su error exacto (Knuth)"""
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def _sum_down(a, b):
    with np.errstate(invalid="ignore"):
        s, err = _two_sum(a, b)
        return np.where(np.isfinite(s) & (err >= 0.0), s, _down(s))


def _sum_up(a, b):
    with np.errstate(invalid="ignore"):
        s, err = _two_sum(a, b)
        return np.where(np.isfinite(s) & (err <= 0.0), s, _up(s))


def _fraction_down(q: Fraction) -> float:
    f = float(q)
    if Fraction(f) > q:
        f = float(np.nextafter(f, -np.inf))
    return f


def _fraction_up(q: Fraction) -> float:
    f = float(q)
    if Fraction(f) < q:
        f = float(np.nextafter(f, np.inf))
    return f


class Interval:
    """
    Encierro cerrado [lo, hi].

    Inmutable por convención: ninguna operación modifica los arreglos de
    sus operandos, así que los valores pueden compartirse entre procesos.
    """

    __slots__ = ("lo", "hi")

    def __init__(self, lo: Number, hi: Optional[Number] = None):
        lo_arr = np.asarray(lo, dtype=np.float64)
        hi_arr = lo_arr if hi is None else np.asarray(hi, dtype=np.float64)
        if lo_arr.shape != hi_arr.shape:
            lo_arr, hi_arr = np.broadcast_arrays(lo_arr, hi_arr)
        if np.any(np.isnan(lo_arr)) or np.any(np.isnan(hi_arr)):
            raise DomainError("extremo NaN en un intervalo")
        if np.any(lo_arr > hi_arr):
            raise DomainError("intervalo con lo > hi")
        self.lo = lo_arr
        self.hi = hi_arr

    # ------------------------------------------------------------------
    # Construcción y acceso
    # ------------------------------------------------------------------
    @classmethod
    def point(cls, x: Number) -> "Interval":
        """Intervalo degenerado; exacto para valores float"""
        if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
            f = float(x)
            if abs(int(x)) > 2 ** 53 and int(f) != int(x):
                return cls(_down(f), _up(f))
            return cls(f)
        return cls(x)

    @classmethod
    def concat(cls, parts: Sequence["Interval"]) -> "Interval":
        if not parts:
            return cls(np.zeros(0))
        return cls(
            np.concatenate([np.atleast_1d(p.lo) for p in parts]),
            np.concatenate([np.atleast_1d(p.hi) for p in parts]),
        )

    @property
    def is_scalar(self) -> bool:
        return self.lo.ndim == 0

    @property
    def shape(self) -> Tuple[int, ...]:
        return self.lo.shape

    def __len__(self) -> int:
        if self.is_scalar:
            raise TypeError("un intervalo escalar no tiene longitud")
        return self.lo.shape[0]

    def __getitem__(self, index) -> "Interval":
        return Interval(self.lo[index], self.hi[index])

    def __iter__(self):
        for k in range(len(self)):
            yield self[k]

    def __repr__(self) -> str:
        if self.is_scalar:
            return f"Interval([{float(self.lo)!r}, {float(self.hi)!r}])"
        return f"Interval(shape={self.shape})"

    def mid(self):
        return 0.5 * self.lo + 0.5 * self.hi

    def width(self):
        return self.hi - self.lo

    def mag(self):
        """Cota superior de |x| sobre el intervalo"""
        return np.maximum(np.abs(self.lo), np.abs(self.hi))

    def contains(self, x) -> bool:
        """True si el valor (float, Fraction o Interval) está dentro de todos los encierros"""
        if isinstance(x, Interval):
            return bool(np.all(self.lo <= x.lo) and np.all(x.hi <= self.hi))
        if isinstance(x, Fraction):
            return bool(Fraction(float(self.lo)) <= x <= Fraction(float(self.hi)))
        return bool(np.all(self.lo <= x) and np.all(x <= self.hi))

    def intersects(self, other: "Interval") -> bool:
        return bool(np.all(self.lo <= other.hi) and np.all(other.lo <= self.hi))

    def certainly_le(self, other: Union["Interval", float]) -> bool:
        other = as_interval(other)
        return bool(np.all(self.hi <= other.lo))

    def same_as(self, other: "Interval") -> bool:
        """Igualdad bit a bit de los extremos"""
        return bool(np.array_equal(self.lo, other.lo) and np.array_equal(self.hi, other.hi))

    # ------------------------------------------------------------------
    # Aritmética
    # ------------------------------------------------------------------
    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __add__(self, other) -> "Interval":
        other = as_interval(other)
        return Interval(_sum_down(self.lo, other.lo), _sum_up(self.hi, other.hi))

    __radd__ = __add__

    def __sub__(self, other) -> "Interval":
        other = as_interval(other)
        return Interval(_sum_down(self.lo, -other.hi), _sum_up(self.hi, -other.lo))

    def __rsub__(self, other) -> "Interval":
        return as_interval(other) - self

    def __mul__(self, other) -> "Interval":
        other = as_interval(other)
        products = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        lo = np.minimum(np.minimum(products[0], products[1]), np.minimum(products[2], products[3]))
        hi = np.maximum(np.maximum(products[0], products[1]), np.maximum(products[2], products[3]))
        return Interval(_down(lo), _up(hi))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Interval":
        other = as_interval(other)
        if np.any((other.lo <= 0.0) & (other.hi >= 0.0)):
            raise DomainError("división por un intervalo que contiene 0")
        quotients = (self.lo / other.lo, self.lo / other.hi, self.hi / other.lo, self.hi / other.hi)
        lo = np.minimum(np.minimum(quotients[0], quotients[1]), np.minimum(quotients[2], quotients[3]))
        hi = np.maximum(np.maximum(quotients[0], quotients[1]), np.maximum(quotients[2], quotients[3]))
        return Interval(_down(lo), _up(hi))

    def __rtruediv__(self, other) -> "Interval":
        return as_interval(other) / self

    def __abs__(self) -> "Interval":
        crosses = (self.lo < 0.0) & (self.hi > 0.0)
        lo = np.where(crosses, 0.0, np.minimum(np.abs(self.lo), np.abs(self.hi)))
        return Interval(lo, self.mag())

    def __pow__(self, n: int) -> "Interval":
        return self.powi(n)

    # ------------------------------------------------------------------
    # Funciones elementales
    # ------------------------------------------------------------------
    def sqrt(self) -> "Interval":
        if np.any(self.lo < 0.0):
            raise DomainError("sqrt de un intervalo con extremo negativo")
        return Interval(np.maximum(_down(np.sqrt(self.lo)), 0.0), _up(np.sqrt(self.hi)))

    def ln(self) -> "Interval":
        if np.any(self.lo <= 0.0):
            raise DomainError("ln de un intervalo que no es positivo")
        return Interval(_down(np.log(self.lo), _LOG_ULPS), _up(np.log(self.hi), _LOG_ULPS))

    def cos(self) -> "Interval":
        return self._trig(np.cos, 0.0)

    def sin(self) -> "Interval":
        return self._trig(np.sin, 0.5)

    def powi(self, n: int) -> "Interval":
        """Potencia entera por cuadrados sucesivos de intervalos"""
        n = int(n)
        if n == 0:
            return Interval(np.ones_like(self.lo))
        if n < 0:
            return 1.0 / self.powi(-n)
        base = abs(self) if n % 2 == 0 else self
        result: Optional[Interval] = None
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = abs(base * base)
        return result

    def _trig(self, fn, offset: float) -> "Interval":
        # Extremos de cos en x/π entero; los de sin en x/π - 1/2 entero.
        # Máximo si el entero es par, mínimo si es impar.
        a, b = self.lo, self.hi
        if np.any(np.maximum(np.abs(a), np.abs(b)) > MAX_TRIG_ARGUMENT):
            raise DomainError(f"argumento trigonométrico mayor que {MAX_TRIG_ARGUMENT:g}")
        fa, fb = fn(a), fn(b)
        lo = np.maximum(np.minimum(fa, fb) - _TRIG_SLACK, -1.0)
        hi = np.minimum(np.maximum(fa, fb) + _TRIG_SLACK, 1.0)

        q_lo = a / np.pi - offset
        q_hi = b / np.pi - offset
        pad = 1e-15 * (1.0 + np.maximum(np.abs(q_lo), np.abs(q_hi)))
        n_lo = np.ceil(q_lo - pad)
        n_hi = np.floor(q_hi + pad)
        has_int = n_lo <= n_hi
        several = (n_hi - n_lo) >= 1.0
        has_even = has_int & (several | (np.mod(n_lo, 2.0) == 0.0))
        has_odd = has_int & (several | (np.mod(n_lo, 2.0) == 1.0))
        wide = (b - a) >= 6.2831853
        hi = np.where(has_even | wide, 1.0, hi)
        lo = np.where(has_odd | wide, -1.0, lo)
        return Interval(lo, hi)


def as_interval(x) -> Interval:
    if isinstance(x, Interval):
        return x
    if isinstance(x, Fraction):
        return Interval(_fraction_down(x), _fraction_up(x))
    return Interval.point(x)


# ----------------------------------------------------------------------
# Constantes certificadas
# ----------------------------------------------------------------------
def make_interval(text: str, radius: float = 0.0) -> Interval:
    """
    Encierro del decimal ``text`` ± ``radius``.

    El decimal se lee exacto con Decimal y se redondea hacia afuera a float64;
    el radio se toma como el decimal que escribió el usuario (``repr``).
    """
    s = str(text).strip()
    if not DECIMAL_PATTERN.match(s):
        raise ParseError(f"decimal mal formado: {text!r}")
    if radius < 0 or radius != radius:
        raise DomainError("el radio debe ser no negativo")
    try:
        value = Fraction(Decimal(s))
        r = Fraction(Decimal(repr(float(radius))))
        return Interval(_fraction_down(value - r), _fraction_up(value + r))
    except (InvalidOperation, OverflowError) as e:
        raise ParseError(f"decimal fuera de rango: {text!r}") from e


def make_intervals(texts: Sequence[str], radius: float = 0.0) -> Interval:
    """
    Versión vectorial de make_interval para tablas grandes.

    La conversión decimal→float es correctamente redondeada (medio ulp); tras
    restar/sumar el radio redondeado hacia afuera se empuja tres ulp.
    """
    values = np.array([float(t) for t in texts], dtype=np.float64)
    r_up = _fraction_up(Fraction(Decimal(repr(float(radius)))))
    if r_up == 0.0:
        exact = np.array([Fraction(Decimal(t.strip())) == Fraction(v) for t, v in zip(texts, values)])
        return Interval(np.where(exact, values, _down(values)), np.where(exact, values, _up(values)))
    return Interval(_down(values - r_up, 3), _up(values + r_up, 3))


# Decimales truncados a 36 cifras; el radio cubre el truncamiento
PI = make_interval("3.141592653589793238462643383279502884", 1e-30)
TWO_PI = PI * 2.0
E = make_interval("2.718281828459045235360287471352662498", 1e-30)
LN2 = make_interval("0.693147180559945309417232121458176568", 1e-30)


# ----------------------------------------------------------------------
# API funcional
# ----------------------------------------------------------------------
def arith(op: ArithOp, a: Interval, b: Interval) -> Interval:
    op = ArithOp(op)
    if op == ArithOp.ADD:
        return a + b
    if op == ArithOp.SUB:
        return a - b
    if op == ArithOp.MUL:
        return a * b
    return a / b


def elementary(fn: ElementaryFn, a: Interval, n: Optional[int] = None) -> Interval:
    fn = ElementaryFn(fn)
    if fn == ElementaryFn.SQRT:
        return a.sqrt()
    if fn == ElementaryFn.LN:
        return a.ln()
    if fn == ElementaryFn.SIN:
        return a.sin()
    if fn == ElementaryFn.COS:
        return a.cos()
    if n is None:
        raise DomainError("powi requiere el exponente n")
    return a.powi(n)


# ----------------------------------------------------------------------
# Sumas
# ----------------------------------------------------------------------
class SumPolicy(BaseModel):
    kind: SumPolicyKind = SumPolicyKind.CHUNKED
    chunk: int = Field(SUM_CHUNK_SIZE, ge=1)

    @classmethod
    def sequential(cls) -> "SumPolicy":
        return cls(kind=SumPolicyKind.SEQUENTIAL)

    @classmethod
    def chunked(cls, k: int = SUM_CHUNK_SIZE) -> "SumPolicy":
        return cls(kind=SumPolicyKind.CHUNKED, chunk=k)


def _gamma(n: int) -> float:
    nu = n * UNIT_ROUNDOFF
    return nu / (1.0 - nu)


def block_sum(lo: np.ndarray, hi: np.ndarray) -> Tuple[float, float]:
    """
    Suma de un bloque con np.sum más la cota clásica γ_n·Σ|x| del error
    de redondeo, válida para cualquier orden de suma.
    """
    n = lo.size
    if n == 0:
        return 0.0, 0.0
    gamma = _gamma(n)
    s_lo = float(np.sum(lo))
    s_hi = float(np.sum(hi))
    err_lo = gamma * float(np.sum(np.abs(lo))) * (1.0 + 2.0 * gamma) * (1.0 + 1e-15)
    err_hi = gamma * float(np.sum(np.abs(hi))) * (1.0 + 2.0 * gamma) * (1.0 + 1e-15)
    return float(_down(s_lo - err_lo)), float(_up(s_hi + err_hi))


def combine_partials(partials: Iterable[Tuple[float, float]]) -> Interval:
    """Combina sumas parciales en orden de índice; fsum redondea correctamente"""
    partials = list(partials)
    if not partials:
        return Interval(0.0)
    lo = math.fsum(p[0] for p in partials)
    hi = math.fsum(p[1] for p in partials)
    if all(p[0] == 0.0 for p in partials) and all(p[1] == 0.0 for p in partials):
        return Interval(0.0)
    return Interval(_down(lo), _up(hi))


def sum_enclosure(terms: Union[Interval, Sequence[Interval]], policy: Optional[SumPolicy] = None) -> Interval:
    """Encierro de la suma exacta de los términos"""
    policy = policy or SumPolicy.chunked()
    if not isinstance(terms, Interval):
        terms = Interval.concat(list(terms))
    lo = np.atleast_1d(terms.lo).ravel()
    hi = np.atleast_1d(terms.hi).ravel()
    if lo.size == 0:
        return Interval(0.0)
    if policy.kind == SumPolicyKind.SEQUENTIAL:
        return combine_partials([(float(a), float(b)) for a, b in zip(lo.tolist(), hi.tolist())])
    k = policy.chunk
    partials: List[Tuple[float, float]] = [block_sum(lo[i:i + k], hi[i:i + k]) for i in range(0, lo.size, k)]
    return combine_partials(partials)
