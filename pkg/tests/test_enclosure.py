from fractions import Fraction

import mpmath
import numpy as np
import pytest

from app.shared.enclosure import (
    E, LN2, PI, Interval, SumPolicy, arith, elementary, make_interval, make_intervals, sum_enclosure,
)
from app.shared.enums import ArithOp, ElementaryFn
from app.shared.errors import DomainError, ParseError
from tests.conftest import encloses


def test_make_interval_encierra_el_decimal():
    x = make_interval("0.1")
    assert x.contains(Fraction(1, 10))
    assert float(x.lo) < float(x.hi)


def test_make_interval_exacto_es_degenerado():
    x = make_interval("0.5")
    assert float(x.lo) == float(x.hi) == 0.5


def test_make_interval_con_radio():
    x = make_interval("14.134725141734693790", 1e-8)
    assert x.contains(Fraction("14.13472513"))
    assert x.contains(Fraction("14.13472515"))
    assert not x.contains(Fraction("14.1347252"))


@pytest.mark.parametrize("text", ["abc", "1.2.3", "", "1e", "--1"])
def test_make_interval_rechaza_texto(text):
    with pytest.raises(ParseError):
        make_interval(text)


def test_make_interval_rechaza_radio_negativo():
    with pytest.raises(DomainError):
        make_interval("1.0", -1e-3)


def test_make_intervals_vectorial():
    xs = make_intervals(["0.1", "0.25", "14.134725141734693790"], 1e-8)
    assert len(xs) == 3
    assert xs[0].contains(Fraction(1, 10))
    assert xs[1].contains(Fraction(1, 4) + Fraction(1, 10**8))
    assert encloses(xs[2], mpmath.mpf("14.134725141734693790"))


def test_constantes_certificadas():
    assert encloses(PI, mpmath.pi)
    assert encloses(E, mpmath.e)
    assert encloses(LN2, mpmath.log(2))


def test_aritmetica_encierra_racionales():
    a, b = make_interval("0.1"), make_interval("0.2")
    assert (a + b).contains(Fraction(3, 10))
    assert (a - b).contains(Fraction(-1, 10))
    assert (a * b).contains(Fraction(1, 50))
    assert (Interval(1.0) / Interval(3.0)).contains(Fraction(1, 3))
    assert (3.0 - a).contains(Fraction(29, 10))


def test_arith_funcional():
    a, b = Interval(1.0), Interval(3.0)
    assert arith(ArithOp.DIV, a, b).contains(Fraction(1, 3))
    assert arith(ArithOp.ADD, a, b).contains(Fraction(4))


def test_division_por_intervalo_con_cero():
    with pytest.raises(DomainError):
        Interval(1.0) / Interval(-1.0, 1.0)


def test_potencia_par_de_intervalo_que_cruza_cero():
    x = Interval(-2.0, 1.0).powi(2)
    assert float(x.lo) == 0.0
    assert float(x.hi) >= 4.0


def test_potencia_negativa():
    x = Interval(2.0).powi(-3)
    assert x.contains(Fraction(1, 8))


def test_abs_de_intervalo():
    x = abs(Interval(-3.0, 2.0))
    assert float(x.lo) == 0.0 and float(x.hi) == 3.0


@pytest.mark.parametrize("value", ["0.5", "1", "3", "100", "1000000", "74920.83"])
def test_ln_sqrt_contra_mpmath(value):
    x = make_interval(value)
    assert encloses(x.ln(), mpmath.log(mpmath.mpf(value)))
    assert encloses(x.sqrt(), mpmath.sqrt(mpmath.mpf(value)))


def test_ln_rechaza_no_positivos():
    with pytest.raises(DomainError):
        Interval(0.0, 1.0).ln()
    with pytest.raises(DomainError):
        Interval(-1.0).sqrt()


@pytest.mark.parametrize("value", ["0.1", "1", "3.5", "14.134725141734693790", "1000.25", "9706.5"])
def test_trig_contra_mpmath(value):
    x = make_interval(value)
    assert encloses(x.sin(), mpmath.sin(mpmath.mpf(value)))
    assert encloses(x.cos(), mpmath.cos(mpmath.mpf(value)))


def test_trig_vectorial():
    points = np.array([0.5, 1.0, 3.0, 100.0, 1e6])
    s = Interval(points).sin()
    for k, p in enumerate(points.tolist()):
        assert encloses(s[k], mpmath.sin(mpmath.mpf(p)))


def test_trig_alcanza_extremos_interiores():
    assert float(Interval(0.0, 4.0).cos().lo) == -1.0
    assert float(Interval(1.5, 1.7).sin().hi) == 1.0
    wide = Interval(10.0, 20.0).sin()
    assert float(wide.lo) == -1.0 and float(wide.hi) == 1.0


def test_trig_rechaza_argumentos_enormes():
    with pytest.raises(DomainError):
        Interval(2.0 ** 25).cos()


def test_elementary_funcional():
    x = make_interval("2")
    assert encloses(elementary(ElementaryFn.LN, x), mpmath.log(2))
    assert elementary(ElementaryFn.POWI, x, 10).contains(Fraction(1024))
    with pytest.raises(DomainError):
        elementary(ElementaryFn.POWI, x)


def test_nan_rechazado():
    with pytest.raises(DomainError):
        Interval(float("nan"))


def test_sum_enclosure_de_decimos():
    terms = make_intervals(["0.1"] * 10000)
    assert sum_enclosure(terms).contains(Fraction(1000))
    assert sum_enclosure(terms, SumPolicy.sequential()).contains(Fraction(1000))
    assert sum_enclosure(terms, SumPolicy.chunked(7)).contains(Fraction(1000))


def test_sum_enclosure_armonica():
    n = 2000
    terms = 1.0 / Interval(np.arange(1, n + 1, dtype=np.float64))
    exact = sum(Fraction(1, k) for k in range(1, n + 1))
    assert sum_enclosure(terms).contains(exact)


def test_sum_enclosure_es_deterministica():
    terms = 1.0 / Interval(np.arange(1, 20001, dtype=np.float64)).powi(2)
    assert sum_enclosure(terms).same_as(sum_enclosure(terms))


def test_sum_enclosure_vacia():
    assert sum_enclosure(Interval(np.zeros(0))).same_as(Interval(0.0))


def test_aritmetica_de_intervalos_anchos():
    assert (Interval(1.0, 2.0) + Interval(3.0, 4.0)).contains(Interval(4.0, 6.0))
    product = Interval(-1.0, 2.0) * Interval(3.0, 4.0)
    assert product.contains(Interval(-4.0, 8.0))
    assert float(product.width()) < 12.0 + 1e-12


def test_suma_de_un_millon_de_terminos():
    terms = make_intervals(["0.000001"] * 10**6)
    total = sum_enclosure(terms)
    assert total.contains(Fraction(1))
    assert float(total.width()) <= 1e-9


# Muestras aleatorias con semilla fija, oráculo mpmath a 60 dígitos
SAMPLES = 2000


def _centers(kind):
    def draw(rng, n):
        if kind == "real":
            return rng.uniform(-1e3, 1e3, n)
        if kind == "small":
            return rng.uniform(-10.0, 10.0, n)
        magnitude = 10.0 ** rng.uniform(-6.0, 6.0, n)
        if kind == "nonzero":
            return magnitude * rng.choice([-1.0, 1.0], n)
        return magnitude
    return draw


def _random_intervals(rng, kind, n=SAMPLES):
    c = _centers(kind)(rng, n)
    w = np.abs(c) * 10.0 ** rng.uniform(-15.0, -0.05, n)
    w[rng.random(n) < 0.1] = 0.0
    return Interval(c - w, c + w)


def _random_points(rng, iv):
    n = len(iv)
    u = rng.random(n)
    u[rng.random(n) < 0.1] = 0.0
    u[rng.random(n) < 0.1] = 1.0
    return np.clip(iv.lo + u * (iv.hi - iv.lo), iv.lo, iv.hi)


def _nested(rng, iv, gap=0.0):
    # Cada extremo interior coincide con uno exterior o queda a más de ``gap``
    a, b = _random_points(rng, iv), _random_points(rng, iv)
    for p in (a, b):
        p[p - iv.lo < gap] = iv.lo[p - iv.lo < gap]
        p[iv.hi - p < gap] = iv.hi[iv.hi - p < gap]
    return Interval(np.minimum(a, b), np.maximum(a, b))


def _assert_encloses_all(result, values):
    for k, value in enumerate(values):
        assert mpmath.mpf(float(result.lo[k])) <= value <= mpmath.mpf(float(result.hi[k])), k


BINARY = [
    (ArithOp.ADD, "real", lambda x, y: x + y),
    (ArithOp.SUB, "real", lambda x, y: x - y),
    (ArithOp.MUL, "real", lambda x, y: x * y),
    (ArithOp.DIV, "nonzero", lambda x, y: x / y),
]

UNARY = [
    (ElementaryFn.SQRT, None, "positive", mpmath.sqrt),
    (ElementaryFn.LN, None, "positive", mpmath.log),
    (ElementaryFn.SIN, None, "real", mpmath.sin),
    (ElementaryFn.COS, None, "real", mpmath.cos),
    (ElementaryFn.POWI, 2, "small", lambda x: x**2),
    (ElementaryFn.POWI, 3, "small", lambda x: x**3),
    (ElementaryFn.POWI, 5, "small", lambda x: x**5),
    (ElementaryFn.POWI, -2, "positive", lambda x: x**-2),
]


@pytest.mark.parametrize("seed,case", list(enumerate(BINARY)))
def test_aritmetica_encierra_muestras_aleatorias(seed, case):
    op, divisor_kind, oracle = case
    rng = np.random.default_rng(1000 + seed)
    a = _random_intervals(rng, "real")
    b = _random_intervals(rng, divisor_kind)
    xs, ys = _random_points(rng, a), _random_points(rng, b)
    result = arith(op, a, b)
    with mpmath.workdps(60):
        _assert_encloses_all(result, [oracle(mpmath.mpf(x), mpmath.mpf(y)) for x, y in zip(xs.tolist(), ys.tolist())])


@pytest.mark.parametrize("seed,case", list(enumerate(UNARY)))
def test_elementales_encierran_muestras_aleatorias(seed, case):
    fn, n, kind, oracle = case
    rng = np.random.default_rng(2000 + seed)
    a = _random_intervals(rng, kind)
    xs = _random_points(rng, a)
    result = elementary(fn, a, n)
    with mpmath.workdps(60):
        _assert_encloses_all(result, [oracle(mpmath.mpf(x)) for x in xs.tolist()])


@pytest.mark.parametrize("seed,case", list(enumerate(BINARY)))
def test_aritmetica_monotona_por_inclusion(seed, case):
    op, divisor_kind, _ = case
    rng = np.random.default_rng(3000 + seed)
    a = _random_intervals(rng, "real")
    b = _random_intervals(rng, divisor_kind)
    assert arith(op, a, b).contains(arith(op, _nested(rng, a), _nested(rng, b)))


@pytest.mark.parametrize("seed,case", list(enumerate(UNARY)))
def test_elementales_monotonas_por_inclusion(seed, case):
    fn, n, kind, _ = case
    rng = np.random.default_rng(4000 + seed)
    a = _random_intervals(rng, kind)
    # log, sin y cos de libm no son monótonos a nivel de ulp
    gap = 1e-6 if kind == "real" else 1e-9 * np.abs(a.mid())
    assert elementary(fn, a, n).contains(elementary(fn, _nested(rng, a, gap), n))
