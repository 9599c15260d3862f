import io
import math

import mpmath
import numpy as np
import pytest

from app.modules.meansquare.explicit import explicit_formula_residual
from app.modules.meansquare.integrals import (
    MAX_X, CsvSink, PrefixRun, j_prefix, mean_square_I, stream_mean_square,
)
from app.modules.meansquare.schemas import CSV_COLUMNS, CSV_COLUMNS_WITH_J
from app.modules.meansquare.sieve import BasePrimes, PsiAccumulator, lambda_segment, psi_prefix, von_mangoldt
from app.shared.errors import DomainError
from tests.conftest import DESK_HEIGHT, WORKERS

SMALL_SEGMENT = 1024


def _primes_upto(n):
    flags = bytearray([1]) * (n + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(n) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [p for p in range(n + 1) if flags[p]]


def _psi_oracle(limit):
    """ψ(n) en mpmath para n = 0..limit"""
    lam = [mpmath.mpf(0)] * (limit + 1)
    for p in _primes_upto(limit):
        log_p = mpmath.log(p)
        pk = p
        while pk <= limit:
            lam[pk] = log_p
            pk *= p
    psi, acc = [], mpmath.mpf(0)
    for value in lam:
        acc += value
        psi.append(acc)
    return psi


def _mean_square_oracle(X):
    psi = _psi_oracle(2 * X)
    total = mpmath.mpf(0)
    for n in range(X, 2 * X):
        c = psi[n]
        total += ((n + 1 - c) ** 3 - (n - c) ** 3) / 3
    return total


@pytest.mark.parametrize("n,p,prime_power", [(1, 0, False), (2, 2, True), (6, 0, False), (8, 2, True),
                                               (9, 3, True), (12, 0, False), (97, 97, True), (121, 11, True)])
def test_von_mangoldt(n, p, prime_power):
    value = von_mangoldt(n)
    assert value.p == p and value.is_prime_power == prime_power
    assert value.value == (math.log(p) if prime_power else 0.0)


def test_von_mangoldt_dominio():
    with pytest.raises(DomainError):
        von_mangoldt(0)


def test_criba_segmentada_coincide_con_la_definicion():
    base = BasePrimes(5000)
    values = np.concatenate([lambda_segment(0, 1000, base), lambda_segment(1000, 2000, base)])
    expected = [0.0] + [von_mangoldt(n).value for n in range(1, 2000)]
    np.testing.assert_allclose(values, expected, rtol=1e-15, atol=0.0)
    assert np.array_equal(values > 0, np.array(expected) > 0)


def test_criba_exige_primos_base():
    with pytest.raises(DomainError):
        lambda_segment(0, 200, BasePrimes(100))


def test_psi():
    assert psi_prefix(0) == 0.0
    assert psi_prefix(1) == 0.0
    assert psi_prefix(10) == pytest.approx(7.832018, abs=1e-6)
    assert psi_prefix(10) == pytest.approx(math.log(2520), rel=1e-14)
    assert psi_prefix(100000) == pytest.approx(float(_psi_oracle(100000)[-1]), rel=1e-14)


def test_psi_acumulador_avanza_por_tramos():
    acc = PsiAccumulator(10000, segment=SMALL_SEGMENT)
    acc.advance(3000)
    acc.advance(10000)
    assert acc.value() == psi_prefix(10000)
    with pytest.raises(DomainError):
        acc.advance(5)


def test_psi_cerca_de_x():
    assert abs(psi_prefix(10**6) / 10**6 - 1.0) < 0.002


def test_integrales_pequeñas():
    assert mean_square_I(1) == pytest.approx(7.0 / 3.0, rel=1e-12)
    assert j_prefix(1) == pytest.approx(1.0 / 3.0, rel=1e-12)
    assert j_prefix(2) == pytest.approx(8.0 / 3.0, rel=1e-12)
    assert mean_square_I(2) == pytest.approx(float(_mean_square_oracle(2)), rel=1e-12)
    assert mean_square_I(2) == pytest.approx(6.349470, abs=1e-6)


@pytest.mark.parametrize("X", [7, 100, 1000])
def test_integral_contra_mpmath(X):
    assert mean_square_I(X) == pytest.approx(float(_mean_square_oracle(X)), rel=1e-10)


def test_integrales_fuera_de_dominio():
    with pytest.raises(DomainError):
        mean_square_I(0)
    with pytest.raises(DomainError):
        j_prefix(0)
    with pytest.raises(DomainError):
        PrefixRun(2 * MAX_X + 2)
    with pytest.raises(DomainError):
        PrefixRun(100).j(101)


def test_identidad_diadica():
    run = PrefixRun(20000, segment=SMALL_SEGMENT)
    series = stream_mean_square(1, 10000, stride=37, with_j=True, segment=SMALL_SEGMENT)
    for row in series.records.itertuples(index=False):
        X = int(row.X)
        assert row.I == float(run.j(2 * X).as_fraction() - run.j(X).as_fraction())
        assert row.J == run.j(X).value()
        assert row.two_J_over_X2 == pytest.approx(2.0 * row.J / X**2, rel=1e-15)


def test_serie_de_1_a_100():
    series = stream_mean_square(1, 100)
    assert series.count == 100
    assert list(series.records.columns) == CSV_COLUMNS
    assert series.records["X"].tolist() == list(range(1, 101))
    assert series.records["I"].iloc[0] == pytest.approx(7.0 / 3.0, rel=1e-12)
    assert series.min_I == series.records["I"].min()
    assert series.min_ratio <= series.max_ratio


def test_serie_coincide_con_mean_square_I():
    series = stream_mean_square(900, 5000, stride=411, segment=SMALL_SEGMENT)
    for row in series.records.itertuples(index=False):
        assert row.I == mean_square_I(int(row.X))


def test_serie_identica_con_varios_procesos():
    one = stream_mean_square(1, 5000, stride=7, segment=SMALL_SEGMENT, workers=1)
    two = stream_mean_square(1, 5000, stride=7, segment=SMALL_SEGMENT, workers=2)
    assert one.records.equals(two.records)


def test_serie_independiente_del_segmento():
    small = stream_mean_square(1, 3000, stride=13, segment=SMALL_SEGMENT)
    large = stream_mean_square(1, 3000, stride=13)
    assert small.records.equals(large.records)


def test_serie_rechaza_rangos_invalidos():
    with pytest.raises(DomainError):
        stream_mean_square(10, 1)
    with pytest.raises(DomainError):
        stream_mean_square(1, 10, stride=0)
    with pytest.raises(DomainError):
        stream_mean_square(1, MAX_X + 1)


def test_sumidero_csv():
    buffer = io.StringIO()
    series = stream_mean_square(1, 100, sink=CsvSink(buffer))
    lines = buffer.getvalue().splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 101
    assert series.records.empty and series.count == 100
    x, i, ratio = lines[1].split(",")
    assert x == "1" and float(i) == pytest.approx(7.0 / 3.0, rel=1e-12) and float(ratio) == float(i)


def test_sumidero_csv_con_j():
    buffer = io.StringIO()
    stream_mean_square(5, 9, sink=CsvSink(buffer, with_j=True), with_j=True)
    lines = buffer.getvalue().splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS_WITH_J)
    assert len(lines) == 6


def test_residuo_de_la_formula_explicita(table):
    assert math.isfinite(explicit_formula_residual(10.5, table, 396.0))
    with pytest.raises(DomainError):
        explicit_formula_residual(1000.0, table, 396.0)
    with pytest.raises(DomainError):
        explicit_formula_residual(0.5, table, 396.0)
    xs = [20.5 + k for k in range(40)]
    few = np.mean([abs(explicit_formula_residual(x, table, 20.0)) for x in xs])
    many = np.mean([abs(explicit_formula_residual(x, table, 396.0)) for x in xs])
    assert many < few


def test_identidad_diadica_en_puntos_aleatorios():
    rng = np.random.default_rng(7)
    xs = sorted(set(rng.integers(1, 10**5 + 1, 100).tolist()))
    run = PrefixRun(2 * 10**5)
    series = stream_mean_square(1, 10**5)
    for X in xs:
        assert series.records["I"].iloc[X - 1] == float(run.j(2 * X).as_fraction() - run.j(X).as_fraction())


def test_serie_coincide_con_recalculo_directo():
    rng = np.random.default_rng(11)
    xs = rng.integers(1, 10**6 + 1, 100).tolist()
    series = stream_mean_square(1, 10**6)
    for X in xs:
        row = series.records.iloc[X - 1]
        assert int(row["X"]) == X
        assert row["I"] == pytest.approx(mean_square_I(X), rel=1e-9)


@pytest.mark.desk
def test_residuo_de_escritorio(desk_table):
    xs = [1000.5 + 450.0 * k for k in range(20)]
    assert xs[-1] < 10**4
    few = np.mean([abs(explicit_formula_residual(x, desk_table, 100.0)) for x in xs])
    many = np.mean([abs(explicit_formula_residual(x, desk_table, DESK_HEIGHT)) for x in xs])
    assert many < 0.5
    assert many < few
    assert abs(explicit_formula_residual(1000.5, desk_table, DESK_HEIGHT)) <= 0.5
    assert abs(explicit_formula_residual(2.5, desk_table, DESK_HEIGHT)) < 0.5


@pytest.mark.full
def test_barrido_completo():
    # Para X < 10 domina la escala: I(1)/1 = 7/3
    series = stream_mean_square(10, 10**7, sink=lambda block: None, workers=WORKERS)
    assert series.count == 10**7 - 9
    assert 1.8e-4 < series.min_ratio
    assert series.max_ratio < 0.8603
