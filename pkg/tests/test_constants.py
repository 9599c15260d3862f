import mpmath
import pytest
from pydantic import ValidationError

from app.modules.constants import pair_sums
from app.modules.constants.jumps import RATIO_LOW, jump_at, jump_bounds_hold, s_of_y_from_jumps
from app.modules.constants.kernels import b_numerator, b_term, c2_diagonal, c2_numerator, c2_term, s_kernel_term
from app.modules.constants.pair_sums import pair_sum
from app.modules.constants.schemas import BoundCertificate
from app.modules.constants.series import (
    b_bounds, b_finite_sum, c1_bound, c1_c2_separation, c2_lower_certificate, c3_bound, s_kernel_sum, s_of_y,
)
from app.modules.zeros.table import count_zeros, snap_height
from app.shared.enclosure import LN2, Interval, SumPolicy, TWO_PI, combine_partials, make_interval, sum_enclosure
from app.shared.enums import PairKernel
from app.shared.errors import DomainError
from tests.conftest import DESK_HEIGHT, WORKERS, encloses

# Entre γ̂_29 ≈ 98.83 y γ̂_30 ≈ 101.32
T_29 = 100.0


def _brute_force(table, n, kernel):
    """Σ sobre γ₁ y γ₂ con signo, sin usar la simetría de conjugación"""
    g = table.ordinates[:n]
    signed = Interval.concat([g, -g])
    rows = []
    for i in range(2 * n):
        row = sum_enclosure(kernel(signed[i], signed), SumPolicy.sequential())
        rows.append((float(row.lo), float(row.hi)))
    return combine_partials(rows)


def _b_oracle(g1, g2):
    g1, g2 = mpmath.mpf(g1), mpmath.mpf(g2)
    theta = g1 - g2
    rho1 = mpmath.mpc(0.5, g1)
    rho2 = mpmath.mpc(0.5, g2)
    return abs(mpmath.power(2, mpmath.mpc(2, theta)) - 1) / (abs(rho1) * abs(rho2) * abs(mpmath.mpc(2, theta)))


@pytest.mark.parametrize("theta", ["0", "1.5", "9.0647202836543876", "-40.25", "1000"])
def test_numerador_de_b_contra_complejo(theta):
    expected = abs(mpmath.power(2, mpmath.mpc(2, mpmath.mpf(theta))) - 1)
    assert encloses(b_numerator(make_interval(theta)), expected)


def test_numerador_de_b_en_el_minimo():
    # θ log 2 = 2π: |2^{2+iθ} − 1| = 3
    assert b_numerator(TWO_PI / LN2).contains(3.0)


def test_termino_de_b_contra_mpmath(table):
    g1, g2 = table.gamma(1), table.gamma(7)
    m1, m2 = float(g1.mid()), float(g2.mid())
    point1, point2 = Interval(m1), Interval(m2)
    assert encloses(b_term(point1, point2), _b_oracle(m1, m2))
    assert encloses(b_term(point1, -point2), _b_oracle(m1, -m2))
    assert encloses(b_term(point1, point1), mpmath.mpf(3) / (2 * (mpmath.mpf(m1) ** 2 + mpmath.mpf("0.25"))))


def test_b_con_un_cero(table):
    expected = (b_term(table.gamma(1), table.gamma(1)) + b_term(table.gamma(1), -table.gamma(1))) * 2.0
    assert b_finite_sum(table, 20.0).intersects(expected)


@pytest.mark.parametrize("kernel", [b_term, s_kernel_term])
def test_b_y_s_contra_fuerza_bruta(table, kernel):
    n = count_zeros(table, T_29)
    fast = b_finite_sum(table, T_29) if kernel is b_term else s_kernel_sum(table, T_29)
    assert fast.intersects(_brute_force(table, n, kernel))


def test_s_de_y_contra_fuerza_bruta(table):
    n = 100
    brute = _brute_force(table, n, c2_term) * 0.5
    Y = 0.5 * float(table.gamma(n).hi) + 0.5 * float(table.gamma(n + 1).lo)
    assert s_of_y(table, Y).intersects(brute)


def test_certificado_de_b(table):
    cert = b_bounds(table, T_29)
    assert cert.zeros_used == 29
    assert 0.0 < cert.total_lower <= cert.total_upper
    assert cert.total_upper >= float(cert.finite_part.hi) + float(cert.tail_part.hi) * 0.999


def test_s_crece_con_la_altura(table):
    low, high = s_kernel_sum(table, 50.0), s_kernel_sum(table, 300.0)
    assert float(low.mid()) < float(high.mid())
    assert low.lo <= high.hi


def test_b_rechaza_altura_sobre_el_techo_trigonometrico(table):
    with pytest.raises(DomainError):
        b_finite_sum(table, 2.0 ** 24)


def test_terminos_de_c2_del_primer_cero(table):
    g = table.gamma(1)
    diagonal = c2_term(g, g)
    assert diagonal.intersects(c2_diagonal(g))
    assert float(c2_diagonal(g).mid()) == pytest.approx(0.009998, abs=1e-6)
    assert float(c2_term(g, -g).mid()) == pytest.approx(-9.94e-5, rel=1e-2)


def test_numerador_de_c2_en_la_razon_limite():
    gamma = Interval(100.0)
    assert c2_numerator(gamma, gamma * RATIO_LOW).contains(2.0)


def test_s_de_y_con_un_cero(table):
    g = table.gamma(1)
    assert s_of_y(table, 20.0).intersects(c2_term(g, g) + c2_term(g, -g))


def test_s_de_70(table):
    assert count_zeros(table, 70.0) == 17
    assert float(s_of_y(table, 70.0).lo) > 0.0466


def test_saltos(table):
    first = jump_at(table, 1)
    assert float(first.total.mid()) == pytest.approx(0.009899, abs=1e-6)
    c3_lower = c3_bound(table, 396.0).total_lower
    for k in range(1, len(table) + 1):
        checks = jump_bounds_hold(jump_at(table, k), c3_lower)
        assert all(checks.values()), (k, checks)


def test_suma_de_saltos_es_s_de_y(table):
    assert s_of_y_from_jumps(table, 17).intersects(s_of_y(table, 70.0))


def test_c1_diagonal(table):
    n = count_zeros(table, T_29)
    diagonal = sum_enclosure(c2_diagonal(table.ordinates[:n]))
    assert diagonal.intersects(c1_bound(table, T_29).finite_part)


def test_c1_y_c3_con_pocos_ceros(table):
    c1 = c1_bound(table, 20.0)
    assert c1.finite_part.intersects(c2_diagonal(table.gamma(1)))
    assert c1.total_lower <= 0.046 <= c1.total_upper
    c3 = c3_bound(table, 20.0)
    assert float(c3.finite_part.mid()) == pytest.approx(0.005005, abs=1e-6)
    assert c3.total_lower <= 0.0231 <= c3.total_upper


def test_c2_y_separacion(table):
    lower = c2_lower_certificate(table, 396.0)
    assert lower.total_upper == float("inf")
    assert lower.height_label == "Y"
    separation = c1_c2_separation(table, 396.0, 396.0)
    assert separation.total_lower < lower.total_lower
    keys = [item.key for item in separation.lines()]
    assert "c1_upper" in keys and "Y" in keys


def test_suma_doble_identica_con_varios_procesos(table, monkeypatch):
    monkeypatch.setattr(pair_sums, "PAIR_BLOCK_SIZE", 16)
    sequential = pair_sum(table, 150, PairKernel.C2_SERIES, workers=1)
    parallel = pair_sum(table, 150, PairKernel.C2_SERIES, workers=2)
    assert sequential.same_as(parallel)


def test_certificado_con_cotas_invertidas():
    with pytest.raises(ValidationError):
        BoundCertificate(
            name="B",
            finite_part=Interval(1.0),
            tail_part=Interval(0.0),
            total_lower=2.0,
            total_upper=1.0,
            height=100.0,
            zeros_used=1,
        )


def test_lineas_del_certificado(table, zeros_file):
    cert = c3_bound(table, T_29)
    keys = [item.key for item in cert.lines()]
    assert keys == [
        "name", "T", "zeros_used", "finite_lo", "finite_hi", "tail_hi", "total_lower", "total_upper", "source",
    ]
    assert cert.lines()[-1].value == zeros_file.name


@pytest.mark.desk
def test_constantes_de_escritorio(desk_table):
    T = DESK_HEIGHT
    c1 = c1_bound(desk_table, T)
    assert 0.0455 < c1.total_lower and c1.total_upper < 0.0462
    c3 = c3_bound(desk_table, T)
    assert 0.02305 < c3.total_lower and c3.total_upper < 0.023105 + 3e-5


@pytest.mark.desk
def test_cota_de_B_de_escritorio(desk_table):
    T, _ = snap_height(desk_table, 18000.0)
    cert = b_bounds(desk_table, T, workers=WORKERS)
    assert cert.total_lower >= 0.84
    assert cert.total_upper <= 0.92


@pytest.mark.full
def test_cota_de_B_completa(full_table):
    T, _ = snap_height(full_table, 260877.0)
    cert = b_bounds(full_table, T, workers=WORKERS)
    assert cert.zeros_used >= 400_000
    assert 0.852089 - 1e-5 <= float(cert.finite_part.lo)
    assert float(cert.finite_part.hi) <= 0.852098 + 1e-5
    assert cert.total_upper <= 0.860297 + 1e-5


@pytest.mark.full
def test_s_de_y_completa(full_table):
    s = s_of_y(full_table, 74920.83, workers=WORKERS)
    assert float(s.lo) > 0.104004
