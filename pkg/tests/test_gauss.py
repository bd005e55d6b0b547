import cmath
import math
from math import gcd

import mpmath
import pytest

from mubkit import gauss


def mp_sum(a, b, count, modulus):
    """High-precision reference for sum_n exp(2 pi i (a n^2 + b n) / modulus)."""
    mpmath.mp.dps = 30
    tot = mpmath.mpc(0)
    for n in range(count):
        tot += mpmath.expjpi(mpmath.mpf(2 * ((a * n * n + b * n) % modulus)) / modulus)
    return complex(tot)


def test_trace_d3():
    r = gauss.trace_Dk(3, 1)
    assert abs(r.value - complex(1.5, math.sqrt(3) / 2)) < 1e-12
    assert abs(r.modulus - math.sqrt(3)) < 1e-12


def test_trace_d15_k2():
    assert abs(gauss.trace_Dk(15, 2).modulus - math.sqrt(15)) < 1e-9


def test_trace_d9_k3_is_not_sqrt_d():
    assert abs(gauss.trace_Dk(9, 3).modulus - 3.0) > 1e-3


def test_trace_preconditions():
    with pytest.raises(ValueError):
        gauss.trace_Dk(4, 1)
    with pytest.raises(ValueError):
        gauss.trace_Dk(5, -1)


@pytest.mark.parametrize("d", [3, 7, 15, 33, 99])
def test_trace_matches_mpmath(d):
    for k in range(d):
        assert abs(gauss.trace_Dk(d, k).value - mp_sum(k, k, d, 2 * d)) < 1e-9


@pytest.mark.parametrize("d", range(3, 100, 2))
def test_trace_modulus_for_coprime_k(d):
    for k in range(1, d):
        if gcd(k, d) == 1:
            assert abs(gauss.trace_Dk(d, k).modulus - math.sqrt(d)) < 1e-9


def test_S_examples():
    assert abs(gauss.gauss_S(1, 1, 1).value - 1) < 1e-12
    assert abs(gauss.gauss_S(1, 1, 3).value - math.sqrt(3) * cmath.exp(1j * math.pi / 6)) < 1e-12
    assert abs(gauss.gauss_S(2, 0, 4).value - (2 + 2j)) < 1e-12


def test_S_preconditions():
    with pytest.raises(ValueError):
        gauss.gauss_S(0, 2, 3)
    with pytest.raises(ValueError):
        gauss.gauss_S(1, 0, 3)


@pytest.mark.parametrize("a,b,d", [(3, 1, 5), (-2, 4, 7), (5, -3, 3), (1, 1, -3)])
def test_S_matches_mpmath(a, b, d):
    # exp(i pi x / d) = exp(2 pi i x / (2d)); negative d mirrors the sign
    s = 1 if d > 0 else -1
    assert abs(gauss.gauss_S(a, b, d).value - mp_sum(s * a, s * b, abs(d), 2 * abs(d))) < 1e-9


def test_reciprocity_grid():
    params = gauss.valid_reciprocity_params(12)
    assert any(a < 0 for a, _, _ in params)
    worst = max(gauss.reciprocity_check(a, b, d)[2] for a, b, d in params)
    assert worst < 1e-9


def test_printed_prefactor_fails():
    bad = [p for p in gauss.valid_reciprocity_params(6) if gauss.reciprocity_check(*p, printed_prefactor=True)[2] > 1e-3]
    assert bad


@pytest.mark.parametrize("d", range(1, 50, 2))
def test_S11_closed_form(d):
    assert abs(gauss.gauss_S(1, 1, d).value - gauss.S11_closed_form(d)) < 1e-9


def test_even_sum_d2():
    assert abs(gauss.even_quadratic_sum(2).value - (1 + 1j)) < 1e-12


@pytest.mark.parametrize("d", range(2, 101, 2))
def test_even_sum_closed_form(d):
    assert abs(gauss.even_quadratic_sum(d).value - gauss.even_closed_form(d)) < 1e-9


def test_even_sum_rejects_odd():
    with pytest.raises(ValueError):
        gauss.even_quadratic_sum(5)


@pytest.mark.parametrize("d,k", [(5, 1), (7, 3), (3, 1), (15, 7)])
def test_unbiasedness_implies_gauss(d, k):
    assert gauss.unbiasedness_implies_gauss(d, k)


def test_unbiasedness_implies_gauss_preconditions():
    with pytest.raises(ValueError):
        gauss.unbiasedness_implies_gauss(9, 3)
    with pytest.raises(ValueError):
        gauss.unbiasedness_implies_gauss(4, 1)


def test_rows_shape():
    rows = gauss.trace_rows(9)
    assert [r["k"] for r in rows] == [1, 2, 4, 5, 7, 8]
    assert all(set(r) == set(gauss.TABLE_COLUMNS) for r in rows)
