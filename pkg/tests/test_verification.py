import numpy as np
import pytest

from mubkit.constructions import Method, MubSet, build_P1_even, build_Pk_odd, build_prime_full, construct_mubs
from mubkit.generators import build_fourier, build_V, build_Vk
from mubkit.matrix import eval_dense, identity
from mubkit.verification import (
    brute_force_inner_products,
    check_eigenrelation,
    cycle_lengths,
    is_mutually_unbiased,
    is_unbiased,
    same_basis,
    shift_power_cycles,
    unbiased_deviation,
    verify_mum,
)


@pytest.mark.parametrize("d", [2, 5, 8])
def test_fourier_is_unbiased(d):
    assert is_unbiased(build_fourier(d))[0]


def test_identity_is_biased():
    ok, dev = is_unbiased(np.eye(4))
    assert not ok and abs(dev - 0.5) < 1e-12


def test_P0_star_P1_d2():
    p0, p1 = eval_dense(build_fourier(2)), eval_dense(build_P1_even(2))
    m = p0.conj().T @ p1
    np.testing.assert_allclose(np.abs(m), 2 ** -0.5, atol=1e-12)
    assert is_unbiased(m)[0]
    assert is_mutually_unbiased(p0, p1)[0]


def test_self_pair_is_biased():
    p = build_Pk_odd(7, 2)
    assert not is_mutually_unbiased(p, p)[0]


def test_d15_P0_P3_biased():
    assert not is_mutually_unbiased(build_fourier(15), build_Pk_odd(15, 3))[0]


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        is_mutually_unbiased(np.eye(2), np.eye(3))


def test_unbiased_deviation_location():
    a = eval_dense(build_fourier(3)).copy()
    a[1, 2] = 0
    dev, loc = unbiased_deviation(a)
    assert loc == (1, 2) and abs(dev - 3 ** -0.5) < 1e-12


def test_verify_mum_detects_duplicate():
    p0 = build_fourier(5)
    report = verify_mum(MubSet(5, Method.FIXTURE, (p0, p0)))
    assert not report.passed
    assert abs(report.max_deviation - abs(1 - 5 ** -0.5)) < 1e-9
    bad = [p for p in report.pairs if p.max_dev > 1e-9]
    assert [(p.i, p.j) for p in bad] == [(1, 2)]


def test_verify_mum_report_json():
    report = verify_mum(build_prime_full(3))
    obj = report.to_json()
    assert obj["passed"] and obj["dim"] == 3
    assert len(obj["pairs"]) == 4 * 3 // 2 and len(obj["unitarity"]) == 3


def test_verify_mum_non_unitary():
    bad = identity(3)
    m = MubSet(3, Method.FIXTURE, (bad,))
    assert not verify_mum(m).passed


def test_eigenrelation_examples():
    assert check_eigenrelation(5, 0, build_fourier(5)) < 1e-9
    assert check_eigenrelation(5, 2, build_Pk_odd(5, 2)) < 1e-9
    assert check_eigenrelation(6, 1, build_P1_even(6)) < 1e-9
    assert check_eigenrelation(5, 1, build_fourier(5)) > 1e-3
    with pytest.raises(ValueError):
        check_eigenrelation(6, 2, build_fourier(6))


def test_oracle_extremes_d3():
    o = brute_force_inner_products(build_prime_full(3))
    assert abs(o.maximum - 3 ** -0.5) < 1e-12 and abs(o.minimum - 3 ** -0.5) < 1e-12


def test_oracle_extremes_d4():
    o = brute_force_inner_products(construct_mubs(4))
    assert o.deviation() < 1e-12


def test_oracle_vacuous():
    o = brute_force_inner_products(MubSet(3, Method.FIXTURE, ()))
    assert o.vacuous and o.deviation() == 0.0


def test_oracle_catches_duplicate():
    p0 = build_fourier(4)
    o = brute_force_inner_products(MubSet(4, Method.FIXTURE, (p0, p0)))
    assert abs(o.maximum - 1) < 1e-12 and o.minimum < 1e-12


@pytest.mark.parametrize("d", range(3, 22, 2))
def test_eigenvector_moduli(d):
    from math import gcd

    V = eval_dense(build_V(d))
    U = np.diag(np.exp(2j * np.pi * np.arange(d) / d))
    for k in range(1, d):
        if gcd(k, d) != 1:
            continue
        m = U @ np.linalg.matrix_power(V.conj().T, k)
        _, vecs = np.linalg.eig(m)
        assert np.max(np.abs(np.abs(vecs) - d ** -0.5)) < 1e-6
        assert shift_power_cycles(d, k) == [d]


def test_cycles_non_coprime():
    assert shift_power_cycles(9, 3) == [3, 3, 3]
    assert shift_power_cycles(6, 0) == [1] * 6
    assert cycle_lengths([1, 0, 2]) == [1, 2]


def test_same_basis():
    p = eval_dense(build_fourier(4))
    perm = np.eye(4)[[2, 0, 3, 1]] * np.exp(1j * np.arange(4))
    assert same_basis(p, p @ perm)
    assert not same_basis(p, eval_dense(build_P1_even(4)))


def test_Vk_matches_product():
    assert np.allclose(eval_dense(build_Vk(5, 3)), eval_dense(build_V(5)) @ np.diag(np.exp(2j * np.pi * 3 * np.arange(5) / 5)))
