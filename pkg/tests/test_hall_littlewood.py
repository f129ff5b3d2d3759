import itertools
import time

import numpy as np
import pytest
from hypothesis import given, strategies as st

from qbethe.hall_littlewood import (
    PoleError,
    c_coefficient,
    hl_polynomial,
    hl_q0_determinant,
    is_regular,
    one_variable_block,
    signed_permutations,
)
from qbethe.qnumbers import qfactorial, qpochhammer
from qbethe.states import enumerate_states, multiplicity


def regular_point(rng, n):
    while True:
        xi = np.sort(rng.uniform(0.05, np.pi - 0.05, n))[::-1]
        if is_regular(xi, 1e-3):
            return xi


def test_c_coefficient_examples():
    xi = 0.7
    assert c_coefficient([xi], 0, 0, 0) == pytest.approx(1 / (1 - np.exp(-2j * xi)))
    assert c_coefficient([np.pi / 2], 0.0, 0.5, 0.0) == pytest.approx((1 + 0.5j) / 2, abs=1e-15)
    with pytest.raises(PoleError):
        c_coefficient([1.0, 1.0], 0.3, 0.2, 0.1)
    with pytest.raises(PoleError):
        c_coefficient([0.0], 0.3, 0.2, 0.1)


def test_group_order():
    assert len(signed_permutations(3)) == 48
    assert len({(g.perm, g.signs) for g in signed_permutations(3)}) == 48


@pytest.mark.parametrize("n", [1, 2, 3])
def test_empty_partition_value(n):
    rng = np.random.default_rng(n)
    for _ in range(5):
        q, a, ah = rng.uniform(-0.9, 0.9, 3)
        xi = regular_point(rng, n)
        expected = qpochhammer(a * ah, q, n) * qfactorial(n, q)
        assert abs(hl_polynomial((0,) * n, xi, q, a, ah) - expected) < 1e-12


def test_single_variable_closed_form():
    q, a, ah, xi = 0.3, 0.5, -0.4, 1.1
    for l in range(4):
        direct = c_coefficient([xi], q, a, ah) * np.exp(1j * l * xi) + c_coefficient([-xi], q, a, ah) * np.exp(-1j * l * xi)
        assert hl_polynomial((l,), [xi], q, a, ah) == pytest.approx(direct, abs=1e-14)
        assert one_variable_block(l, xi, a, ah) == pytest.approx(direct, abs=1e-14)


def fourier_coefficient(lam, q, a, ah, grid=16):
    """Coefficient of e^{i<lam, xi>} by discrete projection on a pole-free grid."""
    n = len(lam)
    # distinct shifts per axis keep every node off the walls xi_j +- xi_k in pi Z
    axes = [2 * np.pi * (np.arange(grid) + s) / grid for s in (0.37, 0.11, 0.23)[:n]]
    total = 0j
    for pt in itertools.product(*axes):
        xi = np.array(pt)
        total += hl_polynomial(lam, xi, q, a, ah, check_real=False) * np.exp(-1j * xi @ np.array(lam))
    return total / grid**n


@pytest.mark.parametrize("lam", [(0,), (3,), (2, 0), (1, 1), (3, 1), (2, 2), (0, 0)])
def test_leading_monomial_coefficient(lam):
    q, a, ah = 0.4, 0.3, -0.6
    m_max = max(lam) + 1
    expected = qpochhammer(a * ah, q, multiplicity(lam, 0))
    for l in range(m_max + 1):
        expected *= qfactorial(multiplicity(lam, l), q)
    assert abs(fourier_coefficient(lam, q, a, ah) - expected) < 1e-10


@given(st.integers(0, 10_000), st.sampled_from([1, 2, 3]))
def test_hyperoctahedral_symmetry_and_realness(seed, n):
    rng = np.random.default_rng(seed)
    q, a, ah = rng.uniform(-0.9, 0.9, 3)
    xi = regular_point(rng, n)
    lam = tuple(sorted(rng.integers(0, 4, n), reverse=True))
    value = hl_polynomial(lam, xi, q, a, ah)
    assert abs(value.imag) <= 1e-10 * max(1, abs(value))
    group = signed_permutations(n)
    for k in rng.choice(len(group), size=min(5, len(group)), replace=False):
        moved = hl_polynomial(lam, group[k].apply(xi), q, a, ah)
        assert abs(moved - value) <= 1e-10 * max(1, abs(value))
    assert abs(hl_polynomial(lam, -xi, q, a, ah) - value) <= 1e-10 * max(1, abs(value))


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_q0_determinant_matches_direct_sum(n, m):
    rng = np.random.default_rng(10 * n + m)
    for _ in range(10):
        a, ah = rng.uniform(-0.9, 0.9, 2)
        xi = regular_point(rng, n)
        for lam in enumerate_states(n, m, as_tuples=True):
            direct = hl_polynomial(lam, xi, 0.0, a, ah)
            det = hl_q0_determinant(lam, xi, a, ah)
            assert abs(direct - det) < 1e-10 * max(1, abs(direct))


def test_symplectic_normalisation_at_dirichlet_roots():
    n, m = 3, 2
    xi = np.pi * np.array([3, 2, 1]) / (m + n + 1)
    assert hl_polynomial((0, 0, 0), xi, 0.0, 0.0, 0.0) == pytest.approx(1.0, abs=1e-12)
    assert hl_q0_determinant((0, 0, 0), xi, 0.0, 0.0) == pytest.approx(1.0, abs=1e-12)


def test_determinant_rejects_degenerate_cosines():
    with pytest.raises(PoleError):
        hl_q0_determinant((1, 0), [1.0, -1.0], 0.2, 0.1)


def test_length_mismatch():
    with pytest.raises(ValueError):
        hl_polynomial((1, 0), [0.4], 0.1, 0.2, 0.3)


def test_cost_guard_six_variables():
    xi = np.pi * np.arange(6, 0, -1) / 7.3
    hl_polynomial((2, 1, 1, 0, 0, 0), xi, 0.3, 0.2, -0.4)
    start = time.perf_counter()
    hl_polynomial((3, 2, 1, 1, 0, 0), xi, 0.3, 0.2, -0.4)
    assert time.perf_counter() - start < 1.0
