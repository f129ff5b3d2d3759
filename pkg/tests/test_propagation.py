import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qbethe.hecke.checks import default_window, propagation_checks, random_invariant
from qbethe.hecke.group import canonicalize, simple_reflection
from qbethe.hecke.lattice import InsufficientSupportError, LatticeFunction, box, hashed_random, random_finite
from qbethe.hecke.operators import IntegralReflection
from qbethe.hecke.propagation import (
    Propagator,
    polytope_lattice_count,
    polytope_points,
    propagation,
    propagation_inverse,
    propagation_row,
    termination_measure,
)
from qbethe.params import HeckeParams

from strategies import model_params


@pytest.mark.parametrize("n,m", [(1, 3), (2, 2), (2, 3)])
def test_checks_multiprecision(n, m, ref_params):
    hp = HeckeParams.from_model(ref_params, "mp", 30)
    rep = propagation_checks(n, m, hp, seed=n + m)
    assert rep.max_residual < 1e-22, rep.to_record()
    assert set(rep.to_record()["residuals"]) >= {"roundtrip", "diagonal", "laplacian", "intertwining[0]"}


@settings(max_examples=8)
@given(model_params(strict=True), st.integers(0, 100))
def test_checks_extended_random_couplings(p, seed):
    hp = HeckeParams.from_model(p, "extended")
    rep = propagation_checks(2, 2, hp, seed=seed, window=box(2, -1, 3))
    assert rep.max_residual < 1e-12, rep.to_record()


def test_identity_on_alcove(ref_params):
    hp = HeckeParams.from_model(ref_params)
    J = Propagator(2, 3, hp)
    for lam in [(0, 0), (2, 1), (3, 3)]:
        assert J.row(lam) == {lam: 1.0}


def test_length_one_two_point_formula(ref_params):
    """For w_x = s_j: (J f)(x) = tau_j^{-1} (I_j f)(s_j x)."""
    hp = HeckeParams.from_model(ref_params)
    n, m = 2, 3
    f = hashed_random(2)
    J = Propagator(n, m, hp)
    seen = set()
    for x in box(n, -2, 5):
        lam, w = canonicalize(x, m)
        if w.length != 1:
            continue
        j = w.letters[0]
        seen.add(j)
        I = IntegralReflection(j, n, m, hp)
        assert abs(J.evaluate(f, x) - I.evaluate(f, simple_reflection(j, x, m)) / I.tau) < 1e-13
    assert seen == {0, 1, 2}


def test_diagonal_is_inverse_tau_square(ref_params):
    hp = HeckeParams.from_model(ref_params)
    J = Propagator(2, 2, hp)
    for x in box(2, -3, 5):
        w = canonicalize(x, 2)[1]
        assert J.diagonal(x) == pytest.approx(w.tau(hp, 2) ** -2, rel=1e-12)


def test_row_support_lies_in_the_polytope(ref_params):
    hp = HeckeParams.from_model(ref_params)
    J = Propagator(2, 2, hp)
    for x in box(2, -2, 4):
        mx = termination_measure(x, 2)
        for y in J.row(x):
            if y != x:
                assert termination_measure(y, 2) < mx


def test_polytope_counts():
    assert polytope_points((1, 0), 2) == {(1, 0)}
    assert polytope_lattice_count((1, 0), 2) == 1
    # rank one: the polytope of x is the segment between x and its dominant image
    assert polytope_lattice_count((-2,), 3) == 5
    assert polytope_lattice_count((5,), 3) == 5


def test_functional_wrappers(ref_params):
    hp = HeckeParams.from_model(ref_params)
    f = hashed_random(4)
    x = (-1, 3)
    row = propagation_row(x, hp, 2)
    assert row == sorted(row)
    value = propagation(f, x, hp, 2)
    assert value == pytest.approx(sum(c * f(y) for y, c in row), rel=1e-14)
    g = LatticeFunction.evaluator(lambda y: propagation_inverse(f, y, hp, 2))
    assert abs(propagation(g, x, hp, 2) - f(x)) < 1e-11


def test_insufficient_support(ref_params):
    hp = HeckeParams.from_model(ref_params)
    f = random_finite(2, 0, 2, np.random.default_rng(0), strict=True)
    with pytest.raises(InsufficientSupportError):
        Propagator(2, 2, hp).evaluate(f, (-3, 4))


def test_inverse_of_invariant_is_consistent(ref_params):
    hp = HeckeParams.from_model(ref_params, "extended")
    J = Propagator(2, 3, hp)
    F = random_invariant(2, 3, np.random.default_rng(1))
    g = J.inverse(F)
    for x in default_window(2, 3)[::5]:
        assert abs(J.evaluate(g, x) - F(x)) < 1e-12
