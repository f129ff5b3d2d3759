import numpy as np
import pytest

from qbethe.hecke.group import simple_reflection
from qbethe.hecke.lattice import InsufficientSupportError, LatticeFunction, box, hashed_random, random_finite
from qbethe.hecke.operators import (
    DifferenceReflection,
    IntegralReflection,
    Product,
    Translation,
    elementary_translation_sum,
)
from qbethe.hecke.relations import check_daha_relations, difference_relation_residuals
from qbethe.hecke.checks import random_invariant
from qbethe.hecke.waves import plane_wave_residual
from qbethe.params import HeckeParams


@pytest.fixture
def hp(ref_params):
    return HeckeParams.from_model(ref_params)


def test_rank_one_segment_rows(hp):
    """I_1 on Z with m=2: reflection x -> -x plus the alternating segment weights."""
    I1 = IntegralReflection(1, 1, 2, hp)
    u0 = I1.tau - 1 / I1.tau
    u1 = hp.tau_hat_j(1, 1) - 1 / hp.tau_hat_j(1, 1)
    row = I1.row((2,))
    # a_1(2) = 4: y = 2 - k for k = 1..4, with weight u_{k mod 2}
    expected = {(-2,): I1.tau - u0, (1,): -u1, (0,): -u0, (-1,): -u1}
    assert set(row) == set(expected)
    for y, c in expected.items():
        assert row[y] == pytest.approx(c)
    assert I1.row((0,)) == {(0,): I1.tau}
    neg = I1.row((-2,))
    assert neg[(2,)] == pytest.approx(I1.tau)
    assert neg[(-2,)] == pytest.approx(u0)
    assert neg[(-1,)] == pytest.approx(u1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_quadratic_relation_double_precision(n, hp):
    m = 2
    f = hashed_random(3)
    for j in range(n + 1):
        I = IntegralReflection(j, n, m, hp)
        d = I.tau - 1 / I.tau
        for x in box(n, -2, 4)[::3]:
            lhs = Product(I, I).evaluate(f, x) - d * I.evaluate(f, x)
            assert abs(lhs - f(x)) < 1e-12
        inv = I.inverse()
        for x in box(n, -1, 3)[::2]:
            assert abs(Product(inv, I).evaluate(f, x) - f(x)) < 1e-12


@pytest.mark.parametrize("n,m", [(1, 2), (2, 2), (2, 3), (3, 2)])
def test_daha_relations_extended(n, m, ref_params):
    hp = HeckeParams.from_model(ref_params, "extended")
    window = box(n, -1, m + 1) if n == 3 else None
    report = check_daha_relations(n, m, hp, trials=2, tol=1e-12, window=window)
    names = {r.relation for r in report.results}
    assert {f"quadratic[{j}]" for j in range(n + 1)} <= names
    assert {f"cross[{j}]" for j in range(n + 1)} <= names
    if n >= 2:
        assert "braid[0,1]" in names and f"braid[{n - 1},{n}]" in names
    else:
        assert not any(name.startswith("braid") for name in names)
    assert report.passed, report.to_records()


def test_difference_reflections_quadratic_and_invariance(hp):
    n, m = 2, 3
    window = box(n, -3, 6)
    res = difference_relation_residuals(n, m, hp, hashed_random(1), window)
    assert max(res.values()) < 1e-12
    F = random_invariant(n, m, np.random.default_rng(0))
    for j in range(n + 1):
        T = DifferenceReflection(j, n, m, hp)
        assert max(abs(T.evaluate(F, x) - T.tau * F(x)) for x in window) < 1e-12


def test_difference_reflection_on_wall_uses_positive_sign(hp):
    T = DifferenceReflection(1, 2, 3, hp)
    assert T.row((1, 1)) == {(1, 1): T.tau}
    row = T.row((0, 1))
    assert row[(1, 0)] == pytest.approx(1 / T.tau)


@pytest.mark.parametrize("j", [0, 1, 2])
def test_plane_wave_image(j, ref_params):
    hp = HeckeParams.from_model(ref_params)
    xi = np.array([1.1, 0.45])
    assert plane_wave_residual(j, xi, 3, hp, box(2, -2, 5)) < 1e-11


def test_translations_and_sums():
    f = hashed_random(0)
    t = Translation((1, -1))
    assert t.evaluate(f, (3, 3)) == f((2, 4))
    E = elementary_translation_sum(1, 2)
    assert abs(E.evaluate(f, (0, 0)) - sum(f(y) for y in [(1, 0), (-1, 0), (0, 1), (0, -1)])) < 1e-15


def test_strict_support_raises():
    f = random_finite(1, 0, 2, np.random.default_rng(0), strict=True)
    with pytest.raises(InsufficientSupportError):
        f((5,))
    zero = random_finite(1, 0, 2, np.random.default_rng(0))
    assert zero((5,)) == 0.0
    inv = LatticeFunction.invariant({(1,): 2.0}, 2)
    assert inv((3,)) == 2.0 and inv((-1,)) == 2.0
    with pytest.raises(ValueError):
        LatticeFunction({}, "invariant")


def test_reflection_consistency_with_group(hp):
    I0 = IntegralReflection(0, 2, 3, hp)
    row = I0.row((1, 0))
    assert simple_reflection(0, (1, 0), 3) in row
