import pytest

from qbethe.hecke.poincare import ClosureCapError, poincare_bruteforce, poincare_series
from qbethe.params import HeckeParams, ModelParams
from qbethe.qnumbers import qfactorial
from qbethe.states import enumerate_states


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_product_formula_matches_enumeration(n, m, ref_params):
    hp = HeckeParams.from_model(ref_params)
    for lam in enumerate_states(n, m, as_tuples=True):
        assert abs(poincare_series(lam, hp, m) - poincare_bruteforce(lam, hp, m)) < 1e-12


def test_interior_regular_point_has_trivial_stabilizer(ref_params):
    hp = HeckeParams.from_model(ref_params)
    assert poincare_series((3, 2, 1), hp, 4) == pytest.approx(1.0)
    assert poincare_bruteforce((3, 2, 1), hp, 4) == pytest.approx(1.0)


def test_interior_cluster_is_a_q_factorial(ref_params):
    hp = HeckeParams.from_model(ref_params)
    t2 = complex(hp.tau**2)
    assert poincare_series((2, 2, 2), hp, 4) == pytest.approx(qfactorial(3, t2))


def test_closure_cap(ref_params):
    hp = HeckeParams.from_model(ref_params)
    with pytest.raises(ClosureCapError):
        poincare_bruteforce((0, 0, 0), hp, 1, cap=10)


def test_other_couplings():
    hp = HeckeParams.from_model(ModelParams(-0.6, 0.2, 0.7, -0.3, 0.5))
    for lam in enumerate_states(2, 2, as_tuples=True):
        assert abs(poincare_series(lam, hp, 2) - poincare_bruteforce(lam, hp, 2)) < 1e-12
