import mpmath
import numpy as np
import pytest
from hypothesis import given

from qbethe.params import HeckeParams, ModelParams, ParameterDomainError, parameter_grid

from strategies import model_params


def test_derived_couplings():
    p = ModelParams(0.5, 0.3, -0.2, 0.4, -0.1)
    assert p.c_minus == pytest.approx(-0.06)
    assert p.g_minus == pytest.approx(0.1)
    assert p.c_plus == pytest.approx(-0.04)
    assert p.g_plus == pytest.approx(0.3)


def test_domain_checks():
    with pytest.raises(ParameterDomainError):
        ModelParams(q=1.0)
    with pytest.raises(ParameterDomainError):
        ModelParams.from_dict({"q": 0.1, "bogus": 1})
    assert not ModelParams(q=0.5).strict
    with pytest.raises(ParameterDomainError):
        ModelParams(q=0.5).require_strict()
    with pytest.raises(ParameterDomainError):
        HeckeParams.from_model(ModelParams(q=0.5))


def test_dict_round_trip(ref_params):
    assert ModelParams.from_dict(ref_params.to_dict()) == ref_params


@given(model_params(strict=True))
def test_hecke_map_reproduces_couplings(p):
    hp = HeckeParams.from_model(p)
    assert np.max(np.abs(np.array(hp.model_values()) - np.array(p.as_tuple()))) < 1e-14
    assert hp.to_model().as_tuple() == pytest.approx(p.as_tuple(), abs=1e-14)
    for name in ("tau", "tau0", "tau0_hat", "taun", "taun_hat"):
        assert abs(abs(getattr(hp, name)) - 1) > 1e-12


def test_square_root_conventions():
    hp = HeckeParams.from_model(ModelParams(-0.25, 0.3, 0.2, 0.4, -0.1))
    assert hp.tau == pytest.approx(0.5j)
    assert hp.taun == pytest.approx(np.sqrt(-0.06 + 0j))
    assert hp.taun_hat == pytest.approx(0.3 / hp.taun)


def test_unit_circle_parameter_rejected():
    with pytest.raises(ParameterDomainError):
        HeckeParams(0.5, 0.5, 1.0, 0.5, 0.5)


@pytest.mark.parametrize("precision,flag", [("extended", "extended"), ("mp", "multiprecision")])
def test_precision_modes_keep_the_branch(ref_params, precision, flag):
    hp = HeckeParams.from_model(ref_params)
    hx = HeckeParams.from_model(ref_params, precision, dps=40)
    assert getattr(hx, flag)
    for name in ("tau", "tau0", "tau0_hat", "taun", "taun_hat"):
        assert abs(complex(getattr(hx, name)) - getattr(hp, name)) < 1e-15
    if precision == "mp":
        assert isinstance(hx.tau, mpmath.ctx_mp_python._mpc)
        back = hx.model_values()
        for got, want in zip(back, ref_params.as_tuple()):
            assert abs(got - mpmath.mpf(want)) < mpmath.mpf(10) ** -35
    with pytest.raises(ValueError):
        HeckeParams.from_model(ref_params, "quad")


def test_parameter_grid_is_deterministic_and_strict():
    a = parameter_grid(20, seed=3)
    b = parameter_grid(20, seed=3)
    assert a == b
    assert len(set(a)) == 20
    for p in a:
        assert p.strict
        assert all(0.15 <= abs(v) <= 0.85 for v in p.as_tuple())
        assert abs(abs(p.a_minus) - abs(p.a_hat_minus)) >= 0.02
    assert parameter_grid(5, seed=4) != a[:5]


def test_non_strict_grid_contains_zero_couplings():
    grid = parameter_grid(12, seed=3, strict=False)
    assert any(not p.strict for p in grid)
    assert any(p.strict for p in grid)
    assert parameter_grid(5, seed=3) == parameter_grid(5, seed=3)
