import itertools

import numpy as np
import pytest

from qbethe.hecke.integrals import (
    commutator_norm,
    hamiltonian_hecke_explicit,
    quantum_integral_matrix,
    quantum_integrals,
)
from qbethe.params import HeckeParams, parameter_grid
from qbethe.qboson_fock import hamiltonian_explicit
from qbethe.states import weights


@pytest.mark.parametrize("n,m", [(1, 3), (2, 2), (2, 4), (3, 3)])
def test_hecke_path_reproduces_fock_hamiltonian(n, m, ref_params):
    hp = HeckeParams.from_model(ref_params)
    fock = hamiltonian_explicit(n, m, ref_params).matrix
    assert np.abs(quantum_integral_matrix(1, n, m, hp) - fock).max() < 1e-10
    assert np.abs(hamiltonian_hecke_explicit(n, m, hp) - fock).max() < 1e-12


@pytest.mark.parametrize("n,m", [(2, 3), (3, 2), (3, 3)])
def test_integrals_commute(n, m):
    for p in parameter_grid(3, seed=n * m):
        hs = quantum_integrals(n, m, HeckeParams.from_model(p))
        assert len(hs) == n
        for a, b in itertools.combinations(hs, 2):
            assert commutator_norm(a, b) < 1e-10


@pytest.mark.parametrize("n,m", [(1, 4), (2, 3), (3, 2)])
def test_integrals_are_weighted_self_adjoint(n, m, ref_params):
    w = np.asarray(weights(n, m, ref_params))
    for h in quantum_integrals(n, m, HeckeParams.from_model(ref_params)):
        assert np.abs(h.imag).max() < 1e-12
        sym = w[:, None] * h.real
        assert np.abs(sym - sym.T).max() < 1e-10


def test_integral_index_range(ref_params):
    hp = HeckeParams.from_model(ref_params)
    with pytest.raises(ValueError):
        quantum_integral_matrix(3, 2, 2, hp)
