import numpy as np
import pytest

from qbethe.bethe import solve_spectrum
from qbethe.params import ModelParams, parameter_grid
from qbethe.pieri import pieri_check, pieri_residual, pieri_terms
from qbethe.qboson_fock import hamiltonian_explicit
from qbethe.spectrum import compute_spectrum, eigenfunction_matrix, gram_offdiagonal_mass, numerical_rank
from qbethe.states import enumerate_states, weights


def test_dirichlet_spectrum_single_particle():
    sp = compute_spectrum(1, 2, ModelParams())
    energies = sorted(2 * np.cos(r.xi[0]) for r in sp.roots)
    assert energies == pytest.approx(sorted(2 * np.cos(k * np.pi / 4) for k in (1, 2, 3)), abs=1e-14)
    assert np.sort(np.linalg.eigvalsh(hamiltonian_explicit(1, 2, ModelParams()).matrix.real)) == pytest.approx(
        sorted(energies), abs=1e-12
    )


def test_completeness_example(ref_params):
    sp = compute_spectrum(2, 2, ref_params)
    assert sp.dimension == 6 and sp.rank == 6 and sp.complete
    assert sp.max_eigen_residual < 1e-8
    assert sp.max_integral_residual < 1e-8
    assert sp.max_bae_residual < 1e-8
    rec = sp.to_record()
    assert rec["rank"] == 6 and len(rec["roots"]) == 6


@pytest.mark.parametrize("n,m", [(1, 4), (2, 3), (3, 3)])
def test_eigenvalues_match_diagonalization(n, m, ref_params):
    sp = compute_spectrum(n, m, ref_params, integrals=False)
    bethe = np.sort([2 * np.cos(r.xi).sum() for r in sp.roots])
    h = hamiltonian_explicit(n, m, ref_params).matrix
    assert np.abs(np.sort(np.linalg.eigvals(h).real) - bethe).max() < 1e-9


def test_rank_over_grid():
    for p in parameter_grid(5, seed=11):
        sp = compute_spectrum(2, 3, p, integrals=False)
        assert sp.complete, sp.singular_values


def test_eigenfunctions_are_weight_orthogonal(ref_params):
    n, m = 2, 3
    sp = compute_spectrum(n, m, ref_params, integrals=False)
    assert gram_offdiagonal_mass(sp.psi, np.asarray(weights(n, m, ref_params))) < 1e-8


def test_numerical_rank():
    a = np.diag([1.0, 1e-3, 1e-12])
    rank, sv = numerical_rank(a)
    assert rank == 2 and sv[0] == 1.0
    assert numerical_rank(np.eye(3))[0] == 3


def test_eigenfunction_matrix_shape(ref_params):
    states = enumerate_states(2, 2, as_tuples=True)
    roots = solve_spectrum(2, 2, ref_params)
    assert eigenfunction_matrix(states, roots, ref_params).shape == (6, 6)


def test_compute_spectrum_rejects_empty_sector(ref_params):
    with pytest.raises(ValueError):
        compute_spectrum(0, 2, ref_params)


def test_pieri_terms_single_particle(ref_params):
    p = ref_params
    terms = dict((tuple(lam), c) for lam, c in pieri_terms((0,), 2, p))
    assert set(terms) == {(0,), (1,)}
    assert terms[(1,)] == pytest.approx(1 - p.c_minus)
    terms = dict((tuple(lam), c) for lam, c in pieri_terms((1,), 2, p))
    assert terms[(0,)] == pytest.approx(1.0) and terms[(2,)] == pytest.approx(1.0)


@pytest.mark.parametrize("n,m", [(1, 3), (2, 3), (3, 3), (3, 4)])
@pytest.mark.parametrize("q0", [False, True])
def test_pieri_rule_at_roots(n, m, q0, ref_params):
    report = pieri_check(n, m, ref_params, q0=q0)
    assert report.max_residual < 1e-8, report.to_record()


def test_pieri_off_roots_only_fails_at_the_upper_wall(ref_params):
    # P carries the lower couplings, so only rows touching site m need the Bethe equations
    xi = np.array([1.0, 0.5])
    assert pieri_residual((1, 1), xi, ref_params, 2) < 1e-14
    assert pieri_residual((0, 0), xi, ref_params, 2) < 1e-14
    assert pieri_residual((2, 0), xi, ref_params, 2) > 1e-3
