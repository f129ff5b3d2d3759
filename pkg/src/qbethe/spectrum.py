"""Bethe eigenbasis of the n-particle Hamiltonian: eigen-residuals, completeness, Gram data."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bethe import BetheSolution, eigenvalue_Er, solve_spectrum
from .hall_littlewood import hl_polynomial
from .params import HeckeParams, ModelParams
from .qboson_fock import hamiltonian_explicit
from .states import enumerate_states, weights

RANK_RTOL = 1e-8


def eigenfunction_matrix(states, roots, p: ModelParams):
    """Psi[lambda, mu] = P_lambda(xi_mu; q, a-, â-)."""
    psi = np.empty((len(states), len(roots)), dtype=complex)
    for k, sol in enumerate(roots):
        for i, lam in enumerate(states):
            psi[i, k] = hl_polynomial(lam, sol.xi, p.q, p.a_minus, p.a_hat_minus)
    return psi


def numerical_rank(mat, rtol=RANK_RTOL):
    """Count of singular values above rtol * largest, plus the spectrum itself."""
    sv = np.linalg.svd(mat, compute_uv=False)
    if sv.size == 0 or sv[0] == 0:
        return 0, sv
    return int(np.sum(sv > rtol * sv[0])), sv


def gram_offdiagonal_mass(psi, w):
    """sum |G_{mu nu}|, mu != nu, over sum |G_{mu mu}| for G = Psi^* diag(w) Psi."""
    gram = psi.conj().T @ (w[:, None] * psi)
    diag = np.abs(np.diag(gram)).sum()
    off = np.abs(gram).sum() - diag
    return float(off / diag) if diag else float("inf")


@dataclass
class SpectrumResult:
    n: int
    m: int
    params: ModelParams
    states: list
    roots: list
    psi: np.ndarray
    eigen_residuals: np.ndarray
    integral_residuals: dict = field(default_factory=dict)
    rank: int = 0
    singular_values: np.ndarray = field(default_factory=lambda: np.zeros(0))
    gram_offdiagonal: float = 0.0

    @property
    def dimension(self):
        return len(self.states)

    @property
    def complete(self):
        return self.rank == self.dimension

    @property
    def max_eigen_residual(self):
        return float(np.max(self.eigen_residuals, initial=0.0))

    @property
    def max_integral_residual(self):
        return max((float(np.max(v, initial=0.0)) for v in self.integral_residuals.values()), default=0.0)

    @property
    def max_bae_residual(self):
        return max((float(np.max(s.bae_residual, initial=0.0)) for s in self.roots), default=0.0)

    def to_record(self):
        records = []
        for k, sol in enumerate(self.roots):
            rec = sol.to_record()
            rec["eigen_residual"] = float(self.eigen_residuals[k])
            rec["integral_residuals"] = {str(r): float(v[k]) for r, v in sorted(self.integral_residuals.items())}
            records.append(rec)
        sv = self.singular_values
        return {
            "n": self.n,
            "m": self.m,
            "params": self.params.to_dict(),
            "dimension": self.dimension,
            "rank": self.rank,
            "complete": self.complete,
            "singular_value_ratio": float(sv[-1] / sv[0]) if sv.size and sv[0] else 0.0,
            "gram_offdiagonal_mass": self.gram_offdiagonal,
            "max_eigen_residual": self.max_eigen_residual,
            "max_integral_residual": self.max_integral_residual,
            "max_bae_residual": self.max_bae_residual,
            "roots": records,
        }


def compute_spectrum(n, m, p: ModelParams, tol=1e-10, max_iter=50, workers=1, integrals=True, roots=None):
    """Solve all roots and test the Bethe eigenbasis against H and, if requested, every H_r.

    The H_r check runs through the Hecke path and therefore needs strict couplings;
    it is skipped otherwise.
    """
    if n < 1:
        raise ValueError("the spectral problem needs n >= 1")
    states = enumerate_states(n, m, as_tuples=True)
    roots = roots if roots is not None else solve_spectrum(n, m, p, tol, max_iter, workers)
    psi = eigenfunction_matrix(states, roots, p)
    h = hamiltonian_explicit(n, m, p).matrix
    energies = np.array([eigenvalue_Er(s.xi, 1) for s in roots])
    eig = np.abs(h @ psi - psi * energies[None, :]).max(axis=0)

    integral_res = {}
    if integrals and p.strict:
        from .hecke.integrals import quantum_integrals

        for r, hr in enumerate(quantum_integrals(n, m, HeckeParams.from_model(p)), start=1):
            er = np.array([eigenvalue_Er(s.xi, r) for s in roots])
            integral_res[r] = np.abs(hr @ psi - psi * er[None, :]).max(axis=0)

    rank, sv = numerical_rank(psi)
    return SpectrumResult(
        n=n,
        m=m,
        params=p,
        states=states,
        roots=roots,
        psi=psi,
        eigen_residuals=eig,
        integral_residuals=integral_res,
        rank=rank,
        singular_values=sv,
        gram_offdiagonal=gram_offdiagonal_mass(psi, weights(n, m, p)),
    )


__all__ = [
    "BetheSolution",
    "SpectrumResult",
    "compute_spectrum",
    "eigenfunction_matrix",
    "gram_offdiagonal_mass",
    "numerical_rank",
]
