"""Commuting quantum integrals H_r on the alcove, via the Hecke path."""
from __future__ import annotations

import numpy as np

from ..qnumbers import qint
from ..states import enumerate_states, multiplicity
from .group import unit_orbit
from .lattice import LatticeFunction
from .propagation import Propagator


def quantum_integral_matrix(r, n, m, hp, propagator=None):
    """Matrix of H_r in the state basis.

    Column kappa: J^{-1} applied to the W-invariant indicator of kappa, summed
    over the shifts W_0(e_1 + ... + e_r); J acts trivially on the alcove.
    """
    if not 1 <= r <= n:
        raise ValueError(f"r={r} outside 1..{n}")
    states = enumerate_states(n, m, as_tuples=True)
    J = propagator or Propagator(n, m, hp)
    shifts = unit_orbit(r, n)
    out = np.zeros((len(states), len(states)), dtype=complex)
    for col, kappa in enumerate(states):
        g = J.inverse(LatticeFunction.invariant({s: float(s == kappa) for s in states}, m))
        for row, lam in enumerate(states):
            out[row, col] = sum(g(tuple(a - b for a, b in zip(lam, mu))) for mu in shifts)
    return out


def quantum_integrals(n, m, hp):
    J = Propagator(n, m, hp)
    return [quantum_integral_matrix(r, n, m, hp, J) for r in range(1, n + 1)]


def hamiltonian_hecke_explicit(n, m, hp):
    """H_1 from its closed nearest-neighbour form in the Hecke parameters."""
    states = enumerate_states(n, m, as_tuples=True)
    index = {s: i for i, s in enumerate(states)}
    t2 = hp.tau**2
    bn = hp.taun * (hp.taun_hat - 1 / hp.taun_hat)
    b0 = hp.tau0 * (hp.tau0_hat - 1 / hp.tau0_hat)
    out = np.zeros((len(states), len(states)), dtype=complex)
    for i, lam in enumerate(states):
        m0, mm = multiplicity(lam, 0, m), multiplicity(lam, m, m)
        out[i, i] = bn * qint(m0, t2) + b0 * qint(mm, t2)
        for j in range(n):
            lj = lam[j]
            v = qint(multiplicity(lam, lj, m), t2)
            if lj == 0:
                v *= 1 + hp.taun**2 * t2 ** (m0 - 1)
            if lj == m:
                v *= 1 + hp.tau0**2 * t2 ** (mm - 1)
            for sign in (1, -1):
                nb = list(lam)
                nb[j] += sign
                k = index.get(tuple(nb))
                if k is not None:
                    out[i, k] += v
    return out


def commutator_norm(a, b):
    return float(np.abs(a @ b - b @ a).max())
