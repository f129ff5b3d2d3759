"""Affine Pieri rule for P_lambda(xi; q, a-, â-) at Bethe roots, and its q = 0 form.

The coefficients are written out from the rule itself rather than taken from
the Hamiltonian assembly, so agreement with the spectral check is a genuine
cross-validation.
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field

import numpy as np

from .bethe import solve_spectrum
from .hall_littlewood import hl_polynomial
from .params import ModelParams
from .qnumbers import qint
from .states import enumerate_states, multiplicity


def _shift(lam, j, s):
    out = list(lam)
    out[j] += s
    return tuple(out)


def _dominant(lam, m):
    return lam[0] <= m and lam[-1] >= 0 and all(a >= b for a, b in zip(lam, lam[1:]))


def pieri_terms(lam, m, p: ModelParams):
    """Right-hand side of the rule as [(nu, coefficient)], the diagonal term first."""
    lam = tuple(lam)
    n, q = len(lam), p.q
    m0, mm = multiplicity(lam, 0), multiplicity(lam, m)
    terms = [(lam, p.g_minus * qint(m0, q) + p.g_plus * qint(mm, q))]
    for j in range(n):
        up = _shift(lam, j, 1)
        if _dominant(up, m):
            boundary = 1 - p.c_minus * q ** (m0 - 1) if lam[j] == 0 else 1.0
            terms.append((up, boundary * qint(multiplicity(lam, lam[j]), q)))
    for j in range(n):
        down = _shift(lam, j, -1)
        if _dominant(down, m):
            boundary = 1 - p.c_plus * q ** (mm - 1) if lam[j] == m else 1.0
            terms.append((down, boundary * qint(multiplicity(lam, lam[j]), q)))
    return terms


def pieri_terms_q0(lam, m, p: ModelParams):
    """The q = 0 rule: boundary couplings enter only through the outermost parts."""
    lam = tuple(lam)
    n = len(lam)
    terms = [(lam, p.g_minus * (lam[-1] == 0) + p.g_plus * (lam[0] == m))]
    for j in range(n):
        up = _shift(lam, j, 1)
        if _dominant(up, m):
            terms.append((up, (1 - p.c_minus * (lam[j] == 0)) ** (j == n - 1)))
    for j in range(n):
        down = _shift(lam, j, -1)
        if _dominant(down, m):
            terms.append((down, (1 - p.c_plus * (lam[j] == m)) ** (j == 0)))
    return terms


def pieri_residual(lam, xi, p: ModelParams, m, q0=False):
    """|P_lam(xi) sum_j 2cos xi_j - RHS| for one (lambda, xi)."""
    q = 0.0 if q0 else p.q
    terms = (pieri_terms_q0 if q0 else pieri_terms)(lam, m, p)

    def P(nu):
        return hl_polynomial(nu, xi, q, p.a_minus, p.a_hat_minus)

    lhs = P(lam) * 2 * np.sum(np.cos(xi))
    rhs = sum(c * P(nu) for nu, c in terms)
    return abs(lhs - rhs)


@dataclass
class PieriReport:
    n: int
    m: int
    params: ModelParams
    q0: bool
    max_residual: float
    worst: tuple = field(default=())

    def to_record(self):
        return {
            "n": self.n,
            "m": self.m,
            "params": self.params.to_dict(),
            "q0": self.q0,
            "max_residual": self.max_residual,
            "worst": [list(x) for x in self.worst],
        }


def pieri_check(n, m, p: ModelParams, q0=False, tol=1e-10, workers=1):
    """Max rule residual over all (lambda, mu) with roots solved at the matching q."""
    pp = dataclasses.replace(p, q=0.0) if q0 else p
    roots = solve_spectrum(n, m, pp, tol=tol, workers=workers)
    worst, arg = 0.0, ()
    for lam in enumerate_states(n, m, as_tuples=True):
        for sol in roots:
            r = pieri_residual(lam, sol.xi, pp, m, q0=q0)
            if r > worst:
                worst, arg = r, (lam, tuple(sol.mu))
    return PieriReport(n, m, pp, q0, float(worst), arg)
