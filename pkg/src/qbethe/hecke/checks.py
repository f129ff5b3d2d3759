"""Pointwise residuals for the propagation operator and the deformed Laplacian.

Each check returns the maximum residual over a window; the caller picks the
working precision through the HeckeParams it passes in.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..states import enumerate_states
from .group import canonicalize, unit_orbit
from .laplacian import ConjugatedIntegral, deformed_laplacian_explicit, intertwining_residual
from .lattice import LatticeFunction, box, hashed_random
from .operators import DifferenceReflection
from .propagation import Propagator


def default_window(n, m):
    return box(n, -m, 2 * m)


def random_invariant(n, m, rng):
    """W-invariant closure of random real values on Lambda_{n,m}."""
    states = enumerate_states(n, m, as_tuples=True)
    vals = rng.standard_normal(len(states))
    return LatticeFunction.invariant({s: float(v) for s, v in zip(states, vals)}, m)


def roundtrip_residual(J: Propagator, f, window):
    """max |J (J^{-1} f) - f| over the window."""
    g = J.inverse(f)
    return max(float(abs(J.evaluate(g, x) - f(x))) for x in window)


def diagonal_residual(J: Propagator, window):
    """max |J_{x,x} tau_{w_x}^2 - 1|: relative error of the triangular diagonal."""
    worst = 0.0
    for x in window:
        w = canonicalize(x, J.m)[1]
        worst = max(worst, float(abs(J.diagonal(x) * w.tau(J.hp, J.n) ** 2 - 1)))
    return worst


def _word_evaluator(J: Propagator, f, letters, cache):
    """I_{letters} f as a memoized evaluator, built rightmost letter first."""
    if letters not in cache:
        h = f
        for j in reversed(letters):
            h = J.reflections[j](h)
        cache[letters] = h
    return cache[letters]


def row_consistency_residual(J: Propagator, f, window):
    """Row expansion against letter-by-letter application of I_{w_x}."""
    worst = 0.0
    cache = {}
    for x in window:
        lam_plus, w = canonicalize(x, J.m)
        direct = _word_evaluator(J, f, w.letters, cache)(lam_plus) / w.tau(J.hp, J.n)
        worst = max(worst, float(abs(J.evaluate(f, x) - direct)))
    return worst


def intertwining_residuals(J: Propagator, f, window):
    """Per-j max |(J I_j f)(x) - (T_j J f)(x)|."""
    out = {}
    Jf = J(f)
    for j in range(J.n + 1):
        T = DifferenceReflection(j, J.n, J.m, J.hp)
        If = J.reflections[j](f)
        out[j] = max(float(abs(J.evaluate(If, x) - T.evaluate(Jf, x))) for x in window)
    return out


def laplacian_residual(J: Propagator, f, window):
    """Explicit nearest-neighbour formula against J E_1(t) J^{-1} on an invariant f."""
    L = ConjugatedIntegral(1, J.n, J.m, J.hp, J)
    g = J.inverse(f)
    return max(float(abs(deformed_laplacian_explicit(f, x, J.hp, J.m) - L.evaluate(f, x, g))) for x in window)


def affine_intertwining_residual(J: Propagator, f, window):
    """The affine intertwining identity at every (lambda, +-e_j) in the window."""
    worst = 0.0
    g = J.inverse(f)
    cache = {}
    for lam in window:
        for nu in unit_orbit(1, J.n):
            worst = max(worst, float(intertwining_residual(f, lam, nu, J.hp, J.m, J, g, cache)))
    return worst


@dataclass
class PropagationReport:
    n: int
    m: int
    residuals: dict = field(default_factory=dict)

    @property
    def max_residual(self):
        return max(self.residuals.values(), default=0.0)

    def to_record(self):
        return {"n": self.n, "m": self.m, "residuals": {k: float(v) for k, v in sorted(self.residuals.items())}}


def propagation_checks(n, m, hp, seed=0, window=None, laplacian=True):
    """Round trip, diagonal, intertwining and (optionally) Laplacian residuals."""
    rng = np.random.default_rng(seed)
    window = window or default_window(n, m)
    J = Propagator(n, m, hp)
    F = random_invariant(n, m, rng)
    probe = hashed_random(seed)
    res = {
        "roundtrip": roundtrip_residual(J, F, window),
        "diagonal": diagonal_residual(J, window),
        "row_consistency": row_consistency_residual(J, probe, window),
    }
    for j, v in intertwining_residuals(J, probe, window).items():
        res[f"intertwining[{j}]"] = v
    if laplacian:
        res["laplacian"] = laplacian_residual(J, F, window)
        res["affine_intertwining"] = affine_intertwining_residual(J, F, window)
    return PropagationReport(n, m, res)
