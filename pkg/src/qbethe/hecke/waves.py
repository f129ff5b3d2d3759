"""Plane waves under the integral-reflection action and the affine Hall-Littlewood function."""
from __future__ import annotations

import numpy as np

from ..hall_littlewood import c_coefficient
from .group import finite_group, act_signed, simple_reflection
from .lattice import LatticeFunction, plane_wave
from .operators import DifferenceReflection, IntegralReflection
from .propagation import Propagator


def model_couplings(hp):
    """(q, a-, â-, a+, â+) as Python complex numbers."""
    return tuple(complex(v) for v in hp.model_values())


def _exp(z):
    return np.exp(1j * z)


def c_factor(j, xi, hp):
    """Rank-one factor c_j(xi) of the plane-wave action of I_j."""
    q, am, ahm, ap, ahp = model_couplings(hp)
    n = len(xi)
    if j == 0:
        z = _exp(xi[0])
        return (1 - ap * z) * (1 - ahp * z) / (1 - z * z)
    if j == n:
        z = _exp(-xi[-1])
        return (1 - am * z) * (1 - ahm * z) / (1 - z * z)
    z = _exp(-(xi[j - 1] - xi[j]))
    return (1 - q * z) / (1 - z)


def plane_wave_image(j, xi, m, hp):
    """Predicted tau_j I_j e^{i xi}: b_j(-xi) e^{i xi} + c_j(-xi) (s_j e^{i xi})."""
    xi = np.asarray(xi, dtype=float)
    n = len(xi)
    c_plus = c_factor(j, xi, hp)
    c_minus = c_factor(j, -xi, hp)
    b = c_plus - 1

    def rule(x):
        x = np.asarray(x, dtype=float)
        return complex(b * np.exp(1j * xi @ x) + c_minus * np.exp(1j * xi @ np.asarray(simple_reflection(j, x, m), float)))

    return LatticeFunction.evaluator(lambda x: rule(x))


def plane_wave_residual(j, xi, m, hp, window):
    n = len(xi)
    op = IntegralReflection(j, n, m, hp)
    e = plane_wave(xi)
    pred = plane_wave_image(j, xi, m, hp)
    tau = op.tau
    return max(abs(complex(tau * op.evaluate(e, x)) - pred(x)) for x in window)


def symmetrized_wave(xi, hp, m):
    """phi_xi = sum over W_0 of tau_w I_w e^{i xi}, evaluated lazily."""
    xi = tuple(float(v) for v in xi)
    n = len(xi)
    ops = [IntegralReflection(j, n, m, hp) for j in range(n + 1)]
    funcs = {(): plane_wave(xi)}
    terms = []
    for word, _ in finite_group(n):
        letters = word.letters
        if letters not in funcs:
            funcs[letters] = ops[letters[0]](funcs[letters[1:]])
        terms.append((word.tau(hp, n), funcs[letters]))
    return LatticeFunction.evaluator(lambda x: sum(t * f(x) for t, f in terms))


def plane_wave_expansion(xi, hp):
    """sum over W_0 of C(w xi) e^{i <w xi, x>} with the lower-boundary couplings."""
    q, am, ahm, _, _ = model_couplings(hp)
    xi = tuple(float(v) for v in xi)
    n = len(xi)
    terms = []
    for _, img in finite_group(n):
        wx = np.asarray(act_signed(img, xi))
        terms.append((c_coefficient(wx, q.real, am.real, ahm.real), wx))
    return LatticeFunction.evaluator(lambda x: complex(sum(c * np.exp(1j * wx @ np.asarray(x, float)) for c, wx in terms)))


def hall_littlewood_function(xi, hp, m, propagator=None):
    """Phi_xi = J phi_xi."""
    n = len(xi)
    J = propagator or Propagator(n, m, hp)
    phi = symmetrized_wave(xi, hp, m)
    return LatticeFunction.evaluator(lambda x: J.evaluate(phi, x))


def boundary_invariance_residual(Phi, hp, m, window):
    """max |T_0 Phi - tau_0 Phi| over the window."""
    n = len(window[0])
    T0 = DifferenceReflection(0, n, m, hp)
    return max(abs(complex(T0.evaluate(Phi, x) - hp.tau0 * Phi(x))) for x in window)
