"""Deformed Laplacian L = J E_1(t) J^{-1}: explicit form and the conjugation path."""
from __future__ import annotations

from .group import canonicalize, unit_orbit
from .propagation import Propagator


def d_coefficient(lam, nu, hp, m):
    """Boundary weight d_{lambda, nu} for dominant lambda and nu = +-e_j."""
    n = len(lam)
    j = next(i for i, v in enumerate(nu) if v != 0)
    if nu[j] > 0 and lam[j] == m:
        return hp.tau ** (2 * j) * hp.tau0 * (hp.tau0_hat - 1 / hp.tau0_hat)
    if nu[j] < 0 and lam[j] == 0:
        return hp.tau ** (2 * (n - 1 - j)) * hp.taun * (hp.taun_hat - 1 / hp.taun_hat)
    return 0.0


def _unit(j, n, sign):
    return tuple(sign * (i == j) for i in range(n))


def deformed_laplacian_explicit(f, lam, hp, m):
    """(L f)(lam) from the closed formula: nearest neighbours weighted by tau^2 factors."""
    lam = tuple(lam)
    n = len(lam)
    lam_plus, w = canonicalize(lam, m)
    total = 0 * hp.tau  # zero in the working precision of hp
    for j in range(n):
        for sign in (1, -1):
            e = _unit(j, n, sign)
            nb = tuple(a + b for a, b in zip(lam, e))
            moved = w.apply(nb, m)
            weight = canonicalize(moved, m)[1].tau(hp, n) ** 2
            total += weight * f(nb) + d_coefficient(lam_plus, e, hp, m) * f(lam)
    return total


class ConjugatedIntegral:
    """L_r = J E_r(t) J^{-1} evaluated on a globally defined f; one memo per instance."""

    def __init__(self, r, n, m, hp, propagator=None):
        self.r, self.n, self.m = r, n, m
        self.J = propagator or Propagator(n, m, hp)
        self.shifts = unit_orbit(r, n)

    def evaluate(self, f, lam, g=None):
        g = g or self.J.inverse(f)
        total = 0 * self.J.hp.tau
        for y, c in self.J.row(tuple(lam)).items():
            total += c * sum((g(tuple(a - b for a, b in zip(y, mu))) for mu in self.shifts), total * 0)
        return total


def laplacian_conjugated(f, lam, hp, m):
    return ConjugatedIntegral(1, len(lam), m, hp).evaluate(f, lam)


def intertwining_residual(f, lam, nu, hp, m, propagator=None, g=None, word_cache=None):
    """Residual of the affine intertwining identity at (lambda, nu) for g = J^{-1} f.

    Left: tau_{w}^{-1} (I_w g)(w(lambda + nu)) with w = w_lambda; right:
    tau^2_{w_{w(lambda+nu)}} f(lambda + nu) + d_{lambda_+, w' nu} f(lambda).
    Pass ``g`` and a shared ``word_cache`` dict to reuse work across many points.
    """
    lam = tuple(lam)
    n = len(lam)
    J = propagator or Propagator(n, m, hp)
    g = g or J.inverse(f)
    cache = word_cache if word_cache is not None else {}
    lam_plus, w = canonicalize(lam, m)
    target = w.apply(tuple(a + b for a, b in zip(lam, nu)), m)
    if w.letters not in cache:
        h = g
        for j in reversed(w.letters):
            h = J.reflections[j](h)
        cache[w.letters] = h
    lhs = cache[w.letters](target) / w.tau(hp, n)
    nb = tuple(a + b for a, b in zip(lam, nu))
    rhs = canonicalize(target, m)[1].tau(hp, n) ** 2 * f(nb)
    rhs += d_coefficient(lam_plus, w.apply_linear(nu), hp, m) * f(lam)
    return abs(lhs - rhs)
