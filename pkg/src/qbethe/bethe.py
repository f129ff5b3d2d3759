"""Bethe roots as minima of the strictly convex Morse function V_mu.

Newton runs on the analytic gradient and Hessian; V_mu itself is only needed
as a quadrature oracle in the tests (``morse_quadrature``).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate

from .params import ModelParams


class NonConvergenceError(RuntimeError):
    def __init__(self, message, last_iterate):
        super().__init__(message)
        self.last_iterate = last_iterate


def v_phase(a, xi):
    """Continuous odd branch of int_0^xi (1 - a^2) / (1 - 2a cos u + a^2) du."""
    if not -1 < a < 1:
        raise ValueError(f"|a| must be < 1, got {a}")
    xi = np.asarray(xi, dtype=float)
    return xi - 2 * np.angle(1 - a * np.exp(1j * xi))


def v_phase_prime(a, xi):
    xi = np.asarray(xi, dtype=float)
    return (1 - a * a) / (1 - 2 * a * np.cos(xi) + a * a)


def _boundary(p: ModelParams):
    return (p.a_minus, p.a_hat_minus, p.a_plus, p.a_hat_plus)


def rho(n):
    return np.arange(n, 0, -1, dtype=float)


def grad_V(mu, xi, p: ModelParams, m):
    """Critical-equation residual: gradient of V_mu at xi."""
    mu = np.asarray(getattr(mu, "parts", mu), dtype=float)
    xi = np.asarray(xi, dtype=float)
    n = len(xi)
    g = 2 * m * xi - 2 * np.pi * (rho(n) + mu)
    for b in _boundary(p):
        g = g + v_phase(b, xi)
    if n > 1:
        s = xi[None, :] + xi[:, None]
        d = xi[None, :] - xi[:, None]      # d[j, k] = xi_k - xi_j
        pair = v_phase(p.q, s) - v_phase(p.q, d)
        np.fill_diagonal(pair, 0.0)
        g = g + pair.sum(axis=1)
    return g


def hessian_V(xi, p: ModelParams, m):
    xi = np.asarray(xi, dtype=float)
    n = len(xi)
    diag = 2 * m + sum(v_phase_prime(b, xi) for b in _boundary(p))
    h = np.zeros((n, n))
    if n > 1:
        s = v_phase_prime(p.q, xi[:, None] + xi[None, :])
        d = v_phase_prime(p.q, xi[:, None] - xi[None, :])
        h = s - d
        np.fill_diagonal(h, 0.0)
        off = s + d
        np.fill_diagonal(off, 0.0)
        diag = diag + off.sum(axis=1)
    h[np.diag_indices(n)] = diag
    return h


def kappa(p: ModelParams, n):
    """(kappa_minus, kappa_plus) of the momentum-gap brackets."""

    def bound(x, sign):
        return (1 - x * x) / (1 + sign * abs(x)) ** 2

    out = []
    for sign in (-1, 1):
        k = (n - 1) * bound(p.q, sign) + 0.5 * sum(bound(b, sign) for b in _boundary(p))
        out.append(k)
    return tuple(out)


def gap_brackets(mu, p: ModelParams, m):
    """Lower/upper bounds for each xi_j."""
    mu = np.asarray(getattr(mu, "parts", mu), dtype=float)
    n = len(mu)
    km, kp = kappa(p, n)
    target = np.pi * (rho(n) + mu)
    return target / (m + km), target / (m + kp)


@dataclass
class BetheSolution:
    mu: tuple
    xi: np.ndarray
    grad_norm: float
    iterations: int
    kappa_minus: float
    kappa_plus: float
    in_alcove: bool
    bae_residual: np.ndarray
    in_brackets: bool = True
    in_pair_brackets: bool = True
    extra: dict = field(default_factory=dict)

    def to_record(self):
        return {
            "mu": list(self.mu),
            "xi": [float(x) for x in self.xi],
            "grad_norm": float(self.grad_norm),
            "iterations": int(self.iterations),
            "bae_residual": [float(x) for x in self.bae_residual],
            "E": [float(eigenvalue_Er(self.xi, r)) for r in range(1, len(self.xi) + 1)],
        }


def in_alcove(xi):
    xi = np.asarray(xi, dtype=float)
    if len(xi) == 0:
        return True
    return bool(xi[0] < np.pi and xi[-1] > 0 and np.all(np.diff(xi) < 0))


def bracket_status(mu, xi, p: ModelParams, m, slack=1e-12):
    """Check both momentum-gap brackets (single and pairwise), up to ``slack``.

    With all couplings zero the brackets collapse to the exact Dirichlet values,
    hence the non-strict comparison.
    """
    mu = np.asarray(getattr(mu, "parts", mu), dtype=float)
    n = len(mu)
    km, kp = kappa(p, n)
    lo, hi = gap_brackets(mu, p, m)
    single = bool(np.all(lo - slack <= xi) and np.all(xi <= hi + slack))
    pair = True
    r = rho(n)
    for j, k in itertools.combinations(range(n), 2):
        t = np.pi * (r[j] - r[k] + mu[j] - mu[k])
        d = xi[j] - xi[k]
        if not (t / (m + km) - slack <= d <= t / (m + kp) + slack):
            pair = False
    return single, pair


def solve_root(mu, p: ModelParams, m, tol=1e-10, max_iter=50):
    """Damped Newton for grad V_mu = 0 from the bracket midpoint."""
    mu_t = tuple(int(x) for x in getattr(mu, "parts", mu))
    n = len(mu_t)
    km, kp = kappa(p, n)
    if n == 0:
        return BetheSolution(mu_t, np.zeros(0), 0.0, 0, km, kp, True, np.zeros(0))
    lo, hi = gap_brackets(mu_t, p, m)
    if m + kp <= 0:
        xi = np.pi * (rho(n) + np.asarray(mu_t)) / (m + n + 1)
    else:
        xi = 0.5 * (lo + hi)
    g = grad_V(mu_t, xi, p, m)
    gn = np.linalg.norm(g)
    it = 0
    while gn > tol:
        if it >= max_iter:
            raise NonConvergenceError(f"no convergence for mu={mu_t} after {max_iter} steps (|grad|={gn:.3g})", xi)
        step = np.linalg.solve(hessian_V(xi, p, m), -g)
        t = 1.0
        while True:
            trial = xi + t * step
            g_trial = grad_V(mu_t, trial, p, m)
            gn_trial = np.linalg.norm(g_trial)
            if gn_trial < gn or t < 1e-12:
                break
            t *= 0.5
        it += 1
        if gn_trial >= gn:
            # cannot improve further: at machine precision
            break
        xi, g, gn = trial, g_trial, gn_trial
    single, pair = bracket_status(mu_t, xi, p, m)
    return BetheSolution(
        mu=mu_t,
        xi=xi,
        grad_norm=float(gn),
        iterations=it,
        kappa_minus=km,
        kappa_plus=kp,
        in_alcove=in_alcove(xi),
        bae_residual=bae_residual(xi, p, m, n),
        in_brackets=single,
        in_pair_brackets=pair,
    )


def bae_residual(xi, p: ModelParams, m, n=None):
    """|e^{2 i m xi_j} - RHS_j| for the multiplicative Bethe equations."""
    xi = np.asarray(xi, dtype=float)
    n = len(xi) if n is None else n
    z = np.exp(1j * xi)
    rhs = np.ones(n, dtype=complex)
    for b in _boundary(p):
        den = z - b
        if np.any(np.abs(den) < 1e-14):
            raise ZeroDivisionError("boundary scattering factor pole")
        rhs *= (1 - b * z) / den
    for j in range(n):
        for k in range(n):
            if k == j:
                continue
            for w in (np.exp(1j * (xi[j] - xi[k])), np.exp(1j * (xi[j] + xi[k]))):
                if abs(w - p.q) < 1e-14:
                    raise ZeroDivisionError("two-body scattering factor pole")
                rhs[j] *= (1 - p.q * w) / (w - p.q)
    return np.abs(np.exp(2j * m * xi) - rhs)


def eigenvalue_E(xi):
    return float(2 * np.sum(np.cos(xi)))


def eigenvalue_Er(xi, r):
    """Elementary symmetric function of degree r in the variables 2 cos xi_j."""
    xi = np.asarray(xi, dtype=float)
    n = len(xi)
    if not 1 <= r <= n:
        raise ValueError(f"r={r} outside 1..{n}")
    y = 2 * np.cos(xi)
    # coefficients of prod_j (1 + y_j t)
    coeffs = np.zeros(n + 1)
    coeffs[0] = 1.0
    for val in y:
        coeffs[1:] = coeffs[1:] + val * coeffs[:-1]
    return float(coeffs[r])


def solve_spectrum(n, m, p: ModelParams, tol=1e-10, max_iter=50, workers=1):
    """Roots for every mu in Lambda_{n,m}, in state order."""
    from .states import enumerate_states

    states = enumerate_states(n, m, as_tuples=True)
    if workers <= 1:
        return [solve_root(mu, p, m, tol, max_iter) for mu in states]
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda mu: solve_root(mu, p, m, tol, max_iter), states))


def v_phase_quadrature(a, xi):
    """int_0^xi (1 - a^2)/(1 - 2a cos u + a^2) du by adaptive quadrature."""
    val, _ = integrate.quad(lambda u: (1 - a * a) / (1 - 2 * a * np.cos(u) + a * a), 0.0, xi, epsabs=1e-13, epsrel=1e-13)
    return val


def _v_integral(a, x):
    """int_0^x v_a(u) du with v_a itself by quadrature."""
    val, _ = integrate.quad(lambda u: v_phase_quadrature(a, u), 0.0, x, epsabs=1e-13, epsrel=1e-13)
    return val


def morse_quadrature(mu, xi, p: ModelParams, m):
    """V_mu(xi) by nested quadrature; independent of the closed-form branch of v_a."""
    mu = np.asarray(getattr(mu, "parts", mu), dtype=float)
    xi = np.asarray(xi, dtype=float)
    n = len(xi)
    r = rho(n)
    total = 0.0
    for j, k in itertools.combinations(range(n), 2):
        total += _v_integral(p.q, xi[j] + xi[k]) + _v_integral(p.q, xi[j] - xi[k])
    for j in range(n):
        total += m * xi[j] ** 2 - 2 * np.pi * (r[j] + mu[j]) * xi[j]
        total += sum(_v_integral(b, xi[j]) for b in _boundary(p))
    return total
