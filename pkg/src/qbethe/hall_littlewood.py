"""Three-parameter hyperoctahedral Hall-Littlewood polynomials P_lambda(xi; q, a, â)."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

POLE_THRESHOLD = 1e-9
REALNESS_TOL = 1e-8


class PoleError(ZeroDivisionError):
    """A spectral point hits a pole of the scattering coefficient."""


class RealnessError(ArithmeticError):
    pass


@dataclass(frozen=True)
class SignedPermutation:
    """x -> (signs[0] x[perm[0]], ..., signs[n-1] x[perm[n-1]]), 0-based."""

    perm: tuple
    signs: tuple

    def apply(self, x):
        x = np.asarray(x)
        return np.asarray(self.signs) * x[list(self.perm)]


@lru_cache(maxsize=None)
def signed_permutation_arrays(n):
    """Index and sign arrays of shape (n! 2^n, n) enumerating the hyperoctahedral group."""
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.intp).reshape(-1, n)
    signs = np.array(list(itertools.product((1, -1), repeat=n)), dtype=float).reshape(-1, n)
    idx = np.repeat(perms, len(signs), axis=0)
    sg = np.tile(signs, (len(perms), 1))
    idx.setflags(write=False)
    sg.setflags(write=False)
    return idx, sg


def signed_permutations(n):
    idx, sg = signed_permutation_arrays(n)
    return [SignedPermutation(tuple(map(int, i)), tuple(map(int, s))) for i, s in zip(idx, sg)]


def is_regular(xi, threshold=POLE_THRESHOLD):
    """xi_j, xi_j +- xi_k avoid pi Z (measured as |1 - e^{2 i theta}| >= threshold)."""
    xi = np.asarray(xi, dtype=float)
    angles = [2 * xi]
    for j, k in itertools.combinations(range(len(xi)), 2):
        angles.append(np.array([xi[j] - xi[k], xi[j] + xi[k]]))
    ang = np.concatenate(angles) if angles else np.zeros(0)
    return bool(np.all(np.abs(1 - np.exp(1j * ang)) >= threshold))


def _c_batch(x, q, a, ahat):
    """C evaluated on each row of x (shape (N, n)); raises PoleError near a pole."""
    e1 = np.exp(-1j * x)
    den = 1 - e1**2
    num = (1 - a * e1) * (1 - ahat * e1)
    n = x.shape[1]
    dens = [den]
    nums = [num]
    for j, k in itertools.combinations(range(n), 2):
        em = np.exp(-1j * (x[:, j] - x[:, k]))
        ep = np.exp(-1j * (x[:, j] + x[:, k]))
        dens.append(np.stack([1 - em, 1 - ep], axis=1))
        nums.append(np.stack([1 - q * em, 1 - q * ep], axis=1))
    den_all = np.concatenate(dens, axis=1)
    if np.any(np.abs(den_all) < POLE_THRESHOLD):
        raise PoleError("spectral point is not regular")
    return np.prod(np.concatenate(nums, axis=1) / den_all, axis=1)


def c_coefficient(xi, q, a, ahat):
    """Scattering coefficient C(xi; q, a, â) (single and pair factors)."""
    x = np.atleast_2d(np.asarray(xi, dtype=float))
    return complex(_c_batch(x, q, a, ahat)[0])


def hl_polynomial(lam, xi, q, a, ahat, check_real=True):
    """P_lambda(xi; q, a, â) as a sum over all n! 2^n signed permutations.

    For real couplings and real xi the terms pair up into conjugates; the
    imaginary part is checked against ``REALNESS_TOL`` relative to the value.
    Terms grow like the inverse distance to the nearest pole while the sum
    stays O(1), so the sum is accumulated in extended precision.
    """
    parts = np.asarray(getattr(lam, "parts", lam), dtype=np.longdouble)
    xi = np.asarray(xi, dtype=float)
    n = len(xi)
    if len(parts) != n:
        raise ValueError(f"partition length {len(parts)} != spectral dimension {n}")
    if n == 0:
        return 1.0 + 0j
    idx, sg = signed_permutation_arrays(n)
    wx = sg * xi.astype(np.longdouble)[idx]
    terms = _c_batch(wx, q, a, ahat) * np.exp(1j * (wx @ parts))
    val = complex(np.sum(terms))
    if check_real and all(np.isrealobj(v) or np.imag(v) == 0 for v in (q, a, ahat)):
        if abs(val.imag) > REALNESS_TOL * max(1.0, abs(val.real)):
            raise RealnessError(f"P_{tuple(parts.astype(int))} has imaginary part {val.imag:.3g}")
    return val


def one_variable_block(ell, xi, a, ahat):
    """p_ell(xi; a, â) = c(xi) e^{i ell xi} + c(-xi) e^{-i ell xi}."""
    em = np.exp(-1j * xi)
    ep = np.exp(1j * xi)
    dm = 1 - em**2
    dp = 1 - ep**2
    if abs(dm) < POLE_THRESHOLD:
        raise PoleError("xi in pi Z")
    return (1 - a * em) * (1 - ahat * em) / dm * np.exp(1j * ell * xi) + (1 - a * ep) * (1 - ahat * ep) / dp * np.exp(-1j * ell * xi)


def hl_q0_determinant(lam, xi, a, ahat):
    """q = 0 specialization as det[p_{n-j+lam_j}(xi_k)] over prod_{j<k}(2cos xi_j - 2cos xi_k)."""
    parts = list(getattr(lam, "parts", lam))
    xi = np.asarray(xi, dtype=float)
    n = len(xi)
    if n == 0:
        return 1.0 + 0j
    mat = np.empty((n, n), dtype=complex)
    for j in range(n):
        for k in range(n):
            mat[j, k] = one_variable_block(n - 1 - j + parts[j], xi[k], a, ahat)
    vdm = 1.0
    for j, k in itertools.combinations(range(n), 2):
        vdm *= 2 * np.cos(xi[j]) - 2 * np.cos(xi[k])
    if abs(vdm) < POLE_THRESHOLD:
        raise PoleError("cos(xi_j) not distinct")
    return complex(np.linalg.det(mat) / vdm)
