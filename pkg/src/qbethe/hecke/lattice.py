"""Lattice functions on Z^n with explicit support semantics."""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .group import dominant


class InsufficientSupportError(KeyError):
    """An evaluation left the stored domain of a strict lattice function."""


@dataclass
class LatticeFunction:
    """Values on a finite set of points plus an optional rule for everything else.

    ``closure`` decides evaluation outside ``values``:
      * None: raise InsufficientSupportError (default),
      * "zero": explicitly finitely supported,
      * "invariant": read the stored value at the dominant representative,
      * a callable point -> complex.
    """

    values: dict = field(default_factory=dict)
    closure: Optional[object] = None
    m: Optional[int] = None

    def __post_init__(self):
        if self.closure == "invariant" and self.m is None:
            raise ValueError("invariant closure needs the wall parameter m")

    def __call__(self, x):
        x = tuple(x)
        try:
            return self.values[x]
        except KeyError:
            pass
        c = self.closure
        if c is None:
            raise InsufficientSupportError(x)
        if c == "zero":
            return 0.0
        if c == "invariant":
            xp = dominant(x, self.m)
            try:
                return self.values[xp]
            except KeyError:
                raise InsufficientSupportError(xp) from None
        return c(x)

    @classmethod
    def invariant(cls, state_values: dict, m):
        """Pi^{-1}: extend a function on the alcove to a W-invariant one."""
        return cls(dict(state_values), "invariant", m)

    @classmethod
    def evaluator(cls, fn: Callable):
        """Wrap a globally defined function, memoizing evaluations."""
        cache = {}

        def rule(x):
            if x not in cache:
                cache[x] = fn(x)
            return cache[x]

        return cls({}, rule)


def box(n, lo, hi):
    """All integer points of [lo, hi]^n in lexicographic order."""
    axes = [np.arange(lo, hi + 1)] * n
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), -1).reshape(-1, n) if n else np.zeros((1, 0), int)
    return [tuple(int(v) for v in row) for row in grid]


def random_finite(n, lo, hi, rng, strict=False):
    """Random complex values on [lo, hi]^n; zero elsewhere unless ``strict``."""
    pts = box(n, lo, hi)
    vals = rng.standard_normal(len(pts)) + 1j * rng.standard_normal(len(pts))
    return LatticeFunction(dict(zip(pts, vals)), None if strict else "zero")


def hashed_random(seed):
    """A reproducible pseudo-random function defined on all of Z^n."""

    def rule(x):
        h = hashlib.blake2b(repr((seed, tuple(x))).encode(), digest_size=16).digest()
        a = int.from_bytes(h[:8], "little") / 2**64 - 0.5
        b = int.from_bytes(h[8:], "little") / 2**64 - 0.5
        return complex(a, b)

    return LatticeFunction.evaluator(rule)


def plane_wave(xi):
    """e^{i <xi, x>}."""
    xi = np.asarray(xi, dtype=float)
    return LatticeFunction.evaluator(lambda x: complex(np.exp(1j * float(np.dot(xi, x)))))
