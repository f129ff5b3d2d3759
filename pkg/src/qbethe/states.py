"""Bounded partitions Lambda_{n,m}: enumeration, multiplicities, weights, inner product."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from .params import ModelParams
from .qnumbers import MAX_ORDER, qfactorial, qpochhammer

MAX_STATES = 2_000_000


class CapacityError(OverflowError):
    pass


@dataclass(frozen=True, order=True)
class BoundedPartition:
    """Weakly decreasing parts m >= p_1 >= ... >= p_n >= 0."""

    parts: tuple
    m: int

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        object.__setattr__(self, "parts", parts)
        if self.m < 1:
            raise ValueError(f"lattice extent m={self.m} must be >= 1")
        if parts and not (self.m >= parts[0] and parts[-1] >= 0):
            raise ValueError(f"{parts} not bounded by [0, {self.m}]")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{parts} is not weakly decreasing")

    @property
    def n(self):
        return len(self.parts)

    def multiplicity(self, l):
        return multiplicity(self.parts, l, self.m)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)


def _parts(lam):
    return lam.parts if isinstance(lam, BoundedPartition) else tuple(lam)


def state_count(n, m):
    return comb(m + n, n)


@lru_cache(maxsize=None)
def _enumerate(n, m):
    if n == 0:
        return ((),)
    out = []

    def rec(prefix, bound, left):
        if left == 0:
            out.append(tuple(prefix))
            return
        for v in range(bound, -1, -1):
            prefix.append(v)
            rec(prefix, v, left - 1)
            prefix.pop()

    rec([], m, n)
    return tuple(out)


def enumerate_states(n, m, as_tuples=False):
    """All of Lambda_{n,m} in descending lexicographic order."""
    if n < 0 or m < 1:
        raise ValueError(f"need n >= 0 and m >= 1, got n={n}, m={m}")
    if n > MAX_ORDER or state_count(n, m) > MAX_STATES:
        raise CapacityError(f"|Lambda_{{{n},{m}}}| = {state_count(n, m)} exceeds capacity {MAX_STATES}")
    states = _enumerate(n, m)
    if as_tuples:
        return list(states)
    return [BoundedPartition(s, m) for s in states]


@lru_cache(maxsize=None)
def state_index(n, m):
    """Map parts tuple -> position in enumerate_states(n, m)."""
    return {s: i for i, s in enumerate(_enumerate(n, m))}


def multiplicity(lam, l, m=None):
    parts = _parts(lam)
    if m is None:
        m = lam.m if isinstance(lam, BoundedPartition) else None
    if m is not None and not 0 <= l <= m:
        raise ValueError(f"site {l} outside 0..{m}")
    return sum(1 for x in parts if x == l)


def weight(lam, p: ModelParams, m=None):
    """Orthogonality weight Delta_{n,m}(lambda)."""
    parts = _parts(lam)
    if m is None:
        m = lam.m
    denom = qpochhammer(p.c_minus, p.q, multiplicity(parts, 0)) * qpochhammer(p.c_plus, p.q, multiplicity(parts, m))
    for l in set(parts):
        denom *= qfactorial(multiplicity(parts, l), p.q)
    return 1.0 / denom


def weights(n, m, p: ModelParams):
    return np.array([weight(s, p, m) for s in _enumerate(n, m)])


def inner_product(f, g, p: ModelParams, n, m):
    """sum_lambda f(lambda) conj(g(lambda)) Delta(lambda)."""
    f = np.asarray(f, dtype=complex)
    g = np.asarray(g, dtype=complex)
    dim = state_count(n, m)
    if f.shape != (dim,) or g.shape != (dim,):
        raise ValueError(f"vectors must have shape ({dim},), got {f.shape} and {g.shape}")
    return complex(np.sum(f * np.conj(g) * weights(n, m, p)))


def insert_part(parts, l):
    """beta_l^* lambda: add a part of size l."""
    return tuple(sorted(parts + (l,), reverse=True))


def delete_part(parts, l):
    """beta_l lambda: remove one part of size l."""
    lst = list(parts)
    lst.remove(l)
    return tuple(lst)
