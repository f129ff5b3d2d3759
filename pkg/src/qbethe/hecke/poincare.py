"""Generalized Poincare series of alcove stabilizers."""
from __future__ import annotations

from collections import deque

from ..qnumbers import qfactorial, qpochhammer
from ..states import multiplicity
from .group import simple_reflection, wall_value


class ClosureCapError(RuntimeError):
    pass


def poincare_series(lam, hp, m):
    """Product formula: (-tau_n^2; tau^2)_{m_0} (-tau_0^2; tau^2)_{m_m} prod_l [m_l]_{tau^2}!."""
    lam = tuple(lam)
    t2 = hp.tau**2
    out = qpochhammer(-hp.taun**2, t2, multiplicity(lam, 0, m))
    out *= qpochhammer(-hp.tau0**2, t2, multiplicity(lam, m, m))
    for l in range(m + 1):
        out *= qfactorial(multiplicity(lam, l, m), t2)
    return out


def stabilizer_generators(lam, m):
    """Simple reflections fixing lambda (those whose wall contains it)."""
    return tuple(j for j in range(len(lam) + 1) if wall_value(j, lam, m) == 0)


def parabolic_generators(lam, m):
    """The same generators read off from the multiplicities, block by block."""
    n = len(lam)
    counts = [multiplicity(lam, l, m) for l in range(m + 1)]
    gens = set()
    if counts[m]:
        gens |= set(range(0, counts[m]))
    above = counts[m]
    for l in range(m - 1, 0, -1):
        gens |= set(range(above + 1, above + counts[l]))
        above += counts[l]
    if counts[0]:
        gens |= set(range(n - counts[0] + 1, n + 1))
    return tuple(sorted(gens))


def poincare_bruteforce(lam, hp, m, cap=200_000):
    """Sum of tau_w^2 over the stabilizer, enumerated by breadth-first closure.

    Elements are affine maps identified by their images of 0, e_1, ..., e_n;
    the breadth-first depth is the length, and the path gives a reduced word.
    """
    lam = tuple(lam)
    n = len(lam)
    gens = stabilizer_generators(lam, m)
    basis = [tuple([0] * n)] + [tuple(int(i == k) for i in range(n)) for k in range(n)]
    start = tuple(basis)
    weights = {start: 1.0 + 0j}
    queue = deque([start])
    while queue:
        key = queue.popleft()
        for j in gens:
            new = tuple(simple_reflection(j, p, m) for p in key)
            if new not in weights:
                if len(weights) >= cap:
                    raise ClosureCapError(f"stabilizer of {lam} exceeds {cap} elements")
                weights[new] = weights[key] * hp.tau_j(j, n) ** 2
                queue.append(new)
    for key in weights:
        images = [tuple(a - b for a, b in zip(p, key[0])) for p in key[1:]]
        moved = tuple(key[0][i] + sum(lam[k] * images[k][i] for k in range(n)) for i in range(n))
        if moved != lam:
            raise AssertionError(f"closure element does not fix {lam}")
    return sum(weights.values())
