"""The propagation operator J and its triangular inverse."""
from __future__ import annotations

import itertools
from collections import defaultdict
from functools import lru_cache

import numpy as np
from scipy.spatial import ConvexHull

from .group import canonicalize, simple_reflection, wall_value
from .lattice import LatticeFunction
from .operators import IntegralReflection, RowOperator, _add, _clean


class DependencyCycleError(RuntimeError):
    """Back-substitution revisited a point or failed to decrease its measure."""


def polytope_points(x, m):
    """Vertices v^{-1} x_+ over all subwords v of the reduced word of w_x."""
    xp, w = canonicalize(x, m)
    pts = {xp}
    for j in w.letters:
        pts |= {simple_reflection(j, p, m) for p in pts}
    return pts


@lru_cache(maxsize=100_000)
def polytope_lattice_count(x, m):
    """Number of lattice points in the convex hull of ``polytope_points(x, m)``.

    Strict inclusion of polytopes with lattice vertices strictly lowers this
    count, so it serves as the well-founded measure for back-substitution.
    """
    pts = np.array(sorted(polytope_points(x, m)), dtype=float)
    lo, hi = pts.min(0).astype(int), pts.max(0).astype(int)
    cand = np.array(list(itertools.product(*[range(a, b + 1) for a, b in zip(lo, hi)])), dtype=float)
    centre = pts.mean(0)
    _, sing, vt = np.linalg.svd(pts - centre)
    basis = vt[: int((sing > 1e-9).sum())]
    shifted = cand - centre
    coords = shifted @ basis.T
    in_span = np.abs(shifted - coords @ basis).max(axis=1) < 1e-9
    coords = coords[in_span]
    dim = basis.shape[0]
    if dim == 0:
        return int(in_span.sum())
    ref = (pts - centre) @ basis.T
    if dim == 1:
        return int(((coords[:, 0] >= ref.min() - 1e-9) & (coords[:, 0] <= ref.max() + 1e-9)).sum())
    eq = ConvexHull(ref).equations
    return int(np.all(coords @ eq[:, :-1].T + eq[:, -1] <= 1e-9, axis=1).sum())


def termination_measure(x, m):
    return polytope_lattice_count(tuple(x), m)


class Propagator(RowOperator):
    """(J f)(x) = tau_{w_x}^{-1} (I_{w_x} f)(x_+).

    Rows are built recursively: with j the first reflection applied by the
    greedy canonicalization of x, row(x) = tau_j^{-1} sum_y row(s_j x)[y] row_{I_j}(y).
    """

    def __init__(self, n, m, hp):
        super().__init__(n)
        self.m, self.hp = m, hp
        self.reflections = [IntegralReflection(j, n, m, hp) for j in range(n + 1)]

    def _first_letter(self, x):
        for j in range(self.n + 1):
            if wall_value(j, x, self.m) < 0:
                return j
        return None

    def _row(self, x):
        # iterative along the greedy path to keep the recursion shallow
        path = []
        y = x
        while (j := self._first_letter(y)) is not None and y not in self._rows:
            path.append((y, j))
            y = simple_reflection(j, y, self.m)
        row = self._rows.get(y, {y: 1.0})
        self._rows.setdefault(y, row)
        for y, j in reversed(path):
            op = self.reflections[j]
            acc = defaultdict(complex)
            for z, c in row.items():
                _add(acc, op.row(z), c / op.tau)
            row = _clean(acc)
            self._rows[y] = row
        return row

    def diagonal(self, x):
        return self.row(x).get(tuple(x), 0.0)

    def inverse(self, f: LatticeFunction, check_measure=True) -> LatticeFunction:
        """g with J g = f, by memoized back-substitution along the triangular structure."""
        memo = {}
        m = self.m

        def solve(target):
            target = tuple(target)
            if target in memo:
                return memo[target]
            stack = [target]
            active = set()
            while stack:
                x = stack[-1]
                if x in memo:
                    stack.pop()
                    continue
                row = self.row(x)
                pending = [y for y in row if y != x and y not in memo]
                if pending:
                    if x in active:
                        raise DependencyCycleError(f"cycle through {x}")
                    active.add(x)
                    if check_measure:
                        mx = termination_measure(x, m)
                        for y in pending:
                            if not termination_measure(y, m) < mx:
                                raise DependencyCycleError(f"measure did not decrease from {x} to {y}")
                    stack.extend(pending)
                    continue
                diag = row[x]
                rest = sum(c * memo[y] for y, c in row.items() if y != x)
                memo[x] = (f(x) - rest) / diag
                active.discard(x)
                stack.pop()
            return memo[target]

        return LatticeFunction({}, solve)


def propagation(f, x, hp, m):
    """(J f)(x)."""
    return Propagator(len(x), m, hp).evaluate(f, x)


def propagation_row(x, hp, m):
    """Sorted list of (point, coefficient) realising (J f)(x)."""
    row = Propagator(len(x), m, hp).row(tuple(x))
    return sorted(row.items())


def propagation_inverse(f, x, hp, m):
    """(J^{-1} f)(x)."""
    return Propagator(len(x), m, hp).inverse(f)(x)
