"""Numerical checks of the DAHA relations in the integral-reflection realization."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .group import simple_reflection
from .lattice import InsufficientSupportError, box, random_finite
from .operators import Combination, Identity, IntegralReflection, Product, Translation


@dataclass
class RelationResult:
    relation: str
    max_residual: float
    trials: int

    def to_record(self):
        return {"relation": self.relation, "max_residual": float(self.max_residual), "trials": int(self.trials)}


@dataclass
class DahaReport:
    n: int
    m: int
    tol: float
    results: list = field(default_factory=list)

    @property
    def max_residual(self):
        return max((r.max_residual for r in self.results), default=0.0)

    @property
    def passed(self):
        return self.max_residual <= self.tol

    def to_records(self):
        return [r.to_record() for r in self.results]


def _unit(k, n, sign=1):
    return tuple(sign * (i == k) for i in range(n))


def _s_touches(j, k, n):
    """Whether s_j moves coordinate k (0-based)."""
    if j == 0:
        return k == 0
    if j == n:
        return k == n - 1
    return k in (j - 1, j)


def relation_pairs(n, m, hp):
    """(name, lhs, rhs) for every quadratic, braid and cross relation."""
    I = [IntegralReflection(j, n, m, hp) for j in range(n + 1)]
    one = Identity(n)
    out = []
    for j in range(n + 1):
        d = I[j].tau - 1 / I[j].tau
        out.append((f"quadratic[{j}]", Combination([(1.0, Product(I[j], I[j])), (-d, I[j])]), one))
    for j in range(n + 1):
        for k in range(j + 1, n + 1):
            if k == j + 1:
                if j == 0 or j == n - 1:
                    if n < 2:
                        continue  # s_0 s_1 has infinite order in rank one
                    lhs = Product(I[j], I[k], I[j], I[k])
                    rhs = Product(I[k], I[j], I[k], I[j])
                else:
                    lhs = Product(I[j], I[k], I[j])
                    rhs = Product(I[k], I[j], I[k])
            else:
                lhs, rhs = Product(I[j], I[k]), Product(I[k], I[j])
            out.append((f"braid[{j},{k}]", lhs, rhs))
    h0, hn = hp.tau0_hat, hp.taun_hat
    t = {(k, s): Translation(_unit(k, n, s)) for k in range(n) for s in (1, -1)}
    out.append(
        (
            "cross[0]",
            Combination([(1.0, Product(I[0], t[0, 1])), (-1.0, Product(t[0, -1], I[0].inverse()))]),
            Combination([(1 / h0 - h0, one)]),
        )
    )
    out.append(
        (
            f"cross[{n}]",
            Combination([(1.0, Product(I[n], t[n - 1, -1])), (-1.0, Product(t[n - 1, 1], I[n].inverse()))]),
            Combination([(1 / hn - hn, one)]),
        )
    )
    for j in range(1, n):
        out.append((f"cross[{j}]", Product(I[j], t[j, 1]), Product(t[j - 1, 1], I[j].inverse())))
    for j in range(n + 1):
        for k in range(n):
            if not _s_touches(j, k, n):
                out.append((f"commute[{j},{k + 1}]", Product(I[j], t[k, 1]), Product(t[k, 1], I[j])))
    for a in range(n):
        for b in range(a + 1, n):
            out.append((f"translations[{a + 1},{b + 1}]", Product(t[a, 1], t[b, 1]), Product(t[b, 1], t[a, 1])))
    return out


def _residual_on_window(lhs, rhs, f, window):
    worst = 0.0
    for x in window:
        worst = max(worst, abs(lhs.evaluate(f, x) - rhs.evaluate(f, x)))
    return worst


def check_daha_relations(n, m, hp, trials=10, tol=1e-12, seed=0, window=None, pad=2, max_pad=None):
    """Evaluate every relation on ``trials`` random probes over ``window``.

    Probes carry random values on the window grown by ``pad``; their values
    outside are undefined, so a relation reaching past the probe support raises
    and the padding is enlarged (up to ``max_pad``).
    """
    rng = np.random.default_rng(seed)
    window = window or box(n, -m, 2 * m)
    lo = min(min(x) for x in window)
    hi = max(max(x) for x in window)
    max_pad = max_pad if max_pad is not None else 6 * m + 4
    report = DahaReport(n, m, tol)
    pairs = relation_pairs(n, m, hp)
    worst = {name: 0.0 for name, _, _ in pairs}
    for _ in range(trials):
        p = pad
        while True:
            f = random_finite(n, lo - p, hi + p, rng, strict=True)
            try:
                for name, lhs, rhs in pairs:
                    worst[name] = max(worst[name], _residual_on_window(lhs, rhs, f, window))
                break
            except InsufficientSupportError:
                if p >= max_pad:
                    raise
                p = min(2 * p + 1, max_pad)
    report.results = [RelationResult(name, worst[name], trials) for name, _, _ in pairs]
    return report


def difference_relation_residuals(n, m, hp, f, window):
    """Quadratic relation for the difference-reflection operators on a probe."""
    from .operators import DifferenceReflection

    out = {}
    for j in range(n + 1):
        T = DifferenceReflection(j, n, m, hp)
        d = T.tau - 1 / T.tau
        lhs = Combination([(1.0, Product(T, T)), (-d, T)])
        out[f"quadratic_hat[{j}]"] = _residual_on_window(lhs, Identity(n), f, window)
    return out
