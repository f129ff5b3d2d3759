"""Linear operators on lattice functions, represented by their rows.

The row of an operator A at a point x is a finite map y -> coefficient with
(A f)(x) = sum_y coeff * f(y). Products compose rows, so every identity between
operators can be evaluated pointwise without materialising functions.
"""
from __future__ import annotations

from collections import defaultdict

from .group import simple_reflection, simple_root, wall_value
from .lattice import LatticeFunction


def _add(acc, row, scale):
    for y, c in row.items():
        acc[y] += scale * c


def _clean(acc):
    return {y: c for y, c in acc.items() if c != 0}


class RowOperator:
    """Base class: subclasses implement ``_row``; rows are memoized per instance."""

    def __init__(self, n):
        self.n = n
        self._rows = {}

    def row(self, x):
        x = tuple(x)
        r = self._rows.get(x)
        if r is None:
            r = self._row(x)
            self._rows[x] = r
        return r

    def _row(self, x):  # pragma: no cover - abstract
        raise NotImplementedError

    def evaluate(self, f, x):
        # Products with the coefficients promote f's values to their precision
        return sum(c * f(y) for y, c in self.row(x).items())

    def __call__(self, f):
        return LatticeFunction.evaluator(lambda x: self.evaluate(f, x))

    def __matmul__(self, other):
        return Product(self, other)

    def __add__(self, other):
        return Combination([(1.0, self), (1.0, other)])

    def __sub__(self, other):
        return Combination([(1.0, self), (-1.0, other)])

    def __rmul__(self, scalar):
        return Combination([(scalar, self)])


class Identity(RowOperator):
    def _row(self, x):
        return {x: 1.0}


class Translation(RowOperator):
    """(t_mu f)(x) = f(x - mu)."""

    def __init__(self, mu):
        super().__init__(len(mu))
        self.mu = tuple(mu)

    def _row(self, x):
        return {tuple(a - b for a, b in zip(x, self.mu)): 1.0}


class Reflection(RowOperator):
    """(s_j f)(x) = f(s_j x)."""

    def __init__(self, j, n, m):
        super().__init__(n)
        self.j, self.m = j, m

    def _row(self, x):
        return {simple_reflection(self.j, x, self.m): 1.0}


class Product(RowOperator):
    def __init__(self, *factors):
        super().__init__(factors[0].n)
        self.factors = factors

    def _row(self, x):
        row = {x: 1.0}
        for op in self.factors:
            acc = defaultdict(complex)
            for y, c in row.items():
                _add(acc, op.row(y), c)
            row = _clean(acc)
        return row


class Combination(RowOperator):
    """sum_k c_k A_k; a bare scalar term stands for a multiple of the identity."""

    def __init__(self, terms):
        ops = [op for _, op in terms if isinstance(op, RowOperator)]
        super().__init__(ops[0].n if ops else None)
        self.terms = terms

    def _row(self, x):
        acc = defaultdict(complex)
        for c, op in self.terms:
            if isinstance(op, RowOperator):
                _add(acc, op.row(x), c)
            else:
                acc[x] += c * op
        return _clean(acc)


def scalar(value, n):
    return Combination([(value, Identity(n))])


class IntegralReflection(RowOperator):
    """I_j = tau_j s_j + J_j, J_j summing f over the segment from x to s_j x.

    The segment weights alternate between tau_j - 1/tau_j (even steps) and
    hat tau_j - 1/hat tau_j (odd steps).
    """

    def __init__(self, j, n, m, hp):
        super().__init__(n)
        self.j, self.m = j, m
        self.tau = hp.tau_j(j, n)
        self.u = (self.tau - 1 / self.tau, hp.tau_hat_j(j, n) - 1 / hp.tau_hat_j(j, n))
        self.alpha = simple_root(j, n)

    def _row(self, x):
        j, a = self.j, wall_value(self.j, x, self.m)
        acc = defaultdict(complex)
        acc[simple_reflection(j, x, self.m)] += self.tau
        if a > 0:
            for k in range(1, a + 1):
                acc[tuple(xi - k * al for xi, al in zip(x, self.alpha))] -= self.u[k % 2]
        elif a < 0:
            for k in range(0, -a):
                acc[tuple(xi + k * al for xi, al in zip(x, self.alpha))] += self.u[k % 2]
        return _clean(acc)

    def inverse(self):
        """I_j^{-1} = I_j - (tau_j - 1/tau_j), by the quadratic relation."""
        return Combination([(1.0, self), (-(self.tau - 1 / self.tau), Identity(self.n))])


class DifferenceReflection(RowOperator):
    """T_j f(x) = tau_j f(x) + tau_j^{sgn a_j(x)} (f(s_j x) - f(x)), with sgn(0) = +1."""

    def __init__(self, j, n, m, hp):
        super().__init__(n)
        self.j, self.m = j, m
        self.tau = hp.tau_j(j, n)

    def _row(self, x):
        a = wall_value(self.j, x, self.m)
        t = self.tau if a >= 0 else 1 / self.tau
        sx = simple_reflection(self.j, x, self.m)
        if sx == x:
            return {x: self.tau}
        return _clean({x: self.tau - t, sx: t})

    def inverse(self):
        return Combination([(1.0, self), (-(self.tau - 1 / self.tau), Identity(self.n))])


def integral_reflection(j, f, hp, m, n):
    """I_j f as a lazily evaluated lattice function."""
    return IntegralReflection(j, n, m, hp)(f)


def difference_reflection(j, f, x, hp, m):
    """(T_j f)(x)."""
    return DifferenceReflection(j, len(x), m, hp).evaluate(f, x)


def elementary_translation_sum(r, n):
    """E_r(t) = sum over mu in W_0(e_1 + ... + e_r) of t_mu."""
    from .group import unit_orbit

    return Combination([(1.0, Translation(mu)) for mu in unit_orbit(r, n)])
