"""Affine hyperoctahedral group acting on Z^n with the affine wall at x_1 = m."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache


def _check_letter(j, n):
    if not 0 <= j <= n:
        raise ValueError(f"letter {j} outside 0..{n}")


def simple_reflection(j, x, m):
    """s_j x; s_0 reflects x_1 in m, s_n negates x_n, the others swap neighbours."""
    x = tuple(x)
    n = len(x)
    _check_letter(j, n)
    if j == 0:
        return (2 * m - x[0],) + x[1:]
    if j == n:
        return x[:-1] + (-x[-1],)
    return x[: j - 1] + (x[j], x[j - 1]) + x[j + 1 :]


def wall_value(j, x, m):
    """a_j(x), so that s_j x = x - a_j(x) alpha_j."""
    n = len(x)
    _check_letter(j, n)
    if j == 0:
        return 2 * (m - x[0])
    if j == n:
        return 2 * x[-1]
    return x[j - 1] - x[j]


def simple_root(j, n):
    """alpha_j as an integer tuple."""
    _check_letter(j, n)
    v = [0] * n
    if j == 0:
        v[0] = -1
    elif j == n:
        v[-1] = 1
    else:
        v[j - 1], v[j] = 1, -1
    return tuple(v)


def linear_part(j, v):
    """s_j' acting on a direction vector (s_0' negates the first coordinate)."""
    v = tuple(v)
    if j == 0:
        return (-v[0],) + v[1:]
    return simple_reflection(j, v, 0)


@dataclass(frozen=True)
class AffineWord:
    """A word s_{j_1} ... s_{j_l}; ``letters[0]`` is the leftmost factor."""

    letters: tuple = ()

    @property
    def length(self):
        return len(self.letters)

    def __len__(self):
        return len(self.letters)

    def apply(self, x, m):
        """Act on a point: the rightmost letter acts first."""
        for j in reversed(self.letters):
            x = simple_reflection(j, x, m)
        return tuple(x)

    def apply_linear(self, v):
        for j in reversed(self.letters):
            v = linear_part(j, v)
        return tuple(v)

    def tau(self, hp, n):
        """tau_w as the product of the per-letter parameters."""
        out = 1.0 + 0j
        for j in self.letters:
            out *= hp.tau_j(j, n)
        return out

    def inverse(self):
        return AffineWord(tuple(reversed(self.letters)))

    def __mul__(self, other):
        return AffineWord(self.letters + other.letters)


def in_alcove(x, m):
    return all(wall_value(j, x, m) >= 0 for j in range(len(x) + 1))


@lru_cache(maxsize=200_000)
def _canonicalize(x, m):
    n = len(x)
    applied = []
    while True:
        for j in range(n + 1):
            if wall_value(j, x, m) < 0:
                x = simple_reflection(j, x, m)
                applied.append(j)
                break
        else:
            break
    return x, AffineWord(tuple(reversed(applied)))


def canonicalize(x, m):
    """(lambda_+, w_lambda) with w_lambda the shortest element moving x into the alcove.

    The word is produced greedily, reflecting through any violated wall; its
    rightmost letter is the first reflection applied.
    """
    return _canonicalize(tuple(int(v) for v in x), int(m))


def dominant(x, m):
    return canonicalize(x, m)[0]


def tau_of(x, m, hp):
    """tau_{w_x}."""
    return canonicalize(x, m)[1].tau(hp, len(x))


def regular_point(n):
    """A point with trivial stabilizer for the action with wall parameter n + 1."""
    return tuple(range(n, 0, -1))


def element_length(word: AffineWord, n):
    """l(w) for the element represented by ``word``.

    The length of w equals the length of w_{w^{-1} p} for a regular point p of
    the alcove; the wall parameter is immaterial, so p = (n, ..., 1) with c = n + 1.
    """
    c = n + 1
    x = word.inverse().apply(regular_point(n), c)
    return canonicalize(x, c)[1].length


def is_reduced(word: AffineWord, n):
    return element_length(word, n) == word.length


def same_element(u: AffineWord, v: AffineWord, n):
    """Compare two words as group elements through their action on affinely independent points."""
    c = n + 1
    pts = [regular_point(n)] + [tuple(c * (i == k) for i in range(n)) for k in range(n)]
    return all(u.apply(p, c) == v.apply(p, c) for p in pts)


@lru_cache(maxsize=None)
def finite_group(n):
    """Elements of W_0 as (reduced word, signed permutation) pairs in BFS order.

    A signed permutation is stored as its image of (1, 2, ..., n): entry k is
    the signed label landing in slot k.
    """
    ident = tuple(range(1, n + 1))
    out = [(AffineWord(), ident)]
    seen = {ident}
    queue = deque(out)
    while queue:
        word, img = queue.popleft()
        for j in range(1, n + 1):
            new = simple_reflection(j, img, 0)
            if new in seen:
                continue
            seen.add(new)
            item = (AffineWord((j,) + word.letters), new)
            out.append(item)
            queue.append(item)
    return tuple(out)


def act_signed(img, x):
    """Apply the signed permutation with image ``img`` to a vector x."""
    return tuple((1 if s > 0 else -1) * x[abs(s) - 1] for s in img)


def orbit(v):
    """W_0-orbit of an integer vector, sorted."""
    n = len(v)
    return tuple(sorted({act_signed(img, v) for _, img in finite_group(n)}))


def unit_orbit(r, n):
    """W_0(e_1 + ... + e_r)."""
    return orbit(tuple([1] * r + [0] * (n - r)))


def neighbour_word(lam, j, sign, m):
    """Closed-form reduced word for w_{lambda +- e_j} (lambda dominant, lambda +- e_j not).

    Cases: part at the wall m or 0 (through s_0 or s_n) and a part equal to its
    neighbour (a pure permutation). Returns None when lambda +- e_j is dominant.
    """
    lam = tuple(lam)
    n = len(lam)
    counts = [sum(1 for x in lam if x == l) for l in range(m + 1)]
    shifted = list(lam)
    shifted[j - 1] += sign
    if in_alcove(tuple(shifted), m):
        return None
    lj = lam[j - 1]
    if sign > 0:
        if lj == m:
            mm = counts[m]
            letters = list(range(mm - 1, 0, -1)) + [0] + list(range(1, j))
        else:
            b = sum(counts[lj + 1 :])
            letters = list(range(b + 1, j))
    else:
        if lj == 0:
            m0 = counts[0]
            letters = list(range(n - m0 + 1, n)) + [n] + list(range(n - 1, j - 1, -1))
        else:
            b = sum(counts[lj:])
            letters = list(range(b - 1, j - 1, -1))
    return AffineWord(tuple(letters))
