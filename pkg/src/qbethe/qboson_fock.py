"""q-boson field algebra on the n-particle sectors of the open chain {0..m}.

Sector operators are dense matrices indexed by ``enumerate_states``; an operator
from sector ``n_in`` to ``n_out`` has shape ``(dim n_out, dim n_in)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .params import ModelParams
from .qnumbers import qint
from .states import delete_part, insert_part, multiplicity, state_count, state_index, weights, enumerate_states


class SingularOperatorError(ZeroDivisionError):
    pass


@dataclass
class SectorOperator:
    n_in: int
    n_out: int
    m: int
    matrix: np.ndarray

    def __post_init__(self):
        shape = (state_count(self.n_out, self.m), state_count(self.n_in, self.m))
        if self.matrix.shape != shape:
            raise ValueError(f"matrix shape {self.matrix.shape} != {shape}")

    def __matmul__(self, other: "SectorOperator") -> "SectorOperator":
        if other.n_out != self.n_in or other.m != self.m:
            raise ValueError("sector mismatch in composition")
        return SectorOperator(other.n_in, self.n_out, self.m, self.matrix @ other.matrix)

    def __add__(self, other):
        self._check_same(other)
        return SectorOperator(self.n_in, self.n_out, self.m, self.matrix + other.matrix)

    def __sub__(self, other):
        self._check_same(other)
        return SectorOperator(self.n_in, self.n_out, self.m, self.matrix - other.matrix)

    def __rmul__(self, scalar):
        return SectorOperator(self.n_in, self.n_out, self.m, scalar * self.matrix)

    def _check_same(self, other):
        if (self.n_in, self.n_out, self.m) != (other.n_in, other.n_out, other.m):
            raise ValueError("sector mismatch")


def _zeros(n_in, n_out, m):
    rows = state_count(n_out, m) if n_out >= 0 else 0
    return np.zeros((rows, state_count(n_in, m)), dtype=complex)


def _check_site(l, m):
    if not 0 <= l <= m:
        raise ValueError(f"site {l} outside 0..{m}")


def annihilate(l, n, m, p: ModelParams) -> SectorOperator:
    """beta_l: sector n -> n-1, (beta_l f)(lam) = f(lam + part l)."""
    _check_site(l, m)
    if n == 0:
        # the zero operator on the vacuum; its target sector is empty
        return SectorOperator(0, 0, m, np.zeros((1, 1), dtype=complex))
    mat = _zeros(n, n - 1, m)
    idx_in = state_index(n, m)
    for i, lam in enumerate(enumerate_states(n - 1, m, as_tuples=True)):
        mat[i, idx_in[insert_part(lam, l)]] = 1.0
    return SectorOperator(n, n - 1, m, mat)


def create_coefficient(lam, l, m, p: ModelParams):
    """Weight of (beta_l^* f)(lam) relative to f(lam - part l)."""
    k = multiplicity(lam, l)
    if k == 0:
        return 0.0
    coef = qint(k, p.q)
    if l == 0:
        coef *= 1 - p.c_minus * p.q ** (multiplicity(lam, 0) - 1)
    if l == m:
        coef *= 1 - p.c_plus * p.q ** (multiplicity(lam, m) - 1)
    return coef


def create(l, n, m, p: ModelParams) -> SectorOperator:
    """beta_l^*: sector n -> n+1."""
    _check_site(l, m)
    mat = _zeros(n, n + 1, m)
    idx_in = state_index(n, m)
    for i, lam in enumerate(enumerate_states(n + 1, m, as_tuples=True)):
        coef = create_coefficient(lam, l, m, p)
        if coef:
            mat[i, idx_in[delete_part(lam, l)]] = coef
    return SectorOperator(n, n + 1, m, mat)


def number_op(l, sign, n, m, p: ModelParams) -> SectorOperator:
    """q^{+-N_l}, diagonal with entries q^{+-m_l(lam)}."""
    _check_site(l, m)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if sign == -1 and p.q == 0:
        raise SingularOperatorError("q^{-N_l} is singular at q = 0")
    diag = [p.q ** (sign * multiplicity(lam, l)) for lam in enumerate_states(n, m, as_tuples=True)]
    return SectorOperator(n, n, m, np.diag(np.array(diag, dtype=complex)))


def _diag_fn(n, m, fn):
    return SectorOperator(n, n, m, np.diag(np.array([fn(lam) for lam in enumerate_states(n, m, as_tuples=True)], dtype=complex)))


def _identity(n, m):
    return SectorOperator(n, n, m, np.eye(state_count(n, m), dtype=complex))


def q_number_op(l, shift, n, m, p: ModelParams) -> SectorOperator:
    """[N_l + shift]_q = (1 - q^shift q^{N_l}) / (1 - q)."""
    return _diag_fn(n, m, lambda lam: (1 - p.q ** (shift + multiplicity(lam, l))) / (1 - p.q))


@dataclass
class RelationReport:
    n: int
    m: int
    residuals: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def record(self, name, value):
        self.residuals[name] = max(self.residuals.get(name, 0.0), float(value))

    def max_residual(self):
        return max(self.residuals.values(), default=0.0)

    def passed(self, tol):
        return self.max_residual() <= tol


def _res(a: SectorOperator, b: SectorOperator):
    return float(np.max(np.abs(a.matrix - b.matrix), initial=0.0))


def _weighted_adjoint_residual(op: SectorOperator, adj: SectorOperator, p: ModelParams):
    """max |Delta_out(lam) A[lam,mu] - Delta_in(mu) conj(A*[mu,lam])|."""
    w_out = weights(op.n_out, op.m, p)
    w_in = weights(op.n_in, op.m, p)
    lhs = w_out[:, None] * op.matrix
    rhs = w_in[None, :] * np.conj(adj.matrix.T)
    return float(np.max(np.abs(lhs - rhs), initial=0.0))


def check_algebra_relations(n, m, p: ModelParams, tol=1e-12) -> RelationReport:
    """Verify the q-boson relations as matrix identities on sector n.

    Relations with q^{-N_l} are skipped at q = 0 and noted in the report.
    """
    if n < 1:
        raise ValueError("relations are checked on sectors n >= 1")
    rep = RelationReport(n, m)
    q = p.q
    eye = _identity(n, m)
    for l in range(m + 1):
        b = annihilate(l, n, m, p)            # n -> n-1
        bs_low = create(l, n - 1, m, p)       # n-1 -> n
        bs = create(l, n, m, p)               # n -> n+1
        b_up = annihilate(l, n + 1, m, p)     # n+1 -> n
        qn = number_op(l, 1, n, m, p)
        qn_low = number_op(l, 1, n - 1, m, p)
        qn_up = number_op(l, 1, n + 1, m, p)

        rep.record("beta q^N = q q^N beta", _res(b @ qn, q * (qn_low @ b)))
        rep.record("q^N beta* = q beta* q^N", _res(qn_up @ bs, q * (bs @ qn)))
        if q != 0:
            rep.record("q^N q^-N = 1", _res(qn @ number_op(l, -1, n, m, p), eye))
        elif l == 0:
            rep.notes.append("q = 0: relations involving q^{-N_l} skipped")

        bbs = b_up @ bs                       # beta_l beta_l^* on sector n
        bsb = bs_low @ b                      # beta_l^* beta_l on sector n
        d0 = 1 if l == 0 else 0
        dm = 1 if l == m else 0
        bound = _diag_fn(
            n, m,
            lambda lam: (1 - p.c_minus * d0 * q ** multiplicity(lam, 0)) * (1 - p.c_plus * dm * q ** multiplicity(lam, m)),
        )
        rep.record("beta beta* = boundary [N+1]", _res(bbs, bound @ q_number_op(l, 1, n, m, p)))
        bound2 = _diag_fn(
            n, m,
            lambda lam: (1 - p.c_minus * d0 * q ** (2 * multiplicity(lam, 0))) * (1 - p.c_plus * dm * q ** (2 * multiplicity(lam, m))),
        )
        rep.record("beta beta* - q beta* beta = boundary", _res(bbs - q * bsb, bound2))

        rep.record("adjoint beta/beta*", _weighted_adjoint_residual(b, bs_low, p))
        diag_w = weights(n, m, p)
        rep.record("adjoint q^N", float(np.max(np.abs(diag_w * (np.diag(qn.matrix) - np.conj(np.diag(qn.matrix)))))))

        for k in range(m + 1):
            if k == l:
                continue
            bk = annihilate(k, n, m, p)
            bsk_low = create(k, n - 1, m, p)
            bsk = create(k, n, m, p)
            rep.record("ultralocal [beta_l, beta*_k]", _res(b_up @ bsk, bsk_low @ b))
            if n >= 2:
                rep.record("ultralocal [beta_l, beta_k]",
                           _res(annihilate(l, n - 1, m, p) @ bk, annihilate(k, n - 1, m, p) @ b))
            rep.record("ultralocal [beta*_l, beta*_k]",
                       _res(create(l, n + 1, m, p) @ bsk, create(k, n + 1, m, p) @ bs))
            rep.record("ultralocal [beta_l, q^N_k]", _res(b @ number_op(k, 1, n, m, p), number_op(k, 1, n - 1, m, p) @ b))
            rep.record("ultralocal [q^N_l, q^N_k]",
                       _res(qn @ number_op(k, 1, n, m, p), number_op(k, 1, n, m, p) @ qn))
    return rep


def hamiltonian_from_generators(n, m, p: ModelParams) -> SectorOperator:
    """g-[N_0] + g+[N_m] + sum_l (beta*_{l+1} beta_l + beta*_l beta_{l+1})."""
    dim = state_count(n, m)
    if n == 0:
        return SectorOperator(0, 0, m, np.zeros((1, 1), dtype=complex))
    h = p.g_minus * q_number_op(0, 0, n, m, p) + p.g_plus * q_number_op(m, 0, n, m, p)
    ann = [annihilate(l, n, m, p) for l in range(m + 1)]
    cre = [create(l, n - 1, m, p) for l in range(m + 1)]
    for l in range(m):
        h = h + cre[l + 1] @ ann[l] + cre[l] @ ann[l + 1]
    assert h.matrix.shape == (dim, dim)
    return h


def hop_coefficients(lam, m, p: ModelParams):
    """Yield (j, sign, coefficient) for the moves lam -> lam + sign e_j inside Lambda_{n,m}."""
    n = len(lam)
    q = p.q
    m0 = multiplicity(lam, 0)
    mm = multiplicity(lam, m)
    for j in range(n):
        x = lam[j]
        if x < m and (j == 0 or lam[j - 1] > x):
            c = (1 - p.c_minus * q ** (m0 - 1)) if x == 0 else 1.0
            yield j, 1, c * qint(multiplicity(lam, x), q)
        if x > 0 and (j == n - 1 or lam[j + 1] < x):
            c = (1 - p.c_plus * q ** (mm - 1)) if x == m else 1.0
            yield j, -1, c * qint(multiplicity(lam, x), q)


def hamiltonian_explicit(n, m, p: ModelParams) -> SectorOperator:
    """Direct n-particle action: boundary diagonal plus hop-up and hop-down sums."""
    if n < 1:
        raise ValueError("explicit Hamiltonian needs n >= 1")
    states = enumerate_states(n, m, as_tuples=True)
    idx = state_index(n, m)
    mat = np.zeros((len(states), len(states)), dtype=complex)
    for i, lam in enumerate(states):
        mat[i, i] = p.g_minus * qint(multiplicity(lam, 0), p.q) + p.g_plus * qint(multiplicity(lam, m), p.q)
        for j, s, coef in hop_coefficients(lam, m, p):
            nb = list(lam)
            nb[j] += s
            mat[i, idx[tuple(nb)]] += coef
    return SectorOperator(n, n, m, mat)


def hamiltonian_q0(n, m, p: ModelParams) -> SectorOperator:
    """Phase-model Laplacian: the q -> 0 degeneration with delta-exponent couplings."""
    states = enumerate_states(n, m, as_tuples=True)
    idx = state_index(n, m)
    mat = np.zeros((len(states), len(states)), dtype=complex)
    for i, lam in enumerate(states):
        mat[i, i] = p.g_minus * (lam[-1] == 0) + p.g_plus * (lam[0] == m)
        for j in range(n):
            up = list(lam)
            up[j] += 1
            if up[j] <= m and (j == 0 or lam[j - 1] >= up[j]):
                c = (1 - p.c_minus * (lam[j] == 0)) ** (j == n - 1)
                mat[i, idx[tuple(up)]] += c
            dn = list(lam)
            dn[j] -= 1
            if dn[j] >= 0 and (j == n - 1 or dn[j] >= lam[j + 1]):
                c = (1 - p.c_plus * (lam[j] == m)) ** (j == 0)
                mat[i, idx[tuple(dn)]] += c
    return SectorOperator(n, n, m, mat)


def weighted_symmetry_residual(h: SectorOperator, p: ModelParams):
    """max |Delta(lam) H[lam,mu] - Delta(mu) conj(H[mu,lam])|."""
    w = weights(h.n_in, h.m, p)
    lhs = w[:, None] * h.matrix
    return float(np.max(np.abs(lhs - np.conj(lhs.T)), initial=0.0))
