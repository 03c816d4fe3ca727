"""Finite-dimensional associative unital algebras given by structure constants."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from gmpy2 import mpq

from ..exactla import (Matrix, Subspace, cmul, is_invertible, inverse, matmul,
                       mul_raw, nullspace, rank)
from ..scalars import CycContext, CycScalar, field_context

__all__ = [
    "Algebra",
    "AlgebraReport",
    "AntiAutomorphism",
    "Radical",
    "check_algebra",
    "radical",
    "sparse_join",
]


def _ctx_of(ctx) -> CycContext:
    return ctx if isinstance(ctx, CycContext) else field_context(ctx)


def sparse_join(keys1, keys2):
    """All index pairs (a, b) with keys1[a] == keys2[b]."""
    o1 = np.argsort(keys1, kind="stable")
    o2 = np.argsort(keys2, kind="stable")
    k1, k2 = keys1[o1], keys2[o2]
    u1, s1, c1 = np.unique(k1, return_index=True, return_counts=True)
    u2, s2, c2 = np.unique(k2, return_index=True, return_counts=True)
    common, i1, i2 = np.intersect1d(u1, u2, assume_unique=True, return_indices=True)
    if common.size == 0:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    n1, n2 = c1[i1], c2[i2]
    reps = n1 * n2
    tot = int(reps.sum())
    grp = np.repeat(np.arange(common.size), reps)
    off = np.arange(tot) - np.repeat(np.cumsum(reps) - reps, reps)
    a = s1[i1][grp] + off // n2[grp]
    b = s2[i2][grp] + off % n2[grp]
    return o1[a], o2[b]


def _aggregate(keys, vals):
    """Sum values (N, deg) with equal integer keys; drop zeros."""
    if keys.size == 0:
        return keys, vals
    order = np.argsort(keys, kind="stable")
    keys, vals = keys[order], vals[order]
    uk, starts = np.unique(keys, return_index=True)
    sums = np.add.reduceat(vals, starts, axis=0)
    keep = np.array([any(r) for r in sums], dtype=bool)
    return uk[keep], sums[keep]


class Algebra:
    """Associative unital algebra with sparse structure constants.

    ``c[i][j][k]`` is the coefficient of ``b_k`` in ``b_i b_j``; the nonzero
    constants are kept as index arrays ``I, J, K`` and a value array ``V`` of
    shape (nnz, p - 1).  Elements are raw coefficient arrays of shape (n, p - 1).
    """

    def __init__(self, ctx, dim, I, J, K, V, unit, labels=None):
        self.ctx = _ctx_of(ctx)
        self.dim = int(dim)
        self.I = np.asarray(I, dtype=np.int64)
        self.J = np.asarray(J, dtype=np.int64)
        self.K = np.asarray(K, dtype=np.int64)
        self.V = np.asarray(V, dtype=object).reshape(-1, self.ctx.deg)
        self.unit = np.asarray(unit, dtype=object).reshape(self.dim, self.ctx.deg)
        self.labels = list(labels) if labels is not None else [f"b{i}" for i in range(self.dim)]
        self._cache = {}
        for arr in (self.I, self.J, self.K, self.V, self.unit):
            arr.flags.writeable = False

    # construction
    @classmethod
    def from_table(cls, ctx, dim, entries, unit, labels=None):
        """Build from (i, j, k, value) entries; repeated keys are summed."""
        ctx = _ctx_of(ctx)
        acc = {}
        for i, j, k, v in entries:
            for idx in (i, j, k):
                if not 0 <= int(idx) < dim:
                    raise ValueError(f"structure constant index {(i, j, k)} out of range for dim {dim}")
            key = (int(i), int(j), int(k))
            s = ctx(v)
            acc[key] = acc[key] + s if key in acc else s
        keys = sorted(k for k, v in acc.items() if v)
        V = np.zeros((len(keys), ctx.deg), dtype=object)
        for r, key in enumerate(keys):
            V[r] = acc[key].coeffs
        I, J, K = (np.array([k[t] for k in keys], dtype=np.int64) for t in range(3))
        u = np.zeros((dim, ctx.deg), dtype=object)
        for idx, s in enumerate(unit):
            u[idx] = ctx(s).coeffs
        return cls(ctx, dim, I, J, K, V, u, labels)

    @classmethod
    def from_arrays(cls, ctx, dim, I, J, K, V, unit, labels=None):
        """Build from index arrays, merging duplicates and dropping zeros."""
        ctx = _ctx_of(ctx)
        I, J, K = (np.asarray(x, dtype=np.int64) for x in (I, J, K))
        keys, vals = _aggregate((I * dim + J) * dim + K, np.asarray(V, dtype=object).reshape(-1, ctx.deg))
        return cls(ctx, dim, keys // (dim * dim), (keys // dim) % dim, keys % dim, vals, unit, labels)

    def structure_constants(self):
        return [(int(i), int(j), int(k), CycScalar(self.ctx, tuple(mpq(x) for x in v)))
                for i, j, k, v in zip(self.I, self.J, self.K, self.V)]

    @property
    def nnz(self):
        return len(self.I)

    def __repr__(self):
        return f"Algebra(p={self.ctx.p}, dim={self.dim}, nnz={self.nnz})"

    # elements
    def zero(self):
        return np.zeros((self.dim, self.ctx.deg), dtype=object)

    def one(self):
        return self.unit.copy()

    def basis_vector(self, i):
        e = self.zero()
        e[i, 0] = mpq(1)
        return e

    def element(self, coords):
        """Raw element from a sequence of scalars (or anything the field accepts)."""
        e = self.zero()
        for i, v in enumerate(coords):
            e[i] = self.ctx(v).coeffs
        return e

    def mult(self, u, v):
        p = self.ctx.p
        m = (u[self.I] != 0).any(axis=1) & (v[self.J] != 0).any(axis=1) if self.nnz else np.zeros(0, bool)
        out = self.zero()
        if m.any():
            vals = cmul(cmul(self.V[m], u[self.I[m]], p), v[self.J[m]], p)
            np.add.at(out, self.K[m], vals)
        return out

    def left_matrix(self, u):
        """Raw matrix of x -> u x."""
        out = np.zeros((self.dim, self.dim, self.ctx.deg), dtype=object)
        m = (u[self.I] != 0).any(axis=1) if self.nnz else np.zeros(0, bool)
        if m.any():
            np.add.at(out, (self.K[m], self.J[m]), cmul(self.V[m], u[self.I[m]], self.ctx.p))
        return out

    def right_matrix(self, u):
        """Raw matrix of x -> x u."""
        out = np.zeros((self.dim, self.dim, self.ctx.deg), dtype=object)
        m = (u[self.J] != 0).any(axis=1) if self.nnz else np.zeros(0, bool)
        if m.any():
            np.add.at(out, (self.K[m], self.I[m]), cmul(self.V[m], u[self.J[m]], self.ctx.p))
        return out

    def left_apply(self, u, W):
        """L_u @ W for a raw (n, d, deg) array W, without forming L_u."""
        p = self.ctx.p
        out = np.zeros((self.dim,) + W.shape[1:], dtype=object)
        m = (u[self.I] != 0).any(axis=1) if self.nnz else np.zeros(0, bool)
        if m.any() and W.shape[1]:
            coef = cmul(self.V[m], u[self.I[m]], p)
            np.add.at(out, self.K[m], cmul(coef[:, None, :], W[self.J[m]], p))
        return out

    def right_apply(self, u, W):
        """R_u @ W: columns x -> x u."""
        p = self.ctx.p
        out = np.zeros((self.dim,) + W.shape[1:], dtype=object)
        m = (u[self.J] != 0).any(axis=1) if self.nnz else np.zeros(0, bool)
        if m.any() and W.shape[1]:
            coef = cmul(self.V[m], u[self.J[m]], p)
            np.add.at(out, self.K[m], cmul(coef[:, None, :], W[self.I[m]], p))
        return out

    def opposite(self):
        if "op" not in self._cache:
            op = Algebra(self.ctx, self.dim, self.J, self.I, self.K, self.V, self.unit,
                         [f"{x}^op" for x in self.labels])
            op._cache["op"] = self
            self._cache["op"] = op
        return self._cache["op"]

    def left_traces(self):
        """Tr(L_{b_i}) for every basis element, as an (n, deg) array."""
        out = self.zero()
        m = self.J == self.K
        np.add.at(out, self.I[m], self.V[m])
        return out

    def right_traces(self):
        """Tr(R_{b_j}) for every basis element."""
        out = self.zero()
        m = self.I == self.K
        np.add.at(out, self.J[m], self.V[m])
        return out

    # generation
    def closure(self, gens, vectors):
        """Smallest subspace containing the columns of ``vectors`` and stable under L_g."""
        S = Subspace.span(self.ctx, self.dim, vectors)
        while True:
            new = [S.basis] + [self.left_apply(g, S.basis) for g in gens]
            T = Subspace.span(self.ctx, self.dim, np.concatenate(new, axis=1))
            if T.dim == S.dim:
                return S
            S = T

    def generators(self, seed=0):
        """A small generating set of random elements, certified by closure of {1}."""
        key = ("gens", seed)
        if key in self._cache:
            return self._cache[key]
        rng = np.random.default_rng(seed)
        gens = []
        one = self.unit[:, None, :]
        while True:
            g = self.zero()
            g[:, 0] = [mpq(int(x)) for x in rng.integers(-3, 4, self.dim)]
            gens.append(g)
            if self.closure(gens, one).dim == self.dim:
                break
            if len(gens) > self.dim + 1:  # pragma: no cover
                raise RuntimeError("failed to find algebra generators")
        self._cache[key] = gens
        return gens

    def dense_constants(self):
        c = np.zeros((self.dim, self.dim, self.dim, self.ctx.deg), dtype=object)
        c[self.I, self.J, self.K] = self.V
        return c


@dataclass
class AlgebraReport:
    ok: bool
    associativity_violations: list = field(default_factory=list)
    unit_ok: bool = True
    checked_triples: int = 0

    def __bool__(self):
        return self.ok


def _triple_products(A: Algebra, first_left: bool):
    """Sparse coefficients of (b_i b_j) b_k (first_left) or b_i (b_j b_k), keyed by (i, j, k, m)."""
    n, p = A.dim, A.ctx.p
    if first_left:
        a, b = sparse_join(A.K, A.I)
        i, j, k, m = A.I[a], A.J[a], A.J[b], A.K[b]
    else:
        a, b = sparse_join(A.K, A.J)
        i, j, k, m = A.I[b], A.I[a], A.J[a], A.K[b]
    vals = cmul(A.V[a], A.V[b], p)
    keys = ((i * n + j) * n + k) * n + m
    return _aggregate(keys, vals)


def check_algebra(A: Algebra, max_violations=50) -> AlgebraReport:
    """Associativity on all basis triples and the unit laws."""
    n = A.dim
    k1, v1 = _triple_products(A, True)
    k2, v2 = _triple_products(A, False)
    bad = set()
    allk = np.union1d(k1, k2)
    d1 = dict(zip(k1.tolist(), (tuple(r) for r in v1)))
    d2 = dict(zip(k2.tolist(), (tuple(r) for r in v2)))
    zero = (0,) * A.ctx.deg
    for key in allk.tolist():
        if d1.get(key, zero) != d2.get(key, zero):
            t = key // n
            bad.add((t // (n * n), (t // n) % n, t % n))
    I = Matrix.identity(A.ctx, n).data
    unit_ok = bool(np.all(A.left_matrix(A.unit) == I) and np.all(A.right_matrix(A.unit) == I))
    viol = sorted(bad)[:max_violations]
    return AlgebraReport(ok=not bad and unit_ok, associativity_violations=viol,
                         unit_ok=unit_ok, checked_triples=n ** 3)


class AntiAutomorphism:
    """A linear bijection reversing products; ``matrix`` acts on coordinates."""

    def __init__(self, parent: Algebra, matrix: Matrix):
        if matrix.shape != (parent.dim, parent.dim):
            raise ValueError(f"anti-automorphism matrix has shape {matrix.shape}, need {(parent.dim,) * 2}")
        self.parent = parent
        self.matrix = matrix

    def __call__(self, u):
        return mul_raw(self.matrix.data, u[:, None, :], self.parent.ctx.p)[:, 0]

    def inverse(self) -> "AntiAutomorphism":
        return AntiAutomorphism(self.parent, inverse(self.matrix))

    def check(self) -> bool:
        A = self.parent
        if not is_invertible(self.matrix):
            return False
        if not np.all(self(A.unit) == A.unit):
            return False
        for i in range(A.dim):
            bi = A.basis_vector(i)
            si = self(bi)
            for j in range(A.dim):
                bj = A.basis_vector(j)
                if not np.all(self(A.mult(bi, bj)) == A.mult(self(bj), si)):
                    return False
        return True


@dataclass
class Radical:
    """J(A) with a canonical basis and the data derived from the trace form."""
    space: Subspace
    trace_form: Matrix
    nilpotency_index: int
    loewy_dims: list

    @property
    def dim(self):
        return self.space.dim

    def basis(self) -> Matrix:
        return self.space.matrix()


def _trace_form(A: Algebra) -> Matrix:
    """T[a][b] = Tr(L_{b_a} L_{b_b}) = sum c[a][j][k] c[b][k][j]."""
    n, p = A.dim, A.ctx.p
    ia, ib = sparse_join(A.J * n + A.K, A.K * n + A.J)
    T = np.zeros((n, n, A.ctx.deg), dtype=object)
    if ia.size:
        np.add.at(T, (A.I[ia], A.I[ib]), cmul(A.V[ia], A.V[ib], p))
    return Matrix(A.ctx, T)


def _random_combination(space: Subspace, rng):
    coeffs = np.zeros((space.dim, 1, space.ctx.deg), dtype=object)
    coeffs[:, 0, 0] = [mpq(int(x)) for x in rng.integers(-5, 6, space.dim)]
    return mul_raw(space.basis, coeffs, space.ctx.p)[:, 0]


def ideal_generators(A: Algebra, space: Subspace, side="left", seed=0):
    """Random elements g_r of an ideal with sum A g_r (left) or sum g_r A (right) equal to it."""
    key = ("idealgens", side, space.pivots, seed)
    if key in A._cache:
        return A._cache[key]
    rng = np.random.default_rng(seed + 7)
    gens = []
    if space.dim:
        cols = []
        while True:
            g = _random_combination(space, rng)
            gens.append(g)
            cols.append(A.right_matrix(g) if side == "left" else A.left_matrix(g))
            if Subspace.span(A.ctx, A.dim, np.concatenate(cols, axis=1)).dim == space.dim:
                break
            if len(gens) > space.dim:  # pragma: no cover
                raise RuntimeError("failed to find ideal generators")
    A._cache[key] = gens
    return gens


def radical(A: Algebra, check=True) -> Radical:
    """J(A) as the kernel of the trace form (valid in characteristic zero).

    Postconditions: J is an ideal, J is nilpotent, the trace form is
    nondegenerate modulo J.
    """
    if "radical" in A._cache:
        return A._cache["radical"]
    T = _trace_form(A)
    space = Subspace.span(A.ctx, A.dim, nullspace(T).data)
    loewy = [A.dim, space.dim]
    index = 1 if space.dim == 0 else 0
    if check:
        if rank(T) != A.dim - space.dim:  # pragma: no cover - definitional
            raise AssertionError("trace form degenerate modulo the radical")
        if space.dim:
            gens = ideal_generators(A, space, "left")
            for g in gens:
                if not space.contains(A.left_apply(g, space.basis)) or \
                        not space.contains(A.right_apply(g, space.basis)):
                    raise AssertionError("computed radical is not an ideal")
            agens = A.generators()
            cur = space
            index = 1
            while cur.dim:
                prod = np.concatenate([A.left_apply(g, cur.basis) for g in gens], axis=1)
                cur = A.closure(agens, prod)
                loewy.append(cur.dim)
                index += 1
                if index > A.dim + 1:
                    raise AssertionError("computed radical is not nilpotent")
    rad = Radical(space=space, trace_form=T, nilpotency_index=index, loewy_dims=loewy)
    A._cache["radical"] = rad
    return rad
