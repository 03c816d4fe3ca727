"""The Taft Hopf algebra of dimension p^2, its simples and projective covers.

Basis element g^i x^s sits at index i*p + s.  Relations: g^p = 1, x^p = 0,
x g = lam g x with lam = zeta_p, so (g^i x^s)(g^j x^t) = lam^(s j) g^(i+j) x^(s+t).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np
from gmpy2 import mpq

from .algcore import (Algebra, AntiAutomorphism, Module, check_algebra,
                      composition_factors, cosocle_dim, is_isomorphic,
                      is_projective, quotient, radical, radical_submodule,
                      regular_module, socle, submodule)
from .exactla import Matrix, Subspace, cmul, rank
from .scalars import CycScalar, field_context

__all__ = [
    "TaftAlgebra",
    "RadicalCheck",
    "build_taft",
    "simple_module",
    "x_element",
    "chain_space",
    "chain_submodule",
    "projective_cover",
    "tensor_modules",
    "radical_check",
]


@dataclass
class TaftAlgebra:
    p: int
    algebra: Algebra
    lam: CycScalar
    delta: Matrix
    counit: Matrix
    antipode: AntiAutomorphism
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def ctx(self):
        return self.algebra.ctx

    @property
    def dim(self):
        return self.algebra.dim

    def index(self, i, s):
        return (i % self.p) * self.p + s

    @property
    def g(self):
        return self.algebra.basis_vector(self.index(1, 0))

    @property
    def x(self):
        return self.algebra.basis_vector(self.index(0, 1))

    def antipode_inverse(self) -> AntiAutomorphism:
        if "sinv" not in self._cache:
            self._cache["sinv"] = self.antipode.inverse()
        return self._cache["sinv"]

    def hopf_data(self):
        from .hopfax import HopfData
        return HopfData(self.algebra, self.delta, self.counit, self.antipode.matrix,
                        name=f"taft(p={self.p})")


def _label(i, s):
    g = "" if i == 0 else ("g" if i == 1 else f"g^{i}")
    x = "" if s == 0 else ("x" if s == 1 else f"x^{s}")
    return (g + x) or "1"


def build_taft(p: int) -> TaftAlgebra:
    ctx = field_context(p)
    n = p * p
    lam = ctx.zeta(1)

    def bmul(a, b):
        (i, s), (j, t) = divmod(a, p), divmod(b, p)
        if s + t >= p:
            return None
        return ((i + j) % p) * p + s + t, (s * j) % p

    entries = []
    for a in range(n):
        for b in range(n):
            r = bmul(a, b)
            if r is not None:
                entries.append((a, b, r[0], ctx.zeta(r[1])))
    unit = [1] + [0] * (n - 1)
    labels = [_label(i, s) for i in range(p) for s in range(p)]
    A = Algebra.from_table(ctx, n, entries, unit, labels)

    # coproduct on B (x) B, computed with dict tensors {(a, b): scalar}
    def tmul(X, Y):
        out = {}
        for (a, b), u in X.items():
            for (c, d), v in Y.items():
                r1, r2 = bmul(a, c), bmul(b, d)
                if r1 is None or r2 is None:
                    continue
                key = (r1[0], r2[0])
                val = u * v * ctx.zeta(r1[1] + r2[1])
                out[key] = out.get(key, ctx.zero()) + val
        return {k: v for k, v in out.items() if v}

    gi, xi = p, 1
    dg = {(gi, gi): ctx.one()}
    dx = {(gi, xi): ctx.one(), (xi, 0): ctx.one()}
    D = np.zeros((n * n, n, ctx.deg), dtype=object)
    gpow = {(0, 0): ctx.one()}
    for i in range(p):
        cur = gpow
        for s in range(p):
            for (a, b), v in cur.items():
                D[a * n + b, i * p + s] = v.coeffs
            cur = tmul(cur, dx)
        gpow = tmul(gpow, dg)
    delta = Matrix(ctx, D)

    eps = np.zeros((1, n, ctx.deg), dtype=object)
    for i in range(p):
        eps[0, i * p, 0] = mpq(1)
    counit = Matrix(ctx, eps)

    # S(g^i x^s) = S(x)^s S(g)^i with S(g) = g^-1, S(x) = -g^-1 x
    ginv = A.basis_vector(((p - 1) % p) * p)
    sx = -A.basis_vector(((p - 1) % p) * p + 1)
    S = np.zeros((n, n, ctx.deg), dtype=object)
    sxs = A.one()
    for s in range(p):
        cur = sxs
        for i in range(p):
            S[:, i * p + s] = cur
            cur = A.mult(cur, ginv)
        sxs = A.mult(sxs, sx)
    antipode = AntiAutomorphism(A, Matrix(ctx, S))

    T = TaftAlgebra(p, A, lam, delta, counit, antipode)
    rep = check_algebra(A)
    if not rep.ok:  # pragma: no cover - construction bug trap
        raise AssertionError(f"Taft structure constants fail: {rep.associativity_violations[:3]}")
    return T


def simple_module(T: TaftAlgebra, k: int) -> Module:
    """V_k: x acts by 0, g by lam^k."""
    p, ctx = T.p, T.ctx
    acts = np.zeros((T.dim, 1, 1, ctx.deg), dtype=object)
    for i in range(p):
        acts[T.index(i, 0), 0, 0] = ctx.zeta(k * i).coeffs
    return Module.from_actions(T.algebra, acts, name=f"V{k % p}")


def x_element(T: TaftAlgebra, k: int, s: int, check: bool = True):
    """x_k^(s) = sum_i lam^(-i k) g^i x^s as a raw coordinate vector."""
    p, A = T.p, T.algebra
    v = A.zero()
    for i in range(p):
        v[T.index(i, s)] = T.ctx.zeta(-i * k).coeffs
    if check:
        if not np.all(A.mult(T.g, v) == cmul(v, np.array(T.ctx.zeta(k).coeffs, dtype=object)[None, :], p)):
            raise AssertionError(f"g . x_{k}^({s}) is not lam^{k} x_{k}^({s})")
        nxt = x_element(T, k - 1, s + 1, check=False) if s + 1 < p else A.zero()
        if not np.all(A.mult(T.x, v) == nxt):
            raise AssertionError(f"x . x_{k}^({s}) is not x_{k - 1}^({s + 1})")
    return v


def chain_space(T: TaftAlgebra, k: int, i: int) -> Subspace:
    """I_k^i: the span of x_{k+j}^(p-j) for j = 1..i, inside the regular module."""
    p = T.p
    if not 0 <= i <= p:
        raise ValueError(f"chain index must lie in 0..{p}, got {i}")
    vecs = [x_element(T, k + j, p - j) for j in range(1, i + 1)]
    arr = np.stack(vecs, axis=1) if vecs else T.algebra.zero()[:, :0]
    space = Subspace.span(T.ctx, T.dim, arr)
    if space.dim != i:  # pragma: no cover
        raise AssertionError(f"I_{k}^{i} has dimension {space.dim}")
    return space


def chain_submodule(T: TaftAlgebra, k: int, i: int) -> Module:
    """The left ideal I_k^i as a module; closure under the action is verified."""
    M, _ = submodule(regular_module(T.algebra), chain_space(T, k, i), closed=True)
    M.name = f"I{k % T.p}^{i}"
    return M


def projective_cover(T: TaftAlgebra, k: int, check: bool = True) -> Module:
    """P_k = I_k^p, with socle V_{k+1} and top V_k."""
    p = T.p
    key = ("P", k % p, check)
    if key in T._cache:
        return T._cache[key]
    P = chain_submodule(T, k, p)
    P.name = f"P{k % p}"
    if check:
        simples = [simple_module(T, j) for j in range(p)]
        if P.dim != p:
            raise AssertionError(f"dim P_{k} = {P.dim}")
        soc = socle(P)
        soc_mod, _ = submodule(P, soc, closed=True)
        if soc.dim != 1 or not is_isomorphic(soc_mod, simples[(k + 1) % p]):
            raise AssertionError(f"soc(P_{k}) is not V_{(k + 1) % p}")
        top = quotient(P, radical_submodule(P))
        if top.dim != 1 or not is_isomorphic(top, simples[k % p]):
            raise AssertionError(f"top of P_{k} is not V_{k % p}")
        if composition_factors(P, simples) != Counter(range(p)):
            raise AssertionError(f"P_{k} does not contain every simple once")
        if not is_projective(P):
            raise AssertionError(f"P_{k} is not projective")
    T._cache[key] = P
    return P


def _rkron(X, Y, p):
    m, n = X.shape[0], Y.shape[0]
    out = cmul(X[:, None, :, None, :], Y[None, :, None, :, :], p)
    return out.reshape(m * n, m * n, X.shape[-1])


def tensor_modules(T: TaftAlgebra, M: Module, N: Module) -> Module:
    """M (x) N with b acting through Delta(b); basis index r * dim N + s."""
    n, p = T.dim, T.p
    AM, AN = M.actions(), N.actions()
    D = T.delta.data
    out = np.zeros((n, M.dim * N.dim, M.dim * N.dim, T.ctx.deg), dtype=object)
    rows, cols = np.nonzero((D != 0).any(axis=2))
    for r, a in zip(rows.tolist(), cols.tolist()):
        u, v = divmod(r, n)
        coef = D[r, a]
        out[a] += cmul(_rkron(AM[u], AN[v], p), coef[None, None, :], p)
    return Module.from_actions(T.algebra, out, name=f"{M.name or 'M'}(x){N.name or 'N'}")


@dataclass
class RadicalCheck:
    ok: bool
    dim: int
    expected_dim: int
    matches_span: bool
    nilpotency_index: int
    semisimple_quotient: bool


def radical_check(T: TaftAlgebra) -> RadicalCheck:
    """J(B) against span{g^i x^s : s >= 1}; J^p = 0; B/J semisimple."""
    p = T.p
    rad = radical(T.algebra)
    expected = np.stack([T.algebra.basis_vector(T.index(i, s))
                         for i in range(p) for s in range(1, p)], axis=1)
    span = Subspace.span(T.ctx, T.dim, expected)
    matches = span == rad.space
    semisimple = rank(rad.trace_form) == T.dim - rad.dim
    ok = matches and rad.nilpotency_index == p and semisimple
    return RadicalCheck(ok, rad.dim, p * p - p, matches, rad.nilpotency_index, semisimple)
