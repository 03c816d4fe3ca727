"""Left modules over an ``Algebra``, stored as sparse action entries.

A module of dimension m records entries (b, r, c, v) meaning that
rho(b_b)[r][c] contains the scalar v.  The regular module and the dual of the
right regular module are produced straight from the structure constants, so
large algebras never need n dense action matrices.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from gmpy2 import mpq

from ..exactla import Matrix, Subspace, cmul, kron, mul_raw, nullspace
from .algebra import Algebra, AntiAutomorphism, ideal_generators, radical

__all__ = [
    "Module",
    "ModHom",
    "regular_module",
    "dual_regular_module",
    "dual_module",
    "direct_sum",
    "submodule",
    "quotient",
    "module_closure",
    "socle",
    "cosocle_dim",
    "radical_submodule",
    "hom_space",
    "check_module",
]


def _nzrows(a):
    return (a != 0).any(axis=tuple(range(1, a.ndim)))


class Module:
    """A left module given by sparse action entries."""

    def __init__(self, parent: Algebra, dim, B, R, C, V, name=None):
        self.parent = parent
        self.ctx = parent.ctx
        self.dim = int(dim)
        self.B = np.asarray(B, dtype=np.int64)
        self.R = np.asarray(R, dtype=np.int64)
        self.C = np.asarray(C, dtype=np.int64)
        self.V = np.asarray(V, dtype=object).reshape(-1, self.ctx.deg)
        self.name = name
        self._cache = {}

    @classmethod
    def from_actions(cls, parent: Algebra, actions, name=None):
        """Build from a dense (n, m, m, deg) array of action matrices."""
        actions = np.asarray(actions, dtype=object)
        n = parent.dim
        if actions.ndim != 4 or actions.shape[0] != n or actions.shape[1] != actions.shape[2]:
            raise ValueError(f"actions must have shape ({n}, m, m, deg), got {actions.shape}")
        b, r, c = np.nonzero((actions != 0).any(axis=3))
        return cls(parent, actions.shape[1], b, r, c, actions[b, r, c], name)

    @classmethod
    def from_matrices(cls, parent: Algebra, mats, name=None):
        """Build from one ``Matrix`` per algebra basis element."""
        mats = list(mats)
        if len(mats) != parent.dim:
            raise ValueError(f"need {parent.dim} action matrices, got {len(mats)}")
        return cls.from_actions(parent, np.stack([m.data for m in mats]), name)

    def __repr__(self):
        tag = f" {self.name}" if self.name else ""
        return f"Module({tag.strip() or 'M'}, dim={self.dim}, over {self.parent!r})"

    # primitives
    def _coef(self, u):
        m = _nzrows(u[self.B]) if len(self.B) else np.zeros(0, bool)
        return m, cmul(self.V[m], u[self.B[m]], self.ctx.p)

    def rho(self, u):
        """Raw matrix of the action of the algebra element u."""
        out = np.zeros((self.dim, self.dim, self.ctx.deg), dtype=object)
        m, coef = self._coef(u)
        if m.any():
            np.add.at(out, (self.R[m], self.C[m]), coef)
        return out

    def apply(self, u, W):
        """rho(u) @ W for a raw (m, k, deg) array."""
        out = np.zeros((self.dim,) + W.shape[1:], dtype=object)
        m, coef = self._coef(u)
        if m.any() and W.shape[1]:
            np.add.at(out, self.R[m], cmul(coef[:, None, :], W[self.C[m]], self.ctx.p))
        return out

    def act(self, u, v):
        return self.apply(u, v[:, None, :])[:, 0]

    def action(self, i):
        return self.rho(self.parent.basis_vector(i))

    def action_matrix(self, i) -> Matrix:
        return Matrix(self.ctx, self.action(i))

    def actions(self):
        """Dense (n, m, m, deg) array of all action matrices."""
        out = np.zeros((self.parent.dim, self.dim, self.dim, self.ctx.deg), dtype=object)
        np.add.at(out, (self.B, self.R, self.C), self.V)
        return out

    def orbit(self, v):
        """(m, n, deg) array whose column i is b_i . v."""
        out = np.zeros((self.dim, self.parent.dim, self.ctx.deg), dtype=object)
        m = _nzrows(v[self.C]) if len(self.C) else np.zeros(0, bool)
        if m.any():
            np.add.at(out, (self.R[m], self.B[m]), cmul(self.V[m], v[self.C[m]], self.ctx.p))
        return out

    def orbit_many(self, W):
        """(m, n, k, deg): entry [:, i, t] is b_i . W[:, t]."""
        out = np.zeros((self.dim, self.parent.dim, W.shape[1], self.ctx.deg), dtype=object)
        if len(self.B) and W.shape[1]:
            np.add.at(out, (self.R, self.B), cmul(self.V[:, None, :], W[self.C], self.ctx.p))
        return out

    def character(self):
        """chi(b_i) = Tr rho(b_i), as an (n, deg) array."""
        out = self.parent.zero()
        d = self.R == self.C
        np.add.at(out, self.B[d], self.V[d])
        return out

    def restricted_character(self, space: Subspace):
        """Character of an invariant subspace given in canonical form."""
        out = self.parent.zero()
        if space.dim == 0:
            return out
        pos = np.full(self.dim, -1, dtype=np.int64)
        pos[list(space.pivots)] = np.arange(space.dim)
        m = pos[self.R] >= 0
        if m.any():
            vals = cmul(self.V[m], space.basis[self.C[m], pos[self.R[m]]], self.ctx.p)
            np.add.at(out, self.B[m], vals)
        return out

    def is_regular(self):
        return self._cache.get("kind") == "regular"


@dataclass
class ModHom:
    source: Module
    target: Module
    matrix: Matrix

    def check(self) -> bool:
        A = self.source.parent
        for i in range(A.dim):
            lhs = mul_raw(self.target.action(i), self.matrix.data, A.ctx.p)
            rhs = mul_raw(self.matrix.data, self.source.action(i), A.ctx.p)
            if not np.all(lhs == rhs):
                return False
        return True


def regular_module(A: Algebra, side="left") -> Module:
    """Left regular module; ``side='right'`` gives A_A as a left A^op-module."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    alg = A if side == "left" else A.opposite()
    key = "regular_module"
    if key not in alg._cache:
        M = Module(alg, alg.dim, alg.I, alg.K, alg.J, alg.V, name=f"{side} regular")
        M._cache["kind"] = "regular"
        alg._cache[key] = M
    return alg._cache[key]


def dual_regular_module(A: Algebra) -> Module:
    """Linear dual of the right regular module, a left A-module: (a.f)(x) = f(x a)."""
    key = "dual_regular_module"
    if key not in A._cache:
        M = Module(A, A.dim, A.J, A.I, A.K, A.V, name="dual of right regular")
        M._cache["kind"] = "dual_regular"
        A._cache[key] = M
    return A._cache[key]


def dual_module(M: Module, sigma: AntiAutomorphism | None = None) -> Module:
    """Dual module.

    Without ``sigma`` this is the plain linear dual, a left module over the
    opposite algebra.  With an anti-automorphism sigma (an antipode) the dual
    is a left module over the same algebra via rho(sigma(b))^T.
    """
    A = M.parent
    if sigma is None:
        return Module(A.opposite(), M.dim, M.B, M.C, M.R, M.V, name=f"dual({M.name or 'M'})")
    S = sigma.matrix.data  # column i holds sigma(b_i)
    acts = M.actions()
    n = A.dim
    new = np.zeros_like(acts)
    for i in range(n):
        u = S[:, i, :]
        new[i] = np.swapaxes(M.rho(u), 0, 1)
    return Module.from_actions(A, new, name=f"dual({M.name or 'M'})")


def direct_sum(modules) -> Module:
    modules = list(modules)
    A = modules[0].parent
    off = 0
    Bs, Rs, Cs, Vs = [], [], [], []
    for M in modules:
        if M.parent is not A:
            raise ValueError("direct sum of modules over different algebras")
        Bs.append(M.B)
        Rs.append(M.R + off)
        Cs.append(M.C + off)
        Vs.append(M.V)
        off += M.dim
    return Module(A, off, np.concatenate(Bs), np.concatenate(Rs), np.concatenate(Cs),
                  np.concatenate(Vs), name="+".join(m.name or "M" for m in modules))


def module_closure(M: Module, vectors, gens=None) -> Subspace:
    """Submodule generated by the columns of a raw (m, k, deg) array."""
    gens = M.parent.generators() if gens is None else gens
    S = Subspace.span(M.ctx, M.dim, vectors)
    while True:
        if S.dim == M.dim or S.dim == 0:
            return S
        new = [S.basis] + [M.apply(g, S.basis) for g in gens]
        T = Subspace.span(M.ctx, M.dim, np.concatenate(new, axis=1))
        if T.dim == S.dim:
            return S
        S = T


def _restrict(M: Module, space: Subspace):
    """(n, m, d, deg) array of rho(b_i) applied to the basis of ``space``."""
    return M.orbit_many(space.basis)


def submodule(M: Module, vectors, closed=False):
    """Submodule generated by vectors; returns (Module, Subspace)."""
    if isinstance(vectors, Subspace):
        space = vectors if closed else module_closure(M, vectors.basis)
    else:
        space = module_closure(M, vectors) if not closed else Subspace.span(M.ctx, M.dim, vectors)
    if space.dim == 0:
        acts = np.zeros((M.parent.dim, 0, 0, M.ctx.deg), dtype=object)
        return Module.from_actions(M.parent, acts, name=f"sub({M.name or 'M'})"), space
    img = _restrict(M, space)  # (m, n, d, deg)
    coords = img[list(space.pivots)]  # (d, n, d, deg): [r, i, c]
    if not np.all(mul_raw(space.basis, coords.reshape(space.dim, -1, M.ctx.deg), M.ctx.p)
                  .reshape(img.shape) == img):
        raise ValueError("generating set does not span a submodule")
    acts = np.ascontiguousarray(coords.transpose(1, 0, 2, 3))
    return Module.from_actions(M.parent, acts, name=f"sub({M.name or 'M'})"), space


def quotient(M: Module, space: Subspace) -> Module:
    """M / space on the complement spanned by the non-pivot coordinate vectors."""
    keep = [j for j in range(M.dim) if j not in set(space.pivots)]
    acts = M.actions()  # (n, m, m, deg)
    if space.dim:
        top = acts[:, list(space.pivots), :, :]  # components along the canonical basis
        n = M.parent.dim
        sub = np.zeros_like(acts)
        for i in range(n):
            sub[i] = mul_raw(space.basis, top[i], M.ctx.p)
        acts = acts - sub
    q = acts[:, keep][:, :, keep]
    return Module.from_actions(M.parent, q, name=f"{M.name or 'M'}/sub")


def radical_submodule(M: Module) -> Subspace:
    """J(A) M."""
    if "radical_sub" in M._cache:
        return M._cache["radical_sub"]
    A = M.parent
    rad = radical(A)
    kind = M._cache.get("kind")
    if kind == "regular":
        S = rad.space
    elif rad.dim == 0:
        S = Subspace.span(M.ctx, M.dim, np.zeros((M.dim, 0, M.ctx.deg), dtype=object))
    else:
        gens = ideal_generators(A, rad.space, "left")
        ident = Matrix.identity(M.ctx, M.dim).data
        vecs = np.concatenate([M.apply(g, ident) for g in gens], axis=1)
        S = module_closure(M, vecs)
    M._cache["radical_sub"] = S
    return S


def socle(M: Module) -> Subspace:
    """{m : J(A) m = 0}, the intersection of kernels of rho(g) over ideal generators g of J."""
    if "socle" in M._cache:
        return M._cache["socle"]
    A = M.parent
    rad = radical(A)
    if rad.dim == 0:
        S = Subspace.whole(M.ctx, M.dim)
    else:
        gens = ideal_generators(A, rad.space, "left")
        stacked = Matrix(M.ctx, np.concatenate([M.rho(g) for g in gens], axis=0))
        S = Subspace.span(M.ctx, M.dim, nullspace(stacked).data)
    M._cache["socle"] = S
    return S


def cosocle_dim(M: Module) -> int:
    return M.dim - radical_submodule(M).dim


def hom_space(M: Module, N: Module):
    """Basis of Hom_A(M, N) as a list of ModHom."""
    if M.parent is not N.parent:
        raise ValueError("modules over different algebras")
    A = M.parent
    ctx = A.ctx
    if M._cache.get("kind") == "regular":
        mats = [Matrix(ctx, N.orbit(Matrix.identity(ctx, N.dim).data[:, t])) for t in range(N.dim)]
        return [ModHom(M, N, X) for X in mats]
    m, n = M.dim, N.dim
    if m == 0 or n == 0:
        return []
    blocks = []
    Im, In = Matrix.identity(ctx, m), Matrix.identity(ctx, n)
    for g in A.generators():
        rN = Matrix(ctx, N.rho(g))
        rM = Matrix(ctx, M.rho(g))
        blocks.append((kron(rN, Im) - kron(In, rM.T)).data)
    system = Matrix(ctx, np.concatenate(blocks, axis=0))
    K = nullspace(system)
    out = []
    for t in range(K.cols):
        X = K.data[:, t, :].reshape(n, m, ctx.deg)
        out.append(ModHom(M, N, Matrix(ctx, X)))
    return out


def check_module(M: Module) -> bool:
    """rho(1) = I and rho(b_i) rho(b_j) = sum_k c_ijk rho(b_k) for all i, j."""
    A, p = M.parent, M.ctx.p
    if not np.all(M.rho(A.unit) == Matrix.identity(M.ctx, M.dim).data):
        return False
    acts = M.actions()
    n, m = A.dim, M.dim
    lin = np.zeros((n, n, m, m, M.ctx.deg), dtype=object)
    if A.nnz:
        np.add.at(lin, (A.I, A.J), cmul(A.V[:, None, None, :], acts[A.K], p))
    for i in range(n):
        for j in range(n):
            if not np.all(mul_raw(acts[i], acts[j], p) == lin[i, j]):
                return False
    return True
