"""Hopf, weak Hopf and quasi-Hopf axiom checks on explicit linear data.

Tensors in H^(x)k are raw arrays of shape (n,)*k [+ batch] + (deg,).  Sweedler
identities are evaluated by applying sparse linear maps (Delta, eps, S, left
and right multiplications) along tensor axes and contracting two axes with
the structure constants.  Conventions, with D[u*n+v][a] the coefficient of
b_u (x) b_v in Delta(b_a) and E[a][u] = eps(b_a b_u):

  (i)   sum_uv E[a,u] D[uv,b] E[v,c] = sum_m c_abm E[m,c] = sum_uv E[a,v] D[uv,b] E[u,c]
  (iii) m(id (x) S) Delta = Pi_L with Pi_L = U^T E, U = Delta(1) as an n x n array
  (iv)  m(S (x) id) Delta = Pi_R with Pi_R = U E^T
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np
from gmpy2 import mpq

from .algcore import Algebra, AntiAutomorphism, radical
from .algcore.examples import group_algebra_alg, matrix_algebra
from .exactla import Matrix, Subspace, cmul, mul_raw
from .scalars import field_context, format_scalar, CycScalar

__all__ = [
    "HopfData",
    "AxiomReport",
    "AxiomResult",
    "CounitalReport",
    "check_weak_hopf",
    "check_hopf",
    "check_quasi_hopf",
    "counital_subalgebras",
    "group_algebra",
    "pair_groupoid_algebra",
    "pair_groupoid_dual",
    "perturbation_fleet",
    "promote_to_quasi",
    "axiom_i_cap",
]

DEFAULT_MAX_DIM = 64


def axiom_i_cap() -> int:
    """Dimension cap for axiom (i); FROBLAB_MAX_DIM overrides the default 64."""
    raw = os.environ.get("FROBLAB_MAX_DIM")
    return int(raw) if raw else DEFAULT_MAX_DIM


@dataclass
class HopfData:
    algebra: Algebra
    delta: Matrix
    counit: Matrix
    antipode: Matrix
    phi: Matrix | None = None
    phi_inv: Matrix | None = None
    alpha: Matrix | None = None
    beta: Matrix | None = None
    name: str = "H"

    def __post_init__(self):
        n = self.algebra.dim
        shapes = {"delta": (n * n, n), "counit": (1, n), "antipode": (n, n),
                  "phi": (n ** 3, 1), "phi_inv": (n ** 3, 1), "alpha": (n, 1), "beta": (n, 1)}
        for key, shape in shapes.items():
            val = getattr(self, key)
            if val is not None and val.shape != shape:
                raise ValueError(f"{key} has shape {val.shape}, expected {shape}")

    @property
    def is_quasi(self):
        return self.phi is not None

    @property
    def n(self):
        return self.algebra.dim


@dataclass
class AxiomResult:
    name: str
    ok: bool
    witness: dict | None = None
    note: str = ""

    def as_dict(self):
        out = {"axiom": self.name, "ok": self.ok}
        if self.note:
            out["note"] = self.note
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class AxiomReport:
    law: str
    results: list = field(default_factory=list)
    flags: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(r.ok for r in self.results)

    def __bool__(self):
        return self.ok

    def failed(self):
        return [r.name for r in self.results if not r.ok]

    def result(self, name):
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def as_dict(self):
        return {"law": self.law, "ok": self.ok, "failed": self.failed(),
                "flags": dict(self.flags), "axioms": [r.as_dict() for r in self.results]}


# sparse linear maps and tensor primitives

class _Lin:
    """Sparse linear map from a raw (rows, cols, deg) array."""

    def __init__(self, data):
        self.rows, self.cols = data.shape[:2]
        self.R, self.C = np.nonzero((data != 0).any(axis=2))
        self.V = data[self.R, self.C]


def _apply(lin: _Lin, T, axis, p):
    X = np.moveaxis(T, axis, 0)
    out = np.zeros((lin.rows,) + X.shape[1:], dtype=object)
    if lin.R.size and X.size:
        vals = lin.V.reshape((-1,) + (1,) * (X.ndim - 2) + (lin.V.shape[-1],))
        np.add.at(out, lin.R, cmul(vals, X[lin.C], p))
    return np.moveaxis(out, 0, axis)


def _mult_axes(A: Algebra, T, ax1, ax2):
    """Contract axes ax1 < ax2 by the product: result keeps the product at ax1."""
    p = A.ctx.p
    X = np.moveaxis(T, (ax1, ax2), (0, 1))
    out = np.zeros((A.dim,) + X.shape[2:], dtype=object)
    if A.nnz:
        vals = A.V.reshape((-1,) + (1,) * (X.ndim - 3) + (A.ctx.deg,))
        np.add.at(out, A.K, cmul(vals, X[A.I, A.J], p))
    return np.moveaxis(out, 0, ax1)


class _Ops:
    """Cached sparse operators attached to one HopfData."""

    def __init__(self, Hd: HopfData):
        A = Hd.algebra
        self.A, self.n, self.p, self.deg = A, A.dim, A.ctx.p, A.ctx.deg
        self.D = _Lin(Hd.delta.data)
        self.eps = _Lin(Hd.counit.data)
        self.S = _Lin(Hd.antipode.data)
        self._L, self._R = {}, {}

    def delta(self, T, axis):
        out = _apply(self.D, T, axis, self.p)
        shape = out.shape[:axis] + (self.n, self.n) + out.shape[axis + 1:]
        return out.reshape(shape)

    def counit(self, T, axis):
        return _apply(self.eps, T, axis, self.p).squeeze(axis)

    def antipode(self, T, axis):
        return _apply(self.S, T, axis, self.p)

    def left(self, a, T, axis):
        if a not in self._L:
            self._L[a] = _Lin(self.A.left_matrix(self.A.basis_vector(a)))
        return _apply(self._L[a], T, axis, self.p)

    def right(self, a, T, axis):
        if a not in self._R:
            self._R[a] = _Lin(self.A.right_matrix(self.A.basis_vector(a)))
        return _apply(self._R[a], T, axis, self.p)

    def tmul(self, X, Y, left=True):
        """X * Y (left) or Y * X in H^(x)k, X fixed with k tensor axes, Y batched."""
        k = X.ndim - 1
        out = np.zeros(Y.shape, dtype=object)
        for idx in zip(*np.nonzero((X != 0).any(axis=-1))):
            t = Y
            for ax, a in enumerate(idx):
                t = self.left(int(a), t, ax) if left else self.right(int(a), t, ax)
            c = X[idx].reshape((1,) * (Y.ndim - 1) + (self.deg,))
            out = out + cmul(t, c, self.p)
        return out

    def scalar_times(self, T, s):
        return cmul(T, s.reshape((1,) * (T.ndim - 1) + (self.deg,)), self.p)


def _nz(a):
    return (a != 0).any(axis=-1)


def _vec_text(ctx, v):
    """Sparse text form of a raw tensor: {index-tuple: scalar text}."""
    if v.ndim == 1:
        return {"value": format_scalar(CycScalar(ctx, tuple(v)))}
    out = {}
    for idx in zip(*np.nonzero(_nz(v))):
        key = ",".join(str(int(i)) for i in idx)
        out[key] = format_scalar(CycScalar(ctx, tuple(v[idx])))
    return out


def _first_bad(lhs, rhs, nbatch):
    """Index (tuple over the trailing batch axes) of the first mismatch, or None."""
    diff = (lhs != rhs)
    red = tuple(range(diff.ndim - 1 - nbatch)) + (diff.ndim - 1,)
    flat = diff.any(axis=red)
    hits = np.argwhere(flat)
    return None if hits.size == 0 else tuple(int(i) for i in hits[0])


def _result(name, ctx, lhs, rhs, nbatch, labels, what, note=""):
    """Build an AxiomResult comparing lhs and rhs; trailing ``nbatch`` axes name basis elements."""
    hit = _first_bad(lhs, rhs, nbatch)
    if hit is None:
        return AxiomResult(name, True, note=note)
    sl = (Ellipsis,) + hit + (slice(None),)
    witness = {
        what: [labels[i] for i in hit],
        "indices": list(hit),
        "lhs": _vec_text(ctx, lhs[sl]),
        "rhs": _vec_text(ctx, rhs[sl]),
    }
    return AxiomResult(name, False, witness, note)


def _generating_basis(A: Algebra):
    """Basis indices whose products with 1 already span A (greedy, skipping the unit)."""
    chosen = []
    cur = A.closure([], A.unit[:, None, :]).dim
    for i in range(A.dim):
        if cur == A.dim:
            break
        trial = chosen + [i]
        d = A.closure([A.basis_vector(j) for j in trial], A.unit[:, None, :]).dim
        if d > cur:
            chosen, cur = trial, d
    return chosen


# individual axiom families

def _check_multiplicative(Hd, ops):
    A, n = Hd.algebra, ops.n
    Dall = Hd.delta.data.reshape(n, n, n, ops.deg)
    gens = _generating_basis(A)
    for g in gens:
        X = Dall[:, :, g]
        lhs = ops.tmul(X, Dall)  # Delta(b_g) Delta(b_j), batched over j
        Lg = A.left_matrix(A.basis_vector(g))  # columns b_g b_j
        rhs = ops.delta(Lg, 0)  # Delta(b_g b_j)
        res = _result("delta_multiplicative", A.ctx, lhs, rhs, 1, A.labels, "pair",
                      note="checked on the generating basis elements " + ",".join(A.labels[i] for i in gens))
        if not res.ok:
            res.witness["pair"] = [A.labels[g]] + res.witness["pair"]
            res.witness["indices"] = [g] + res.witness["indices"]
            return res
    return AxiomResult("delta_multiplicative", True,
                       note="checked on the generating basis elements " + ",".join(A.labels[i] for i in gens))


def _check_coassociative(Hd, ops):
    n = ops.n
    Dall = Hd.delta.data.reshape(n, n, n, ops.deg)
    lhs = ops.delta(Dall, 0)  # (Delta (x) id) Delta
    rhs = ops.delta(Dall, 1)  # (id (x) Delta) Delta
    return _result("coassociative", Hd.algebra.ctx, lhs, rhs, 1, Hd.algebra.labels, "element")


def _check_counit_laws(Hd, ops):
    n, A = ops.n, Hd.algebra
    Dall = Hd.delta.data.reshape(n, n, n, ops.deg)
    ident = Matrix.identity(A.ctx, n).data
    left = ops.counit(Dall, 0)
    res = _result("counit_laws", A.ctx, left, ident, 1, A.labels, "element",
                  note="(eps (x) id) Delta = id")
    if not res.ok:
        return res
    right = ops.counit(Dall, 1)
    return _result("counit_laws", A.ctx, right, ident, 1, A.labels, "element",
                   note="(id (x) eps) Delta = id")


def _eps_products(Hd, ops):
    """E[a][u] = eps(b_a b_u)."""
    A, n = Hd.algebra, ops.n
    E = np.zeros((n, n, ops.deg), dtype=object)
    if A.nnz:
        np.add.at(E, (A.I, A.J), cmul(A.V, Hd.counit.data[0][A.K], ops.p))
    return E


def _check_axiom_i(Hd, ops, max_dim=None):
    A, n = Hd.algebra, ops.n
    cap = axiom_i_cap() if max_dim is None else max_dim
    if n > cap:
        return AxiomResult("(i)", True, note=f"skipped: dim {n} exceeds cap {cap}; set FROBLAB_MAX_DIM"), False
    E = _eps_products(Hd, ops)
    El, Er = _Lin(E), _Lin(np.ascontiguousarray(E.transpose(1, 0, 2)))
    Dall = Hd.delta.data.reshape(n, n, n, ops.deg)  # [u, v, b]
    # first: sum_uv E[a,u] D[u,v,b] E[v,c] -> [a, c, b]
    t = _apply(El, Dall, 0, ops.p)  # [a, v, b]
    first = _apply(Er, t, 1, ops.p)  # [a, c, b]
    # third: sum_uv E[a,v] D[u,v,b] E[u,c]
    t = _apply(El, np.ascontiguousarray(Dall.transpose(1, 0, 2, 3)), 0, ops.p)  # [a, u, b]
    third = _apply(Er, t, 1, ops.p)
    # middle: eps(b_a b_b b_c) = sum_m c_abm E[m,c]
    mid = np.zeros((n, n, n, ops.deg), dtype=object)  # [a, c, b]
    if A.nnz:
        np.add.at(mid, (A.I, slice(None), A.J), cmul(A.V[:, None, :], E[A.K], ops.p))
    for lhs, note in ((first, "eps(a b_(1)) eps(b_(2) c) = eps(abc)"),
                      (third, "eps(a b_(2)) eps(b_(1) c) = eps(abc)")):
        hit = np.argwhere((lhs != mid).any(axis=-1))
        if hit.size:
            a, c, b = (int(x) for x in hit[0])
            w = {"triple": [A.labels[a], A.labels[b], A.labels[c]], "indices": [a, b, c],
                 "lhs": format_scalar(CycScalar(A.ctx, tuple(lhs[a, c, b]))),
                 "rhs": format_scalar(CycScalar(A.ctx, tuple(mid[a, c, b])))}
            return AxiomResult("(i)", False, w, note), True
    return AxiomResult("(i)", True), True


def _unit_coproduct(Hd, ops):
    n = ops.n
    return ops.delta(Hd.algebra.unit[:, None, :], 0)[:, :, 0]  # (n, n, deg)


def _check_axiom_ii(Hd, ops):
    A = Hd.algebra
    U = _unit_coproduct(Hd, ops)
    one = A.unit
    U1 = cmul(U[:, :, None, :], one[None, None, :, :], ops.p)  # Delta(1) (x) 1
    oneU = cmul(one[:, None, None, :], U[None, :, :, :], ops.p)  # 1 (x) Delta(1)
    mid = ops.delta(U, 0)  # (Delta (x) id) Delta(1)
    left = ops.tmul(U1, oneU[..., None, :])[..., 0, :]
    right = ops.tmul(oneU, U1[..., None, :])[..., 0, :]
    for lhs, note in ((left, "1_(1) (x) 1_(2)1'_(1) (x) 1'_(2) = Delta^2(1)"),
                      (right, "1_(1) (x) 1'_(1)1_(2) (x) 1'_(2) = Delta^2(1)")):
        if not np.all(lhs == mid):
            w = {"element": ["1"], "lhs": _vec_text(A.ctx, lhs), "rhs": _vec_text(A.ctx, mid)}
            return AxiomResult("(ii)", False, w, note)
    return AxiomResult("(ii)", True)


def _target_maps(Hd, ops):
    """Raw matrices of Pi_L(a) = eps(1_(1) a) 1_(2) and Pi_R(a) = 1_(1) eps(a 1_(2))."""
    U = _unit_coproduct(Hd, ops)
    E = _eps_products(Hd, ops)
    piL = mul_raw(np.ascontiguousarray(U.transpose(1, 0, 2)), E, ops.p)
    piR = mul_raw(U, np.ascontiguousarray(E.transpose(1, 0, 2)), ops.p)
    return piL, piR


def _check_axiom_iii(Hd, ops, piL):
    A, n = Hd.algebra, ops.n
    Dall = Hd.delta.data.reshape(n, n, n, ops.deg)
    lhs = _mult_axes(A, ops.antipode(Dall, 1), 0, 1)  # [k, a]
    return _result("(iii)", A.ctx, lhs, piL, 1, A.labels, "element",
                   note="a_(1) S(a_(2)) = eps(1_(1) a) 1_(2)")


def _check_axiom_iv(Hd, ops, piR):
    A, n = Hd.algebra, ops.n
    Dall = Hd.delta.data.reshape(n, n, n, ops.deg)
    lhs = _mult_axes(A, ops.antipode(Dall, 0), 0, 1)
    return _result("(iv)", A.ctx, lhs, piR, 1, A.labels, "element",
                   note="S(a_(1)) a_(2) = 1_(1) eps(a 1_(2))")


def _check_axiom_v(Hd, ops):
    A, n = Hd.algebra, ops.n
    Dall = Hd.delta.data.reshape(n, n, n, ops.deg)
    D2 = ops.delta(Dall, 0)  # [u, v, w, a]
    t = ops.antipode(ops.antipode(D2, 0), 2)
    t = _mult_axes(A, t, 0, 1)  # [uv, w, a]
    lhs = _mult_axes(A, t, 0, 1)  # [k, a]
    return _result("(v)", A.ctx, lhs, Hd.antipode.data, 1, A.labels, "element",
                   note="S(a_(1)) a_(2) S(a_(3)) = S(a)")


def check_weak_hopf(Hd: HopfData, max_dim=None) -> AxiomReport:
    """Delta multiplicative, coalgebra laws and axioms (i)-(v)."""
    if Hd.is_quasi:
        raise ValueError("weak Hopf check expects data without phi/alpha/beta")
    ops = _Ops(Hd)
    rep = AxiomReport("weak-hopf")
    rep.results.append(_check_multiplicative(Hd, ops))
    rep.results.append(_check_coassociative(Hd, ops))
    rep.results.append(_check_counit_laws(Hd, ops))
    res, ran = _check_axiom_i(Hd, ops, max_dim)
    rep.results.append(res)
    rep.flags["axiom_i_checked"] = ran
    rep.results.append(_check_axiom_ii(Hd, ops))
    piL, piR = _target_maps(Hd, ops)
    rep.results.append(_check_axiom_iii(Hd, ops, piL))
    rep.results.append(_check_axiom_iv(Hd, ops, piR))
    rep.results.append(_check_axiom_v(Hd, ops))
    eps_mult = _eps_multiplicative(Hd, ops)
    rep.flags["counit_multiplicative"] = eps_mult.ok
    rep.flags["is_hopf"] = rep.ok and eps_mult.ok and _unit_split(Hd, ops).ok
    return rep


def _eps_multiplicative(Hd, ops):
    A, n = Hd.algebra, ops.n
    E = _eps_products(Hd, ops)
    e = Hd.counit.data[0]
    outer = cmul(e[:, None, :], e[None, :, :], ops.p)
    return _result("counit_multiplicative", A.ctx, E, outer, 2, A.labels, "pair",
                   note="eps(ab) = eps(a) eps(b)")


def _unit_split(Hd, ops):
    A = Hd.algebra
    U = _unit_coproduct(Hd, ops)
    one = A.unit
    target = cmul(one[:, None, :], one[None, :, :], ops.p)
    if np.all(U == target):
        return AxiomResult("delta_unit", True, note="Delta(1) = 1 (x) 1")
    return AxiomResult("delta_unit", False, {"element": ["1"], "lhs": _vec_text(A.ctx, U),
                                             "rhs": _vec_text(A.ctx, target)}, "Delta(1) = 1 (x) 1")


def _antipode_standard(Hd, ops):
    """m(S (x) id)Delta = m(id (x) S)Delta = eta eps."""
    A, n = Hd.algebra, ops.n
    Dall = Hd.delta.data.reshape(n, n, n, ops.deg)
    target = cmul(A.unit[:, None, :], Hd.counit.data[0][None, :, :], ops.p)
    res = _result("antipode", A.ctx, _mult_axes(A, ops.antipode(Dall, 0), 0, 1), target, 1,
                  A.labels, "element", note="S(a_(1)) a_(2) = eps(a) 1")
    if not res.ok:
        return res
    return _result("antipode", A.ctx, _mult_axes(A, ops.antipode(Dall, 1), 0, 1), target, 1,
                   A.labels, "element", note="a_(1) S(a_(2)) = eps(a) 1")


def check_hopf(Hd: HopfData, max_dim=None) -> AxiomReport:
    """Weak Hopf checks plus multiplicative counit, Delta(1) = 1 (x) 1 and the antipode laws."""
    rep = check_weak_hopf(Hd, max_dim)
    rep.law = "hopf"
    ops = _Ops(Hd)
    rep.results.append(_eps_multiplicative(Hd, ops))
    rep.results.append(_unit_split(Hd, ops))
    rep.results.append(_antipode_standard(Hd, ops))
    return rep


# quasi-Hopf

def _phi_tensor(Hd, which):
    n = Hd.n
    M = getattr(Hd, which)
    return M.data.reshape(n, n, n, Hd.algebra.ctx.deg)


def check_quasi_hopf(Hd: HopfData) -> AxiomReport:
    """Quasi-Hopf laws: counit, quasi-coassociativity, 3-cocycle, normalization, antipode."""
    if Hd.phi is None or Hd.phi_inv is None or Hd.alpha is None or Hd.beta is None:
        raise ValueError("quasi-Hopf check needs phi, phi_inv, alpha and beta")
    A, n = Hd.algebra, Hd.n
    ops = _Ops(Hd)
    ctx, p, deg = A.ctx, ops.p, ops.deg
    rep = AxiomReport("quasi-hopf")
    one = A.unit
    one3 = cmul(cmul(one[:, None, None, :], one[None, :, None, :], p), one[None, None, :, :], p)
    Phi, Phii = _phi_tensor(Hd, "phi"), _phi_tensor(Hd, "phi_inv")
    prod = ops.tmul(Phi, Phii[..., None, :])[..., 0, :]
    if not np.all(prod == one3):
        rep.results.append(AxiomResult("phi_invertible", False,
                                       {"lhs": _vec_text(ctx, prod), "rhs": _vec_text(ctx, one3)},
                                       "Phi Phi^-1 = 1 (x) 1 (x) 1"))
        return rep
    rep.results.append(AxiomResult("phi_invertible", True, note="Phi Phi^-1 = 1 (x) 1 (x) 1"))
    rep.results.append(_check_multiplicative(Hd, ops))
    rep.results.append(_check_counit_laws(Hd, ops))
    # (id (x) Delta) Delta(a) = Phi (Delta (x) id) Delta(a) Phi^-1
    Dall = Hd.delta.data.reshape(n, n, n, deg)
    lhs = ops.delta(Dall, 1)
    rhs = ops.tmul(Phii, ops.tmul(Phi, ops.delta(Dall, 0)), left=False)
    rep.results.append(_result("quasi_coassociative", ctx, lhs, rhs, 1, A.labels, "element"))
    # (1 (x) Phi)(id (x) Delta (x) id)(Phi)(Phi (x) 1) = (id (x) id (x) Delta)(Phi)(Delta (x) id (x) id)(Phi)
    onePhi = cmul(one[:, None, None, None, :], Phi[None], p)
    Phi1 = cmul(Phi[..., None, :], one[None, None, None, :, :], p)
    left = ops.tmul(onePhi, ops.tmul(Phi1, ops.delta(Phi, 1)[..., None, :], left=False))[..., 0, :]
    right = ops.tmul(ops.delta(Phi, 2), ops.delta(Phi, 0)[..., None, :])[..., 0, :]
    if np.all(left == right):
        rep.results.append(AxiomResult("3-cocycle", True))
    else:
        rep.results.append(AxiomResult("3-cocycle", False, {"lhs": _vec_text(ctx, left),
                                                            "rhs": _vec_text(ctx, right)}))
    # (id (x) eps (x) id)(Phi) = 1 (x) 1
    norm = ops.counit(Phi, 1)
    one2 = cmul(one[:, None, :], one[None, :, :], p)
    if np.all(norm == one2):
        rep.results.append(AxiomResult("normal", True))
    else:
        rep.results.append(AxiomResult("normal", False, {"lhs": _vec_text(ctx, norm),
                                                         "rhs": _vec_text(ctx, one2)},
                                       "(id (x) eps (x) id)(Phi) = 1 (x) 1"))
    alpha, beta = Hd.alpha.data[:, 0], Hd.beta.data[:, 0]
    eps = Hd.counit.data[0]
    # S(a_(1)) alpha a_(2) = eps(a) alpha
    t = ops.antipode(Dall, 0)
    t = _mult_axes(A, np.ascontiguousarray(_right_mult_elem(A, t, alpha, 0, p)), 0, 1)
    rhs = cmul(alpha[:, None, :], eps[None, :, :], p)
    rep.results.append(_result("antipode_alpha", ctx, t, rhs, 1, A.labels, "element",
                               note="S(a_(1)) alpha a_(2) = eps(a) alpha"))
    # a_(1) beta S(a_(2)) = eps(a) beta
    t = ops.antipode(Dall, 1)
    t = _mult_axes(A, _right_mult_elem(A, t, beta, 0, p), 0, 1)
    rhs = cmul(beta[:, None, :], eps[None, :, :], p)
    rep.results.append(_result("antipode_beta", ctx, t, rhs, 1, A.labels, "element",
                               note="a_(1) beta S(a_(2)) = eps(a) beta"))
    # X^1 beta S(X^2) alpha X^3 = 1
    t = _right_mult_elem(A, Phi, beta, 0, p)
    t = _right_mult_elem(A, ops.antipode(t, 1), alpha, 1, p)
    t = _mult_axes(A, _mult_axes(A, t, 0, 1), 0, 1)
    rep.results.append(_element_result("phi_beta_alpha", ctx, t, one, "X^1 beta S(X^2) alpha X^3 = 1"))
    # S(x^1) alpha x^2 beta S(x^3) = 1
    t = ops.antipode(ops.antipode(Phii, 0), 2)
    t = _right_mult_elem(A, _right_mult_elem(A, t, alpha, 0, p), beta, 1, p)
    t = _mult_axes(A, _mult_axes(A, t, 0, 1), 0, 1)
    rep.results.append(_element_result("phiinv_alpha_beta", ctx, t, one, "S(x^1) alpha x^2 beta S(x^3) = 1"))
    sigma = AntiAutomorphism(A, Hd.antipode)
    rep.results.append(AxiomResult("antipode_anti_automorphism", sigma.check()))
    return rep


def _right_mult_elem(A, T, u, axis, p):
    """Multiply tensor factor ``axis`` on the right by the element u."""
    return _apply(_Lin(A.right_matrix(u)), T, axis, p)


def _element_result(name, ctx, got, want, note):
    if np.all(got == want):
        return AxiomResult(name, True, note=note)
    return AxiomResult(name, False, {"lhs": _vec_text(ctx, got), "rhs": _vec_text(ctx, want)}, note)


def promote_to_quasi(Hd: HopfData) -> HopfData:
    """Trivial quasi-Hopf data: Phi = 1 (x) 1 (x) 1, alpha = beta = 1."""
    A = Hd.algebra
    p = A.ctx.p
    one = A.unit
    one3 = cmul(cmul(one[:, None, None, :], one[None, :, None, :], p), one[None, None, :, :], p)
    phi = Matrix(A.ctx, one3.reshape(A.dim ** 3, 1, A.ctx.deg))
    u = Matrix(A.ctx, one[:, None, :])
    return HopfData(A, Hd.delta, Hd.counit, Hd.antipode, phi, phi, u, u, name=f"{Hd.name}+quasi")


# counital subalgebras

@dataclass
class CounitalReport:
    dim_left: int
    dim_right: int
    unital_subalgebras: bool
    commute: bool
    antipode_bijective: bool
    antipode_anti_multiplicative: bool
    left_semisimple: bool
    left_commutative: bool

    @property
    def ok(self):
        return (self.unital_subalgebras and self.commute and self.antipode_bijective
                and self.antipode_anti_multiplicative and self.left_semisimple)

    def as_dict(self):
        out = dict(self.__dict__)
        out["ok"] = self.ok
        return out


def _closed(A, space):
    B = space.basis
    prods = [A.left_apply(B[:, i], B) for i in range(space.dim)]
    return all(space.contains(P) for P in prods)


def _subalgebra(A, space):
    """The subalgebra on ``space`` in its canonical basis."""
    ctx, d, p = A.ctx, space.dim, A.ctx.p
    entries = []
    B = space.basis
    for i in range(d):
        prod = space.coords(A.left_apply(B[:, i], B))  # [k, j]
        for j in range(d):
            for k in range(d):
                if any(prod[k, j]):
                    entries.append((i, j, k, prod[k, j]))
    I = [e[0] for e in entries]
    J = [e[1] for e in entries]
    K = [e[2] for e in entries]
    V = np.array([e[3] for e in entries], dtype=object).reshape(-1, ctx.deg)
    unit = space.coords(A.unit[:, None, :])[:, 0]
    return Algebra(ctx, d, I, J, K, V, unit)


def counital_subalgebras(Hd: HopfData):
    """(A_L, A_R, report, witness) with A_L = Pi_L(H), A_R = Pi_R(H) as Subspaces.

    ``witness`` is the matrix of S restricted to A_L in the canonical bases.
    """
    A = Hd.algebra
    ops = _Ops(Hd)
    piL, piR = _target_maps(Hd, ops)
    AL = Subspace.span(A.ctx, A.dim, piL)
    AR = Subspace.span(A.ctx, A.dim, piR)
    one = A.unit[:, None, :]
    unital = AL.contains(one) and AR.contains(one) and _closed(A, AL) and _closed(A, AR)
    commute = all(np.all(A.mult(AL.basis[:, i], AR.basis[:, j]) == A.mult(AR.basis[:, j], AL.basis[:, i]))
                  for i in range(AL.dim) for j in range(AR.dim))
    img = mul_raw(Hd.antipode.data, AL.basis, A.ctx.p)
    bijective = AL.dim == AR.dim and Subspace.span(A.ctx, A.dim, img) == AR
    witness = Matrix(A.ctx, AR.coords(img)) if bijective else None
    anti = bijective
    if bijective:
        S = AntiAutomorphism(A, Hd.antipode)
        for i in range(AL.dim):
            for j in range(AL.dim):
                x, y = AL.basis[:, i], AL.basis[:, j]
                if not np.all(S(A.mult(x, y)) == A.mult(S(y), S(x))):
                    anti = False
    semisimple, commutative = False, False
    if unital:
        sub = _subalgebra(A, AL)
        semisimple = radical(sub).dim == 0
        commutative = all(np.all(A.mult(AL.basis[:, i], AL.basis[:, j]) == A.mult(AL.basis[:, j], AL.basis[:, i]))
                          for i in range(AL.dim) for j in range(AL.dim))
    rep = CounitalReport(AL.dim, AR.dim, unital, commute, bijective, anti, semisimple, commutative)
    return AL, AR, rep, witness


# stock examples

def group_algebra(p: int) -> HopfData:
    """K[Z/p] with Delta(g) = g (x) g, eps(g) = 1, S(g) = g^-1, over Q(zeta_p)."""
    ctx = field_context(p)
    A = group_algebra_alg(ctx, p)
    n = p
    D = np.zeros((n * n, n, ctx.deg), dtype=object)
    eps = np.zeros((1, n, ctx.deg), dtype=object)
    S = np.zeros((n, n, ctx.deg), dtype=object)
    for i in range(n):
        D[i * n + i, i, 0] = mpq(1)
        eps[0, i, 0] = mpq(1)
        S[(-i) % n, i, 0] = mpq(1)
    return HopfData(A, Matrix(ctx, D), Matrix(ctx, eps), Matrix(ctx, S), name=f"K[Z/{p}]")


def pair_groupoid_algebra(n: int, p: int = 2) -> HopfData:
    """M_n(K) with Delta(e_ij) = e_ij (x) e_ij, eps(e_ij) = 1, S(e_ij) = e_ji."""
    ctx = field_context(p)
    A = matrix_algebra(ctx, n)
    N = n * n
    D = np.zeros((N * N, N, ctx.deg), dtype=object)
    eps = np.zeros((1, N, ctx.deg), dtype=object)
    S = np.zeros((N, N, ctx.deg), dtype=object)
    for i in range(n):
        for j in range(n):
            a = i * n + j
            D[a * N + a, a, 0] = mpq(1)
            eps[0, a, 0] = mpq(1)
            S[j * n + i, a, 0] = mpq(1)
    return HopfData(A, Matrix(ctx, D), Matrix(ctx, eps), Matrix(ctx, S), name=f"pair groupoid({n})")


def pair_groupoid_dual(n: int, p: int = 2) -> HopfData:
    """Functions on the pair groupoid: pointwise product, Delta(d_ij) = sum_k d_ik (x) d_kj."""
    ctx = field_context(p)
    arrows = [(i, j) for i in range(n) for j in range(n)]
    N = len(arrows)
    A = Algebra.from_table(ctx, N, [(t, t, t, 1) for t in range(N)], [1] * N,
                           [f"d{i + 1}{j + 1}" for i, j in arrows])
    D = np.zeros((N * N, N, ctx.deg), dtype=object)
    eps = np.zeros((1, N, ctx.deg), dtype=object)
    S = np.zeros((N, N, ctx.deg), dtype=object)
    for i, j in arrows:
        a = i * n + j
        for k in range(n):
            D[(i * n + k) * N + k * n + j, a, 0] = mpq(1)
        if i == j:
            eps[0, a, 0] = mpq(1)
        S[j * n + i, a, 0] = mpq(1)
    return HopfData(A, Matrix(ctx, D), Matrix(ctx, eps), Matrix(ctx, S), name=f"pair groupoid dual({n})")


def _bump(M: Matrix, row, col, value=1) -> Matrix:
    data = M.data.copy()
    data[row, col] = data[row, col].copy()
    data[row, col][0] += mpq(value)
    return Matrix(M.ctx, data)


def perturbation_fleet():
    """One single-entry perturbation per axiom (i)-(v), keyed by the targeted axiom.

    Each value is (HopfData, description).  The (i) and (ii) cases perturb
    Delta and also break structural coalgebra laws, which are reported
    separately; among (i)-(v) each fails only its target.
    """
    pg, dpg = pair_groupoid_algebra(2), pair_groupoid_dual(2)
    N = 4

    def with_(base, **kw):
        data = dict(algebra=base.algebra, delta=base.delta, counit=base.counit,
                    antipode=base.antipode, name=kw.pop("name"))
        data.update(kw)
        return HopfData(**data)

    e11, e12, e21, e22 = range(4)
    return {
        "(i)": (with_(pg, delta=_bump(pg.delta, e11 * N + e22, e12), name="pg2: Delta(e12) += e11(x)e22"),
                "pair groupoid, Delta(e12) gains e11 (x) e22"),
        "(ii)": (with_(dpg, delta=_bump(dpg.delta, e12 * N + e12, e11), name="dual pg2: Delta(d11) += d12(x)d12"),
                 "pair groupoid dual, Delta(d11) gains d12 (x) d12"),
        "(iii)": (with_(pg, antipode=_bump(pg.antipode, e11, e21), name="pg2: S(e21) = e12 + e11"),
                  "pair groupoid, S(e21) = e12 + e11"),
        "(iv)": (with_(pg, antipode=_bump(pg.antipode, e11, e12), name="pg2: S(e12) = e21 + e11"),
                 "pair groupoid, S(e12) = e21 + e11"),
        "(v)": (with_(pg, antipode=_bump(pg.antipode, e11, e22), name="pg2: S(e22) = e22 + e11"),
                "pair groupoid, S(e22) = e22 + e11"),
    }
