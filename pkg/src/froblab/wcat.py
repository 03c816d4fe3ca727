"""Integer calculus of the fiber functor F = F3 F2 F1 for the Taft family.

Index convention: all indices are taken mod p.  F2 sends the weight vector w
to the multiplicity matrix M[i][j] = w[(i - j) mod p], which makes
M_{X (x) Y} = M_X M_Y hold on the nose (weights of a tensor product
convolve).  Consequently dim F(V_k) = sum_{i - j = k} d_i d_j, the cyclic
autocorrelation r_k of d.  The convolution c_k = sum_{i + j = k} d_i d_j
is kept as the Frobenius criterion method (a); both families are constant
exactly when d is.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algcore import composition_factors, dual_module, is_isomorphic
from .exactla import Matrix, rank
from .scalars import field_context

__all__ = [
    "f1",
    "f2",
    "f_dim",
    "mult_tensor",
    "convolutions",
    "correlations",
    "soc_cosoc_dims_predicted",
    "CriterionReport",
    "frobenius_criterion",
    "criterion_table",
    "predicted_total_dim",
    "fusion_matrix",
    "fp_dim",
    "FPConvergenceError",
    "dual_index_D",
    "is_permutation_matrix",
]


def _check_d(d):
    d = [int(x) for x in d]
    if not d or any(x < 1 for x in d):
        raise ValueError(f"base dimensions must be positive integers, got {d}")
    return d


def f1(T, M):
    """Weight vector: n_k = dim of the lam^k eigenspace of rho(g)."""
    p, ctx = T.p, T.ctx
    G = Matrix(ctx, M.rho(T.g))
    out = []
    for k in range(p):
        shifted = G - Matrix.identity(ctx, M.dim).scale(ctx.zeta(k))
        out.append(M.dim - rank(shifted) if M.dim else 0)
    if sum(out) != M.dim:
        raise AssertionError(f"rho(g) is not diagonalizable with lam-power eigenvalues on {M.name}")
    return np.array(out, dtype=np.int64)


def f2(w):
    """Multiplicity matrix M[i][j] = w[(i - j) mod p]."""
    w = np.asarray(w, dtype=np.int64)
    p = len(w)
    idx = (np.arange(p)[:, None] - np.arange(p)[None, :]) % p
    return w[idx]


def f_dim(M, d):
    """sum_ij M[i][j] d_i d_j."""
    d = np.asarray(_check_d(d), dtype=np.int64)
    M = np.asarray(M, dtype=np.int64)
    if M.shape != (len(d), len(d)):
        raise ValueError(f"multiplicity matrix shape {M.shape} does not match {len(d)} base blocks")
    return int(d @ M @ d)


def mult_tensor(MX, MY):
    return np.asarray(MX, dtype=np.int64) @ np.asarray(MY, dtype=np.int64)


def convolutions(d):
    """c_k = sum_{i + j = k mod p} d_i d_j."""
    d = _check_d(d)
    p = len(d)
    return [sum(d[i] * d[(k - i) % p] for i in range(p)) for k in range(p)]


def correlations(d):
    """r_k = sum_{i - j = k mod p} d_i d_j = dim F(V_k)."""
    d = _check_d(d)
    p = len(d)
    return [sum(d[(j + k) % p] * d[j] for j in range(p)) for k in range(p)]


def _unit(p, k):
    w = np.zeros(p, dtype=np.int64)
    w[k % p] = 1
    return w


def soc_cosoc_dims_predicted(T, d, k):
    """(dim F(soc P_k), dim F(cosoc P_k)) = (dim F(V_{k+1}), dim F(V_k)).

    ``T`` may be a TaftAlgebra (weights read off the simple modules) or the
    prime p (weights are unit vectors).
    """
    d = _check_d(d)
    if isinstance(T, int):
        p = T
        w_soc, w_top = _unit(p, k + 1), _unit(p, k)
    else:
        from .taft import simple_module
        p = T.p
        w_soc, w_top = f1(T, simple_module(T, k + 1)), f1(T, simple_module(T, k))
    if len(d) != p:
        raise ValueError(f"need {p} base dimensions, got {len(d)}")
    return f_dim(f2(w_soc), d), f_dim(f2(w_top), d)


@dataclass
class CriterionReport:
    d: list
    frobenius: bool
    methods: dict = field(default_factory=dict)
    convolutions: list = field(default_factory=list)

    def __bool__(self):
        return self.frobenius

    def as_dict(self):
        return {"d": list(self.d), "frobenius": self.frobenius, "methods": dict(self.methods),
                "convolutions": list(self.convolutions)}


def _t_squared(d):
    """t(zeta)^2 with t(w) = sum_i d_i w^i, in Q(zeta_p)."""
    ctx = field_context(len(d))
    t = ctx.zero()
    for i, x in enumerate(d):
        t = t + ctx.zeta(i) * x
    return t * t


def frobenius_criterion(d) -> CriterionReport:
    """(a) convolutions all equal, (b) d constant, (c) t(zeta)^2 = 0; must agree."""
    d = _check_d(d)
    c = convolutions(d)
    a = len(set(c)) == 1
    b = len(set(d)) == 1
    cyc = True if len(d) == 1 else not _t_squared(d)
    methods = {"convolution": a, "constant": b, "cyclotomic": cyc}
    if len({a, b, cyc}) != 1:
        raise AssertionError(f"criterion methods disagree for d={d}: {methods}")
    return CriterionReport(d, a, methods, c)


def criterion_table(d):
    """Rows (k, c_k, soc, cosoc, verdict) with soc/cosoc the predicted dimensions."""
    d = _check_d(d)
    p = len(d)
    c = convolutions(d)
    rows = []
    for k in range(p):
        soc, cos = soc_cosoc_dims_predicted(p, d, k)
        rows.append({"k": k, "c_k": c[k], "soc": soc, "cosoc": cos,
                     "verdict": "equal" if soc == cos else "differ"})
    return rows


def predicted_total_dim(d):
    d = _check_d(d)
    total = sum(d) ** 4
    if sum(convolutions(d)) ** 2 != total or sum(correlations(d)) ** 2 != total:
        raise AssertionError("(sum c_k)^2 != (sum d_i)^4")
    return total


def fusion_matrix(T, X):
    """N[k][j] = [X (x) V_j : V_k]."""
    from .taft import simple_module, tensor_modules
    p = T.p
    simples = [simple_module(T, j) for j in range(p)]
    N = np.zeros((p, p), dtype=np.int64)
    for j in range(p):
        cf = composition_factors(tensor_modules(T, X, simples[j]), simples)
        for k, m in cf.items():
            N[k, j] = m
    return N


class FPConvergenceError(RuntimeError):
    pass


def fp_dim(N, tol=1e-9, max_iter=100000):
    """Perron root of a nonnegative matrix by power iteration on N + I."""
    N = np.asarray(N, dtype=float)
    n = N.shape[0]
    if n == 0:
        return 0.0
    B = N + np.eye(n)
    v = np.ones(n) / n
    lam = 0.0
    for it in range(1, max_iter + 1):
        w = B @ v
        s = w.sum()
        if s == 0:
            return 0.0
        w = w / s
        new = float((B @ w).sum())
        if abs(new - lam) < tol and np.abs(w - v).max() < tol:
            return new - 1.0
        v, lam = w, new
    raise FPConvergenceError(f"power iteration did not converge in {max_iter} iterations")


def is_permutation_matrix(M):
    M = np.asarray(M)
    return bool(((M == 0) | (M == 1)).all() and (M.sum(axis=0) == 1).all() and (M.sum(axis=1) == 1).all())


def dual_index_D(T, k):
    """(D(k), r) with P_k^* = P_{D(k)} and V_{D(k)} = *V_k (x) V_r.

    The dual is taken through S^-1; r is solved by an isomorphism search.
    """
    from .taft import projective_cover, simple_module, tensor_modules
    p = T.p
    Sinv = T.antipode_inverse()
    Pd = dual_module(projective_cover(T, k), Sinv)
    hits = [j for j in range(p) if is_isomorphic(Pd, projective_cover(T, j))]
    if len(hits) != 1:
        raise AssertionError(f"dual of P_{k} matches {hits}")
    D = hits[0]
    Vk_dual = dual_module(simple_module(T, k), Sinv)
    target = simple_module(T, D)
    rs = [r for r in range(p) if is_isomorphic(tensor_modules(T, Vk_dual, simple_module(T, r)), target)]
    if len(rs) != 1:
        raise AssertionError(f"no unique invertible object for D({k})")
    return D, rs[0]
