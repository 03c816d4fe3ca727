"""H = Taft(d_1, ..., d_p) realized as End_B(Q)^op for Q = sum_k P_k^{m_k}.

Each Hom_B(P_i, P_j) is one-dimensional with basis phi_ij (phi_ii = id),
and phi_jk phi_ij = c_ijk phi_ik.  Number the summands of Q by u = 0..N-1
with type k_u.  The basis element E[u, v] is phi_{k_u k_v} placed from
summand u to summand v; in the opposite algebra
E[u, v] * E[v, w] = c_{k_u k_v k_w} E[u, w], other products vanish.
The opposite orientation is the one for which Hom_B(Q, -) carries P_k to
H e_{k,0}, so that soc(H e_{k,0}) matches F(V_{k+1}).
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .algcore import (Algebra, ModHom, Module, check_algebra, cosocle_dim,
                      direct_sum, hom_space, is_frobenius, is_quasi_frobenius,
                      regular_module, socle, submodule)
from .algcore.decisions import DEFAULT_SEED
from .exactla import Matrix, mul_raw
from .taft import TaftAlgebra, build_taft, projective_cover
from .wcat import (correlations, frobenius_criterion, predicted_total_dim,
                   soc_cosoc_dims_predicted)

__all__ = [
    "ReconstructionPlan",
    "ReconstructedAlgebra",
    "AnalysisReport",
    "plan",
    "build",
    "analyze",
]


@dataclass
class ReconstructionPlan:
    p: int
    d: list
    m: list
    taft: TaftAlgebra
    projectives: list
    summands: list  # type k_u of each summand u
    _Q: Module | None = field(default=None, repr=False)

    @property
    def dim_Q(self):
        return self.p * sum(self.m)

    @property
    def Q(self) -> Module:
        """Q as an explicit direct sum (built on demand)."""
        if self._Q is None:
            self._Q = direct_sum([self.projectives[k] for k in self.summands])
            self._Q.name = "Q"
        return self._Q

    def idempotents(self):
        """Projections e_{k,t} of Q onto its summands, as ModHoms."""
        Q, p, ctx = self.Q, self.p, self.taft.ctx
        out = []
        for u in range(len(self.summands)):
            E = Matrix.zeros(ctx, Q.dim, Q.dim).data.copy()
            for r in range(p):
                E[u * p + r, u * p + r, 0] = 1
            out.append(ModHom(Q, Q, Matrix(ctx, E)))
        return out


def plan(p: int, d) -> ReconstructionPlan:
    d = [int(x) for x in d]
    if len(d) != p:
        raise ValueError(f"need {p} base dimensions, got {len(d)}")
    T = build_taft(p)
    m = correlations(d)
    projectives = [projective_cover(T, k) for k in range(p)]
    summands = [k for k in range(p) for _ in range(m[k])]
    return ReconstructionPlan(p, d, m, T, projectives, summands)


@dataclass
class ReconstructedAlgebra:
    plan: ReconstructionPlan
    H: Algebra
    opposite: bool
    phi: dict  # (i, j) -> raw matrix of phi_ij : P_i -> P_j
    c: np.ndarray  # (p, p, p, deg): phi_jk phi_ij = c_ijk phi_ik
    timings: dict = field(default_factory=dict)

    def index(self, u, v):
        return u * len(self.plan.summands) + v

    def idempotent(self, k, t=0):
        """Basis index of e_{k,t} = E[u, u] for the t-th summand of type k."""
        u = [i for i, x in enumerate(self.plan.summands) if x == k][t]
        return self.index(u, u)

    def embed(self, u, v) -> Matrix:
        """E[u, v] as an endomorphism of Q."""
        pl = self.plan
        p, ctx = pl.p, pl.taft.ctx
        X = Matrix.zeros(ctx, pl.dim_Q, pl.dim_Q).data.copy()
        X[v * p:(v + 1) * p, u * p:(u + 1) * p] = self.phi[(pl.summands[u], pl.summands[v])]
        return Matrix(ctx, X)


def _hom_basis(P, R):
    homs = hom_space(P, R)
    if len(homs) != 1:
        raise AssertionError(f"dim Hom({P.name}, {R.name}) = {len(homs)}, expected 1")
    if not homs[0].check():
        raise AssertionError(f"Hom({P.name}, {R.name}) basis is not a module map")
    return homs[0].matrix.data


def build(pl: ReconstructionPlan) -> ReconstructedAlgebra:
    t0 = time.perf_counter()
    p, ctx = pl.p, pl.taft.ctx
    deg = ctx.deg
    phi = {}
    for i in range(p):
        for j in range(p):
            phi[(i, j)] = Matrix.identity(ctx, p).data if i == j else _hom_basis(pl.projectives[i], pl.projectives[j])
    c = np.zeros((p, p, p, deg), dtype=object)
    for i in range(p):
        for j in range(p):
            for k in range(p):
                comp = Matrix(ctx, mul_raw(phi[(j, k)], phi[(i, j)], ctx.p))
                ref = Matrix(ctx, phi[(i, k)])
                r, s = np.argwhere((ref.data != 0).any(axis=2))[0]
                coef = comp[r, s] / ref[r, s]
                if not np.all(ref.scale(coef).data == comp.data):
                    raise AssertionError(f"phi_{j}{k} phi_{i}{j} is not a multiple of phi_{i}{k}")
                c[i, j, k] = coef.coeffs
    N = len(pl.summands)
    ku = np.array(pl.summands, dtype=np.int64)
    u, v, w = (a.ravel() for a in np.meshgrid(np.arange(N), np.arange(N), np.arange(N), indexing="ij"))
    vals = c[ku[u], ku[v], ku[w]]
    keep = (vals != 0).any(axis=1)
    I, J, K = u * N + v, v * N + w, u * N + w
    unit = Matrix.zeros(ctx, N * N, 1).data[:, 0].copy()
    unit[np.arange(N) * (N + 1)] = Matrix.identity(ctx, 1).data[0, 0]
    labels = [f"E{a},{b}" for a in range(N) for b in range(N)]
    H = Algebra(ctx, N * N, I[keep], J[keep], K[keep], vals[keep], unit, labels)
    timings = {"assemble": time.perf_counter() - t0}
    R = ReconstructedAlgebra(pl, H, True, phi, c, timings)
    t1 = time.perf_counter()
    rep = check_algebra(H)
    if not rep.ok:
        raise AssertionError(f"reconstructed algebra fails associativity at {rep.associativity_violations[:3]}")
    expected = predicted_total_dim(pl.d)
    if H.dim != expected:
        raise AssertionError(f"dim H = {H.dim}, expected (sum d)^4 = {expected}")
    # summand projections: orthogonal idempotents summing to 1
    ids = [H.basis_vector(R.index(a, a)) for a in range(N)]
    total = H.zero()
    for a in range(N):
        total = total + ids[a]
        for b in range(N):
            prod = H.mult(ids[a], ids[b])
            if not np.all(prod == (ids[a] if a == b else H.zero())):
                raise AssertionError(f"summand idempotents {a}, {b} are not orthogonal idempotents")
    if not np.all(total == H.unit):
        raise AssertionError("summand idempotents do not sum to 1")
    timings["check"] = time.perf_counter() - t1
    return R


@dataclass
class AnalysisReport:
    p: int
    d: list
    dim: int
    predicted_dim: int
    table: list
    quasi_frobenius: bool
    frobenius: bool
    criterion: bool
    frobenius_methods: dict
    seed: int
    timings: dict = field(default_factory=dict)

    @property
    def consistent(self):
        rows_ok = all(r["soc"] == r["soc_predicted"] and r["cosoc"] == r["cosoc_predicted"] for r in self.table)
        return (rows_ok and self.quasi_frobenius and self.frobenius == self.criterion
                and self.dim == self.predicted_dim)

    def as_dict(self):
        return {"p": self.p, "d": list(self.d), "dim": self.dim, "predicted_dim": self.predicted_dim,
                "table": self.table, "quasi_frobenius": self.quasi_frobenius,
                "frobenius": self.frobenius, "criterion": self.criterion,
                "frobenius_methods": self.frobenius_methods, "seed": self.seed,
                "consistent": self.consistent}


def analyze(R: ReconstructedAlgebra, seed: int = DEFAULT_SEED) -> AnalysisReport:
    """Soc/cosoc of each H e_{k,0} against the predictions; QF and Frobenius verdicts."""
    pl, H = R.plan, R.H
    N = len(pl.summands)
    reg = regular_module(H)
    t0 = time.perf_counter()
    table = []
    for k in range(pl.p):
        u0 = pl.summands.index(k)
        # H * e = span{E[u, u0]} in the opposite orientation
        vecs = np.stack([H.basis_vector(R.index(u, u0)) for u in range(N)], axis=1)
        He, _ = submodule(reg, vecs, closed=True)
        soc_dim = socle(He).dim
        cos = cosocle_dim(He)
        ps, pc = soc_cosoc_dims_predicted(pl.p, pl.d, k)
        table.append({"k": k, "dim": He.dim, "soc": soc_dim, "cosoc": cos,
                      "soc_predicted": ps, "cosoc_predicted": pc,
                      "multiplicity": pl.m[k]})
    t1 = time.perf_counter()
    qf = is_quasi_frobenius(H)
    t2 = time.perf_counter()
    fr = is_frobenius(H, seed=seed)
    t3 = time.perf_counter()
    crit = frobenius_criterion(pl.d).frobenius
    rep = AnalysisReport(pl.p, pl.d, H.dim, predicted_total_dim(pl.d), table, qf, fr.frobenius,
                         crit, fr.methods, seed,
                         {"projectives": t1 - t0, "quasi_frobenius": t2 - t1, "frobenius": t3 - t2})
    total = sum(row["dim"] * pl.m[row["k"]] for row in table)
    if total != H.dim:
        raise AssertionError(f"sum_k dim(H e_k) m_k = {total} != dim H = {H.dim}")
    return rep
