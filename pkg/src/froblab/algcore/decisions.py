"""Isomorphism, projectivity and the (quasi-)Frobenius decision procedures."""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

import numpy as np
from gmpy2 import mpq

from ..exactla import (Matrix, Subspace, cmul, inverse, mul_raw, nullspace,
                       rank, rank_lower_bound, rref, solve)
from .algebra import Algebra, radical
from .module import (ModHom, Module, dual_regular_module, hom_space,
                     quotient, radical_submodule, regular_module, socle,
                     submodule)

__all__ = [
    "DEFAULT_SEED",
    "InconclusiveIsomorphism",
    "IsoReport",
    "FrobeniusReport",
    "is_isomorphic",
    "composition_factors",
    "is_projective",
    "is_quasi_frobenius",
    "is_frobenius",
    "gram_oracle",
    "end_algebra",
    "top_character",
    "character_pairing",
    "is_semisimple_module",
]

DEFAULT_SEED = 20240601
_COEFF_RANGE = 2 ** 15


class InconclusiveIsomorphism(RuntimeError):
    """Random search failed and no deterministic fallback applies."""


@dataclass
class IsoReport:
    isomorphic: bool
    decision_rule: str
    seed: int
    witness: Matrix | None = None
    hom_dim: int | None = None
    randomized_phase: bool = False
    attempts: int = 0

    def __bool__(self):
        return self.isomorphic

    def as_dict(self):
        return {
            "isomorphic": self.isomorphic,
            "decision_rule": self.decision_rule,
            "seed": self.seed,
            "hom_dim": self.hom_dim,
            "randomized_phase": self.randomized_phase,
            "attempts": self.attempts,
        }


def _chars_equal(a, b):
    return bool(np.all(a == b))


def top_character(M: Module):
    """Character of M / J(A) M."""
    return M.character() - M.restricted_character(radical_submodule(M))


def is_semisimple_module(M: Module) -> bool:
    return radical_submodule(M).dim == 0


def _random_vector(rng, n, deg):
    v = np.zeros((n, deg), dtype=object)
    v[:, 0] = [mpq(int(x)) for x in rng.integers(-_COEFF_RANGE, _COEFF_RANGE + 1, n)]
    return v


def _combine(basis, coeffs, ctx):
    out = np.zeros(basis[0].data.shape, dtype=object)
    for c, X in zip(coeffs, basis):
        if c:
            out = out + X.data * c
    return Matrix(ctx, out)


def _det_vanishes_on_grid(basis, m, ctx):
    """True iff every combination on the grid {0..m}^h is singular (exact ranks)."""
    h = len(basis)
    for pt in itertools.product(range(m + 1), repeat=h):
        X = _combine(basis, pt, ctx)
        if rank_lower_bound(X) == m or rank(X) == m:
            return False, X
    return True, None


def is_isomorphic(M: Module, N: Module, seed: int = DEFAULT_SEED, budget_factor: int = 1,
                  projective=(None, None)) -> IsoReport:
    """Decide M = N.

    Order: dimensions, characters (unequal characters certify non-isomorphism),
    basis elements of Hom(M, N), then ``budget_factor * dim Hom`` seeded random
    combinations, each certified invertible by a modular rank.  If the search
    fails, a deterministic rule decides: semisimple or projective modules are
    compared by (top) characters, and when dim Hom <= 3 the determinant is
    evaluated on a grid large enough to detect a nonzero polynomial.
    """
    ctx = M.ctx
    if M.parent is not N.parent:
        raise ValueError("modules over different algebras")
    if M.dim != N.dim:
        return IsoReport(False, "dimension", seed)
    m = M.dim
    if M is N:
        return IsoReport(True, "identical", seed, Matrix.identity(ctx, m))
    if m == 0:
        return IsoReport(True, "zero modules", seed, Matrix.zeros(ctx, 0, 0))
    if not _chars_equal(M.character(), N.character()):
        return IsoReport(False, "character", seed)
    regular = M._cache.get("kind") == "regular"
    if regular:
        basis = None
        hdim = N.dim
    else:
        basis = [h.matrix for h in hom_space(M, N)]
        hdim = len(basis)
    if hdim == 0:
        return IsoReport(False, "hom-zero", seed, hom_dim=0)
    attempts = 0
    ident = Matrix.identity(ctx, N.dim).data
    for t in range(hdim):
        X = Matrix(ctx, N.orbit(ident[:, t])) if regular else basis[t]
        attempts += 1
        if rank_lower_bound(X) == m:
            return IsoReport(True, "basis element", seed, X, hdim, False, attempts)
    rng = np.random.default_rng(seed)
    for _ in range(budget_factor * hdim):
        attempts += 1
        if regular:
            X = Matrix(ctx, N.orbit(_random_vector(rng, N.dim, ctx.deg)))
        else:
            coeffs = [mpq(int(x)) for x in rng.integers(-_COEFF_RANGE, _COEFF_RANGE + 1, hdim)]
            X = _combine(basis, coeffs, ctx)
        if rank_lower_bound(X) == m:
            return IsoReport(True, "random combination", seed, X, hdim, True, attempts)
    # deterministic fallback
    if is_semisimple_module(M) and is_semisimple_module(N):
        return IsoReport(True, "semisimple: equal characters", seed, None, hdim, True, attempts)
    pm = projective[0] if projective[0] is not None else None
    pn = projective[1] if projective[1] is not None else None
    if pm is None:
        pm = is_projective(M)
    if pm:
        if pn is None:
            pn = is_projective(N)
        if not pn:
            return IsoReport(False, "projectivity differs", seed, None, hdim, True, attempts)
        same = _chars_equal(top_character(M), top_character(N))
        return IsoReport(same, "projective: top characters", seed, None, hdim, True, attempts)
    if pn is None:
        pn = is_projective(N)
    if pn:
        return IsoReport(False, "projectivity differs", seed, None, hdim, True, attempts)
    if hdim <= 3:
        if basis is None:
            basis = [Matrix(ctx, N.orbit(ident[:, t])) for t in range(hdim)]
        vanishes, X = _det_vanishes_on_grid(basis, m, ctx)
        if vanishes:
            return IsoReport(False, "determinant vanishes on grid", seed, None, hdim, True, attempts)
        return IsoReport(True, "grid point", seed, X, hdim, True, attempts)
    raise InconclusiveIsomorphism(
        f"no invertible element among {attempts} candidates (dim Hom = {hdim}); "
        f"increase budget_factor")


def composition_factors(M: Module, simples) -> Counter:
    """Multiplicities of the given simples, found by peeling socles."""
    simples = list(simples)
    end_dims = [len(hom_space(S, S)) for S in simples]
    out = Counter()
    cur = M
    while cur.dim:
        soc = socle(cur)
        soc_mod, _ = submodule(cur, soc, closed=True)
        total = 0
        for k, S in enumerate(simples):
            h = len(hom_space(S, soc_mod))
            if h:
                mult = h // end_dims[k]
                out[k] += mult
                total += mult * S.dim
        if total != soc.dim:
            raise ValueError(
                f"socle of dimension {soc.dim} is not covered by the supplied simples "
                f"(matched {total})")
        cur = quotient(cur, soc)
    return out


def _generators(M: Module, rng):
    """Random vectors generating M, with their orbit matrices."""
    vecs, orbits = [], []
    while True:
        v = _random_vector(rng, M.dim, M.ctx.deg)
        vecs.append(v)
        orbits.append(M.orbit(v))
        if Subspace.span(M.ctx, M.dim, np.concatenate(orbits, axis=1)).dim == M.dim:
            return vecs, orbits
        if len(vecs) > M.dim:  # pragma: no cover
            raise RuntimeError("failed to find module generators")


def _projective_by_retraction(M: Module, seed):
    A = M.parent
    ctx, n, deg = A.ctx, A.dim, A.ctx.deg
    rng = np.random.default_rng(seed)
    _, orbits = _generators(M, rng)
    r = len(orbits)
    Phi = Matrix(ctx, np.concatenate(orbits, axis=1))
    N = nullspace(Phi)  # basis of K, rn x dK
    dK = N.cols
    if dK == 0:
        return True
    Nd = N.data
    # module generators of K inside A^r
    gens, cols = [], []
    while True:
        y = np.zeros((dK, 1, deg), dtype=object)
        y[:, 0, 0] = [mpq(int(x)) for x in rng.integers(-5, 6, dK)]
        kappa = mul_raw(Nd, y, ctx.p)[:, 0]
        gens.append(kappa)
        cols.append(np.concatenate([A.right_matrix(kappa[s * n:(s + 1) * n]) for s in range(r)], axis=0))
        if Subspace.span(ctx, r * n, np.concatenate(cols, axis=1)).dim == dK:
            break
    blocks_rows = []
    rhs = []
    for kappa in gens:
        row = []
        for i in range(r):
            ki = kappa[i * n:(i + 1) * n]
            row.append(np.concatenate([A.left_apply(ki, Nd[s * n:(s + 1) * n]) for s in range(r)], axis=0))
        blocks_rows.append(np.concatenate(row, axis=1))
        rhs.append(kappa[:, None, :])
    coef = Matrix(ctx, np.concatenate(blocks_rows, axis=0))
    b = Matrix(ctx, np.concatenate(rhs, axis=0))
    return solve(coef, b) is not None


def character_pairing(A: Algebra):
    """Bilinear pairing on characters in which the simple characters are orthonormal.

    Uses the trace form of A/J(A); returns a function (chi, psi) -> scalar.
    Valid when A/J(A) is split.
    """
    if "pairing" in A._cache:
        return A._cache["pairing"]
    reg = regular_module(A)
    chi_top = top_character(reg)
    n, p = A.dim, A.ctx.p
    T = np.zeros((n, n, A.ctx.deg), dtype=object)
    np.add.at(T, (A.I, A.J), cmul(A.V, chi_top[A.K], p))
    Tm = Matrix(A.ctx, T)
    _, rk, piv = rref(Tm)
    C = list(piv)
    G = inverse(Tm.take(rows=C, cols=C))

    def pair(chi, psi):
        x = Matrix(A.ctx, chi[C][None, :, :])
        y = Matrix(A.ctx, psi[C][:, None, :])
        return (x @ G @ y)[0, 0]

    A._cache["pairing"] = pair
    return pair


def _projective_by_characters(M: Module):
    A = M.parent
    pair = character_pairing(A)
    reg = regular_module(A)
    dual = dual_regular_module(A)
    chi_top_A = top_character(reg)
    chi_dual = dual.character()
    rad = radical(A)
    if pair(chi_top_A, chi_top_A) != A.dim - rad.dim or pair(chi_top_A, chi_dual) != A.dim:
        raise AssertionError("character pairing guard failed; A/J(A) may not be split")
    return pair(top_character(M), chi_dual) == M.dim


def is_projective(M: Module, method: str = "retraction", seed: int = DEFAULT_SEED) -> bool:
    """Projectivity of M.

    ``retraction``: M = A^r / K is projective iff K is a direct summand of A^r,
    i.e. iff some module map A^r -> K restricts to the identity on K.  This is
    one exact linear system.  ``characters``: M is projective iff dim M equals
    the dimension of the projective cover of its top, read off from characters
    (requires split A/J(A)).
    """
    if M.dim == 0 or M._cache.get("kind") == "regular":
        return True
    key = ("projective", method)
    if key in M._cache:
        return M._cache[key]
    if radical(M.parent).dim == 0:
        out = True
    elif method == "retraction":
        out = _projective_by_retraction(M, seed)
    elif method == "characters":
        out = _projective_by_characters(M)
    else:
        raise ValueError(f"unknown projectivity method {method!r}")
    M._cache[key] = out
    return out


def is_quasi_frobenius(A: Algebra, method: str = "retraction") -> bool:
    """A is QF iff the dual of the right regular module is projective."""
    return is_projective(dual_regular_module(A), method=method)


def gram_oracle(A: Algebra, trials: int = 8, seed: int = DEFAULT_SEED):
    """Search for a functional with nondegenerate Gram matrix G_ij = lambda(b_i b_j).

    Returns the coefficient vector of a certified functional, or None.
    """
    rng = np.random.default_rng(seed + 1)
    n, p = A.dim, A.ctx.p
    for _ in range(trials):
        lam = _random_vector(rng, n, A.ctx.deg)
        G = np.zeros((n, n, A.ctx.deg), dtype=object)
        np.add.at(G, (A.I, A.J), cmul(A.V, lam[A.K], p))
        if rank_lower_bound(Matrix(A.ctx, G)) == n:
            return lam
    return None


@dataclass
class FrobeniusReport:
    frobenius: bool
    iso: IsoReport
    gram_certificate: bool
    quasi_frobenius: bool | None = None
    top_characters_equal: bool | None = None
    methods: dict = field(default_factory=dict)

    def __bool__(self):
        return self.frobenius

    def as_dict(self):
        return {
            "frobenius": self.frobenius,
            "quasi_frobenius": self.quasi_frobenius,
            "iso": self.iso.as_dict(),
            "gram_certificate": self.gram_certificate,
            "top_characters_equal": self.top_characters_equal,
            "methods": dict(self.methods),
        }


def is_frobenius(A: Algebra, seed: int = DEFAULT_SEED, gram_trials: int = 8,
                 deterministic: bool = True, budget_factor: int = 1) -> FrobeniusReport:
    """A is Frobenius iff A = A^dual as left modules.

    Three methods run: the isomorphism search (primary), the random-functional
    Gram oracle and, when ``deterministic``, quasi-Frobenius plus equality of
    the top characters of A and A^dual.  Any disagreement raises.
    """
    reg = regular_module(A)
    dual = dual_regular_module(A)
    qf = None
    if deterministic:
        qf = is_quasi_frobenius(A)
    iso = is_isomorphic(reg, dual, seed=seed, budget_factor=budget_factor, projective=(True, qf))
    lam = gram_oracle(A, gram_trials, seed)
    gram = lam is not None
    methods = {"iso": iso.isomorphic, "gram": gram}
    if gram and not iso.isomorphic:
        raise AssertionError("Gram oracle certified Frobenius but the isomorphism test did not")
    tops = None
    if deterministic:
        tops = _chars_equal(top_character(reg), top_character(dual))
        det = bool(qf and tops)
        methods["qf_top_characters"] = det
        if det != iso.isomorphic:
            raise AssertionError("deterministic Frobenius test disagrees with the isomorphism test")
    return FrobeniusReport(iso.isomorphic, iso, gram, qf, tops, methods)


def end_algebra(M: Module, opposite: bool = False):
    """End_A(M) (or its opposite) in a basis of Hom(M, M); returns (Algebra, [ModHom])."""
    homs = hom_space(M, M)
    ctx = M.ctx
    h, m = len(homs), M.dim
    deg = ctx.deg
    Hb = Matrix(ctx, np.stack([X.matrix.data.reshape(m * m, deg) for X in homs], axis=1))
    prods = []
    for s in range(h):
        for t in range(h):
            a, b = (homs[t], homs[s]) if opposite else (homs[s], homs[t])
            prods.append(mul_raw(a.matrix.data, b.matrix.data, ctx.p).reshape(m * m, deg))
    ident = Matrix.identity(ctx, m).data.reshape(m * m, deg)
    rhs = Matrix(ctx, np.stack(prods + [ident], axis=1))
    X = solve(Hb, rhs)
    if X is None:  # pragma: no cover - Hom(M, M) is closed under composition
        raise AssertionError("composition left the endomorphism space")
    entries = []
    for s in range(h):
        for t in range(h):
            col = X.data[:, s * h + t]
            for u in range(h):
                if any(col[u]):
                    entries.append((s, t, u, col[u]))
    I = [e[0] for e in entries]
    J = [e[1] for e in entries]
    K = [e[2] for e in entries]
    V = np.array([e[3] for e in entries], dtype=object).reshape(-1, deg)
    unit = X.data[:, h * h]
    alg = Algebra(ctx, h, I, J, K, V, unit, [f"e{t}" for t in range(h)])
    return alg, homs
