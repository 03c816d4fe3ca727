"""Dense exact linear algebra over Q(zeta_p).

A ``Matrix`` stores its entries as a read-only numpy object array of shape
``(rows, cols, p - 1)``: slot ``a`` holds the rational coefficient of z^a.

Row reduction is multimodular.  Rows are cleared to Z[zeta] entries, the
matrix is reduced modulo primes q = 1 (mod p) under every embedding
z -> w^e of Z[zeta] into F_q, the modular echelon forms are lifted by the
Chinese remainder theorem and rational reconstruction, and the lifted
candidate R is accepted only after the exact identity M = M[:, pivots] R
has been checked.  Since a modular rank never exceeds the true rank, that
identity proves R is the reduced row echelon form of M.
"""
from __future__ import annotations

from functools import lru_cache, reduce

import gmpy2
import numpy as np
from gmpy2 import mpq, mpz

from . import kernel
from .scalars import CycContext, CycScalar, field_context, to_rational

__all__ = [
    "Matrix",
    "DimensionError",
    "SingularMatrixError",
    "rref",
    "rank",
    "rank_lower_bound",
    "is_invertible",
    "nullspace",
    "solve",
    "inverse",
    "matmul",
    "kron",
    "block_diag",
    "transpose",
    "hstack",
    "vstack",
    "column_basis",
    "Subspace",
    "cmul",
    "ctensordot",
]

_MAX_PRIMES = 4000


class DimensionError(ValueError):
    pass


class SingularMatrixError(ArithmeticError):
    pass


def _ctx_of(ctx) -> CycContext:
    return ctx if isinstance(ctx, CycContext) else field_context(ctx)


def _zeros(shape):
    return np.zeros(shape, dtype=object)


class Matrix:
    """Immutable dense matrix over Q(zeta_p)."""

    __slots__ = ("ctx", "data", "_rref")

    def __init__(self, ctx, data):
        ctx = _ctx_of(ctx)
        data = np.asarray(data, dtype=object)
        if data.ndim != 3 or data.shape[2] != ctx.deg:
            raise DimensionError(
                f"matrix data must have shape (rows, cols, {ctx.deg}), got {data.shape}")
        data.flags.writeable = False
        self.ctx = ctx
        self.data = data
        self._rref = None

    # construction
    @classmethod
    def zeros(cls, ctx, rows, cols):
        ctx = _ctx_of(ctx)
        return cls(ctx, _zeros((rows, cols, ctx.deg)))

    @classmethod
    def identity(cls, ctx, n):
        ctx = _ctx_of(ctx)
        d = _zeros((n, n, ctx.deg))
        idx = np.arange(n)
        d[idx, idx, 0] = mpq(1)
        return cls(ctx, d)

    @classmethod
    def from_rational(cls, ctx, arr):
        """Matrix with rational entries taken from a 2-d array-like."""
        ctx = _ctx_of(ctx)
        a = np.asarray(arr, dtype=object)
        if a.ndim != 2:
            raise DimensionError(f"expected a 2-d array, got shape {a.shape}")
        d = _zeros(a.shape + (ctx.deg,))
        d[:, :, 0] = a
        return cls(ctx, d)

    @classmethod
    def from_rows(cls, ctx, rows):
        """Build from nested sequences of scalars, numbers or scalar text."""
        ctx = _ctx_of(ctx)
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        d = _zeros((len(rows), ncols, ctx.deg))
        for i, r in enumerate(rows):
            if len(r) != ncols:
                raise DimensionError(f"ragged rows: row 0 has {ncols} entries, row {i} has {len(r)}")
            for j, v in enumerate(r):
                d[i, j, :] = ctx(v).coeffs
        return cls(ctx, d)

    @classmethod
    def from_entries(cls, ctx, rows, cols, entries):
        entries = list(entries)
        if len(entries) != rows * cols:
            raise DimensionError(f"{len(entries)} entries for a {rows}x{cols} matrix")
        return cls.from_rows(ctx, [entries[i * cols:(i + 1) * cols] for i in range(rows)])

    @classmethod
    def column(cls, ctx, values):
        ctx = _ctx_of(ctx)
        return cls.from_rows(ctx, [[v] for v in values])

    # access
    @property
    def rows(self):
        return self.data.shape[0]

    @property
    def cols(self):
        return self.data.shape[1]

    @property
    def shape(self):
        return self.data.shape[:2]

    def __getitem__(self, key):
        i, j = key
        return CycScalar(self.ctx, tuple(mpq(x) for x in self.data[i, j]))

    def take(self, rows=None, cols=None):
        d = self.data
        if rows is not None:
            d = d[list(rows)]
        if cols is not None:
            d = d[:, list(cols)]
        return Matrix(self.ctx, np.array(d, dtype=object))

    def entries(self):
        """Entries in row-major order."""
        return [self[i, j] for i in range(self.rows) for j in range(self.cols)]

    def tolist(self):
        return [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]

    def is_rational(self):
        return not self.data[:, :, 1:].any()

    def is_zero(self):
        return not self.data.any()

    # arithmetic
    def _same(self, other):
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if other.ctx is not self.ctx:
            raise ValueError(f"mixed fields: p={self.ctx.p} and p={other.ctx.p}")

    def __add__(self, other):
        self._same(other)
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return Matrix(self.ctx, self.data + other.data)

    def __sub__(self, other):
        self._same(other)
        if self.shape != other.shape:
            raise DimensionError(f"cannot subtract {self.shape} and {other.shape}")
        return Matrix(self.ctx, self.data - other.data)

    def __neg__(self):
        return Matrix(self.ctx, -self.data)

    def __matmul__(self, other):
        return matmul(self, other)

    def scale(self, s):
        """Multiply every entry by a scalar."""
        if isinstance(s, CycScalar):
            if s.ctx is not self.ctx:
                raise ValueError("scalar from a different field")
            if not s.is_rational():
                d = _zeros((1, 1, self.ctx.deg))
                d[0, 0, :] = s.coeffs
                return Matrix(self.ctx, mul_raw(self.data.reshape(-1, 1, self.ctx.deg), d, self.ctx.p)
                              .reshape(self.data.shape))
            s = s.coeffs[0]
        return Matrix(self.ctx, self.data * to_rational(s))

    def __mul__(self, s):
        return self.scale(s)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.ctx is other.ctx and self.shape == other.shape
                and bool(np.all(self.data == other.data)))

    __hash__ = None

    @property
    def T(self):
        return transpose(self)

    def __repr__(self):
        return f"Matrix(p={self.ctx.p}, shape={self.shape})"

    def __str__(self):
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.tolist())


# -- raw kernels on object arrays --------------------------------------------

def reduce_slots(acc, p):
    """Map a (..., p) array of coefficients mod x^p - 1 to (..., p - 1) mod Phi_p."""
    deg = p - 1
    return acc[..., :deg] - acc[..., deg:deg + 1]


def mul_raw(A, B, p):
    """Product of (r, k, deg) and (k, c, deg) object arrays."""
    deg = p - 1
    if deg == 1:
        return (A[:, :, 0] @ B[:, :, 0])[:, :, None]
    ra = [a for a in range(deg) if A[:, :, a].any()]
    rb = [b for b in range(deg) if B[:, :, b].any()]
    acc = _zeros((A.shape[0], B.shape[1], p))
    for a in ra:
        Aa = A[:, :, a]
        for b in rb:
            acc[:, :, (a + b) % p] += Aa @ B[:, :, b]
    return reduce_slots(acc, p)


def matmul(A: Matrix, B: Matrix) -> Matrix:
    A._same(B)
    if A.cols != B.rows:
        raise DimensionError(f"matmul shape mismatch: {A.shape} @ {B.shape}")
    return Matrix(A.ctx, mul_raw(A.data, B.data, A.ctx.p))


def transpose(A: Matrix) -> Matrix:
    return Matrix(A.ctx, np.ascontiguousarray(A.data.transpose(1, 0, 2)))


def kron(A: Matrix, B: Matrix) -> Matrix:
    A._same(B)
    p, deg = A.ctx.p, A.ctx.deg
    (r1, c1), (r2, c2) = A.shape, B.shape
    acc = _zeros((r1, r2, c1, c2, p))
    for a in range(deg):
        Aa = A.data[:, :, a]
        if not Aa.any():
            continue
        for b in range(deg):
            Bb = B.data[:, :, b]
            if Bb.any():
                acc[..., (a + b) % p] += np.einsum("ij,kl->ikjl", Aa, Bb)
    return Matrix(A.ctx, reduce_slots(acc, p).reshape(r1 * r2, c1 * c2, deg))


def block_diag(mats) -> Matrix:
    mats = list(mats)
    if not mats:
        raise ValueError("block_diag needs at least one block")
    ctx = mats[0].ctx
    for m in mats:
        mats[0]._same(m)
    r = sum(m.rows for m in mats)
    c = sum(m.cols for m in mats)
    d = _zeros((r, c, ctx.deg))
    i = j = 0
    for m in mats:
        d[i:i + m.rows, j:j + m.cols] = m.data
        i += m.rows
        j += m.cols
    return Matrix(ctx, d)


def hstack(mats) -> Matrix:
    mats = list(mats)
    for m in mats[1:]:
        mats[0]._same(m)
        if m.rows != mats[0].rows:
            raise DimensionError(f"hstack row mismatch: {mats[0].shape} and {m.shape}")
    return Matrix(mats[0].ctx, np.concatenate([m.data for m in mats], axis=1))


def vstack(mats) -> Matrix:
    mats = list(mats)
    for m in mats[1:]:
        mats[0]._same(m)
        if m.cols != mats[0].cols:
            raise DimensionError(f"vstack column mismatch: {mats[0].shape} and {m.shape}")
    return Matrix(mats[0].ctx, np.concatenate([m.data for m in mats], axis=0))


# -- modular machinery --------------------------------------------------------

@lru_cache(maxsize=None)
def _prime_table(p):
    return []


def _nth_prime(p, idx):
    """The idx-th prime q < 2**31 with q = 1 (mod p), counting downward."""
    table = _prime_table(p)
    step = 2 * p if p > 2 else 2
    q = table[-1] - step if table else ((2**31 - 1 - 1) // step) * step + 1
    while len(table) <= idx:
        if q < 3:  # pragma: no cover
            raise RuntimeError("ran out of word-size primes")
        if gmpy2.is_prime(q):
            table.append(q)
        q -= step
    return table[idx]


@lru_cache(maxsize=None)
def _root_data(p, q):
    """A primitive p-th root w mod q, and the inverse Vandermonde [w^(e a)]^-1."""
    deg = p - 1
    e0 = (q - 1) // p
    g = 2
    while True:
        w = pow(g, e0, q)
        if w != 1:
            break
        g += 1
    V = [[pow(w, e * a, q) for a in range(deg)] for e in range(1, p)]
    Vinv = _inv_mod_matrix(V, q)
    return w, np.array(Vinv, dtype=np.int64)


def _inv_mod_matrix(V, q):
    n = len(V)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(V)]
    for c in range(n):
        piv = next(r for r in range(c, n) if aug[r][c] % q)
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = pow(aug[c][c], -1, q)
        aug[c] = [(x * inv) % q for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [(x - f * y) % q for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def _clear_rows(data):
    """Scale each row by the lcm of its denominators; returns an mpz object array."""
    r = data.shape[0]
    out = np.empty(data.shape, dtype=object)
    flat = data.reshape(r, -1)
    oflat = out.reshape(r, -1)
    for i in range(r):
        row = flat[i]
        dens = {x.denominator for x in row if x}
        L = reduce(gmpy2.lcm, dens, mpz(1))
        oflat[i] = [mpz(x.numerator) * (L // x.denominator) if x else mpz(0) for x in row]
    return out


def _embed(Zq, pw, q):
    """Evaluate slot residues (r, c, deg) at one embedding with powers ``pw``."""
    E = Zq[:, :, 0].copy()
    for a in range(1, Zq.shape[2]):
        E = (E + (Zq[:, :, a] * int(pw[a])) % q) % q
    return E


def _modular_images(Z, p, q, rational):
    """Modular RREFs of Z under each embedding; None if the embeddings disagree."""
    deg = p - 1
    Zq = np.mod(Z, q).astype(np.int64)
    if rational:
        A = np.ascontiguousarray(Zq[:, :, 0])
        rk, piv = kernel.rref_mod(A, q)
        return rk, tuple(piv), [A]
    w, _ = _root_data(p, q)
    out = []
    prof = None
    for e in range(1, p):
        pw = [pow(w, e * a, q) for a in range(deg)]
        A = np.ascontiguousarray(_embed(Zq, pw, q))
        rk, piv = kernel.rref_mod(A, q)
        if prof is None:
            prof = (rk, tuple(piv))
        elif prof != (rk, tuple(piv)):
            return None
        out.append(A)
    return prof[0], prof[1], out


def _better(a, b):
    """Is pivot profile a strictly better than b (higher rank, then earlier pivots)?"""
    if b is None:
        return True
    if a[0] != b[0]:
        return a[0] > b[0]
    return a[1] < b[1]


def _ratrecon(a, m, bound):
    r0, r1 = m, a
    s0, s1 = mpz(0), mpz(1)
    while r1 > bound:
        qq = r0 // r1
        r0, r1 = r1, r0 - qq * r1
        s0, s1 = s1, s0 - qq * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    if s1 < 0:
        r1, s1 = -r1, -s1
    if gmpy2.gcd(r1, s1) != 1:
        return None
    return mpq(r1, s1)


def _reconstruct(X, mod):
    """Rational reconstruction of a residue array (rank, k, deg), row by row."""
    bound = gmpy2.isqrt(mod // 2)
    out = np.empty(X.shape, dtype=object)
    for i in range(X.shape[0]):
        den = mpz(1)
        row = X[i].reshape(-1)
        vals = []
        for x in row:
            if not x:
                vals.append(mpq(0))
                continue
            y = (x * den) % mod
            if y <= bound:
                vals.append(mpq(y, den))
                continue
            if mod - y <= bound:
                vals.append(mpq(y - mod, den))
                continue
            v = _ratrecon(y, mod, bound)
            if v is None:
                return None
            den *= v.denominator
            vals.append(v / (den // v.denominator))
        out[i] = np.array(vals, dtype=object).reshape(X.shape[1:])
    return out


def _coeff_residues(images, p, q, rational, rk, free):
    """Slot residues (rank, nfree, deg) of the echelon form from its embeddings."""
    deg = p - 1
    if rational:
        F = np.zeros((rk, len(free), deg), dtype=np.int64)
        F[:, :, 0] = images[0][:rk][:, free]
        return F
    _, Vinv = _root_data(p, q)
    Y = [img[:rk][:, free] for img in images]
    F = np.zeros((rk, len(free), deg), dtype=np.int64)
    for a in range(deg):
        acc = np.zeros((rk, len(free)), dtype=np.int64)
        for e in range(deg):
            acc = (acc + (Y[e] * int(Vinv[a, e])) % q) % q
        F[:, :, a] = acc
    return F


def _verify(Z, R, piv, p):
    """Exact check that R (rank, c, deg) is the echelon form of the integer matrix Z.

    Either Z == Z[:, piv] @ R or, when the kernel is smaller, Z @ N == 0 for
    the kernel basis N read off R; the cheaper identity is used.
    """
    rk, c = R.shape[:2]
    free = [j for j in range(c) if j not in set(piv)]
    for i, j in enumerate(piv):
        if R[i, :j].any():
            return False
    dens = {x.denominator for x in R.reshape(-1) if x}
    L = reduce(gmpy2.lcm, dens, mpz(1))
    Rint = np.frompyfunc(lambda x: mpz(x.numerator) * (L // x.denominator) if x else mpz(0), 1, 1)(R)
    if len(free) < rk:
        N = _zeros((c, len(free), p - 1))
        for t, f in enumerate(free):
            N[f, t, 0] = L
            N[list(piv), t, :] = -Rint[:, f, :]
        return not mul_raw(Z, N, p).any()
    lhs = mul_raw(Z[:, list(piv)], Rint, p)
    return bool(np.all(lhs == Z * L))


def _rref_data(data, p):
    """RREF of a (r, c, deg) rational array: returns (R[:rank], rank, pivots)."""
    deg = p - 1
    r, c = data.shape[:2]
    if r == 0 or c == 0 or not data.any():
        return _zeros((0, c, deg)), 0, ()
    rational = not data[:, :, 1:].any()
    Z = _clear_rows(data)
    best = None
    X = None
    mod = None
    cand = None
    for idx in range(_MAX_PRIMES):
        q = _nth_prime(p, idx)
        res = _modular_images(Z, p, q, rational)
        if res is None:
            continue
        rk, piv, images = res
        prof = (rk, piv)
        if prof != best:
            if best is not None and not _better(prof, best):
                continue
            best, X, mod, cand = prof, None, None, None
        pivset = set(piv)
        free = [j for j in range(c) if j not in pivset]
        F = _coeff_residues(images, p, q, rational, rk, free)
        if cand is not None:
            Fc, rowden = cand
            lhs = np.mod(Fc, q).astype(np.int64)
            rhs = (F * np.mod(rowden, q).astype(np.int64)[:, None, None]) % q
            if np.array_equal(lhs, rhs):
                R = _assemble(Fc, rowden, rk, c, deg, piv, free)
                if _verify(Z, R, piv, p):
                    return R, rk, piv
        if X is None:
            X = F.astype(object)
            mod = mpz(q)
        else:
            Xq = np.mod(X, q).astype(np.int64)
            minv = pow(int(mod % q), -1, q)
            t = (((F - Xq) % q) * minv) % q
            X = X + t.astype(object) * mod
            mod = mod * q
        if not free:
            R = _assemble(_zeros((rk, 0, deg)), np.ones(rk, dtype=object), rk, c, deg, piv, free)
            if _verify(Z, R, piv, p):
                return R, rk, piv
            continue
        Rf = _reconstruct(X, mod)
        if Rf is not None:
            rowden = np.array(
                [reduce(gmpy2.lcm, {x.denominator for x in Rf[i].reshape(-1)}, mpz(1)) for i in range(rk)],
                dtype=object)
            Fc = Rf * rowden[:, None, None]
            Fc = np.frompyfunc(lambda x: mpz(x.numerator), 1, 1)(Fc)
            cand = (Fc, rowden)
    raise RuntimeError("multimodular row reduction did not converge")


def _assemble(Fc, rowden, rk, c, deg, piv, free):
    R = _zeros((rk, c, deg))
    for i, j in enumerate(piv):
        R[i, j, 0] = mpq(1)
    if free:
        vals = np.frompyfunc(lambda x, d: mpq(x, d), 2, 1)(Fc, rowden[:, None, None])
        R[:, free, :] = vals
    return R


# -- public operations ----------------------------------------------------------

def rref(M: Matrix):
    """Reduced row echelon form: returns (R, rank, pivots), R of M's shape."""
    if M._rref is None:
        M._rref = _rref_data(M.data, M.ctx.p)
    Rr, rk, piv = M._rref
    R = _zeros(M.data.shape)
    R[:rk] = Rr
    return Matrix(M.ctx, R), rk, tuple(piv)


def _rref_cached(M: Matrix):
    if M._rref is None:
        M._rref = _rref_data(M.data, M.ctx.p)
    return M._rref


def rank(M: Matrix) -> int:
    return _rref_cached(M)[1]


def rank_lower_bound(M: Matrix, prime_index: int = 0) -> int:
    """Rank of one modular image of M; never exceeds the true rank."""
    if M.rows == 0 or M.cols == 0:
        return 0
    if M._rref is not None:
        return M._rref[1]
    p = M.ctx.p
    q = _nth_prime(p, prime_index)
    Z = _clear_rows(M.data)
    Zq = np.mod(Z, q).astype(np.int64)
    if M.is_rational():
        A = np.ascontiguousarray(Zq[:, :, 0])
    else:
        w, _ = _root_data(p, q)
        A = np.ascontiguousarray(_embed(Zq, [pow(w, a, q) for a in range(p - 1)], q))
    return kernel.rref_mod(A, q)[0]


def is_invertible(M: Matrix) -> bool:
    if M.rows != M.cols:
        return False
    if rank_lower_bound(M) == M.rows:
        return True
    return rank(M) == M.rows


def nullspace(M: Matrix) -> Matrix:
    """Columns form a basis of {x : M x = 0}."""
    Rr, rk, piv = _rref_cached(M)
    c = M.cols
    deg = M.ctx.deg
    pivset = set(piv)
    free = [j for j in range(c) if j not in pivset]
    N = _zeros((c, len(free), deg))
    for t, f in enumerate(free):
        N[f, t, 0] = mpq(1)
        for i, j in enumerate(piv):
            N[j, t, :] = -Rr[i, f, :]
    return Matrix(M.ctx, N)


def solve(A: Matrix, B: Matrix):
    """One X with A X = B (free variables zero), or None if there is none."""
    A._same(B)
    if A.rows != B.rows:
        raise DimensionError(f"solve row mismatch: A is {A.shape}, B is {B.shape}")
    n = A.cols
    aug = hstack([A, B])
    Rr, rk, piv = _rref_cached(aug)
    if piv and piv[-1] >= n:
        return None
    X = _zeros((n, B.cols, A.ctx.deg))
    for i, j in enumerate(piv):
        X[j] = Rr[i, n:]
    return Matrix(A.ctx, X)


def inverse(A: Matrix) -> Matrix:
    if A.rows != A.cols:
        raise DimensionError(f"inverse of non-square matrix {A.shape}")
    n = A.rows
    Rr, rk, piv = _rref_cached(hstack([A, Matrix.identity(A.ctx, n)]))
    if piv[:n] != tuple(range(n)):
        raise SingularMatrixError(f"matrix of shape {A.shape} is singular")
    return Matrix(A.ctx, np.array(Rr[:, n:], dtype=object))


def cmul(a, b, p):
    """Elementwise product of broadcastable coefficient arrays (..., p - 1)."""
    deg = p - 1
    if deg == 1:
        return a * b
    shape = np.broadcast_shapes(a.shape[:-1], b.shape[:-1])
    acc = _zeros(shape + (p,))
    for s in range(deg):
        As = a[..., s]
        if not As.any():
            continue
        for t in range(deg):
            Bt = b[..., t]
            if Bt.any():
                acc[..., (s + t) % p] += As * Bt
    return reduce_slots(acc, p)


def ctensordot(u, X, p):
    """Contract the coefficient vector u (n, deg) with X (n, ..., deg) along axis 0."""
    deg = p - 1
    if deg == 1:
        return np.tensordot(u[:, 0], X[..., 0], axes=(0, 0))[..., None]
    acc = _zeros(X.shape[1:-1] + (p,))
    for s in range(deg):
        us = u[:, s]
        if not us.any():
            continue
        nz = np.flatnonzero(us)
        for t in range(deg):
            acc[..., (s + t) % p] += np.tensordot(us[nz], X[nz][..., t], axes=(0, 0))
    return reduce_slots(acc, p)


def column_basis(M: Matrix) -> Matrix:
    """The pivot columns of M: a basis of its column space."""
    _, _, piv = _rref_cached(M)
    return M.take(cols=piv)


class Subspace:
    """A subspace of K^n with its canonical basis.

    The basis columns are the transposed rows of the RREF of any spanning
    set, so ``basis[pivots]`` is the identity and the coordinates of a
    member v are simply ``v[pivots]``.
    """

    __slots__ = ("ctx", "n", "basis", "pivots")

    def __init__(self, ctx, n, basis, pivots):
        self.ctx = ctx
        self.n = n
        self.basis = basis
        self.pivots = tuple(pivots)

    @classmethod
    def span(cls, ctx, n, vectors):
        """Span of the columns of a raw (n, k, deg) array."""
        ctx = _ctx_of(ctx)
        if vectors.shape[1] == 0:
            return cls(ctx, n, _zeros((n, 0, ctx.deg)), ())
        Rr, rk, piv = _rref_data(np.ascontiguousarray(vectors.transpose(1, 0, 2)), ctx.p)
        return cls(ctx, n, np.ascontiguousarray(Rr.transpose(1, 0, 2)), piv)

    @classmethod
    def kernel(cls, M: Matrix):
        return cls.span(M.ctx, M.cols, nullspace(M).data)

    @classmethod
    def whole(cls, ctx, n):
        return cls(ctx, n, Matrix.identity(ctx, n).data, range(n))

    @property
    def dim(self):
        return len(self.pivots)

    def matrix(self) -> Matrix:
        return Matrix(self.ctx, self.basis)

    def coords(self, vectors):
        """Coordinates of member vectors (n, k, deg) in the canonical basis."""
        return vectors[list(self.pivots)]

    def contains(self, vectors) -> bool:
        if vectors.shape[1] == 0:
            return True
        return bool(np.all(mul_raw(self.basis, self.coords(vectors), self.ctx.p) == vectors))

    def __add__(self, other):
        return Subspace.span(self.ctx, self.n, np.concatenate([self.basis, other.basis], axis=1))

    def intersect(self, other):
        if self.dim == 0 or other.dim == 0:
            return Subspace(self.ctx, self.n, _zeros((self.n, 0, self.ctx.deg)), ())
        both = Matrix(self.ctx, np.concatenate([self.basis, -other.basis], axis=1))
        N = nullspace(both)
        vecs = mul_raw(self.basis, N.data[:self.dim], self.ctx.p)
        return Subspace.span(self.ctx, self.n, vecs)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.n == other.n and self.pivots == other.pivots
                and bool(np.all(self.basis == other.basis)))

    __hash__ = None

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.n})"
