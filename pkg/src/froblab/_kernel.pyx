# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Gauss-Jordan elimination over Z/qZ (q prime, q < 2**31)."""


cdef long long _inv_mod(long long a, long long q):
    cdef long long t = 0, nt = 1, r = q, nr = a, quo, tmp
    while nr != 0:
        quo = r // nr
        tmp = t - quo * nt
        t = nt
        nt = tmp
        tmp = r - quo * nr
        r = nr
        nr = tmp
    if t < 0:
        t += q
    return t


def rref_mod(long long[:, ::1] A, long long q):
    """Reduce ``A`` (entries in [0, q)) to reduced row echelon form in place.

    Returns ``(rank, pivots)``.  The first nonzero entry of each column is
    taken as pivot, matching the exact routine.
    """
    cdef Py_ssize_t m = A.shape[0], n = A.shape[1]
    cdef Py_ssize_t rank = 0, col, r, c, piv
    cdef long long f, inv, tmp, neg
    pivots = []
    for col in range(n):
        if rank == m:
            break
        piv = -1
        for r in range(rank, m):
            if A[r, col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for c in range(col, n):
                tmp = A[piv, c]
                A[piv, c] = A[rank, c]
                A[rank, c] = tmp
        inv = _inv_mod(A[rank, col], q)
        if inv != 1:
            for c in range(col, n):
                A[rank, c] = (A[rank, c] * inv) % q
        for r in range(m):
            if r == rank:
                continue
            f = A[r, col]
            if f == 0:
                continue
            neg = q - f
            for c in range(col, n):
                if A[rank, c] != 0:
                    A[r, c] = (A[r, c] + neg * A[rank, c]) % q
        pivots.append(col)
        rank += 1
    return rank, pivots
