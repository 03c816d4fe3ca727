"""Numpy fallback for the modular elimination kernel."""
import numpy as np


def rref_mod(A, q):
    """Reduce the int64 array ``A`` (entries in [0, q)) to RREF mod q in place.

    Returns ``(rank, pivots)``.
    """
    m, n = A.shape
    q = int(q)
    rank = 0
    pivots = []
    for col in range(n):
        if rank == m:
            break
        nz = np.flatnonzero(A[rank:, col])
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            A[[rank, piv], col:] = A[[piv, rank], col:]
        inv = pow(int(A[rank, col]), -1, q)
        if inv != 1:
            A[rank, col:] = (A[rank, col:] * inv) % q
        rows = np.flatnonzero(A[:, col])
        rows = rows[rows != rank]
        if rows.size:
            f = A[rows, col]
            A[rows, col:] = (A[rows, col:] - np.outer(f, A[rank, col:])) % q
        pivots.append(col)
        rank += 1
    return rank, pivots
