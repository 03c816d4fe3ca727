"""Small stock algebras used by tests and the CLI."""
from .algebra import Algebra


def matrix_algebra(ctx, n):
    """M_n(K) with basis e_ij at index i*n + j."""
    entries = [(i * n + j, j * n + k, i * n + k, 1)
               for i in range(n) for j in range(n) for k in range(n)]
    unit = [1 if i == j else 0 for i in range(n) for j in range(n)]
    labels = [f"e{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    return Algebra.from_table(ctx, n * n, entries, unit, labels)


def truncated_polynomial(ctx, m):
    """K[t]/(t^m) with basis 1, t, ..., t^(m-1)."""
    entries = [(i, j, i + j, 1) for i in range(m) for j in range(m) if i + j < m]
    unit = [1] + [0] * (m - 1)
    return Algebra.from_table(ctx, m, entries, unit, ["1"] + [f"t^{i}" for i in range(1, m)])


def upper_triangular(ctx):
    """Upper-triangular 2x2 matrices, basis e11, e12, e22."""
    idx = {(0, 0): 0, (0, 1): 1, (1, 1): 2}
    entries = []
    for (i, j), a in idx.items():
        for (k, l), b in idx.items():
            if j == k:
                entries.append((a, b, idx[(i, l)], 1))
    return Algebra.from_table(ctx, 3, entries, [1, 0, 1], ["e11", "e12", "e22"])


def group_algebra_alg(ctx, n):
    """K[Z/n] with basis g^0, ..., g^(n-1)."""
    entries = [(i, j, (i + j) % n, 1) for i in range(n) for j in range(n)]
    return Algebra.from_table(ctx, n, entries, [1] + [0] * (n - 1), [f"g^{i}" for i in range(n)])
