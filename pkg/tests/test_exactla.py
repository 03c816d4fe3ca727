import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from froblab.exactla import (DimensionError, Matrix, SingularMatrixError,
                             Subspace, block_diag, inverse, kron, matmul,
                             nullspace, rank, rref, solve, transpose)
from froblab.scalars import field_context


def rand_matrix(K, rows, cols, seed, lo=-3, hi=4):
    rng = np.random.default_rng(seed)
    ent = [[K([int(x) for x in rng.integers(lo, hi, K.deg)]) for _ in range(cols)] for _ in range(rows)]
    return Matrix.from_rows(K, ent)


def test_rref_basic():
    K = field_context(3)
    I = Matrix.identity(K, 4)
    R, r, piv = rref(I)
    assert r == 4 and list(piv) == [0, 1, 2, 3]
    Z = Matrix.zeros(K, 3, 2)
    assert rank(Z) == 0
    z = K.zeta(1)
    M = Matrix.from_rows(K, [[K.one(), z], [K.zeta(2), K.one()]])
    assert rank(M) == 1


def test_kron_and_errors():
    K = field_context(5)
    assert np.all(kron(Matrix.identity(K, 2), Matrix.identity(K, 3)).data == Matrix.identity(K, 6).data)
    with pytest.raises(DimensionError):
        matmul(Matrix.identity(K, 2), Matrix.identity(K, 3))
    with pytest.raises(SingularMatrixError):
        inverse(Matrix.zeros(K, 2, 2))


@pytest.mark.parametrize("p", [2, 3, 5])
@settings(max_examples=10, deadline=None)
@given(seed=st.integers(0, 10 ** 6))
def test_inverse_property(p, seed):
    K = field_context(p)
    M = rand_matrix(K, 5, 5, seed)
    if rank(M) < 5:
        return
    assert np.all(matmul(M, inverse(M)).data == Matrix.identity(K, 5).data)


@settings(max_examples=10, deadline=None)
@given(seed=st.integers(0, 10 ** 6))
def test_nullspace_and_solve(seed):
    K = field_context(3)
    A = rand_matrix(K, 3, 5, seed)
    N = nullspace(A)
    assert N.cols == 5 - rank(A)
    assert matmul(A, N).is_zero()
    x = rand_matrix(K, 5, 2, seed + 1)
    B = matmul(A, x)
    X = solve(A, B)
    assert X is not None and np.all(matmul(A, X).data == B.data)


def test_transpose_blockdiag_subspace():
    K = field_context(3)
    A = rand_matrix(K, 2, 3, 7)
    assert np.all(transpose(transpose(A)).data == A.data)
    D = block_diag([Matrix.identity(K, 2), Matrix.identity(K, 1)])
    assert np.all(D.data == Matrix.identity(K, 3).data)
    V = Subspace.span(K, 3, Matrix.identity(K, 3).data[:, :2])
    assert V.dim == 2
    assert V.contains(Matrix.identity(K, 3).data[:, :1])
    assert not V.contains(Matrix.identity(K, 3).data[:, 2:])


def test_backends_agree(monkeypatch):
    from froblab import _kernel_py, kernel
    K = field_context(5)
    M = rand_matrix(K, 6, 8, 3)
    r1 = rank(M)
    monkeypatch.setattr(kernel, "rref_mod", _kernel_py.rref_mod)
    M2 = Matrix(K, M.data.copy())
    assert rank(M2) == r1
