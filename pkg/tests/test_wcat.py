import itertools

import numpy as np
import pytest

from froblab.algcore import direct_sum
from froblab.taft import projective_cover, simple_module, tensor_modules
from froblab.wcat import (FPConvergenceError, convolutions, correlations,
                          criterion_table, dual_index_D, f1, f2, f_dim,
                          fp_dim, frobenius_criterion, fusion_matrix,
                          is_permutation_matrix, mult_tensor,
                          predicted_total_dim, soc_cosoc_dims_predicted)


def brute_correlation(d):
    p = len(d)
    return [sum(d[i] * d[j] for i in range(p) for j in range(p) if (i - j) % p == k) for k in range(p)]


def test_convolutions_by_enumeration():
    for d in itertools.product(range(1, 4), repeat=3):
        conv = [sum(d[i] * d[j] for i in range(3) for j in range(3) if (i + j) % 3 == k) for k in range(3)]
        assert convolutions(d) == conv
        assert correlations(d) == brute_correlation(d)
    assert convolutions((1, 1, 2)) == [5, 6, 5]
    assert correlations((1, 1, 2)) == [6, 5, 5]


def test_f1(taft):
    T = taft(3)
    for k in range(3):
        assert list(f1(T, simple_module(T, k))) == [int(j == k) for j in range(3)]
        assert list(f1(T, projective_cover(T, k))) == [1, 1, 1]
    M = direct_sum([simple_module(T, 1), projective_cover(T, 0)])
    assert list(f1(T, M)) == [1, 2, 1]


def test_f2_fdim():
    assert np.array_equal(f2([1, 0, 0]), np.eye(3, dtype=np.int64))
    assert not f2([0, 0]).any()
    assert np.array_equal(f2([1, 2]) + f2([0, 1]), f2([1, 3]))
    assert f_dim(np.eye(2, dtype=int), (1, 2)) == 5
    assert f_dim(np.ones((3, 3), dtype=int), (1, 1, 1)) == 9
    assert f_dim(np.zeros((2, 2), dtype=int), (1, 2)) == 0


def test_mult_tensor_convolution():
    for p in (2, 3, 5):
        for a, b in itertools.product(itertools.product(range(3), repeat=p), repeat=2):
            if sum(a) + sum(b) > 4:
                continue
            conv = [sum(a[i] * b[(k - i) % p] for i in range(p)) for k in range(p)]
            assert np.array_equal(mult_tensor(f2(a), f2(b)), f2(conv))


def test_predictions():
    assert soc_cosoc_dims_predicted(2, (1, 2), 0) == (4, 5)
    assert soc_cosoc_dims_predicted(2, (1, 2), 1) == (5, 4)
    for k in range(2):
        assert soc_cosoc_dims_predicted(2, (1, 1), k) == (2, 2)
    for k in range(3):
        assert soc_cosoc_dims_predicted(3, (2, 2, 2), k) == (12, 12)


def test_prediction_from_taft_matches_int_path(taft):
    for p, d in ((2, (1, 2)), (3, (1, 1, 2))):
        for k in range(p):
            assert soc_cosoc_dims_predicted(taft(p), d, k) == soc_cosoc_dims_predicted(p, d, k)


def test_criterion():
    assert not frobenius_criterion((1, 2))
    assert frobenius_criterion((3, 3, 3))
    rep = frobenius_criterion((1, 1, 2))
    assert not rep and rep.methods == {"convolution": False, "constant": False, "cyclotomic": False}
    rows = criterion_table((1, 2))
    assert [(r["soc"], r["cosoc"], r["verdict"]) for r in rows] == [(4, 5, "differ"), (5, 4, "differ")]
    assert predicted_total_dim((1, 2)) == 81
    assert predicted_total_dim((1, 1)) == 16
    assert predicted_total_dim((1,)) == 1
    with pytest.raises(ValueError):
        frobenius_criterion((0, 1))


def test_fusion(taft):
    T = taft(3)
    N0 = fusion_matrix(T, simple_module(T, 0))
    assert np.array_equal(N0, np.eye(3, dtype=np.int64))
    N1 = fusion_matrix(T, simple_module(T, 1))
    assert is_permutation_matrix(N1)
    assert all(N1[(j + 1) % 3, j] == 1 for j in range(3))
    both = fusion_matrix(T, direct_sum([simple_module(T, 0), simple_module(T, 1)]))
    assert np.array_equal(both, N0 + N1)
    assert abs(fp_dim(N1) - 1.0) < 1e-9
    assert abs(fp_dim(2 * np.eye(3)) - 2.0) < 1e-9
    assert abs(fp_dim(fusion_matrix(T, projective_cover(T, 0))) - 3.0) < 1e-9


def test_fp_dim_nonconvergence():
    with pytest.raises(FPConvergenceError):
        fp_dim(np.array([[1.0, 1.0], [0.0, 1.0]]), tol=1e-12, max_iter=5)


@pytest.mark.parametrize("p", [2, 3])
def test_dual_index(taft, p):
    T = taft(p)
    pairs = [dual_index_D(T, k) for k in range(p)]
    Ds = [D for D, _ in pairs]
    assert sorted(Ds) == list(range(p))
    assert Ds == [(-k - 1) % p for k in range(p)]
    assert len({r for _, r in pairs}) == 1
