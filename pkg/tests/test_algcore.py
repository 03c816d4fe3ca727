from collections import Counter

import numpy as np
import pytest

from froblab.algcore import (Algebra, check_algebra, composition_factors,
                             cosocle_dim, direct_sum, dual_module,
                             end_algebra, group_algebra_alg, hom_space,
                             is_frobenius, is_isomorphic, is_projective,
                             is_quasi_frobenius, matrix_algebra, quotient,
                             radical, regular_module, socle, submodule,
                             truncated_polynomial, upper_triangular)
from froblab.algcore.module import dual_regular_module
from froblab.exactla import Subspace
from froblab.scalars import field_context
from froblab.taft import projective_cover, simple_module, x_element

K2, K3 = field_context(2), field_context(3)


def test_check_algebra():
    assert check_algebra(group_algebra_alg(K3, 3)).ok
    A = group_algebra_alg(K3, 3)
    V = A.V.copy()
    V[0] = K3(5).coeffs
    bad = Algebra(K3, A.dim, A.I, A.J, A.K, V, A.unit)
    rep = check_algebra(bad)
    assert not rep.ok and rep.associativity_violations


def test_radical_examples(taft):
    assert radical(matrix_algebra(K2, 2)).dim == 0
    T = truncated_polynomial(K2, 2)
    rad = radical(T)
    assert rad.dim == 1 and rad.space.contains(T.basis_vector(1)[:, None, :])
    B = taft(2)
    rad = radical(B.algebra)
    assert rad.dim == 2
    assert rad.space.contains(np.stack([B.x, B.algebra.basis_vector(B.index(1, 1))], axis=1))


def test_socle_examples(taft):
    M = matrix_algebra(K2, 2)
    reg = regular_module(M)
    assert socle(reg).dim == reg.dim
    R = regular_module(truncated_polynomial(K2, 2))
    assert socle(R).dim == 1 and cosocle_dim(R) == 1
    for k in range(3):
        P = projective_cover(taft(3), k)
        assert socle(P).dim == 1 and cosocle_dim(P) == 1


def test_hom_space(taft):
    B = taft(3)
    V = [simple_module(B, k) for k in range(3)]
    for k in range(3):
        for l in range(3):
            assert len(hom_space(V[k], V[l])) == (1 if k == l else 0)
    P0, P1 = projective_cover(taft(2), 0), projective_cover(taft(2), 1)
    assert len(hom_space(P0, P1)) == 1
    assert all(h.check() for h in hom_space(P0, P0))


def test_isomorphism(taft):
    B = taft(2)
    V0, V1 = simple_module(B, 0), simple_module(B, 1)
    rep = is_isomorphic(V0, V0)
    assert rep and rep.witness is not None
    assert not is_isomorphic(V0, V1)
    assert is_isomorphic(regular_module(B.algebra), dual_regular_module(B.algebra))


def test_composition_factors(taft):
    B = taft(3)
    simples = [simple_module(B, j) for j in range(3)]
    assert composition_factors(simples[1], simples) == Counter({1: 1})
    P = projective_cover(B, 2)
    assert composition_factors(P, simples) == Counter({0: 1, 1: 1, 2: 1})
    assert composition_factors(direct_sum([P, P]), simples) == Counter({0: 2, 1: 2, 2: 2})


def test_dual_module(taft):
    B = taft(3)
    S, Sinv = B.antipode, B.antipode_inverse()
    for k in range(3):
        assert is_isomorphic(dual_module(simple_module(B, k), S), simple_module(B, -k))
    P = projective_cover(B, 1)
    assert is_isomorphic(dual_module(dual_module(P, S), Sinv), P)


def test_projective_and_qf(taft):
    B = taft(2)
    assert is_projective(regular_module(B.algebra))
    assert not is_projective(simple_module(B, 0))
    M2 = matrix_algebra(K2, 2)
    assert is_projective(submodule(regular_module(M2), M2.basis_vector(0)[:, None, :])[0])
    assert is_quasi_frobenius(M2)
    assert is_quasi_frobenius(truncated_polynomial(K2, 2))
    assert not is_quasi_frobenius(upper_triangular(K2))


def test_frobenius_verdicts():
    for p in (2, 3, 5):
        rep = is_frobenius(group_algebra_alg(field_context(p), p))
        assert rep and rep.methods["iso"] and rep.methods["gram"]
    ut = is_frobenius(upper_triangular(K3))
    assert not ut and not ut.quasi_frobenius


def test_end_algebra(taft):
    B = taft(2)
    V = simple_module(B, 1)
    E, homs = end_algebra(V)
    assert E.dim == 1
    E2, _ = end_algebra(direct_sum([V, V]))
    assert E2.dim == 4 and is_frobenius(E2) and radical(E2).dim == 0
    P0, P1 = projective_cover(B, 0), projective_cover(B, 1)
    E3, _ = end_algebra(direct_sum([P0, P0, P1]))
    assert E3.dim == 9 and check_algebra(E3).ok


def test_submodule_quotient(taft):
    B = taft(3)
    P = projective_cover(B, 0)
    reg = regular_module(B.algebra)
    v = x_element(B, 0, 2)
    S, _ = submodule(reg, v[:, None, :])
    assert S.dim == 1
    assert quotient(P, Subspace.whole(B.ctx, P.dim)).dim == 0
    Z, _ = submodule(P, np.zeros((P.dim, 0, B.ctx.deg), dtype=object))
    assert Z.dim == 0
