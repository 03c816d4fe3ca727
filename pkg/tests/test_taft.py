import numpy as np
import pytest

from froblab.algcore import (check_algebra, composition_factors, cosocle_dim,
                             is_isomorphic, quotient, socle, submodule)
from froblab.exactla import cmul
from froblab.taft import (chain_space, chain_submodule, projective_cover,
                          radical_check, simple_module, tensor_modules,
                          x_element)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_build(taft, p):
    T = taft(p)
    assert T.dim == p * p
    assert check_algebra(T.algebra).ok
    eps = T.counit.data[0]
    assert eps[T.index(1, 0)][0] == 1 and not eps[T.index(0, 1)].any()


def test_sweedler_products(taft):
    T = taft(2)
    A = T.algebra
    gx = A.basis_vector(T.index(1, 1))
    assert not A.mult(gx, gx).any()
    # x g = lam g x with lam = -1
    assert np.all(A.mult(T.x, T.g) == -A.mult(T.g, T.x))


def test_simple_modules(taft):
    T = taft(3)
    V = [simple_module(T, k) for k in range(3)]
    assert np.all(V[0].rho(T.g) == T.counit.data[0][T.index(1, 0)])
    for k in range(3):
        for l in range(3):
            assert is_isomorphic(tensor_modules(T, V[k], V[l]), V[(k + l) % 3])
            if k != l:
                assert not is_isomorphic(V[k], V[l])


def test_x_elements(taft):
    T = taft(3)
    for k in range(3):
        for s in range(3):
            v = x_element(T, k, s)
            lam_k = np.array(T.ctx.zeta(k).coeffs, dtype=object)
            assert np.all(T.algebra.mult(T.g, v) == cmul(v, lam_k[None, :], 3))
        assert not T.algebra.mult(T.x, x_element(T, k, 2)).any()
    T2 = taft(2)
    v = x_element(T2, 1, 0)
    assert v[T2.index(0, 0)][0] == 1 and v[T2.index(1, 0)][0] == -1


@pytest.mark.parametrize("p", [2, 3])
def test_chain_quotients(taft, p):
    T = taft(p)
    for k in range(p):
        for i in range(1, p + 1):
            M = chain_submodule(T, k, i)
            Q = quotient(M, _inner(M, T, k, i - 1))
            assert Q.dim == 1 and is_isomorphic(Q, simple_module(T, k + i))


def _inner(M, T, k, i):
    """I_k^i as a subspace of the coordinates of I_k^(i+1)."""
    from froblab.exactla import Subspace
    big = chain_space(T, k, i + 1)
    small = chain_space(T, k, i)
    coords = big.coords(small.basis) if small.dim else np.zeros((big.dim, 0, T.ctx.deg), dtype=object)
    return Subspace.span(T.ctx, big.dim, coords)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_projective_covers(taft, p):
    T = taft(p)
    for k in range(p):
        P = projective_cover(T, k)
        assert P.dim == p
        soc, _ = submodule(P, socle(P), closed=True)
        assert is_isomorphic(soc, simple_module(T, k + 1))
        assert cosocle_dim(P) == 1


def test_tensor_with_projective(taft):
    T = taft(3)
    V0, V1 = simple_module(T, 0), simple_module(T, 1)
    P0 = projective_cover(T, 0)
    assert is_isomorphic(tensor_modules(T, V0, P0), P0)
    assert is_isomorphic(tensor_modules(T, P0, V1), projective_cover(T, 1))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_radical_check(taft, p):
    rep = radical_check(taft(p))
    assert rep.ok and rep.dim == p * p - p and rep.nilpotency_index == p
