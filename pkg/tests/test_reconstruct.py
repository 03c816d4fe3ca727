import numpy as np
import pytest

from froblab.algcore import check_algebra, end_algebra, is_frobenius, radical
from froblab.reconstruct import analyze, build, plan


@pytest.fixture(scope="module")
def built():
    cache = {}

    def get(p, d):
        if (p, d) not in cache:
            cache[(p, d)] = build(plan(p, d))
        return cache[(p, d)]
    return get


def test_plan():
    pl = plan(2, (1, 2))
    assert pl.m == [5, 4] and pl.dim_Q == 18
    pl = plan(2, (1, 1))
    assert pl.m == [2, 2] and pl.dim_Q == 8
    assert plan(3, (1, 1, 1)).m == [3, 3, 3]
    with pytest.raises(ValueError):
        plan(2, (1, 2, 3))


@pytest.mark.parametrize("p,d,dim", [(2, (1, 2), 81), (2, (1, 1), 16), (3, (1, 1, 1), 81), (2, (2, 2), 256)])
def test_build_dims(built, p, d, dim):
    R = built(p, d)
    assert R.H.dim == dim and check_algebra(R.H).ok and R.opposite


def test_summand_idempotents_are_module_maps(built):
    pl = plan(2, (1, 1))
    R = build(pl)
    from froblab.algcore import ModHom
    N = len(pl.summands)
    for u in range(N):
        for v in range(N):
            assert ModHom(pl.Q, pl.Q, R.embed(u, v)).check()
    assert all(e.check() for e in pl.idempotents())


def test_matches_generic_end_algebra(built):
    # Oracle: the generic Hom-space solver on Q gives the same algebra up to isomorphism
    # (compared through the regular modules of the opposite algebra).
    R = built(2, (1, 1))
    E, _ = end_algebra(R.plan.Q, opposite=True)
    assert E.dim == R.H.dim
    assert radical(E).dim == radical(R.H).dim
    assert bool(is_frobenius(E)) == bool(is_frobenius(R.H))


def test_composition_matches_embedding(built):
    R = built(2, (1, 2))
    pl = R.plan
    N = len(pl.summands)
    from froblab.exactla import matmul
    rng = np.random.default_rng(0)
    for _ in range(20):
        u, v, w = (int(x) for x in rng.integers(0, N, 3))
        # opposite product: E[u,v] * E[v,w] = E[v,w] o E[u,v]
        lhs = matmul(R.embed(v, w), R.embed(u, v)).data
        prod = R.H.mult(R.H.basis_vector(R.index(u, v)), R.H.basis_vector(R.index(v, w)))
        idx = R.index(u, w)
        scale = pl.taft.ctx(tuple(prod[idx]))
        assert np.all(R.embed(u, w).scale(scale).data == lhs)
        assert not np.delete(prod, idx, axis=0).any()


@pytest.mark.parametrize("p,d", [(2, (1, 2)), (2, (1, 1)), (3, (1, 1, 1))])
def test_analyze(built, p, d):
    a = analyze(built(p, d))
    assert a.consistent
    assert a.quasi_frobenius
    assert a.frobenius == (len(set(d)) == 1)
    assert all(r["dim"] == sum(d) ** 2 for r in a.table)


def test_analyze_counterexample_table(built):
    a = analyze(built(2, (1, 2)))
    assert [(r["soc"], r["cosoc"]) for r in a.table] == [(4, 5), (5, 4)]
    assert not a.frobenius and a.quasi_frobenius


@pytest.mark.slow
def test_analyze_p3_nonconstant():
    a = analyze(build(plan(3, (1, 1, 2))))
    assert a.dim == 256 and a.consistent and not a.frobenius and a.quasi_frobenius


def test_generic_end_algebra_counterexample(built):
    # End of Q = P_0^5 + P_1^4 through the generic solver: dim 81, radical of dim 81 - (5^2 + 4^2)
    R = built(2, (1, 2))
    E, _ = end_algebra(R.plan.Q, opposite=True)
    assert E.dim == 81
    assert radical(E).dim == radical(R.H).dim == 40
