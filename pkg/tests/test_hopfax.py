import numpy as np
import pytest

from froblab.algcore import Algebra, is_quasi_frobenius
from froblab.exactla import Matrix
from froblab.hopfax import (HopfData, check_hopf, check_quasi_hopf,
                            check_weak_hopf, counital_subalgebras,
                            group_algebra, pair_groupoid_algebra,
                            pair_groupoid_dual, perturbation_fleet,
                            promote_to_quasi)
from froblab.scalars import field_context

K = field_context(2)
AXIOMS = ["(i)", "(ii)", "(iii)", "(iv)", "(v)"]


def mat(rows):
    return Matrix.from_rows(K, [[K(x) for x in r] for r in rows])


def discrete(eps=(1, 1), S=((1, 0), (0, 1)), delta=None):
    """K^2 = span(e1, e2), e_a e_b = delta_ab e_a, Delta(e_a) = e_a (x) e_a."""
    A = Algebra.from_table(K, 2, [(0, 0, 0, 1), (1, 1, 1, 1)], [1, 1], ["e1", "e2"])
    D = delta or [[1, 0], [0, 0], [0, 0], [0, 1]]
    return HopfData(A, mat(D), mat([list(eps)]), mat([list(r) for r in S]), name="K^2")


def test_discrete_groupoid_is_weak_hopf():
    H = discrete()
    rep = check_weak_hopf(H)
    assert rep.ok, rep.failed()
    # Delta(1) = e1(x)e1 + e2(x)e2 differs from 1(x)1, so this is not Hopf
    assert not rep.flags["is_hopf"]
    assert not check_hopf(H).ok


def test_axiom_i_by_hand():
    # eps(e_a e_b e_c) = [a=b=c] = eps(e_a e_b) eps(e_b e_c): passes for eps = (1, 1).
    # With eps(e1) = 2: eps(e1 e1 e1) = 2 but eps(e1 e1) eps(e1 e1) = 4.
    assert check_weak_hopf(discrete()).result("(i)").ok
    res = check_weak_hopf(discrete(eps=(2, 1))).result("(i)")
    assert not res.ok and res.witness is not None


def test_axiom_ii_by_hand():
    # Delta^2(1) = sum_a e_a(x)e_a(x)e_a and (Delta(1)(x)1)(1(x)Delta(1)) = sum_ab e_a(x)e_a e_b(x)e_b
    # agree.  With Delta(e2) = e1(x)e2 + e2(x)e1 the two sides pick up different mixed terms.
    assert check_weak_hopf(discrete()).result("(ii)").ok
    H = discrete(delta=[[1, 0], [0, 1], [0, 1], [0, 0]])
    assert not check_weak_hopf(H).result("(ii)").ok


def test_axiom_iii_iv_v_by_hand():
    # e_a S(e_a) = e_a = Pi_L(e_a) = sum_b eps(e_b e_a) e_b; same on the right; e_a e_a e_a = e_a = S(e_a).
    rep = check_weak_hopf(discrete())
    for ax in ("(iii)", "(iv)", "(v)"):
        assert rep.result(ax).ok
    # S swaps e1 and e2: e1 S(e1) = e1 e2 = 0 but Pi_L(e1) = e1, and S(e1) e1 S(e1) = 0 != S(e1) = e2.
    bad = check_weak_hopf(discrete(S=((0, 1), (1, 0))))
    for ax in ("(iii)", "(iv)", "(v)"):
        assert not bad.result(ax).ok
        assert bad.result(ax).witness is not None


@pytest.mark.parametrize("p", [2, 3, 5])
def test_group_algebras(p):
    H = group_algebra(p)
    assert check_hopf(H).ok
    rep = check_weak_hopf(H)
    assert rep.ok and rep.flags["is_hopf"]
    assert check_quasi_hopf(promote_to_quasi(H)).ok


@pytest.mark.parametrize("p", [2, 3])
def test_taft_is_hopf(taft, p):
    Hd = taft(p).hopf_data()
    assert check_hopf(Hd).ok
    q = check_quasi_hopf(promote_to_quasi(Hd))
    assert q.ok and q.result("counit_laws").ok


def test_pair_groupoid():
    pg = pair_groupoid_algebra(2)
    assert check_weak_hopf(pg).ok
    h = check_hopf(pg)
    assert "counit_multiplicative" in h.failed()
    assert h.result("counit_multiplicative").witness is not None
    assert check_hopf(pair_groupoid_algebra(1)).ok
    assert check_weak_hopf(pair_groupoid_dual(2)).ok


def test_counital_subalgebras():
    AL, AR, rep, W = counital_subalgebras(pair_groupoid_algebra(2))
    assert rep.ok and rep.dim_left == 2 and rep.dim_right == 2
    assert rep.commute and rep.left_commutative and rep.antipode_anti_multiplicative
    _, _, rep1, _ = counital_subalgebras(group_algebra(3))
    assert rep1.dim_left == 1 and rep1.dim_right == 1


def test_quasi_normalization_failure():
    q = promote_to_quasi(group_algebra(3))
    c = q.algebra.ctx
    bad = HopfData(q.algebra, q.delta, q.counit, q.antipode, q.phi.scale(c(2)),
                   q.phi_inv.scale(c("1/2")), q.alpha, q.beta)
    rep = check_quasi_hopf(bad)
    assert "normal" in rep.failed()
    with pytest.raises(ValueError):
        check_quasi_hopf(group_algebra(3))


def test_perturbation_fleet_targets():
    fleet = perturbation_fleet()
    assert sorted(fleet) == AXIOMS
    for target, (Hd, _) in fleet.items():
        rep = check_weak_hopf(Hd)
        failed = [a for a in AXIOMS if not rep.result(a).ok]
        assert failed == [target]
        assert rep.result(target).witness is not None


def test_antipode_identity_perturbation():
    pg = pair_groupoid_algebra(2)
    H = HopfData(pg.algebra, pg.delta, pg.counit, Matrix.identity(pg.algebra.ctx, 4))
    res = check_weak_hopf(H).result("(iii)")
    assert not res.ok and res.witness["element"] == ["e12"]


def test_weak_hopf_implies_qf():
    fleet = [group_algebra(p) for p in (2, 3, 5)] + [pair_groupoid_algebra(2), pair_groupoid_dual(2),
                                                      pair_groupoid_algebra(3), discrete()]
    for Hd in fleet:
        if check_weak_hopf(Hd).ok:
            assert is_quasi_frobenius(Hd.algebra)


def test_axiom_i_cap(monkeypatch):
    monkeypatch.setenv("FROBLAB_MAX_DIM", "2")
    rep = check_weak_hopf(pair_groupoid_algebra(2))
    assert not rep.flags["axiom_i_checked"]
