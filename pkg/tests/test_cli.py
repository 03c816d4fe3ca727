import json

import pytest

from froblab.cli import main
from froblab.interchange import (BundleError, bundle_to_algebra,
                                 bundle_to_hopf, hopf_to_bundle)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_taft_analyze(capsys, tmp_path):
    out_file = tmp_path / "r.json"
    code, out, _ = run(capsys, "taft-analyze", "--p", "2", "--out", str(out_file))
    rep = json.loads(out)
    assert code == 0 and rep["dim"] == 4 and rep["frobenius"] and rep["hopf"]
    assert json.loads(out_file.read_text()) == rep
    code, out, _ = run(capsys, "taft-analyze", "--p", "3")
    rows = json.loads(out)["projectives"]
    assert [r["soc"] for r in rows] == ["V1", "V2", "V0"]
    code, _, err = run(capsys, "taft-analyze", "--p", "4")
    assert code == 2 and "prime" in err


def test_taftd_fast_path(capsys):
    code, out, _ = run(capsys, "taftd", "--p", "3", "--d", "2,2,2")
    assert code == 0 and "frobenius_predicted\ttrue" in out
    code, out, _ = run(capsys, "taftd", "--p", "2", "--d", "1,1")
    assert "predicted_dim\t16" in out and "frobenius_predicted\ttrue" in out
    lines = out.splitlines()
    assert lines[0] == "k\tc_k\tsoc\tcosoc\tverdict"
    code, _, _ = run(capsys, "taftd", "--p", "3", "--d", "1,2")
    assert code == 2
    code, _, _ = run(capsys, "taftd", "--p", "2", "--d", "1,x")
    assert code == 2


def test_taftd_reconstruct_and_frobcheck(capsys, tmp_path):
    bundle = tmp_path / "h.json"
    code, out, _ = run(capsys, "taftd", "--p", "2", "--d", "1,2", "--reconstruct", "--export", str(bundle))
    assert code == 0
    assert "dim\t81" in out and "frobenius\tfalse" in out and "agreement\ttrue" in out
    code, out, _ = run(capsys, "frobcheck", "--algebra", str(bundle))
    rep = json.loads(out)
    assert code == 0 and rep["quasi_frobenius"] and not rep["frobenius"]


def test_frobcheck_builtin(capsys, tmp_path):
    t, tp, ut = tmp_path / "t.json", tmp_path / "tp.json", tmp_path / "ut.json"
    assert main(["export", "taft", "--p", "3", "--out", str(t), "--projectives-out", str(tp)]) == 0
    assert main(["export", "upper-triangular", "--out", str(ut)]) == 0
    capsys.readouterr()
    code, out, _ = run(capsys, "frobcheck", "--algebra", str(t), "--projectives", str(tp))
    rep = json.loads(out)
    assert rep["quasi_frobenius"] and rep["frobenius"]
    assert [(r["soc"], r["cosoc"]) for r in rep["table"]] == [(1, 1)] * 3
    code, out, _ = run(capsys, "frobcheck", "--algebra", str(ut))
    rep = json.loads(out)
    assert code == 0 and not rep["quasi_frobenius"] and not rep["frobenius"]


def test_frobcheck_malformed(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"p": 2')
    assert run(capsys, "frobcheck", "--algebra", str(bad))[0] == 2
    bad.write_text(json.dumps({"p": 2, "dim": 2, "structure_constants": [[0, 0, 5, "1"]], "unit": ["1", "0"]}))
    assert run(capsys, "frobcheck", "--algebra", str(bad))[0] == 2
    # not associative: b1 b1 = b0 while b0 is the unit and b1 b0 = 0
    bad.write_text(json.dumps({"p": 2, "dim": 2, "structure_constants": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 1, 0, "1"]],
                               "unit": ["1", "0"]}))
    assert run(capsys, "frobcheck", "--algebra", str(bad))[0] == 2


def test_axioms_verify(capsys, tmp_path):
    g = tmp_path / "g.json"
    main(["export", "group", "--p", "3", "--out", str(g)])
    capsys.readouterr()
    code, out, _ = run(capsys, "axioms-verify", "--bundle", str(g), "--law", "weak-hopf")
    assert code == 0 and json.loads(out)["report"]["ok"]
    code, _, err = run(capsys, "axioms-verify", "--bundle", str(g), "--law", "quasi-hopf")
    assert code == 2 and "phi" in err
    pt = tmp_path / "pt.json"
    main(["export", "perturbed", "--axiom", "(iv)", "--out", str(pt)])
    capsys.readouterr()
    code, out, _ = run(capsys, "axioms-verify", "--bundle", str(pt), "--law", "weak-hopf")
    rep = json.loads(out)["report"]
    assert code == 1 and rep["failed"] == ["(iv)"]
    assert [a for a in rep["axioms"] if a["axiom"] == "(iv)"][0]["witness"]


def test_seed_determinism(capsys):
    a = run(capsys, "taft-analyze", "--p", "3", "--seed", "7")[1]
    b = run(capsys, "taft-analyze", "--p", "3", "--seed", "7")[1]
    assert a == b and json.loads(a)["seed"] == 7


@pytest.mark.parametrize("what", ["taft", "group", "pair-groupoid", "pair-groupoid-dual"])
def test_roundtrip_verdicts(tmp_path, what):
    from froblab.algcore import is_frobenius, is_quasi_frobenius
    from froblab.hopfax import check_weak_hopf
    from froblab.interchange import load_json
    f = tmp_path / "b.json"
    main(["export", what, "--p", "2", "--out", str(f)])
    obj = load_json(f)
    Hd = bundle_to_hopf(obj)
    again = bundle_to_hopf(json.loads(json.dumps(hopf_to_bundle(Hd))))
    assert hopf_to_bundle(again) == obj
    assert check_weak_hopf(Hd).as_dict() == check_weak_hopf(again).as_dict()
    assert is_quasi_frobenius(Hd.algebra) == is_quasi_frobenius(again.algebra)
    assert bool(is_frobenius(Hd.algebra)) == bool(is_frobenius(again.algebra))


def test_bundle_errors():
    with pytest.raises(BundleError):
        bundle_to_algebra([])
    with pytest.raises(BundleError):
        bundle_to_algebra({"p": 4, "dim": 1, "structure_constants": [], "unit": ["1"]})
    with pytest.raises(BundleError):
        bundle_to_algebra({"p": 2, "dim": 1, "structure_constants": [[0, 0, 0, 1.5]], "unit": ["1"]})
