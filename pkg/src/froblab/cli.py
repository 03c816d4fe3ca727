"""froblab command line.

Exit codes: 0 success, 1 a check failed, 2 malformed input.
"""
from __future__ import annotations

import argparse
import sys
import time

from .algcore import (DEFAULT_SEED, cosocle_dim, is_frobenius, is_isomorphic,
                      is_quasi_frobenius, socle, submodule)
from .interchange import (BundleError, algebra_to_bundle, bundle_to_algebra,
                          bundle_to_hopf, dump_json, hopf_to_bundle,
                          json_to_modules, load_json, modules_to_json)
from .scalars import field_context

EXIT_OK, EXIT_FAIL, EXIT_MALFORMED = 0, 1, 2
LAWS = ("hopf", "weak-hopf", "quasi-hopf")


class UsageError(ValueError):
    pass


def _prime(p):
    try:
        field_context(p)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    return p


def _parse_d(text, p):
    try:
        d = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"--d must be comma-separated integers, got {text!r}") from None
    if len(d) != p:
        raise UsageError(f"--d needs {p} entries, got {len(d)}")
    if any(x < 1 for x in d):
        raise UsageError(f"--d entries must be positive, got {d}")
    return d


def _tsv(rows, columns):
    lines = ["\t".join(columns)]
    for r in rows:
        lines.append("\t".join(_cell(r[c]) for c in columns))
    return "\n".join(lines)


def _cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _emit(report, args):
    text = dump_json(report)
    if getattr(args, "out", None):
        dump_json(report, args.out)
    return text


# commands

def cmd_taft_analyze(args):
    from .hopfax import check_hopf
    from .taft import build_taft, projective_cover, radical_check, simple_module
    from .wcat import dual_index_D
    p = _prime(args.p)
    t0 = time.perf_counter()
    T = build_taft(p)
    simples = [simple_module(T, k) for k in range(p)]
    hopf = check_hopf(T.hopf_data())
    rad = radical_check(T)
    rows = []
    for k in range(p):
        P = projective_cover(T, k)
        soc_mod, _ = submodule(P, socle(P), closed=True)
        soc = [j for j in range(p) if soc_mod.dim == 1 and is_isomorphic(soc_mod, simples[j])]
        D, r = dual_index_D(T, k)
        rows.append({"k": k, "dim": P.dim, "soc": f"V{soc[0]}" if len(soc) == 1 else "?",
                     "cosoc": f"V{k}", "D": D, "r": r})
    fr = is_frobenius(T.algebra, seed=args.seed)
    report = {"command": "taft-analyze", "p": p, "seed": args.seed, "dim": T.dim,
              "hopf": hopf.ok, "radical": {"ok": rad.ok, "dim": rad.dim, "expected_dim": rad.expected_dim,
                                           "nilpotency_index": rad.nilpotency_index},
              "projectives": rows, "frobenius": fr.frobenius, "frobenius_methods": fr.methods,
              "hopf_axioms": hopf.as_dict()}
    if args.timings:
        report["timings"] = {"total": time.perf_counter() - t0}
    print(_emit(report, args))
    bad = [r["k"] for r in rows if r["soc"] != f"V{(r['k'] + 1) % p}"]
    if not hopf.ok or not rad.ok or not fr.frobenius or bad:
        print(f"taft-analyze: check failed (hopf={hopf.ok}, radical={rad.ok}, "
              f"frobenius={fr.frobenius}, bad socles={bad})", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_frobcheck(args):
    A = bundle_to_algebra(load_json(args.algebra))
    mods = json_to_modules(load_json(args.projectives), A) if args.projectives else None
    t0 = time.perf_counter()
    qf = is_quasi_frobenius(A)
    fr = is_frobenius(A, seed=args.seed)
    report = {"command": "frobcheck", "seed": args.seed, "dim": A.dim,
              "quasi_frobenius": qf, "frobenius": fr.frobenius, "method_report": fr.as_dict()}
    if mods is not None:
        rows = []
        for k, M in enumerate(mods):
            s, c = socle(M).dim, cosocle_dim(M)
            rows.append({"k": k, "name": M.name, "dim": M.dim, "soc": s, "cosoc": c,
                         "verdict": "equal" if s == c else "differ"})
        report["table"] = rows
    if args.timings:
        report["timings"] = {"total": time.perf_counter() - t0}
    print(_emit(report, args))
    return EXIT_OK


def cmd_axioms_verify(args):
    from .hopfax import check_hopf, check_quasi_hopf, check_weak_hopf
    require = ("phi", "phi_inv", "alpha", "beta") if args.law == "quasi-hopf" else ()
    Hd = bundle_to_hopf(load_json(args.bundle), require=require)
    check = {"hopf": check_hopf, "weak-hopf": check_weak_hopf, "quasi-hopf": check_quasi_hopf}[args.law]
    rep = check(Hd)
    report = {"command": "axioms-verify", "law": args.law, "name": Hd.name, "report": rep.as_dict()}
    print(_emit(report, args))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_taftd(args):
    from .wcat import criterion_table, frobenius_criterion, predicted_total_dim
    p = _prime(args.p)
    d = _parse_d(args.d, p)
    t0 = time.perf_counter()
    table = criterion_table(d)
    crit = frobenius_criterion(d)
    total = predicted_total_dim(d)
    report = {"command": "taftd", "p": p, "d": d, "seed": args.seed, "table": table,
              "predicted_dim": total, "criterion": crit.as_dict()}
    out = [_tsv(table, ["k", "c_k", "soc", "cosoc", "verdict"]),
           f"predicted_dim\t{total}", f"frobenius_predicted\t{_cell(crit.frobenius)}",
           f"seed\t{args.seed}"]
    status = EXIT_OK
    if args.reconstruct:
        from .reconstruct import analyze, build, plan
        R = build(plan(p, d))
        a = analyze(R, seed=args.seed)
        report["direct"] = a.as_dict()
        out.append(_tsv(a.table, ["k", "dim", "soc", "cosoc", "soc_predicted", "cosoc_predicted"]))
        out += [f"dim\t{a.dim}", f"quasi_frobenius\t{_cell(a.quasi_frobenius)}",
                f"frobenius\t{_cell(a.frobenius)}"]
        if args.export:
            dump_json(algebra_to_bundle(R.H, f"taft{tuple(d)}"), args.export)
        agree = a.consistent and all(r["soc"] == t["soc"] and r["cosoc"] == t["cosoc"]
                                     for r, t in zip(a.table, table))
        out.append(f"agreement\t{_cell(agree)}")
        if not agree:
            print("taftd: direct computation disagrees with the prediction", file=sys.stderr)
            status = EXIT_FAIL
    if args.timings:
        report["timings"] = {"total": time.perf_counter() - t0}
    if args.out:
        dump_json(report, args.out)
    print("\n".join(out))
    return status


def _export_target(args):
    from .algcore.examples import upper_triangular
    from . import hopfax
    what = args.what
    if what == "taft":
        from .taft import build_taft, projective_cover
        T = build_taft(_prime(args.p))
        return hopf_to_bundle(T.hopf_data()), [projective_cover(T, k) for k in range(T.p)]
    if what == "group":
        return hopf_to_bundle(hopfax.group_algebra(_prime(args.p))), None
    if what == "pair-groupoid":
        return hopf_to_bundle(hopfax.pair_groupoid_algebra(args.n, _prime(args.p))), None
    if what == "pair-groupoid-dual":
        return hopf_to_bundle(hopfax.pair_groupoid_dual(args.n, _prime(args.p))), None
    if what == "upper-triangular":
        return algebra_to_bundle(upper_triangular(field_context(_prime(args.p))), "upper triangular"), None
    if what == "perturbed":
        fleet = hopfax.perturbation_fleet()
        if args.axiom not in fleet:
            raise UsageError(f"--axiom must be one of {sorted(fleet)}")
        return hopf_to_bundle(fleet[args.axiom][0]), None
    if what == "reconstructed":
        import numpy as np
        from .algcore import regular_module
        from .reconstruct import build, plan
        p = _prime(args.p)
        R = build(plan(p, _parse_d(args.d, p)))
        H, N = R.H, len(R.plan.summands)
        reg = regular_module(H)
        mods = []
        for k in range(p):
            u0 = R.plan.summands.index(k)
            vecs = np.stack([H.basis_vector(R.index(u, u0)) for u in range(N)], axis=1)
            M, _ = submodule(reg, vecs, closed=True)
            M.name = f"He{k}"
            mods.append(M)
        return algebra_to_bundle(H, f"reconstructed {args.d}"), mods
    raise UsageError(f"unknown export target {what!r}")  # pragma: no cover


def cmd_export(args):
    bundle, mods = _export_target(args)
    dump_json(bundle, args.out)
    if args.projectives_out:
        if mods is None:
            raise UsageError(f"no projective list for {args.what}")
        dump_json(modules_to_json(mods), args.projectives_out)
    print(f"wrote {args.out}")
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(prog="froblab", description="Frobenius and Hopf axiom checks over Q(zeta_p).")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, out=True):
        sp.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"random seed (default {DEFAULT_SEED})")
        sp.add_argument("--timings", action="store_true", help="include wall-clock timings in the report")
        if out:
            sp.add_argument("--out", help="also write the JSON report here")

    sp = sub.add_parser("taft-analyze", help="Taft algebra: Hopf axioms, radical, projectives, Frobenius")
    sp.add_argument("--p", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_taft_analyze)

    sp = sub.add_parser("frobcheck", help="quasi-Frobenius and Frobenius verdicts for a bundle")
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--projectives", help="JSON module list; adds a soc/cosoc table")
    common(sp)
    sp.set_defaults(func=cmd_frobcheck)

    sp = sub.add_parser("axioms-verify", help="check Hopf, weak Hopf or quasi-Hopf axioms")
    sp.add_argument("--bundle", required=True)
    sp.add_argument("--law", choices=LAWS, required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_axioms_verify)

    sp = sub.add_parser("taftd", help="Taft(d) criterion table, optionally with direct reconstruction")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--d", required=True, help="comma-separated base dimensions d_1,...,d_p")
    sp.add_argument("--reconstruct", action="store_true")
    sp.add_argument("--export", help="with --reconstruct, write the algebra bundle here")
    common(sp)
    sp.set_defaults(func=cmd_taftd)

    sp = sub.add_parser("export", help="write a built-in algebra as a JSON bundle")
    sp.add_argument("what", choices=["taft", "group", "pair-groupoid", "pair-groupoid-dual",
                                     "upper-triangular", "perturbed", "reconstructed"])
    sp.add_argument("--p", type=int, default=2)
    sp.add_argument("--n", type=int, default=2, help="pair groupoid size")
    sp.add_argument("--d", default="1,2", help="base dimensions for reconstructed")
    sp.add_argument("--axiom", default="(iii)", help="targeted axiom for perturbed")
    sp.add_argument("--out", required=True)
    sp.add_argument("--projectives-out")
    sp.set_defaults(func=cmd_export)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, BundleError) as exc:
        print(f"froblab {args.command}: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except AssertionError as exc:
        print(f"froblab {args.command}: check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
