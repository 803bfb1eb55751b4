"""Command-line entry point.

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 resource cap.
All output is JSON with sorted keys, so identical arguments give identical bytes.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from pathlib import Path

from . import degen, pluecker, tableaux
from .errors import ResourceCapError, SemigrassError
from .pluecker import PBW, SS
from .poset import Q, QTILDE, Poset
from .symalg import OrderSpec, frac_str, initial_term, weight_check


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _families(arg: str) -> list:
    return [SS, PBW] if arg == "both" else [arg]


def _add_pn(sp, p=2, n=4):
    sp.add_argument("--p", type=int, default=p)
    sp.add_argument("--n", type=int, default=n)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="semigrass", description=__doc__.splitlines()[0])
    ap.add_argument("--seed-docs", metavar="DIR", help="write the worked-example golden files and exit")
    sub = ap.add_subparsers(dest="command")

    sp = sub.add_parser("poset", help="Hasse diagram and ideals of Q or Q~")
    _add_pn(sp)
    sp.add_argument("--kind", choices=[Q, QTILDE], default=Q)
    sp.add_argument("--kmax", type=int, default=0)
    sp.add_argument("--format", choices=["json", "dot"], default="json")
    sp.add_argument("--ideals", action="store_true", help="list the order ideals")
    sp.add_argument("--plot", metavar="FILE", help="also render the Hasse window with matplotlib")

    sp = sub.add_parser("gens", help="generator indices, optionally with initial terms")
    _add_pn(sp)
    sp.add_argument("--family", choices=[SS, PBW], default=SS)
    sp.add_argument("--kmax", type=int, default=0)
    sp.add_argument("--initial", action="store_true")

    sp = sub.add_parser("tableaux", help="enumerate (PBW-)semistandard semi-infinite tableaux")
    _add_pn(sp)
    sp.add_argument("--kind", choices=[SS, PBW], default=SS)
    sp.add_argument("--m", type=int, default=1)
    sp.add_argument("--e", type=int, default=0)
    sp.add_argument("--count", action="store_true")
    sp.add_argument("--text", action="store_true", help="plain-text grids instead of JSON")

    sp = sub.add_parser("hilbert", help="number of chains in bidegree (m p, e)")
    _add_pn(sp)
    sp.add_argument("--family", choices=[SS, PBW, "both"], default="both")
    sp.add_argument("--m", type=int, default=1)
    sp.add_argument("--e", type=int, default=0)

    sp = sub.add_parser("verify", help="run the full verification sweep")
    _add_pn(sp)
    sp.add_argument("--family", choices=[SS, PBW, "both"], default="both")
    sp.add_argument("--m-max", type=int, default=2)
    sp.add_argument("--e-max", type=int, default=1)
    sp.add_argument("--d", type=int, default=None, help="truncation degree (default: e-max)")
    sp.add_argument("--kmax", type=int, default=None, help="shift bound for index sweeps (default: e-max)")
    sp.add_argument("--report-dir", metavar="DIR", help="write report.json, cells.csv and figures here")
    return ap


def _validate(args, ap):
    if args.command is None:
        return
    if not 1 <= args.p < args.n:
        ap.error("need 1 <= p < n")
    for name in ("kmax", "m", "e", "m_max", "e_max", "d"):
        v = getattr(args, name, None)
        if v is not None and v < 0:
            ap.error(f"--{name.replace('_', '-')} must be nonnegative")
    if args.command == "verify":
        if args.d is None:
            args.d = args.e_max
        if args.kmax is None:
            args.kmax = args.e_max
        if args.d < args.e_max:
            ap.error("--d must be at least --e-max")


def cmd_poset(args) -> tuple:
    P = Poset(args.kind, args.p, args.n)
    if args.plot:
        from .plotting import plot_hasse

        plot_hasse(P, args.plot, args.kmax)
    if args.format == "dot":
        return P.to_dot(args.kmax), 0
    out = {
        "kind": args.kind,
        "p": args.p,
        "n": args.n,
        "kmax": args.kmax,
        "cells": [list(c) for c in P.window(args.kmax)],
        "edges": [
            {"lower": list(a), "upper": list(b), "clause": P.clause(a, b)} for a, b in P.hasse_edges(args.kmax)
        ],
    }
    if args.ideals:
        ideals = P.enumerate_ideals(args.kmax)
        out["ideal_count"] = len(ideals)
        out["ideals"] = [{"level": J.level, "cells": J.to_json()} for J in ideals]
    return _dump(out), 0


def cmd_gens(args) -> tuple:
    rows = []
    order = pluecker.order_for(args.family, args.p, args.n)
    for u in pluecker.gen_family(args.p, args.n, args.family, args.kmax):
        row = u.to_json()
        if args.initial:
            coeff, mono = initial_term(order, pluecker.generator(args.p, args.n, u))
            record, closed = pluecker.closed_initial(args.family, args.p, args.n, u.I, u.k)
            row["initial"] = {
                "monomial": mono.to_json(),
                "text": str(mono),
                "coefficient": frac_str(coeff),
                "closed_form_matches": mono == closed,
                "sign": record.to_json(1 if coeff > 0 else -1),
            }
        rows.append(row)
    return _dump({"p": args.p, "n": args.n, "family": args.family, "kmax": args.kmax, "generators": rows}), 0


def cmd_tableaux(args) -> tuple:
    ts = tableaux.enumerate_tableaux(args.kind, args.p, args.n, args.m, args.e)
    if args.count:
        return _dump({"kind": args.kind, "p": args.p, "n": args.n, "m": args.m, "e": args.e, "count": len(ts)}), 0
    if args.text:
        return "\n".join(T.render() for T in ts), 0
    return _dump([T.to_json() for T in ts]), 0


def cmd_hilbert(args) -> tuple:
    out = {f: degen.hilbert_count(f, args.p, args.n, args.m, args.e) for f in _families(args.family)}
    return _dump({"p": args.p, "n": args.n, "m": args.m, "e": args.e, "counts": out}), 0


def run_verify(p, n, families, m_max, e_max, d, kmax) -> dict:
    checks, cells, sign_rows = [], [], []

    for fam in families:
        mismatches, rows = pluecker.check_closed_forms(p, n, fam, kmax)
        sign_rows.extend(rows)
        checks.append(
            {
                "check": f"closed-forms-{fam}",
                "checked": len(rows),
                "status": "fail" if mismatches else "ok",
                "counterexamples": mismatches[: degen.MAX_COUNTEREXAMPLES],
            }
        )
        checks.append(degen.check_bijection(fam, p, n, kmax).to_json())
        checks.append(degen.check_order_isomorphism(fam, p, n, kmax).to_json())
        gens = [pluecker.generator(p, n, u) for u in pluecker.gen_family(p, n, fam, kmax)]
        wr = weight_check(p, gens, OrderSpec(f"{fam}-semiinf", p, n))
        checks.append(
            {"check": f"weights-{fam}", "checked": wr.checked, "status": "ok" if wr.passed else "fail",
             "counterexamples": wr.failures}
        )
    if PBW in families:
        checks.append(degen.check_psi(p, n, kmax).to_json())

    for m in range(1, m_max + 1):
        for e in range(e_max + 1):
            counts = {f: degen.hilbert_count(f, p, n, m, e) for f in (SS, PBW)}
            for fam in families:
                s = degen.sagbi_verify(fam, p, n, m, e, d)
                b = degen.basis_verify(fam, p, n, m, e, d)
                ntab = len(tableaux.enumerate_tableaux(fam, p, n, m, e))
                agree = counts[SS] == counts[PBW] == ntab == s.dim == b.dim
                status = "ok" if s.ok and b.ok and agree else "fail"
                cells.append(
                    {
                        "cell": {"m": m, "e": e, "d": d},
                        "family": fam,
                        "dim": s.dim,
                        "expected": s.expected,
                        "hilbert": counts,
                        "tableaux": ntab,
                        "status": status,
                        "counterexamples": s.failures + b.failures
                        + ([] if agree else [{"reason": "count disagreement"}]),
                    }
                )
    ok = all(c["status"] == "ok" for c in checks + cells)
    return {
        "config": {"p": p, "n": n, "families": families, "m_max": m_max, "e_max": e_max, "d": d, "kmax": kmax},
        "status": "ok" if ok else "fail",
        "checks": checks,
        "cells": cells,
        "sign_table": sign_rows,
    }


def write_report(report: dict, outdir) -> None:
    from .plotting import plot_cells, plot_hasse

    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    (outdir / "report.json").write_text(_dump(report))
    flat = [
        {"family": c["family"], "m": c["cell"]["m"], "e": c["cell"]["e"], "d": c["cell"]["d"],
         "dim": c["dim"], "expected": c["expected"], "tableaux": c["tableaux"], "status": c["status"]}
        for c in report["cells"]
    ]
    with open(outdir / "cells.csv", "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=["family", "m", "e", "d", "dim", "expected", "tableaux", "status"])
        w.writeheader()
        w.writerows(flat)
    with open(outdir / "signs.csv", "w", newline="") as fh:
        fields = ["family", "I", "k", "computed_sign", "permutation_sign", "printed_exponent", "printed_sign"]
        w = csv.DictWriter(fh, fieldnames=fields, extrasaction="ignore")
        w.writeheader()
        for row in report["sign_table"]:
            w.writerow(row | {"I": " ".join(map(str, row["I"]))})
    if flat:
        plot_cells(flat, outdir / "cells.png")
    cfg = report["config"]
    plot_hasse(Poset(QTILDE, cfg["p"], cfg["n"]), outdir / "hasse.png", kmax=min(cfg["kmax"], 2))


def cmd_verify(args) -> tuple:
    report = run_verify(args.p, args.n, _families(args.family), args.m_max, args.e_max, args.d, args.kmax)
    if args.report_dir:
        write_report(report, args.report_dir)
    return _dump(report), 0 if report["status"] == "ok" else 1


def seed_docs(outdir) -> None:
    from .worked import golden_examples

    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for name, content in golden_examples().items():
        (outdir / name).write_text(content)


COMMANDS = {
    "poset": cmd_poset,
    "gens": cmd_gens,
    "tableaux": cmd_tableaux,
    "hilbert": cmd_hilbert,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    _validate(args, ap)
    try:
        if args.seed_docs:
            seed_docs(args.seed_docs)
            if args.command is None:
                return 0
        if args.command is None:
            ap.error("a command is required")
        text, code = COMMANDS[args.command](args)
    except ResourceCapError as exc:
        print(f"semigrass: {exc}", file=sys.stderr)
        return 3
    except (SemigrassError, OSError) as exc:
        print(f"semigrass: {exc}", file=sys.stderr)
        return 2
    try:
        sys.stdout.write(text)
        sys.stdout.flush()
    except BrokenPipeError:
        # reader closed early (e.g. piped into head); silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
    return code


if __name__ == "__main__":
    sys.exit(main())
