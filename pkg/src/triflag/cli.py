"""Command-line front end.  Emits JSON on stdout.

Exit codes: 0 ok / feasible, 1 malformed input, 2 infeasible, 3 oracle cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .complexes import TriComplex, edge_counts, is_color_shifted, within_budget
from .flagvec import COLOR_SETS, FlagVector, HVector, f_to_h, h_to_f, parse_int
from .maximize import EdgeInfeasible, is_feasible, maximize
from .oracle import DEFAULT_CAP, CapExceeded, InfeasibleEdges, brute_max

EXIT_OK, EXIT_MALFORMED, EXIT_INFEASIBLE, EXIT_CAP = 0, 1, 2, 3


class Malformed(ValueError):
    pass


def _triple(text: str, flag: str) -> tuple[int, int, int]:
    parts = [p for p in text.replace(" ", "").split(",") if p]
    if len(parts) != 3:
        raise Malformed(f"{flag} needs three comma-separated integers, got {text!r}")
    try:
        return tuple(parse_int(p, flag) for p in parts)
    except ValueError as exc:
        raise Malformed(str(exc)) from exc


def _load_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise Malformed(f"cannot read JSON from {path}: {exc}") from exc


def _flag_vector(args, need_f123=False) -> FlagVector:
    try:
        if args.json:
            doc = _load_json(args.json)
            if isinstance(doc, dict) and "input" in doc:
                doc = doc["input"]
            fv = FlagVector.from_json(doc)
        else:
            if args.f is None or args.e is None:
                raise Malformed("give budgets with --f a,b,c --e d,e,f or --json FILE")
            fv = FlagVector.of(_triple(args.f, "--f"), _triple(args.e, "--e"))
        if args.f123 is not None:
            fv = fv.with_f123(parse_int(args.f123, "--f123"))
    except (TypeError, ValueError, KeyError) as exc:
        if isinstance(exc, Malformed):
            raise
        raise Malformed(str(exc)) from exc
    if need_f123 and fv.f123 is None:
        raise Malformed("this command needs a proposed facet count (--f123 or \"f123\" in JSON)")
    return fv


def _emit(doc) -> None:
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")


def cmd_check(args) -> int:
    fv = _flag_vector(args, need_f123=True)
    verdict = is_feasible(fv)
    _emit({"input": fv.to_json(), **verdict.to_json(explicit_edges=args.witness_edges)})
    return EXIT_OK if verdict.feasible else EXIT_INFEASIBLE


def cmd_verify(args) -> int:
    doc = _load_json(args.verify)
    wdoc = doc.get("witness", doc) if isinstance(doc, dict) else None
    try:
        tc = TriComplex.from_json(wdoc)
    except (TypeError, ValueError, KeyError) as exc:
        raise Malformed(f"not a witness document: {exc}") from exc
    facets = tc.facet_count()
    out = {
        "facets": str(facets),
        "edges": [str(x) for x in edge_counts(tc)],
        "color_shifted": is_color_shifted(tc),
    }
    ok = out["color_shifted"]
    if "facets" in wdoc:
        out["facets_match"] = str(wdoc["facets"]) == str(facets)
        ok = ok and out["facets_match"]
    budget_source = args.f is not None or args.json is not None or "input" in doc
    if budget_source:
        if args.f is None and args.json is None:
            fv = FlagVector.from_json(doc["input"])
        else:
            fv = _flag_vector(args)
        out["within_budget"] = within_budget(tc, fv)
        ok = ok and out["within_budget"]
    _emit(out)
    return EXIT_OK if ok else EXIT_INFEASIBLE


def cmd_max(args) -> int:
    if args.verify:
        return cmd_verify(args)
    fv = _flag_vector(args)
    try:
        res = maximize(fv)
    except EdgeInfeasible as exc:
        _emit({"input": fv.to_json(), "error": "edge-infeasible", "reasons": exc.reasons})
        return EXIT_INFEASIBLE
    _emit(res.to_json(trace=args.trace, explicit_edges=args.witness_edges))
    return EXIT_OK


def cmd_oracle(args) -> int:
    fv = _flag_vector(args)
    try:
        res = brute_max(fv, cap=args.cap, workers=args.workers, below_weight=args.below_weight)
    except InfeasibleEdges as exc:
        _emit({"input": fv.to_json(), "error": "edge-infeasible", "reasons": str(exc).split("; ")})
        return EXIT_INFEASIBLE
    except CapExceeded as exc:
        _emit({"input": fv.to_json(), "error": "cap-exceeded", "detail": str(exc)})
        return EXIT_CAP
    _emit({"input": fv.to_json(), **res.to_json(explicit_edges=args.witness_edges)})
    return EXIT_OK


_H_NAMES = ("h1", "h2", "h3", "h12", "h13", "h23", "h123")


def cmd_hvec(args) -> int:
    if args.h is not None:
        parts = [p for p in args.h.replace(" ", "").split(",") if p]
        if len(parts) != 7:
            raise Malformed("--h needs seven integers: h1,h2,h3,h12,h13,h23,h123")
        try:
            values = [parse_int(p, "--h") for p in parts]
            hv = HVector(dict(zip(COLOR_SETS, [1] + values)))
            fv = h_to_f(hv)
        except (TypeError, ValueError) as exc:
            raise Malformed(str(exc)) from exc
        _emit({"f": fv.to_json()})
        return EXIT_OK
    fv = _flag_vector(args, need_f123=True)
    hv = f_to_h(fv)
    doc = {"h_empty": hv[()]}
    doc.update({name: hv[s] for name, s in zip(_H_NAMES, COLOR_SETS[1:])})
    _emit({"input": fv.to_json(), "h": {k: str(v) if abs(v) >= 2**53 else v for k, v in doc.items()}})
    return EXIT_OK


def cmd_examples(args) -> int:
    from .experiments import format_table, reproduce_examples

    results = reproduce_examples()
    if args.as_json:
        _emit(
            [
                {
                    "name": r.name,
                    "passed": r.passed,
                    "m": str(r.result.m) if r.result else None,
                    "mismatches": [{"check": c, "detail": d} for c, d in r.failures()],
                    "ledger": [rep.to_json() for rep in r.result.ledger] if (r.result and args.trace) else None,
                }
                for r in results
            ]
        )
    else:
        print(format_table(results))
    return EXIT_OK


def cmd_stats(args) -> int:
    from .experiments import sample_candidate_stats

    report = sample_candidate_stats(args.n, args.edge_max, args.vertex_mode, args.seed)
    if args.csv:
        report.write_csv(args.csv)
    _emit(
        {
            "n": report.n,
            "edge_max": report.edge_max,
            "vertex_mode": report.vertex_mode,
            "seed": report.seed,
            "mean_candidates": report.mean,
            "max_candidates": report.max,
            "bound_violations": report.violations,
            "shortcuts": report.shortcuts,
        }
    )
    return EXIT_OK if report.violations == 0 else EXIT_INFEASIBLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="triflag", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    budgets = argparse.ArgumentParser(add_help=False)
    budgets.add_argument("--f", help="vertex budgets f1,f2,f3")
    budgets.add_argument("--e", help="edge budgets f12,f13,f23")
    budgets.add_argument("--f123", help="proposed facet count")
    budgets.add_argument("--json", metavar="FILE", help="flag vector JSON ('-' for stdin)")
    budgets.add_argument("--witness-edges", action="store_true", help="list explicit edges (small witnesses only)")

    p = sub.add_parser("check", parents=[budgets], help="decide feasibility of a proposed f123")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("max", parents=[budgets], help="maximum facet count with witness")
    p.add_argument("--trace", action="store_true", help="include the candidate ledger")
    p.add_argument("--verify", metavar="FILE", help="recount facets of an emitted witness instead")
    p.set_defaults(func=cmd_max)

    p = sub.add_parser("oracle", parents=[budgets], help="exhaustive search (tiny inputs)")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="max staircase triples to enumerate")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--below-weight", action="store_true", help="also try every smaller edge count")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("hvec", parents=[budgets], help="flag f-vector to h-vector, or back with --h")
    p.add_argument("--h", help="h1,h2,h3,h12,h13,h23,h123 (h_empty = 1)")
    p.set_defaults(func=cmd_hvec)

    p = sub.add_parser("examples", help="rerun the worked reference instances")
    p.add_argument("--as-json", action="store_true")
    p.add_argument("--trace", action="store_true", help="with --as-json, include ledgers")
    p.set_defaults(func=cmd_examples)

    p = sub.add_parser("stats", help="candidate-count sampling study")
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--edge-max", type=int, default=10**6)
    p.add_argument("--vertex-mode", choices=("ample", "random"), default="ample")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", metavar="FILE", help="write one row per instance")
    p.set_defaults(func=cmd_stats)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_MALFORMED
    try:
        return args.func(args)
    except Malformed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
