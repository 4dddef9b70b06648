"""Command-line front end.

Exit codes: 0 success / property holds, 1 property fails (recognition
commands), 2 input error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from .corpus import all_labeled_graphs, check_batch, random_graphs
from .evs import equimatchable_certificate, evs_space
from .graph import Graph, GraphError, parse_graph
from .linalg import Restriction, WeightSpace, format_rational, nullspace
from .oracle import (
    OracleLimitError, equal_weight_restrictions, maximal_independent_sets, maximal_matchings,
)
from .wcw import well_covered_certificate, wcw_space

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


def _load(path: str) -> Graph:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc.strerror or exc}") from None
    return parse_graph(text)


def _labels(g: Graph, mode: str) -> list[str]:
    if mode == "wcw":
        return [f"w{v}" for v in range(g.n)]
    return [f"w({u},{v})" for u, v in g.edges]


def _strip_witness(provenance: dict) -> dict:
    return {k: v for k, v in provenance.items() if k not in ("witness", "sets")}


def space_document(g: Graph, mode: str, space: WeightSpace, restrictions: Sequence[Restriction],
                   certificates: bool, source: str = "pipeline") -> dict:
    labels = _labels(g, mode)
    return {
        "n": g.n,
        "m": g.m,
        "edges": [list(e) for e in g.edges],
        "mode": mode,
        "source": source,
        "dimension": space.dimension,
        "basis": [[format_rational(x) for x in row] for row in space.basis],
        "restrictions": [
            {
                "coeffs": [format_rational(c) for c in r.coeffs],
                "equation": r.equation(labels),
                "provenance": dict(r.provenance) if certificates else _strip_witness(r.provenance),
            }
            for r in restrictions
        ],
    }


def _print_space(doc: dict) -> None:
    what = "WCW(G)" if doc["mode"] == "wcw" else "EVS(G)"
    print(f"{what}: dimension {doc['dimension']} (n={doc['n']}, m={doc['m']}, {doc['source']})")
    print("basis:")
    for row in doc["basis"]:
        print("  (" + ", ".join(row) + ")")
    print(f"restrictions ({len(doc['restrictions'])}):")
    for r in doc["restrictions"]:
        prov = r["provenance"]
        tag = " ".join(f"{k}={v}" for k, v in prov.items() if k != "witness")
        print(f"  {r['equation']}    [{tag}]")
        if "witness" in prov:
            print(f"      witness: {prov['witness']}")


def _emit(doc: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(doc, sort_keys=True))
    else:
        _print_space(doc)


def cmd_space(args, mode: str) -> int:
    g = _load(args.file)
    if mode == "wcw":
        space, restrictions = wcw_space(g, jobs=args.jobs)
    else:
        space, restrictions = evs_space(g, jobs=args.jobs)
    _emit(space_document(g, mode, space, restrictions, args.certificates), args.json)
    return EXIT_OK


def cmd_oracle(args, mode: str) -> int:
    g = _load(args.file)
    if mode == "wcw":
        sets, dim, kind = maximal_independent_sets(g), g.n, "independent"
    else:
        sets, dim, kind = maximal_matchings(g), g.m, "matching"
    restrictions = equal_weight_restrictions(sets, dim, kind)
    doc = space_document(g, mode, nullspace(restrictions, dim), restrictions, args.certificates, "oracle")
    doc["maximal_sets"] = len(sets)
    _emit(doc, args.json)
    return EXIT_OK


def cmd_recognize_wellcovered(args) -> int:
    g = _load(args.file)
    verdict = well_covered_certificate(g)
    doc: dict = {"n": g.n, "m": g.m, "well_covered": verdict is None}
    if verdict is not None:
        s = verdict.completion
        doc["certificate"] = {
            **verdict.core.as_dict(),
            "witness": sorted(s),
            "maximal_sets": [sorted(s | verdict.core.b_x), sorted(s | verdict.core.b_y)],
        }
    if args.json:
        print(json.dumps(doc, sort_keys=True))
    elif verdict is None:
        print("well-covered")
    else:
        c = doc["certificate"]
        print("not well-covered")
        print(f"  maximal independent sets {c['maximal_sets'][0]} and {c['maximal_sets'][1]} differ in size")
    return EXIT_OK if verdict is None else EXIT_FALSE


def cmd_recognize_equimatchable(args) -> int:
    g = _load(args.file)
    cert = equimatchable_certificate(g)
    doc: dict = {"n": g.n, "m": g.m, "equimatchable": cert is None}
    if cert is not None:
        path, witness = cert
        doc["certificate"] = {"path": list(path), **witness.as_dict(g)}
    if args.json:
        print(json.dumps(doc, sort_keys=True))
    elif cert is None:
        print("equimatchable")
    else:
        c = doc["certificate"]
        print("not equimatchable")
        print(f"  P4 {c['path']} is the symmetric difference of maximal matchings")
        print(f"  {c['m1']} (size {len(c['m1'])}) and {c['m2']} (size {len(c['m2'])})")
    return EXIT_OK if cert is None else EXIT_FALSE


def _run_checks(graphs: list[Graph], jobs: int, line_max_m: int) -> list:
    if jobs <= 1:
        return check_batch((graphs, line_max_m))
    chunk = max(1, -(-len(graphs) // (jobs * 8)))
    batches = [(graphs[i:i + chunk], line_max_m) for i in range(0, len(graphs), chunk)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return [c for part in pool.map(check_batch, batches) for c in part]


def cmd_verify(args) -> int:
    if args.max_n < 1:
        raise GraphError("--max-n must be at least 1")
    exhaustive = list(all_labeled_graphs(args.max_n))
    sizes = (args.max_n + 1, args.max_n + 2)
    sampled = random_graphs(args.samples, sizes, args.seed) if args.samples else []
    checks = _run_checks(exhaustive + sampled, args.jobs, args.line_max_m)
    full, extra = checks[:len(exhaustive)], checks[len(exhaustive):]

    def tally(items, attr):
        relevant = [getattr(c, attr) for c in items if getattr(c, attr) is not None]
        return sum(relevant), len(relevant)

    lines = []
    ok, tot = tally(full, "evs_matches")
    lines.append(f"{ok}/{tot} graphs: evs matches oracle")
    ok, tot = tally(full, "wcw_matches")
    lines.append(f"{ok}/{tot} claw-free graphs: wcw matches oracle")
    ok, tot = tally(full, "well_covered_consistent")
    lines.append(f"{ok}/{tot} claw-free graphs: well-covered recognition matches oracle")
    ok, tot = tally(full + extra, "line_identity")
    lines.append(f"{ok}/{tot} graphs with m <= {args.line_max_m}: EVS(G) = WCW(L(G))")
    if sampled:
        ok, tot = tally(extra, "evs_matches")
        lines.append(f"{ok}/{tot} sampled graphs (n in {{{sizes[0]},{sizes[1]}}}, seed {args.seed}): "
                     "evs matches oracle")
    ok, tot = tally(full + extra, "recognition_consistent")
    lines.append(f"{ok}/{tot} graphs: equimatchable recognition consistent")
    passed = all(c.ok for c in checks)
    if args.json:
        print(json.dumps({"max_n": args.max_n, "samples": args.samples, "seed": args.seed,
                          "report": lines, "passed": passed}, sort_keys=True))
    else:
        print("\n".join(lines))
        print("PASS" if passed else "FAIL")
    return EXIT_OK if passed else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--certificates", action="store_true", help="include witnesses")
    common.add_argument("--jobs", type=int, default=1, metavar="J", help="worker processes")

    parser = argparse.ArgumentParser(
        prog="weightspaces",
        description="Weight spaces of w-well-covered claw-free graphs and w-equimatchable graphs.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in (
        ("wcw", "WCW(G) of a claw-free graph"),
        ("evs", "EVS(G) of any graph"),
        ("recognize-wellcovered", "is the claw-free graph well-covered?"),
        ("recognize-equimatchable", "is the graph equimatchable?"),
        ("oracle-wcw", "WCW(G) by enumerating maximal independent sets"),
        ("oracle-evs", "EVS(G) by enumerating maximal matchings"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("file", help="graph file: 'n m' header, then m lines 'u v'")
    v = sub.add_parser("verify", parents=[common], help="compare pipelines with oracles on a corpus")
    v.add_argument("--max-n", type=int, required=True, help="exhaustive sweep over all graphs on this many vertices")
    v.add_argument("--samples", type=int, default=0, help="extra random graphs on max-n+1 or max-n+2 vertices")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--line-max-m", type=int, default=8, help="edge cap for the line-graph identity check")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "wcw": lambda a: cmd_space(a, "wcw"),
        "evs": lambda a: cmd_space(a, "evs"),
        "oracle-wcw": lambda a: cmd_oracle(a, "wcw"),
        "oracle-evs": lambda a: cmd_oracle(a, "evs"),
        "recognize-wellcovered": cmd_recognize_wellcovered,
        "recognize-equimatchable": cmd_recognize_equimatchable,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except (GraphError, OracleLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AssertionError as exc:
        print(f"internal error: invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
