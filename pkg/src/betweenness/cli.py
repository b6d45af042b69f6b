"""Command-line entry point: ``betweenness {axioms,classify,theorems,fixtures,gen}``.

Exit codes: 0 = everything requested holds, 1 = something fails,
2 = bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import recognizers as rec
from . import theorems as thm
from .axioms import DISPLAY, check_profile, parse_axiom_list
from .fixtures import FIXTURE_NAMES, export_fixture, load_fixture, verify_fixture
from .graph_core import Graph, GraphInputError, generate, parse_edge_list, parse_graph6, require_connected
from .transit import CapabilityError, induced_path_function, interval_function, load_tf

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read_text(source: str) -> tuple[str, str]:
    if source == "-":
        return sys.stdin.read(), "<stdin>"
    if os.path.exists(source):
        with open(source) as fh:
            return fh.read(), source
    return source, "<argument>"


def load_graph(source: str) -> Graph:
    """Read a graph from a file (graph6 or edge-list JSON), stdin, or an inline graph6 string."""
    text, where = _read_text(source)
    stripped = text.strip()
    try:
        if stripped.startswith("{"):
            return parse_edge_list(stripped)
        if stripped.startswith(">>graph6<<"):
            stripped = stripped[len(">>graph6<<"):]
        lines = [ln for ln in stripped.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphInputError(f"expected exactly one graph6 line, found {len(lines)}")
        return parse_graph6(lines[0].strip())
    except GraphInputError as exc:
        raise InputError(f"{where}: {exc}") from exc


def _emit(args, payload: dict, table: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=1, sort_keys=True))
    else:
        print("\n".join(table))


# --------------------------------------------------------------------------

def cmd_axioms(args) -> int:
    try:
        which = parse_axiom_list(args.axioms)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if args.tf:
        try:
            R = load_tf(args.tf)
        except (OSError, GraphInputError) as exc:
            raise InputError(f"{args.tf}: {exc}") from exc
        source = {"transit_function": args.tf}
    else:
        G = load_graph(args.graph)
        try:
            R = induced_path_function(G) if args.induced_path else interval_function(G)
        except (GraphInputError, CapabilityError) as exc:
            raise InputError(str(exc)) from exc
        source = {"graph": G.to_graph6(), "function": "J_G" if args.induced_path else "I_G"}
    try:
        profile = check_profile(R, which)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    ok = all(r.holds for r in profile.values())
    table = [f"{'axiom':<6} {'verdict':<7} witness"]
    for r in profile.values():
        table.append(f"{r.name:<6} {'holds' if r.holds else 'FAILS':<7} {r.witness_text(R)}")
    _emit(args, {**source, "n": R.n, "axioms": [r.to_dict(R) for r in profile.values()], "all_hold": ok},
          table)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_classify(args) -> int:
    G = load_graph(args.graph)
    try:
        require_connected(G, "classification")
    except GraphInputError as exc:
        raise InputError(str(exc)) from exc
    reports = rec.classify(G)
    table = [f"{'class':<20} {'member':<6} certificate"]
    for r in reports.values():
        table.append(f"{r.cls:<20} {'yes' if r.member else 'no':<6} {json.dumps(r.certificate, sort_keys=True)}")
    _emit(args, {"graph": G.to_graph6(), "n": G.n, "classes": [r.to_dict() for r in reports.values()]},
          table)
    return EXIT_OK


def cmd_theorems(args) -> int:
    claims = None
    if args.claims and args.claims.lower() != "all":
        claims = [c.strip() for c in args.claims.split(",") if c.strip()]
        unknown = [c for c in claims if c not in thm.CLAIMS]
        if unknown:
            raise InputError(f"unknown claim(s) {', '.join(unknown)}; known: {', '.join(thm.CLAIM_IDS)}")
    if not 1 <= args.max_n <= 6:
        raise InputError("--max-n must lie in 1..6 (exhaustive labeled enumeration)")
    if args.samples < 0 or args.tf_samples < 0:
        raise InputError("sample counts must be non-negative")
    spec = thm.CorpusSpec(exhaustive_max_n=args.max_n, random_count=args.samples, seed=args.seed,
                          tf_samples=args.tf_samples, tf_interval_max_n=args.max_n)
    report = thm.run_corpus(claims, spec)
    if args.format == "json":
        print(report.to_json())
    else:
        print(f"graphs: {report.graph_count}  transit functions: {report.tf_count}  seed: {args.seed}")
        print(f"{'claim':<24} {'instances':>9} {'consistent':>10} {'vacuous':>8} {'counterex':>9}")
        for t in report.tallies.values():
            print(f"{t.claim:<24} {t.instances:>9} {t.consistent:>10} {t.vacuous:>8} {len(t.counterexamples):>9}")
        for t in report.tallies.values():
            if t.counterexamples:
                first = t.counterexamples[0]
                print(f"first counterexample to {t.claim}: {first['instance']} "
                      f"{json.dumps(first['witness'], sort_keys=True)}")
    return EXIT_OK if report.counterexample_total == 0 else EXIT_FAIL


def cmd_fixtures(args) -> int:
    if args.export:
        if args.export not in FIXTURE_NAMES:
            raise InputError(f"unknown fixture {args.export!r}; known: {', '.join(FIXTURE_NAMES)}")
        print(json.dumps(export_fixture(args.export), indent=1))
        return EXIT_OK
    names = FIXTURE_NAMES if not args.name else [args.name]
    if args.name and args.name not in FIXTURE_NAMES:
        raise InputError(f"unknown fixture {args.name!r}")
    reports = [(verify_fixture(n), load_fixture(n).R) for n in names]
    confirmed = sum(r.confirmed for r, _ in reports)
    table = []
    for r, R in reports:
        known = any(row.status == "KNOWN_DISCREPANCY" for row in r.rows)
        state = "MISMATCH" if not r.confirmed else "registered discrepancies" if known else "confirmed"
        table.append(f"{r.name}: {r.title} [{state}]")
        for ax, w in r.t_witnesses.items():
            table.append(f"  not a transit function: ({ax}) fails at "
                         + ", ".join(f"{k}={R.name(v)}" for k, v in w.items()))
        for row in r.rows:
            w = ", ".join(f"{k}={R.name(v)}" for k, v in row.witness.items()) if row.witness else ""
            table.append(f"  {DISPLAY[row.axiom]:<4} claimed={'holds' if row.claimed else 'fails':<5} "
                         f"engine={'holds' if row.engine else 'fails':<5} {row.status:<17} {w}")
    table.append(f"{confirmed}/{len(reports)} fixtures confirmed; "
                 f"{sum(row.status == 'KNOWN_DISCREPANCY' for r, _ in reports for row in r.rows)} "
                 f"registered discrepancies")
    payload = {"fixtures": [r.to_dict(R) for r, R in reports],
               "confirmed": confirmed, "total": len(reports)}
    _emit(args, payload, table)
    unregistered = any(row.status == "DISCREPANCY" for r, _ in reports for row in r.rows)
    replay_bad = any(not all(r.claimed_witnesses_replay.values()) for r, _ in reports
                     if not any(row.status == "KNOWN_DISCREPANCY" for row in r.rows))
    return EXIT_FAIL if unregistered or replay_bad else EXIT_OK


def cmd_gen(args) -> int:
    try:
        G = generate(args.kind, args.n, args.p, args.seed)
    except (GraphInputError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    if args.format == "graph6":
        text = G.to_graph6() + "\n"
    else:
        text = json.dumps(G.to_edge_list()) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="betweenness",
                                description="Transit-function axioms, graph classes and theorem checks.")
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp):
        sp.add_argument("--format", choices=("table", "json"), default="table")

    a = sub.add_parser("axioms", help="check axioms on I_G, J_G or a transit-function document")
    src = a.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", help="graph6 or edge-list JSON file, '-' for stdin, or inline graph6")
    src.add_argument("--tf", help="transit-function JSON document")
    a.add_argument("--axioms", default="all", help="comma list such as J0,J2' or 'all'")
    a.add_argument("--induced-path", action="store_true", help="use J_G instead of I_G (n <= 14)")
    fmt(a)
    a.set_defaults(func=cmd_axioms)

    c = sub.add_parser("classify", help="graph class verdicts with certificates")
    c.add_argument("--graph", required=True)
    fmt(c)
    c.set_defaults(func=cmd_classify)

    t = sub.add_parser("theorems", help="validate the claims over a graph and transit-function corpus")
    t.add_argument("--claims", default="all")
    t.add_argument("--max-n", type=int, default=6, help="exhaustive labeled graphs up to this order")
    t.add_argument("--samples", type=int, default=1000, help="random connected graphs, n in 7..10")
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--tf-samples", type=int, default=10000,
                   help="sampled transit functions per n in {4,5,6} per sampling mode")
    fmt(t)
    t.set_defaults(func=cmd_theorems)

    f = sub.add_parser("fixtures", help="verify the worked example transit functions")
    f.add_argument("--name", help="verify a single fixture")
    f.add_argument("--export", metavar="NAME", help="print a fixture as a transit-function document")
    fmt(f)
    f.set_defaults(func=cmd_fixtures)

    g = sub.add_parser("gen", help="write a named or random graph")
    g.add_argument("--kind", required=True, choices=sorted(["complete", "cycle", "path", "house", "domino",
                                                            "fan3", "pgraph", "er"]))
    g.add_argument("--n", type=int)
    g.add_argument("--p", type=float)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    g.add_argument("--out", help="output file (default stdout)")
    g.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
