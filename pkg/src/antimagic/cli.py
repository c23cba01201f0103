"""Command line interface.

Exit codes: 0 success (or counterexample refuted), 1 valid but negative
outcome, 2 domain rejection or bad arguments, 3 I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import formats
from .certify import certify_counterexample
from .construction import DomainRejection, build
from .labeling import LabelingError, check_local_antimagic, color_count, weight_vector
from .solver import DEFAULT_SEED, solve_chi_la
from .sweep import rows_to_csv, summary_line, sweep

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_DOMAIN = 2
EXIT_IO = 3


class _IOFailure(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _IOFailure(f"cannot read {path}: {exc.strerror or exc}") from exc


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise _IOFailure(f"cannot write {path}: {exc.strerror or exc}") from exc


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def cmd_construct(args) -> int:
    try:
        c = build(args.n, check=not args.no_check)
    except DomainRejection as exc:
        _err(f"rejected: {exc}")
        return EXIT_DOMAIN
    except ValueError as exc:
        _err(f"rejected: {exc}")
        return EXIT_DOMAIN
    prof = c.profile()
    summary = (
        f"{c.tag.value}, colors={color_count(c.graph, c.labeling)}, "
        f"hub={prof.hub_weight}, leaf={prof.leaf_weight}, apex={prof.apex_weight}"
    )
    _write(args.out, formats.write_labeling(c.graph, c.labeling, args.format))
    if args.graph_out:
        _write(args.graph_out, formats.write_graph(c.graph))
    # keep stdout clean for the labeling when it goes there
    print(summary, file=sys.stdout if args.out not in (None, "-") else sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        g = formats.read_graph(_read(args.graph))
    except formats.ParseError as exc:
        _err(f"parse error in {args.graph}: {exc}")
        return EXIT_IO
    try:
        g, f = formats.read_labeling(_read(args.labeling), g)
    except LabelingError as exc:
        print(f"reject: {exc}")
        if exc.duplicates:
            print(f"duplicate labels: {exc.duplicates}")
        if exc.missing:
            print(f"missing labels: {exc.missing}")
        return EXIT_NEGATIVE
    except formats.ParseError as exc:
        _err(f"parse error in {args.labeling}: {exc}")
        return EXIT_IO
    verdict = check_local_antimagic(g, f)
    weights = weight_vector(g, f).tolist()
    colors = color_count(g, f)
    if args.format == "json":
        print(json.dumps({
            "accepted": verdict.accepted,
            "weights": weights,
            "colors": colors,
            "violations": [list(v) for v in verdict.violations],
        }))
    else:
        print("accept" if verdict.accepted else "reject")
        print("weights: " + " ".join(map(str, weights)))
        print(f"colors: {colors}")
        for u, w, wt in verdict.violations:
            print(f"violation: {u} -- {w} both weigh {wt}")
    return EXIT_OK if verdict.accepted else EXIT_NEGATIVE


def cmd_solve(args) -> int:
    try:
        g = formats.read_graph(_read(args.graph))
    except formats.ParseError as exc:
        _err(f"parse error in {args.graph}: {exc}")
        return EXIT_IO
    report = solve_chi_la(
        g,
        budget_ms=args.budget_ms,
        max_colors=args.max_colors,
        seed=args.seed,
        jobs=args.jobs,
    )
    print(json.dumps(report.to_dict()))
    return EXIT_OK if report.status == "exact" else EXIT_NEGATIVE


def cmd_counterexample(args) -> int:
    try:
        verdict = certify_counterexample(args.n)
    except ValueError as exc:
        _err(f"rejected: {exc}")
        return EXIT_DOMAIN
    if args.format == "json":
        print(json.dumps(verdict.to_dict()))
    else:
        print(f"claim: {verdict.claim}")
        print(f"G = K_1,{verdict.n}: chi_la(G) = {verdict.chi_la_star}")
        print(f"claimed lower bound for chi_la(G v K2bar): {verdict.claimed_lower}")
        print(f"certified upper bound for chi_la(G v K2bar): {verdict.chi_la_join_upper}")
        print(f"refuted={'true' if verdict.refuted else 'false'}")
        print("certificate:")
        sys.stdout.write(formats.write_labeling(verdict.graph, verdict.witness))
    return EXIT_OK if verdict.refuted else EXIT_NEGATIVE


def cmd_sweep(args) -> int:
    try:
        rows = sweep(args.start, args.stop, jobs=args.jobs)
    except ValueError as exc:
        _err(f"rejected: {exc}")
        return EXIT_DOMAIN
    _write(args.out, rows_to_csv(rows))
    line = summary_line(rows)
    print(line, file=sys.stdout if args.out not in (None, "-") else sys.stderr)
    return EXIT_OK if all(r.verified for r in rows) else EXIT_NEGATIVE


def cmd_export(args) -> int:
    try:
        g = formats.read_graph(_read(args.graph))
        f = None
        if args.labeling:
            g, f = formats.read_labeling(_read(args.labeling), g)
    except (formats.ParseError, LabelingError) as exc:
        _err(f"parse error: {exc}")
        return EXIT_IO
    _write(args.out, formats.export_dot(g, f))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="antimagic", description="Local antimagic labelings: construct, verify, solve.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="three-color labeling of K_1,n joined with two isolated vertices")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--out", help="labeling output path (default stdout)")
    c.add_argument("--graph-out", help="also write the graph file here")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.add_argument("--no-check", action="store_true", help="skip the post-construction self-check")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check a labeling against a graph")
    v.add_argument("graph")
    v.add_argument("labeling")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("solve", help="exact local antimagic chromatic number")
    s.add_argument("graph")
    s.add_argument("--budget-ms", type=float, default=None)
    s.add_argument("--max-colors", type=int, default=None)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_solve)

    x = sub.add_parser("counterexample", help="certify the refutation for K_1,n")
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--format", choices=("text", "json"), default="text")
    x.set_defaults(func=cmd_counterexample)

    w = sub.add_parser("sweep", help="construct and verify every valid n in a range")
    w.add_argument("--from", dest="start", type=int, required=True)
    w.add_argument("--to", dest="stop", type=int, required=True)
    w.add_argument("--out", help="CSV output path (default stdout)")
    w.add_argument("--jobs", type=int, default=1)
    w.set_defaults(func=cmd_sweep)

    e = sub.add_parser("export", help="DOT rendering of a graph and optional labeling")
    e.add_argument("graph")
    e.add_argument("--labeling")
    e.add_argument("--out")
    e.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _IOFailure as exc:
        _err(str(exc))
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
