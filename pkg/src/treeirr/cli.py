"""Command-line interface: ``treeirr <subcommand> ...``.

Exit codes: 0 success, 1 usage error, 2 I/O or format error, 3 when
``check-claims --fail-on-counterexample`` finds a failing claim.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence, TextIO

from treeirr import __version__
from treeirr.claims import EvalConfig, evaluate_all, get_claim
from treeirr.construct import caterpillar, fibonacci_caterpillar, path, star
from treeirr.degseq import CONVENTIONS, DegreeSequence, is_graphical, is_tree_realizable, majorizes, realize_graph, realize_tree
from treeirr.enumeration import DEFAULT_EXHAUSTIVE_LIMIT, INDEX_NAMES, OBJECTIVES, TreeClassFilter, extremal, free_trees
from treeirr.graph_core import FormatError, Graph, GraphError, iter_graph6, parse_edgelist, write_edgelist, write_graph6
from treeirr.indices import compute_bundle

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_COUNTEREXAMPLE = 0, 1, 2, 3
WORKERS_ENV = "TREEIRR_WORKERS"
GRAPH_FORMATS = ("graph6", "edgelist")


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _degseq(text: str) -> DegreeSequence:
    try:
        return DegreeSequence.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        try:
            return _positive_int(env)
        except argparse.ArgumentTypeError as exc:
            raise UsageError(f"{WORKERS_ENV}: {exc}") from None
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:  # pragma: no cover - non-Linux
        return os.cpu_count() or 1


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="treeirr", description="Irregularity indices of trees and a bound-checking harness.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("indices", help="compute all indices for each input graph (JSON lines)")
    s.add_argument("input", nargs="?", default="-", help="input file, '-' for standard input")
    s.add_argument("--format", choices=GRAPH_FORMATS, default="graph6",
                   help="graph6: one graph per line; edgelist: the whole input is one graph")

    s = sub.add_parser("gen", help="generate a named tree")
    s.add_argument("family", choices=("star", "path", "cat", "fib"))
    s.add_argument("--n", type=_positive_int, help="order (star, path) or Fibonacci index (fib)")
    s.add_argument("--spine", type=_int_list, help="caterpillar spine degrees, e.g. 2,3,2")
    s.add_argument("--fib-convention", choices=CONVENTIONS, default="paper",
                   help="paper: F1=1, F2=2; standard: F1=F2=1 (default: paper)")
    s.add_argument("--out", default="-",
                   help="'graph6' or 'edgelist' to pick the stdout format, otherwise a path or '-'")
    s.add_argument("--format", choices=GRAPH_FORMATS, default=None,
                   help="output format when --out is a path (default graph6)")

    s = sub.add_parser("enumerate", help="write every tree of order n as graph6 lines")
    s.add_argument("--n", type=_positive_int, required=True)
    s.add_argument("--max-degree", type=_positive_int)
    s.add_argument("--out", default="-", help="output path or '-'")

    s = sub.add_parser("extremal", help="extremal index value over trees of order n")
    s.add_argument("--n", type=_positive_int, required=True)
    s.add_argument("--index", choices=INDEX_NAMES, required=True)
    s.add_argument("--objective", choices=OBJECTIVES, required=True)
    s.add_argument("--max-degree", type=_positive_int)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--exhaustive-limit", type=int, default=DEFAULT_EXHAUSTIVE_LIMIT,
                   help="largest n searched exhaustively; above it a seeded local search runs")
    s.add_argument("--restarts", type=_positive_int, default=32)

    s = sub.add_parser("degseq", help="degree-sequence utilities")
    dsub = s.add_subparsers(dest="action", required=True, parser_class=_Parser)
    d = dsub.add_parser("check", help="graphicality and tree realizability")
    d.add_argument("sequence", type=_degseq)
    d = dsub.add_parser("realize", help="realize a sequence (Havel-Hakimi, or a caterpillar with --tree)")
    d.add_argument("sequence", type=_degseq)
    d.add_argument("--tree", action="store_true")
    d.add_argument("--format", choices=GRAPH_FORMATS, default="graph6")
    d = dsub.add_parser("majorize", help="does A majorize B")
    d.add_argument("a", type=_degseq)
    d.add_argument("b", type=_degseq)

    s = sub.add_parser(
        "check-claims",
        help="evaluate the claim registry over all trees in an order range",
        description=f"Worker count: --workers, else ${WORKERS_ENV}, else available CPUs.",
    )
    s.add_argument("--n-min", type=int, default=4)
    s.add_argument("--n-max", type=int, default=9)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--claims", type=lambda t: [c.strip() for c in t.split(",") if c.strip()],
                   help="comma-separated claim ids (default: all)")
    s.add_argument("--report", help="write the JSON report to this path ('-' for stdout)")
    s.add_argument("--csv", help="write per-claim counts as CSV to this path ('-' for stdout)")
    s.add_argument("--json", action="store_true", help="print the JSON report on stdout")
    s.add_argument("--fail-on-counterexample", action="store_true", help="exit 3 if any claim fails")
    s.add_argument("--workers", type=_positive_int)
    return p


def _read_input(name: str) -> str:
    if name == "-":
        return sys.stdin.read()
    try:
        with open(name, encoding="ascii") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {name}: {exc}") from None


def _write_output(name: str, text: str, stdout: TextIO) -> None:
    if name == "-":
        stdout.write(text)
        return
    try:
        with open(name, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(f"cannot write {name}: {exc}") from None


def _format_graph(g: Graph, fmt: str) -> str:
    return write_graph6(g) + "\n" if fmt == "graph6" else write_edgelist(g)


def _cmd_indices(args, out: TextIO) -> int:
    text = _read_input(args.input)
    if args.format == "graph6":
        graphs = list(iter_graph6(text.splitlines()))
    else:
        graphs = [parse_edgelist(text)]
    for g in graphs:
        out.write(json.dumps(compute_bundle(g).to_json()) + "\n")
    return EXIT_OK


def _cmd_gen(args, out: TextIO) -> int:
    fam = args.family
    if fam == "cat":
        if not args.spine:
            raise UsageError("gen cat requires --spine")
        t = caterpillar(args.spine)
    elif args.n is None:
        raise UsageError(f"gen {fam} requires --n")
    elif fam == "star":
        t = star(args.n)
    elif fam == "path":
        t = path(args.n)
    else:
        t = fibonacci_caterpillar(args.n, args.fib_convention)
    if args.out in GRAPH_FORMATS:
        if args.format and args.format != args.out:
            raise UsageError(f"--out {args.out} conflicts with --format {args.format}")
        dest, fmt = "-", args.out
    else:
        dest, fmt = args.out, args.format or "graph6"
    _write_output(dest, _format_graph(t, fmt), out)
    return EXIT_OK


def _cmd_enumerate(args, out: TextIO) -> int:
    flt = TreeClassFilter(args.n, args.max_degree)
    text = "".join(write_graph6(t) + "\n" for t in free_trees(flt))
    _write_output(args.out, text, out)
    return EXIT_OK


def _cmd_extremal(args, out: TextIO) -> int:
    flt = TreeClassFilter(args.n, args.max_degree)
    res = extremal(flt, args.index, args.objective, exhaustive_limit=args.exhaustive_limit,
                   seed=args.seed, restarts=args.restarts)
    value = res.value
    if hasattr(value, "denominator"):
        value = value.numerator if value.denominator == 1 else float(value)
    out.write(json.dumps({"value": value, "witness_graph6": write_graph6(res.witness),
                          "exhaustive": res.exhaustive}) + "\n")
    return EXIT_OK


def _cmd_degseq(args, out: TextIO) -> int:
    if args.action == "check":
        ds = args.sequence
        out.write(json.dumps({"sequence": list(ds), "graphical": is_graphical(ds),
                              "tree_realizable": is_tree_realizable(ds)}) + "\n")
    elif args.action == "realize":
        try:
            g = realize_tree(args.sequence) if args.tree else realize_graph(args.sequence)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        out.write(_format_graph(g, args.format))
    else:
        if len(args.a) != len(args.b):
            raise UsageError(f"sequences differ in length ({len(args.a)} vs {len(args.b)})")
        out.write(json.dumps({"a": list(args.a), "b": list(args.b),
                              "majorizes": majorizes(args.a, args.b)}) + "\n")
    return EXIT_OK


def _cmd_check_claims(args, out: TextIO) -> int:
    workers = args.workers if args.workers is not None else _default_workers()
    try:
        for cid in args.claims or ():
            get_claim(cid)
        config = EvalConfig(args.n_min, args.n_max, args.seed,
                            tuple(args.claims) if args.claims else None)
        config.validate()
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc).strip("'\"")) from None
    report = evaluate_all(config, workers=workers)
    body = json.dumps(report.to_json(), indent=2, ensure_ascii=False) + "\n"
    if args.report:
        _write_output(args.report, body, out)
    if args.csv:
        _write_output(args.csv, report.to_csv(), out)
    if args.json and args.report != "-":
        out.write(body)
    if not (args.report or args.csv or args.json):
        out.write(report.to_csv())
    failing = [v.id for v in report.verdicts if v.fails]
    if args.fail_on_counterexample and failing:
        print(f"treeirr: claims with counterexamples: {', '.join(failing)}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


_COMMANDS = {
    "indices": _cmd_indices,
    "gen": _cmd_gen,
    "enumerate": _cmd_enumerate,
    "extremal": _cmd_extremal,
    "degseq": _cmd_degseq,
    "check-claims": _cmd_check_claims,
}


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None) -> int:
    out = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InputError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (GraphError, ValueError) as exc:
        # invalid flag values caught by the library (e.g. an infeasible degree cap)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
