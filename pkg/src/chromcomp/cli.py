"""chromcomp command line.

Exit codes: 0 success, 1 input error, 2 exact-mode cap refusal,
3 a census statement failed on some graph.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import generators
from .census import CSV_FIELDS, STATEMENTS, CensusSummary, census_graphs, census_record, record_csv_row
from .completion import zeta, zeta_upper_bounds
from .errors import CapExceeded, ContractError, check_cap, max_exact_order
from .generators import CENSUS_MAX_ORDER
from .graph import Graph, GraphError
from .io import load_graph, parse_graph6, to_dimacs, to_edgelist, to_graph6
from .jcoloring import zeta_j
from .operations import union_conjecture_experiment, exhaustive_pairs, random_pairs
from .report import analyze
from .stability import is_scc

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_VIOLATION = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors (exit 1); exit 2 is reserved for cap refusals
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _add_source(p: argparse.ArgumentParser) -> None:
    src = p.add_argument_group("graph source")
    src.add_argument("input", nargs="?", help="graph file ('-' for stdin); format sniffed unless --format")
    src.add_argument("--format", choices=["auto", "graph6", "dimacs", "edgelist"], default="auto")
    src.add_argument("--g6", help="graph6 string")
    src.add_argument("--family", choices=sorted(generators.FAMILIES))
    src.add_argument("--n", type=int, help="order / size parameter for --family")
    src.add_argument("--parts", help="comma-separated part sizes for complete_multipartite")
    src.add_argument("--p", type=float, default=0.5, help="edge probability for random")
    src.add_argument("--seed", type=int, help="seed for random (required)")


def _add_output(p: argparse.ArgumentParser) -> None:
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit JSON")
    fmt.add_argument("--csv", action="store_true", help="emit CSV")


def _add_cap(p: argparse.ArgumentParser, default_note: str) -> None:
    p.add_argument(
        "--max-exact-order",
        type=int,
        default=None,
        help=f"exact-mode order cap (default {default_note}; env CHROMA_MAX_ORDER)",
    )


def family_graph(args: argparse.Namespace) -> Graph:
    fam = args.family
    if fam == "complete_multipartite":
        if not args.parts:
            raise GraphError("complete_multipartite needs --parts, e.g. --parts 2,2,2")
        try:
            parts = [int(x) for x in args.parts.split(",")]
        except ValueError:
            raise GraphError(f"bad --parts {args.parts!r}") from None
        return generators.complete_multipartite(*parts)
    if fam in ("petersen", "paw"):
        return generators.generate(fam)
    if args.n is None:
        raise GraphError(f"family {fam} needs --n")
    if fam == "random":
        if args.seed is None:
            raise GraphError("random graphs need --seed")
        return generators.gnp(args.n, args.p, args.seed)
    return generators.generate(fam, args.n)


def read_graph(args: argparse.Namespace) -> Graph:
    chosen = [x for x in (args.input, args.g6, args.family) if x is not None]
    if len(chosen) != 1:
        raise GraphError("give exactly one graph source: a file, --g6 or --family")
    if args.g6 is not None:
        return parse_graph6(args.g6)
    if args.family is not None:
        return family_graph(args)
    if args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise GraphError(f"cannot read {args.input}: {exc.strerror}") from None
    return load_graph(text, args.format)


def _emit_mapping(data: dict, args: argparse.Namespace, out) -> None:
    if args.json:
        out.write(json.dumps(data, sort_keys=True) + "\n")
    elif args.csv:
        flat = _flatten(data)
        w = csv.writer(out, lineterminator="\n")
        w.writerow(list(flat))
        w.writerow(list(flat.values()))
    else:
        for k, v in _flatten(data).items():
            out.write(f"{k}: {v}\n")


def _flatten(data: dict, prefix: str = "") -> dict:
    flat = {}
    for k, v in data.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            flat.update(_flatten(v, key + "."))
        elif isinstance(v, list):
            flat[key] = json.dumps(v)
        else:
            flat[key] = "" if v is None else v
    return flat


# subcommands


def cmd_analyze(args, out) -> int:
    g = read_graph(args)
    report = analyze(g, bounds_only=args.bounds_only, cap=args.max_exact_order, timing=args.timing)
    data = report.to_json()
    if not args.json:
        data.pop("completion", None)
    _emit_mapping(data, args, out)
    return EXIT_OK


def cmd_zeta(args, out) -> int:
    g = read_graph(args)
    _emit_mapping(zeta(g, args.max_exact_order).to_json(), args, out)
    return EXIT_OK


def cmd_bounds(args, out) -> int:
    g = read_graph(args)
    z = None
    if args.exact:
        z = zeta(g, args.max_exact_order).zeta
    _emit_mapping(zeta_upper_bounds(g, z).to_json(), args, out)
    return EXIT_OK


def cmd_scc(args, out) -> int:
    g = read_graph(args)
    _emit_mapping(is_scc(g, cap=args.max_exact_order).to_json(), args, out)
    return EXIT_OK


def cmd_jcolor(args, out) -> int:
    g = read_graph(args)
    _emit_mapping(zeta_j(g, args.max_exact_order).to_json(), args, out)
    return EXIT_OK


def cmd_generate(args, out) -> int:
    g = family_graph(args)
    if args.out_format == "graph6":
        out.write(to_graph6(g) + "\n")
    elif args.out_format == "dimacs":
        out.write(to_dimacs(g))
    else:
        out.write(to_edgelist(g))
    return EXIT_OK


def cmd_census(args, out) -> int:
    cap = args.max_exact_order if args.max_exact_order is not None else CENSUS_MAX_ORDER
    if args.n > cap:
        raise CapExceeded(f"census: order {args.n} exceeds census cap {cap}")
    graphs = census_graphs(args.n, args.connected, args.sample, args.seed, max_order=cap)
    if args.threads > 1:
        pool = ProcessPoolExecutor(max_workers=args.threads)
        records = pool.map(census_record, graphs, chunksize=256)
    else:
        pool = None
        records = map(census_record, graphs)
    summary = CensusSummary()
    sink = open(args.out, "w", encoding="utf-8", newline="") if args.out else out
    try:
        writer = None
        if not args.json:
            writer = csv.writer(sink, lineterminator="\n")
            writer.writerow(CSV_FIELDS)
        for r in records:
            summary.add(r)
            if writer is not None:
                writer.writerow(record_csv_row(r))
            else:
                sink.write(json.dumps(r.to_json(), sort_keys=True) + "\n")
    finally:
        if pool is not None:
            pool.shutdown()
        if args.out:
            sink.close()
    err = sys.stderr
    err.write(f"census n={args.n}{' connected' if args.connected else ''}: "
              f"{summary.graphs} graphs, {summary.scc} SCC, {summary.j_colorable} J-colourable, "
              f"{summary.total_failures} statement failures\n")
    for key in STATEMENTS:
        if summary.failures[key]:
            err.write(f"  FAIL {key}: {summary.failures[key]}/{summary.evaluated[key]} "
                      f"(first {summary.first_failure[key]})\n")
    if args.summary:
        with open(args.summary, "w", encoding="utf-8") as fh:
            json.dump(summary.to_json(), fh, sort_keys=True, indent=2)
            fh.write("\n")
    return EXIT_VIOLATION if summary.total_failures else EXIT_OK


def cmd_conjecture(args, out) -> int:
    if args.pairs == "exhaustive":
        check_cap(2 * args.n_max, args.max_exact_order, "conjecture (union order)")
        pairs = exhaustive_pairs(args.n_max, args.connected)
    else:
        if args.seed is None:
            raise GraphError("random pairs need --seed")
        check_cap(2 * args.n_max, args.max_exact_order, "conjecture (union order)")
        pairs = random_pairs(args.count, args.seed, args.n_max, args.p)
    report = union_conjecture_experiment(pairs)
    text = json.dumps(report.to_json(), sort_keys=True) + "\n" if args.json else report.to_csv()
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    s = report.summary()
    sys.stderr.write(
        f"COUNTEREXAMPLES: {s['counterexamples']} "
        f"(pairs {s['pairs']}, preconditioned {s['preconditioned']}, skipped {s['skipped']}, "
        f"equal {s['equal']}, bound violations {s['bound_violations']})\n"
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chromcomp", description="Chromatic completion number, SCC and J-colouring tools.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="full report for one graph")
    _add_source(p)
    _add_output(p)
    _add_cap(p, "12")
    p.add_argument("--bounds-only", action="store_true", help="only polynomial-time/greedy bounds")
    p.add_argument("--timing", action="store_true", help="include per-stage durations")
    p.set_defaults(func=cmd_analyze)

    for name, fn, helptext in (
        ("zeta", cmd_zeta, "exact zeta(G), Lucky partitions and witnesses"),
        ("scc", cmd_scc, "SCC verdict with all characterisations"),
        ("jcolor", cmd_jcolor, "J-colouring existence, J(G) and zeta_J(G)"),
    ):
        p = sub.add_parser(name, help=helptext)
        _add_source(p)
        _add_output(p)
        _add_cap(p, "12")
        p.set_defaults(func=fn)

    p = sub.add_parser("bounds", help="upper bounds on zeta(G)")
    _add_source(p)
    _add_output(p)
    _add_cap(p, "12")
    p.add_argument("--exact", action="store_true", help="also compute exact zeta")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("generate", help="print a family member")
    p.add_argument("--family", choices=sorted(generators.FAMILIES), required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--parts")
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int)
    p.add_argument("--out-format", choices=["graph6", "dimacs", "edgelist"], default="graph6")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("census", help="check every statement on all labelled graphs of one order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--sample", type=float, default=None, help="keep a seeded fraction of edge masks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", help="write records here instead of stdout")
    p.add_argument("--summary", help="write the JSON summary here")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON lines")
    fmt.add_argument("--csv", action="store_true", help="CSV (default)")
    _add_cap(p, str(CENSUS_MAX_ORDER))
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("conjecture", help="union-equality experiment over graph pairs")
    p.add_argument("--pairs", choices=["exhaustive", "random"], default="random")
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--seed", type=int)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--connected", action="store_true", help="exhaustive: connected graphs only")
    p.add_argument("--out")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true", help="CSV (default)")
    _add_cap(p, "12")
    p.set_defaults(func=cmd_conjecture)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "max_exact_order", None) is None and args.command != "census":
            args.max_exact_order = max_exact_order()
        return args.func(args, out)
    except CapExceeded as exc:
        sys.stderr.write(f"chromcomp: {exc}\n")
        return EXIT_CAP
    except (GraphError, ContractError) as exc:
        sys.stderr.write(f"chromcomp: {exc}\n")
        return EXIT_INPUT


def run(argv: Sequence[str] | None = None) -> tuple[int, str]:
    """Invoke ``main`` capturing stdout; handy for tests."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
