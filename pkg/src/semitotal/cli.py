"""Command-line entry point: ``semitotal <command> ...``.

Exit codes: 0 success / no violations, 1 a check found violations, 2 input
error, 3 domain error (input is not a tree, or has one vertex), 4 a
guardrail was hit.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from .config import ENV_GUARDRAIL, Guardrails
from .dp import dp_almost_domination, dp_domination, dp_semitotal, dp_total_domination
from .enumeration import all_trees, write_graph6_file
from .errors import (
    InvalidParameter,
    InvalidVertex,
    IsolatedVertex,
    MalformedEdgeList,
    MalformedGraph6,
    NotATree,
    SelfLoop,
    SizeLimitExceeded,
    TooLarge,
)
from .exact import Kind, oracle_minimum
from .families import generate_family_O, generate_family_T
from .graph_core import GRAPH6_MAX_N, Tree, parse_edge_list, parse_graph6, to_graph6
from .verify import CHECKS, VerificationReport, default_jobs

log = logging.getLogger("semitotal")

EXIT_OK, EXIT_VIOLATIONS, EXIT_INPUT, EXIT_DOMAIN, EXIT_GUARDRAIL = range(5)

PARAMS = ("gamma", "gamma-t", "gamma-t2")


def read_tree(source: str) -> Tree:
    """Parse a graph6 line or a plain edge list from a file path (``-`` is stdin)."""
    text = sys.stdin.read() if source == "-" else Path(source).read_text()
    first = next((line.strip() for line in text.splitlines() if line.strip()), "")
    if not first:
        raise MalformedEdgeList("empty input")
    if first.isdigit():
        return parse_edge_list(text)
    return parse_graph6(first)


def _solve_one(t: Tree, param: str, method: str) -> dict:
    if param.startswith("gamma-almost:"):
        try:
            v = int(param.split(":", 1)[1])
        except ValueError:
            raise InvalidParameter(f"bad vertex in {param!r}") from None
        t.check_vertex(v)
        cert = dp_almost_domination(t, v) if method == "dp" else oracle_minimum(t, Kind.ALMOST, v)
    elif param == "gamma":
        cert = dp_domination(t) if method == "dp" else oracle_minimum(t, Kind.PLAIN)
    elif param == "gamma-t":
        cert = dp_total_domination(t) if method == "dp" else oracle_minimum(t, Kind.TOTAL)
    elif param == "gamma-t2":
        cert = dp_semitotal(t) if method == "dp" else oracle_minimum(t, Kind.SEMITOTAL)
    else:
        raise InvalidParameter(f"unknown parameter {param!r}")
    return cert.as_dict()


def cmd_solve(args: argparse.Namespace) -> int:
    try:
        t = read_tree(args.input)
    except (OSError, MalformedGraph6, MalformedEdgeList, InvalidVertex, TooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if t.n < 2:
        print("error: domination parameters need at least two vertices", file=sys.stderr)
        return EXIT_DOMAIN
    params = args.params.split(",") if args.params else list(PARAMS)
    try:
        results = {p: _solve_one(t, p, args.method) for p in params}
    except (InvalidParameter, InvalidVertex) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    g6 = to_graph6(t).decode() if t.n <= GRAPH6_MAX_N else None
    if args.format == "json":
        print(json.dumps({"graph6": g6, "n": t.n, "results": results}, indent=2, sort_keys=True))
    else:
        print(f"tree n={t.n} graph6={g6}")
        for p, r in results.items():
            print(f"{p} = {r['value']}  witness {{{', '.join(map(str, r['witness']))}}}")
    return EXIT_OK


def _emit(report: VerificationReport, args: argparse.Namespace) -> None:
    if args.format == "json":
        print(report.to_json())
    else:
        print(report.summary())
        for n, stats in sorted(report.per_order.items()):
            shown = {k: v for k, v in stats.items() if not isinstance(v, (list, dict)) or k == "extremal"}
            print(f"  n={n}: {shown}")
        for v in report.violations[:20]:
            print(f"  violation: {v}")


def _write_report(path: Path, report: VerificationReport) -> None:
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(report.to_json() + "\n")
    os.replace(tmp, path)


def cmd_verify(args: argparse.Namespace) -> int:
    check = CHECKS[args.command]
    out = Path(args.out) if args.out else None

    def on_order(report: VerificationReport, n: int) -> None:
        log.info("order %d done: %d trees so far, %d violations", n, report.trees_examined, len(report.violations))
        if out is not None:
            _write_report(out, report)

    report = check(args.n_max, jobs=args.jobs, limits=args.limits, on_order=on_order)
    if out is not None:
        _write_report(out, report)
    _emit(report, args)
    return EXIT_OK if report.passed else EXIT_VIOLATIONS


def cmd_generate(args: argparse.Namespace) -> int:
    make = generate_family_T if args.family == "T" else generate_family_O
    census = make(args.n_max, limits=args.limits)
    out = Path(args.out)
    write_graph6_file(out, census.trees())
    counts = {str(n): c for n, c in census.counts().items()}
    Path(str(out) + ".json").write_text(json.dumps({"family": args.family, "n_max": args.n_max,
                                                    "counts": counts}, indent=2, sort_keys=True) + "\n")
    if args.labeled and args.family == "T":
        ordered = sorted(census.labeled, key=lambda lt: (lt.tree.n, lt.code()))
        Path(str(out) + ".labeled.jsonl").write_text("".join(lt.to_json() + "\n" for lt in ordered))
    print(f"family {args.family}: {sum(census.counts().values())} trees written to {out}")
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    trees = all_trees(args.n, limits=args.limits)
    if args.out:
        count = write_graph6_file(args.out, trees)
        print(f"{count} trees of order {args.n} written to {args.out}")
    else:
        for t in trees:
            print(to_graph6(t).decode())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="semitotal", description=__doc__.splitlines()[0])
    parser.add_argument("--guardrail-n", type=int, default=None,
                        help=f"maximum tree order for sweeps and generators (env {ENV_GUARDRAIL}, default 20)")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="domination parameters of one tree")
    p.add_argument("input", help="graph6 or edge-list file, '-' for stdin")
    p.add_argument("--params", default=None,
                   help="comma list of gamma, gamma-t, gamma-t2, gamma-almost:V (default: first three)")
    p.add_argument("--method", choices=("dp", "oracle"), default="dp")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_solve)

    for name, helptext in (("verify-bound", "lower bound on gamma_t2 over all trees"),
                           ("verify-extremal", "extremal trees versus the family-T census"),
                           ("verify-gamma-eq", "gamma == gamma_t2 trees versus the family-O census"),
                           ("verify-chain", "gamma <= gamma_t2 <= gamma_t over all trees"),
                           ("verify-oracle", "dynamic programs versus brute force"),
                           ("verify-leaf-free", "leaf-free minimum sets in non-star trees")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--n-max", type=int, required=True)
        p.add_argument("--jobs", type=int, default=default_jobs())
        p.add_argument("--out", default=None, help="JSON report path, rewritten after every order")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write a family census as graph6 plus a JSON count sidecar")
    p.add_argument("family", choices=("T", "O"))
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--labeled", action="store_true", help="family T: also write labeled trees as JSON lines")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("enumerate", help="all non-isomorphic trees of one order as graph6")
    p.add_argument("n", type=int)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        args.limits = Guardrails.from_env().with_ceiling(args.guardrail_n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except SizeLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARDRAIL
    except (NotATree, SelfLoop, IsolatedVertex) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (InvalidParameter, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
