"""
Command-line front end: analyze, verify, catalog, search-q.

Exit codes: 0 success, 1 domain failure, 2 usage error. Errors are printed on
stderr as ``error[<code>]: <message>``.
"""

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from src.numerics.rationals import format_rational, parse_rational, parse_rational_list, parse_rational_range
from src.orchestrator.report import render_analysis, render_catalog, render_search, render_verify
from src.orchestrator.runner import AnalysisRunner, AnalysisSource, VerificationOrchestrator, catalog_listing
from src.utils import CatalogLoader, get_config
from src.utils.errors import DrgqError, UsageError


class _Parser(argparse.ArgumentParser):
    """argparse failures become UsageError so they share the error format."""

    def error(self, message):
        raise UsageError(message)


def _add_source(parser: argparse.ArgumentParser, edges: bool = True):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--array", help='intersection array "b0,...;c1,..."')
    group.add_argument("--classical", help='classical parameters "D,b,alpha,beta"')
    group.add_argument("--family", help='family descriptor, e.g. "johnson:6,3"')
    if edges:
        group.add_argument("--edges", metavar="FILE", help="edge-list file")


def _source(args) -> AnalysisSource:
    for kind in AnalysisSource.KINDS:
        value = getattr(args, kind, None)
        if value is not None:
            return AnalysisSource(kind, value)
    raise UsageError("one of --array, --classical, --family, --edges is required")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="drgq", description="Exact q-distance spectra of distance-regular graphs")
    parser.add_argument("--config", help="path to config.yaml")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    analyze = sub.add_parser("analyze", help="spectra, classical types and certificates for one graph")
    _add_source(analyze)
    analyze.add_argument("--q", action="append", default=[], help='rational q "p/q"; repeatable')
    analyze.add_argument("--json", action="store_true", help="machine-readable output")

    verify = sub.add_parser("verify", help="cross-check analytic results against explicit graphs")
    target = verify.add_mutually_exclusive_group(required=True)
    target.add_argument("--family", help="catalog family descriptor or entry name")
    target.add_argument("--all", action="store_true", help="every catalog entry")
    verify.add_argument("--q-grid", help='comma separated rationals, e.g. "9/10,1,2"')
    verify.add_argument("--workers", type=int, help="process pool size")
    verify.add_argument("--json", action="store_true")

    catalog = sub.add_parser("catalog", help="list the built-in catalog")
    catalog.add_argument("--filter", help='tag, or "classical" / "explicit"')
    catalog.add_argument("--json", action="store_true")

    search = sub.add_parser("search-q", help="q values with exactly one positive eigenvalue")
    _add_source(search)
    grid = search.add_mutually_exclusive_group()
    grid.add_argument("--q-grid", help="comma separated rationals")
    grid.add_argument("--q-range", help='"start:end:step" rationals; default is the open interval (0, 1)')
    search.add_argument("--json", action="store_true")
    return parser


def _emit(payload, as_json: bool, render) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(render(payload))


def cmd_analyze(args) -> int:
    qs = [parse_rational(q) for q in args.q]
    width = parse_rational(get_config().get("numerics.report_width", "1/1000000"))
    report = AnalysisRunner().analyze(_source(args), qs)
    _emit(report, args.json, lambda r: render_analysis(r, width))
    return 1 if any(c["status"] == "fail" for c in report["certificates"].values()) else 0


def cmd_verify(args) -> int:
    config = get_config()
    if args.workers is not None:
        config.set("verification.workers", args.workers)
    loader = CatalogLoader(config.get("catalog.path", "data/catalog.yaml"))
    if args.all:
        entries = loader.load()
    else:
        try:
            entries = [loader.get(args.family)]
        except KeyError:
            raise UsageError(f"{args.family} is not in the catalog") from None
    q_grid = parse_rational_list(args.q_grid) if args.q_grid else None
    summary = VerificationOrchestrator(config).run(entries, q_grid)
    _emit(summary, args.json, render_verify)
    return 0 if summary["status"] == "pass" else 1


def cmd_catalog(args) -> int:
    config = get_config()
    rows = catalog_listing(CatalogLoader(config.get("catalog.path", "data/catalog.yaml")), args.filter)
    _emit(rows, args.json, render_catalog)
    return 0


def cmd_search_q(args) -> int:
    if args.q_grid:
        qs: List[Fraction] = parse_rational_list(args.q_grid)
    else:
        qs = parse_rational_range(args.q_range or _default_range())
    result = AnalysisRunner().search_q(_source(args), qs)
    _emit(result, args.json, render_search)
    return 0


def _default_range() -> str:
    step = parse_rational(get_config().get("grids.search_step", "1/100"))
    return f"{format_rational(step)}:{format_rational(1 - step)}:{format_rational(step)}"


COMMANDS = {
    "analyze": cmd_analyze,
    "verify": cmd_verify,
    "catalog": cmd_catalog,
    "search-q": cmd_search_q,
}


RATIONAL_OPTIONS = ("--q", "--q-grid", "--q-range")


def _join_negative_values(argv: Sequence[str]) -> List[str]:
    """argparse reads "-1/2" as an option; glue it to its flag as "--q=-1/2"."""
    out: List[str] = []
    skip = False
    for i, arg in enumerate(argv):
        if skip:
            skip = False
            continue
        nxt = argv[i + 1] if i + 1 < len(argv) else ""
        if arg in RATIONAL_OPTIONS and nxt[:1] == "-" and nxt[1:2].isdigit():
            out.append(f"{arg}={nxt}")
            skip = True
        else:
            out.append(arg)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run the subcommand and map errors to exit codes."""
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = build_parser().parse_args(_join_negative_values(argv))
        get_config(args.config)
        return COMMANDS[args.command](args)
    except DrgqError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return exc.exit_code
