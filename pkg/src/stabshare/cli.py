"""Command-line interface: local analysis without any network dependency.

Exit codes: 0 success, 1 validation failure, 2 computation over caps,
64 usage error.  ``--json`` switches every subcommand from human tables to
the frozen JSON schema.
"""

from __future__ import annotations

import argparse
import sys

from .codefile import parse_code_file, parse_classical_pair
from .constructions import RSParams, css_scheme, hermitian_scheme, rs_scheme
from .errors import StabshareError, TooLarge
from .gv import AsymptoticQuery, GVQuery, field_from_order
from .report import (
    analyze_report,
    construct_report,
    distances_report,
    gv_asym_report,
    gv_report,
    render_human,
    search_report,
    simulate_report,
    to_json,
)

USAGE_EXIT = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _add_input(parser):
    parser.add_argument(
        "--input", required=True, help="scheme code file, or - for standard input"
    )


def _add_json(parser):
    parser.add_argument(
        "--json", action="store_true", help="emit the JSON report instead of tables"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stabshare", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify share subsets of a scheme")
    _add_input(p)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--subset", help="comma-separated 1-based shares, e.g. 1,3")
    group.add_argument(
        "--all-subsets", action="store_true", help="classify every subset (default)"
    )
    _add_json(p)

    p = sub.add_parser("distances", help="coset distances and relative weights")
    _add_input(p)
    p.add_argument("--max-i", type=int, default=None, help="deepest weight index")
    _add_json(p)

    p = sub.add_parser("simulate", help="compare against the density-matrix oracle")
    _add_input(p)
    _add_json(p)

    p = sub.add_parser("gv", help="finite-length existence bound, exact arithmetic")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--dt", type=int, required=True, help="privacy distance target")
    p.add_argument("--dr", type=int, required=True, help="reconstruction distance target")
    _add_json(p)

    p = sub.add_parser("gv-asym", help="asymptotic bound thresholds by bisection")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--R", type=float, required=True, dest="rate", help="secret rate in [0, 1]")
    _add_json(p)

    p = sub.add_parser("search", help="seeded random search for a witness pair")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--dt", type=int, required=True)
    p.add_argument("--dr", type=int, required=True)
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    _add_json(p)

    p = sub.add_parser("rs", help="Reed-Solomon scheme at n = q; emits a code file")
    p.add_argument("--q", type=int, required=True, help="field size (= number of shares)")
    p.add_argument("--k", type=int, required=True, help="secret length (even)")
    p.add_argument("--output", default=None, help="write the code file here instead of stdout")
    _add_json(p)

    p = sub.add_parser("css", help="scheme from nested classical codes; emits a code file")
    p.add_argument(
        "--input", required=True, help="pair file with C1/C2 blocks, or - for stdin"
    )
    p.add_argument(
        "--lagrangian",
        choices=("standard", "greedy"),
        default="standard",
        help="standard CSS encoding or deterministic greedy completion",
    )
    p.add_argument("--output", default=None)
    _add_json(p)

    p = sub.add_parser(
        "hermitian", help="scheme from a hermitian self-dual pair; emits a code file"
    )
    p.add_argument(
        "--input", required=True, help="pair file with D/DMAX blocks, or - for stdin"
    )
    p.add_argument("--output", default=None)
    _add_json(p)

    return parser


def _parse_subset(raw: str) -> list[int]:
    try:
        return [int(tok) for tok in raw.split(",") if tok.strip()]
    except ValueError:
        raise StabshareError(f"bad subset spec {raw!r}; expected e.g. 1,3") from None


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = _dispatch(args)
    except TooLarge as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 2
    except StabshareError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 1
    text = to_json(report) if args.json else render_human(report)
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(report["code"])
        if not args.json:
            text = f"wrote {args.output}\n"
    sys.stdout.write(text)
    return 0


def _dispatch(args) -> dict:
    if args.command == "analyze":
        scheme = parse_code_file(_read_input(args.input)).to_scheme()
        subsets = [_parse_subset(args.subset)] if args.subset else None
        return analyze_report(scheme, subsets)
    if args.command == "distances":
        scheme = parse_code_file(_read_input(args.input)).to_scheme()
        return distances_report(scheme, args.max_i)
    if args.command == "simulate":
        scheme = parse_code_file(_read_input(args.input)).to_scheme()
        return simulate_report(scheme)
    if args.command == "gv":
        return gv_report(GVQuery(args.q, args.n, args.k, args.dt, args.dr))
    if args.command == "gv-asym":
        return gv_asym_report(AsymptoticQuery(args.q, args.rate))
    if args.command == "search":
        query = GVQuery(args.q, args.n, args.k, args.dt, args.dr)
        return search_report(query, args.trials, args.seed)
    if args.command == "rs":
        params = RSParams(field_from_order(args.q), args.k)
        return construct_report("rs", rs_scheme(params), {"q": args.q, "k": args.k})
    if args.command == "css":
        _, _, c1, c2 = parse_classical_pair(_read_input(args.input), "C1", "C2")
        scheme = css_scheme(c1, c2, args.lagrangian)
        return construct_report("css", scheme, {"lagrangian": args.lagrangian})
    if args.command == "hermitian":
        _, _, d, d_max = parse_classical_pair(_read_input(args.input), "D", "DMAX")
        return construct_report("hermitian", hermitian_scheme(d, d_max), {})
    raise AssertionError(f"unhandled command {args.command}")


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
