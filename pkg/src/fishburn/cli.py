"""Command-line frontend: count, list, series, verify.

Everything is a flag; there are no config files or environment variables, so
a published invocation reproduces exactly.  Results go to stdout (or --output),
diagnostics to stderr.  Exit codes: 0 success, 1 verification failure,
2 usage or parse error, 3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import nullcontext

from fishburn.enumeration import (
    DEFAULT_COUNT_CAP,
    DEFAULT_LIST_CAP,
    AvoidanceQuery,
    CapacityError,
    count,
    members,
)
from fishburn.patterns import PatternSet
from fishburn.perm import ParseError, parse_values
from fishburn.sequences import fishburn_series
from fishburn.verify import SUITES, format_delimited, format_plain, format_structured, run_suite

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3

_FORMATTERS = {
    "plain": format_plain,
    "delimited": format_delimited,
    "structured": format_structured,
}


def _add_query_arguments(parser: argparse.ArgumentParser, default_cap: int) -> None:
    parser.add_argument("--avoid", default="", metavar="PATTERNS",
                        help="comma-separated classical patterns, e.g. 321,1423,2143")
    parser.add_argument("--fishburn", action="store_true",
                        help="additionally require members to avoid the Fishburn pattern")
    parser.add_argument("-n", dest="n", type=int, required=True, help="permutation length")
    parser.add_argument("--one-pos", dest="one_pos", type=int, choices=(1, 2), default=None,
                        help="keep only members whose entry 1 sits at this position")
    parser.add_argument("--prefix", default="", metavar="VALUES",
                        help="members must begin with these values (space-separated or compact digits)")
    parser.add_argument("--prefix-negation", action="store_true",
                        help="match all of PREFIX but its last slot, which must hold a different value")
    parser.add_argument("--cap", type=int, default=default_cap,
                        help=f"length cap (default {default_cap})")
    parser.add_argument("-o", "--output", default=None, help="write results here instead of stdout")


def _build_query(args: argparse.Namespace) -> AvoidanceQuery:
    patterns = PatternSet.parse(args.avoid, fishburn=args.fishburn)
    prefix = parse_values(args.prefix)
    return AvoidanceQuery(
        args.n,
        patterns,
        one_position=args.one_pos,
        prefix=prefix,
        prefix_negation=args.prefix_negation,
    )


def _open_output(path: str | None):
    return open(path, "w") if path else nullcontext(sys.stdout)


def cmd_count(args: argparse.Namespace) -> int:
    query = _build_query(args)
    value = count(query, cap=args.cap)
    with _open_output(args.output) as out:
        print(value, file=out)
    return EXIT_OK


def cmd_list(args: argparse.Namespace) -> int:
    query = _build_query(args)
    with _open_output(args.output) as out:
        for p in members(query, cap=args.cap):
            print(p.to_text(), file=out)
    return EXIT_OK


def cmd_series(args: argparse.Namespace) -> int:
    coefficients = fishburn_series(args.degree)
    with _open_output(args.output) as out:
        for n, c in enumerate(coefficients):
            print(f"{n}\t{c}", file=out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    reports = run_suite(args.suite, args.max_n)
    text = _FORMATTERS[args.format](reports)
    with _open_output(args.output) as out:
        out.write(text)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fishburn",
        description="Count, list, and verify pattern-avoiding (Fishburn) permutation classes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="print the exact size of an avoidance class")
    _add_query_arguments(p_count, DEFAULT_COUNT_CAP)
    p_count.set_defaults(func=cmd_count)

    p_list = sub.add_parser("list", help="print every member, one per line, lexicographically")
    _add_query_arguments(p_list, DEFAULT_LIST_CAP)
    p_list.set_defaults(func=cmd_list)

    p_series = sub.add_parser("series", help="print Fishburn-number series coefficients")
    p_series.add_argument("-N", dest="degree", type=int, required=True,
                          help="truncation degree (coefficients 0..N)")
    p_series.add_argument("-o", "--output", default=None)
    p_series.set_defaults(func=cmd_series)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=SUITES)
    p_verify.add_argument("--max-n", dest="max_n", type=int, default=9,
                          help="verify for lengths up to this bound (default 9)")
    p_verify.add_argument("--format", choices=sorted(_FORMATTERS), default="plain")
    p_verify.add_argument("-o", "--output", default=None)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"fishburn: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (ParseError, ValueError, OSError) as exc:
        print(f"fishburn: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    raise SystemExit(main())
