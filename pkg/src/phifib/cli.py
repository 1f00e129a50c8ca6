"""Command-line front end: ``compute``, ``table``, ``bench`` and ``selftest``.

Exit status is 0 on success, 1 when the self-test fails and 2 for usage or
range errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import algorithms as alg
from .instrumentation import ALGORITHMS, check_bench_args, emit_report, run_bench, digit_count
from .selftest import run_selftest

EXIT_OK = 0
EXIT_SELFTEST_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _allow_long_decimals() -> None:
    # Python >= 3.10.7 refuses str() on ints above 4300 digits by default
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)


def parse_index(text: str) -> int:
    try:
        n = int(text, 10)
    except ValueError:
        raise UsageError(f"not a non-negative integer: {text!r}") from None
    if n < 0:
        raise UsageError(f"index must be non-negative, got {n}")
    return n


def parse_format(text: str):
    """Return ``("dec"|"hex"|"digits", None)`` or ``("last", k)``."""
    if text in ("dec", "hex", "digits"):
        return text, None
    if text.startswith("last:"):
        try:
            k = int(text[5:])
        except ValueError:
            k = 0
        if k >= 1:
            return "last", k
    raise UsageError(f"bad format {text!r}; use dec, hex, digits or last:K")


def format_value(x: int, fmt: str) -> str:
    kind, k = parse_format(fmt)
    if kind == "dec":
        _allow_long_decimals()
        return str(x)
    if kind == "hex":
        return format(x, "x")
    if kind == "digits":
        return str(digit_count(x))
    return str(x % 10**k).zfill(k)


def compute_value(n: int, algo: str = "pair-fast", want_lucas: bool = False) -> int:
    if want_lucas:
        if algo == "lucas-linear":
            return alg.fib_lucas_linear(n)[1]
        if algo != "pair-fast":
            raise UsageError(f"--lucas needs algorithm pair-fast or lucas-linear, not {algo}")
        return alg.lucas(n)
    check_bench_args(algo, n)
    if algo == "pair-fast":
        return alg.fib_pair_fast(n)[0]
    if algo == "lucas-linear":
        return alg.fib_lucas_linear(n)[0]
    if algo == "iterative":
        return alg.fib_iterative(n)
    if algo == "doubling":
        return alg.fib_fast_doubling(n)
    if algo == "matrix":
        return alg.fib_matrix(n)
    return alg.fib_float(n).rounded


def table_lines(max_n: int = 8) -> List[str]:
    """Rows ``n  g_n  f_n`` of the float-rounding table, g to 4 places."""
    if max_n > alg.float_max_n():
        raise UsageError(f"--max-n {max_n} exceeds float range (max {alg.float_max_n()})")
    lines = ["n  g_n  f_n"]
    for n in range(max_n + 1):
        est = alg.fib_float(n)
        lines.append(f"{n}  {est.g:.4f}  {alg.fib_iterative(n)}")
    return lines


def _split_list(text: str) -> List[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def cmd_compute(args, out) -> int:
    n = parse_index(args.n)
    parse_format(args.format)
    value = compute_value(n, args.algo, args.lucas)
    print(format_value(value, args.format), file=out)
    return EXIT_OK


def cmd_table(args, out) -> int:
    if args.max_n < 0:
        raise UsageError("--max-n must be non-negative")
    for line in table_lines(args.max_n):
        print(line, file=out)
    return EXIT_OK


def cmd_bench(args, out) -> int:
    ns = [parse_index(t) for t in _split_list(args.n)]
    algos = _split_list(args.algos)
    if not ns or not algos:
        raise UsageError("--n and --algos need at least one entry each")
    if args.repeats < 1:
        raise UsageError("--repeats must be >= 1")
    # validate every combination before running any
    for algo in algos:
        for n in ns:
            try:
                check_bench_args(algo, n)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
    records = [run_bench(algo, n, args.repeats) for algo in algos for n in ns]
    text = emit_report(records, args.format)
    if args.out and args.out != "-":
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_selftest(args, out) -> int:
    if args.depth < 1:
        raise UsageError("--depth must be >= 1")
    return EXIT_OK if run_selftest(args.depth, out) else EXIT_SELFTEST_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phifib",
        description="Exact Fibonacci and Lucas numbers for large indices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="print F(n) or L(n)")
    p.add_argument("n")
    p.add_argument("--algo", default="pair-fast", choices=ALGORITHMS)
    p.add_argument("--format", default="dec", help="dec, hex, digits or last:K")
    p.add_argument("--lucas", action="store_true", help="print L(n) instead of F(n)")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("table", help="float rounding table for small n")
    p.add_argument("--max-n", type=int, default=8)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("bench", help="time algorithms and emit a CSV/JSON report")
    p.add_argument("--n", required=True, help="comma-separated indices")
    p.add_argument("--algos", required=True, help="comma-separated algorithm ids")
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--format", default="csv", choices=("csv", "json"))
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("selftest", help="run the oracle and invariant suite")
    p.add_argument("--depth", type=int, default=2000)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, ValueError, OverflowError) as exc:
        print(f"phifib {args.command}: error: {exc}", file=err)
        return EXIT_USAGE
