"""Operation counters, wall-clock benchmarking and report emission."""

from __future__ import annotations

import csv
import io
import json
import statistics
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

REPORT_FIELDS = (
    "algo",
    "n",
    "repeats",
    "wall_time_ns",
    "squarings",
    "mults",
    "adds",
    "shifts",
    "digits",
)


@dataclass
class OpCounters:
    """Semantic big-integer operation tallies.

    ``squarings`` and ``mults`` are kept apart: a square is never counted as
    a general multiplication. ``square_steps`` and ``mul_steps`` count the
    algorithm-level steps (pair or matrix squarings, multiplies by phi or M)
    and are not part of the report schema.

    A counters object belongs to one computation at a time.
    """

    squarings: int = 0
    mults: int = 0
    adds: int = 0
    shifts: int = 0
    square_steps: int = 0
    mul_steps: int = 0

    def as_dict(self) -> Dict[str, int]:
        return {
            "squarings": self.squarings,
            "mults": self.mults,
            "adds": self.adds,
            "shifts": self.shifts,
        }


@dataclass
class BenchRecord:
    algo: str
    n: int
    wall_time_ns: int
    repeats: int
    counters: OpCounters = field(default_factory=OpCounters)
    digits: int = 1

    def as_row(self) -> dict:
        row = {
            "algo": self.algo,
            "n": self.n,
            "repeats": self.repeats,
            "wall_time_ns": self.wall_time_ns,
        }
        row.update(self.counters.as_dict())
        row["digits"] = self.digits
        return row


def expected_counts(n: int) -> tuple[int, int]:
    """(squaring steps, phi-multiply steps) for index ``n``; bitlen(0) is 1."""
    if n < 0:
        raise ValueError(f"negative index {n}")
    return max(n.bit_length(), 1), bin(n).count("1")


def digit_count(x: int) -> int:
    """Exact number of decimal digits of ``x >= 0``.

    Avoids ``str(x)``, which is quadratic and capped by the interpreter's
    int-to-str limit. The float estimate is only a starting guess and is
    corrected by exact comparisons against powers of ten.
    """
    if x < 0:
        raise ValueError("digit_count expects a non-negative integer")
    if x < 10:
        return 1
    d = int((x.bit_length() - 1) * 0.30102999566398120) + 1
    p = 10 ** (d - 1)
    while p > x:
        p //= 10
        d -= 1
    while p * 10 <= x:
        p *= 10
        d += 1
    return d


def _algorithms() -> Dict[str, Callable[[int, Optional[OpCounters]], int]]:
    from . import algorithms as alg

    return {
        "iterative": alg.fib_iterative,
        "lucas-linear": lambda n, c=None: alg.fib_lucas_linear(n, c)[0],
        "pair-fast": lambda n, c=None: alg.fib_pair_fast(n, c)[0],
        "doubling": alg.fib_fast_doubling,
        "matrix": alg.fib_matrix,
        "float": lambda n, c=None: alg.fib_float(n).rounded,
    }


ALGORITHMS = (
    "iterative",
    "lucas-linear",
    "pair-fast",
    "doubling",
    "matrix",
    "float",
)


def check_bench_args(algo: str, n: int) -> None:
    """Raise ValueError if ``algo`` is unknown or ``n`` is outside its range."""
    from .algorithms import float_max_n

    if algo not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algo!r}; choose from {', '.join(ALGORITHMS)}")
    if n < 0:
        raise ValueError(f"negative index {n}")
    if algo == "float" and n > float_max_n():
        raise ValueError(f"n = {n} out of range for float (max {float_max_n()})")


def run_bench(algo: str, n: int, repeats: int = 3) -> BenchRecord:
    """Time ``algo`` on index ``n`` and collect counters and digit count.

    Wall time is the median over ``repeats`` uninstrumented runs; counters
    come from one extra instrumented run.
    """
    check_bench_args(algo, n)
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    fn = _algorithms()[algo]

    times = []
    results = []
    for _ in range(repeats):
        t0 = time.perf_counter_ns()
        results.append(fn(n, None))
        times.append(time.perf_counter_ns() - t0)
    if any(r != results[0] for r in results[1:]):
        raise RuntimeError(f"{algo} gave differing results across repeats for n = {n}")

    counters = OpCounters()
    if fn(n, counters) != results[0]:
        raise RuntimeError(f"{algo} instrumented run disagrees for n = {n}")

    return BenchRecord(
        algo=algo,
        n=n,
        wall_time_ns=max(1, int(statistics.median(times))),
        repeats=repeats,
        counters=counters,
        digits=digit_count(results[0]),
    )


def emit_report(records: Sequence[BenchRecord], format: str = "csv") -> str:
    """Serialize records as CSV (header + rows) or a JSON array of flat objects."""
    if not records:
        raise ValueError("no records to report")
    rows: List[dict] = [r.as_row() for r in records]
    if format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=REPORT_FIELDS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    if format == "json":
        return json.dumps(rows, indent=2) + "\n"
    raise ValueError(f"unknown report format {format!r}")
