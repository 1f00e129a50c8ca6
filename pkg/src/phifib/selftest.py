"""Oracle-equivalence and invariant checks used by ``phifib selftest``."""

from __future__ import annotations

from typing import Callable, Iterator, List, Optional, TextIO, Tuple

from .algorithms import (
    fib_fast_doubling,
    fib_float,
    fib_lucas_linear,
    fib_matrix,
    fib_pair_fast,
    float_breakdown,
)
from .instrumentation import OpCounters, expected_counts
from .phi_algebra import pair_norm, pair_pow_phi

Check = Callable[[int], Optional[str]]


def _fib_stream() -> Iterator[Tuple[int, int]]:
    n, f, g = 0, 0, 1
    while True:
        yield n, f
        n, f, g = n + 1, g, f + g


def check_equivalence(depth: int) -> Optional[str]:
    for n, expected in _fib_stream():
        if n > depth:
            return None
        got = {
            "pair-fast": fib_pair_fast(n)[0],
            "doubling": fib_fast_doubling(n),
            "matrix": fib_matrix(n),
        }
        if n <= 2000:
            got["lucas-linear"] = fib_lucas_linear(n)[0]
        for name, value in got.items():
            if value != expected:
                return f"{name}({n}) = {value}, expected {expected}"


def check_norm_parity(depth: int) -> Optional[str]:
    for n in range(depth + 1):
        x = pair_pow_phi(n)
        if (x.a - x.b) % 2:
            return f"parity broken at n = {n}: {x}"
        if pair_norm(x) != (-1) ** n:
            return f"norm of phi**{n} is {pair_norm(x)}"
    return None


def check_counters(depth: int) -> Optional[str]:
    for n in range(1, min(depth, 4096) + 1):
        squares, mults = expected_counts(n)
        c = OpCounters()
        fib_pair_fast(n, c)
        if (c.square_steps, c.mul_steps) != (squares, mults):
            return f"pair-fast({n}) steps {c.square_steps}/{c.mul_steps}, expected {squares}/{mults}"
        if (c.squarings, c.mults) != (2 * squares, squares):
            return f"pair-fast({n}) counted {c.squarings} squarings, {c.mults} mults"
        m = OpCounters()
        fib_matrix(n, m)
        if (m.squarings, m.mults) != (3 * squares, 2 * squares):
            return f"matrix({n}) counted {m.squarings} squarings, {m.mults} mults"
        if n >= 2 and not c.mults < m.mults:
            return f"pair-fast({n}) mults {c.mults} not below matrix {m.mults}"
    return None


def check_float(_depth: int) -> Optional[str]:
    for n in range(71):
        est = fib_float(n)
        if not est.exact:
            return f"fib_float({n}) rounded to {est.rounded}"
    n = float_breakdown(200)
    if n is None or not 71 <= n <= 200:
        return f"float_breakdown(200) returned {n}"
    return None


CHECKS: List[Tuple[str, Check]] = [
    ("cross-algorithm equivalence", check_equivalence),
    ("norm and parity invariants", check_norm_parity),
    ("operation counter exactness", check_counters),
    ("float agreement and breakdown", check_float),
]


def run_selftest(depth: int, out: TextIO) -> bool:
    """Run every check, print a summary line per check, stop at the first failure."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    for name, check in CHECKS:
        failure = check(depth)
        if failure is not None:
            print(f"FAIL  {name}: {failure}", file=out)
            return False
        print(f"ok    {name}", file=out)
    breakdown = float_breakdown(200)
    print(f"all checks passed (depth {depth}; float breaks down at n = {breakdown})", file=out)
    return True
