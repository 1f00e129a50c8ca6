"""Fibonacci and Lucas algorithms: the phi-pair method and its competitors."""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Optional, Tuple

from .instrumentation import OpCounters
from .phi_algebra import pair_pow_phi


def _check_index(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"index must be an int, got {type(n).__name__}")
    if n < 0:
        raise ValueError(f"negative index {n} is not supported")


def fib_iterative(n: int, counters: Optional[OpCounters] = None) -> int:
    """F(n) by the plain two-term loop. Ground truth for everything else."""
    _check_index(n)
    f, g = 0, 1
    for _ in range(n):
        f, g = g, f + g
    if counters is not None:
        counters.adds += n
    return f


def fib_lucas_linear(n: int, counters: Optional[OpCounters] = None) -> Tuple[int, int]:
    """(F(n), L(n)) by stepping the pair e, f from (2, 0).

    Each step is ``e, f = (e + 5f)/2, (e + f)/2``, i.e. one multiply by phi.
    """
    _check_index(n)
    e, f = 2, 0
    for _ in range(n):
        s = e + (f << 2) + f
        t = e + f
        assert s & 1 == 0 and t & 1 == 0
        e, f = s >> 1, t >> 1
    if counters is not None:
        counters.adds += 3 * n
        counters.shifts += 3 * n
    return f, e


def fib_pair_fast(n: int, counters: Optional[OpCounters] = None) -> Tuple[int, int]:
    """(F(n), L(n)) from phi**n computed by square-and-multiply on pairs."""
    _check_index(n)
    lucas_n, fib_n = pair_pow_phi(n, counters)
    return fib_n, lucas_n


def lucas(n: int) -> int:
    return fib_pair_fast(n)[1]


def fib_fast_doubling(n: int, counters: Optional[OpCounters] = None) -> int:
    """F(n) by iterative MSB-first index doubling.

    Carries ``(F(k), F(k+1))``. With ``F(k-1) = F(k+1) - F(k)`` the doubling
    formulas become::

        F(2k+1) = F(k+1)^2 + F(k)^2
        F(2k)   = (2F(k+1) - F(k)) * F(k)

    so a doubling costs two squarings and one multiplication.
    """
    _check_index(n)
    f, g = 0, 1
    for bit in bin(n)[2:]:
        f2 = f * f
        g2 = g * g
        even = ((g << 1) - f) * f
        odd = g2 + f2
        if counters is not None:
            counters.squarings += 2
            counters.mults += 1
            counters.adds += 2
            counters.shifts += 1
            counters.square_steps += 1
        if bit == "1":
            f, g = odd, even + odd
            if counters is not None:
                counters.adds += 1
                counters.mul_steps += 1
        else:
            f, g = even, odd
    return f


@dataclass(frozen=True)
class SymFibMatrix:
    """Symmetric matrix ``[[a, b], [b, c]]``; powers of ``[[1, 1], [1, 0]]`` have ``a = b + c``."""

    a: int
    b: int
    c: int

    def __iter__(self):
        yield self.a
        yield self.b
        yield self.c


MAT_IDENTITY = SymFibMatrix(1, 0, 1)
MAT_M = SymFibMatrix(1, 1, 0)


def mat_mul_M(x: SymFibMatrix, counters: Optional[OpCounters] = None) -> SymFibMatrix:
    """Right-multiply by M; with ``a = b + c`` this is just ``(a + b, a, b)``."""
    a, b, c = x
    assert a == b + c, f"matrix {x} is not a power of M"
    if counters is not None:
        counters.adds += 1
    return SymFibMatrix(a + b, a, b)


def mat_square(x: SymFibMatrix, counters: Optional[OpCounters] = None) -> SymFibMatrix:
    """Square a symmetric matrix: 3 squarings (a², b², c²) and 2 mults (ab, bc)."""
    a, b, c = x
    a2, b2, c2 = a * a, b * b, c * c
    ab, bc = a * b, b * c
    if counters is not None:
        counters.squarings += 3
        counters.mults += 2
        counters.adds += 3
    return SymFibMatrix(a2 + b2, ab + bc, b2 + c2)


def mat_pow_M(n: int, counters: Optional[OpCounters] = None) -> SymFibMatrix:
    """M**n by MSB-first square-and-multiply, scanning every bit of ``n``."""
    _check_index(n)
    x = MAT_IDENTITY
    for bit in bin(n)[2:]:
        x = mat_square(x, counters)
        if counters is not None:
            counters.square_steps += 1
        if bit == "1":
            x = mat_mul_M(x, counters)
            if counters is not None:
                counters.mul_steps += 1
    return x


def fib_matrix(n: int, counters: Optional[OpCounters] = None) -> int:
    """F(n) as the off-diagonal entry of M**n."""
    return mat_pow_M(n, counters).b


SQRT5 = math.sqrt(5.0)
PHI = (1.0 + SQRT5) / 2.0


@dataclass(frozen=True)
class FloatEstimate:
    n: int
    g: float
    rounded: int
    exact: bool


def _float_phi_power(n: int) -> float:
    result, base = 1.0, PHI
    while n:
        if n & 1:
            result *= base
        n >>= 1
        if n:
            base *= base
    return result


@functools.lru_cache(maxsize=None)
def float_max_n() -> int:
    """Largest n for which phi**n / sqrt(5) stays finite in binary64."""
    n = 1
    while math.isfinite(_float_phi_power(n + 1)):
        n += 1
    return n


def fib_float(n: int) -> FloatEstimate:
    """Round phi**n / sqrt(5), evaluated in binary64, to the nearest integer.

    ``exact`` tells whether the rounding equals the true F(n). Raises
    OverflowError past :func:`float_max_n`.
    """
    _check_index(n)
    power = _float_phi_power(n)
    if not math.isfinite(power):
        raise OverflowError(
            f"phi**{n} overflows binary64; fib_float supports n <= {float_max_n()}"
        )
    g = power / SQRT5
    rounded = int(math.floor(g + 0.5))
    return FloatEstimate(n=n, g=g, rounded=rounded, exact=rounded == fib_iterative(n))


def float_breakdown(limit: int) -> Optional[int]:
    """Smallest n <= limit where the float estimate is wrong, else None."""
    if limit < 0:
        raise ValueError("limit must be non-negative")
    if limit > float_max_n():
        raise OverflowError(f"limit {limit} exceeds float range (max n = {float_max_n()})")
    for n in range(limit + 1):
        if not fib_float(n).exact:
            return n
    return None
