"""Exact arithmetic on half-integer elements (a + b*sqrt(5)) / 2.

A :class:`PhiPair` ``(a, b)`` stands for ``(a + b*sqrt(5)) / 2`` with ``a`` and
``b`` of equal parity. Under this encoding ``phi = (1, 1)``, ``psi = (1, -1)``
and ``1 = (2, 0)``, and the n-th power of phi is ``(L(n), F(n))``: the Lucas
number in the real part and the Fibonacci number in the sqrt(5) part.

All functions are pure. Those that take a ``counters`` argument tally the
big-integer operations they perform on it when one is given.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from .instrumentation import OpCounters


@dataclass(frozen=True)
class PhiPair:
    """The element ``(a + b*sqrt(5)) / 2``; ``a`` and ``b`` share parity."""

    a: int
    b: int

    def __iter__(self):
        yield self.a
        yield self.b

    def __mul__(self, other: "PhiPair") -> "PhiPair":
        if not isinstance(other, PhiPair):
            return NotImplemented
        return pair_mul(self, other)

    def __pow__(self, n: int) -> "PhiPair":
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = pair_one()
        for bit in bin(n)[2:]:
            result = pair_mul(result, result)
            if bit == "1":
                result = pair_mul(result, self)
        return result

    def conjugate(self) -> "PhiPair":
        return PhiPair(self.a, -self.b)

    def is_valid(self) -> bool:
        return (self.a - self.b) % 2 == 0


def _half(x: int) -> int:
    # parity invariant makes this exact; a failure means a corrupted input
    assert x & 1 == 0, f"inexact halving of {x}: PhiPair parity invariant broken"
    return x >> 1


def pair_one() -> PhiPair:
    return PhiPair(2, 0)


def pair_phi() -> PhiPair:
    return PhiPair(1, 1)


def pair_psi() -> PhiPair:
    return PhiPair(1, -1)


def pair_mul(x: PhiPair, y: PhiPair) -> PhiPair:
    """General product ``((ac + 5bd)/2, (ad + bc)/2)`` of ``x=(a,b)``, ``y=(c,d)``."""
    a, b = x
    c, d = y
    return PhiPair(_half(a * c + 5 * b * d), _half(a * d + b * c))


def pair_square(x: PhiPair, counters: Optional[OpCounters] = None) -> PhiPair:
    """Square ``x`` with two integer squarings and one multiplication.

    ``((a^2 + 5b^2)/2, ab)``; the factor 5 is applied as ``(t << 2) + t``.
    """
    a, b = x
    a2 = a * a
    b2 = b * b
    ab = a * b
    if counters is not None:
        counters.squarings += 2
        counters.mults += 1
        counters.adds += 2
        counters.shifts += 2
    return PhiPair(_half(a2 + (b2 << 2) + b2), ab)


def pair_mul_phi(x: PhiPair, counters: Optional[OpCounters] = None) -> PhiPair:
    """Multiply by phi using only adds and shifts: ``((a + 5b)/2, (a + b)/2)``."""
    a, b = x
    if counters is not None:
        counters.adds += 3
        counters.shifts += 3
    return PhiPair(_half(a + (b << 2) + b), _half(a + b))


def pair_mul_psi(x: PhiPair, counters: Optional[OpCounters] = None) -> PhiPair:
    """Multiply by psi: ``((a - 5b)/2, (b - a)/2)``."""
    a, b = x
    if counters is not None:
        counters.adds += 3
        counters.shifts += 3
    return PhiPair(_half(a - (b << 2) - b), _half(b - a))


def pair_pow_phi(n: int, counters: Optional[OpCounters] = None) -> PhiPair:
    """Return ``phi**n`` as ``(L(n), F(n))`` by MSB-first square-and-multiply.

    Every bit of ``n`` is scanned, the leading one included, starting from
    the identity; ``n = 0`` is the single bit ``0``. With ``counters`` the
    run records ``bitlen(n)`` pair squarings and ``popcount(n)`` phi
    multiplies in ``square_steps`` / ``mul_steps``.
    """
    if n < 0:
        raise ValueError(f"negative index {n} is not supported")
    state = pair_one()
    for bit in bin(n)[2:]:
        state = pair_square(state, counters)
        if counters is not None:
            counters.square_steps += 1
        if bit == "1":
            state = pair_mul_phi(state, counters)
            if counters is not None:
                counters.mul_steps += 1
    return state


def pair_norm(x: PhiPair) -> int:
    """Field norm ``(a^2 - 5b^2) / 4``."""
    a, b = x
    num = a * a - 5 * b * b
    assert num % 4 == 0, f"norm numerator {num} not divisible by 4"
    return num // 4
