"""Exact base-4 digit codec for unbounded nonnegative integers.

Digit vectors are little-endian (index i holds the coefficient of 4**i)
and canonical: no trailing zero digit, the empty list encodes 0.
"""

from __future__ import annotations


def to_digits(n: int) -> list[int]:
    """Canonical little-endian base-4 digits of n (empty for 0)."""
    if n < 0:
        raise ValueError(f"natural number required, got {n}")
    digits = []
    while n:
        n, d = divmod(n, 4)
        digits.append(d)
    return digits


def from_digits(digits: list[int]) -> int:
    """Value of a little-endian base-4 digit vector.

    Trailing zeros are tolerated; digits outside {0,1,2,3} are rejected.
    """
    value = 0
    for i, d in enumerate(digits):
        if not 0 <= d <= 3:
            raise ValueError(f"digit {d} at index {i} is outside 0..3")
        value += d << (2 * i)
    return value


def digit_at(n: int, i: int) -> int:
    """Base-4 digit of n at position i (0 beyond the canonical length)."""
    if n < 0:
        raise ValueError(f"natural number required, got {n}")
    if i < 0:
        raise ValueError(f"digit index must be nonnegative, got {i}")
    return (n >> (2 * i)) & 3
