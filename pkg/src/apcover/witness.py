"""Constructive 3-term-AP witnesses: for any n >= 32 build a, b in A
with a < b < n and a + n = 2b.

The construction picks the level l with 2*4**l <= n < 8*4**l, splits n
into its coarse quotient m = n // 4**l (2..7) and low base-4 digits,
and maps each piece through a fixed pair table.  The tables satisfy

    lead_small + m     == 2 * lead_big      for every m in 2..7
    digit_small + d    == 2 * digit_big     for every digit d in 0..3

so a + n = 2b holds position by position as an integer identity, with
no carry analysis needed.  b always lands in T_l; a lands in T_l when
its lead is 1 and in T_{l-1} when its lead is 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .sequence import decompose

#: m -> (lead of b, lead of a); the two leads average to m.
LEAD_PAIRS: dict[int, tuple[int, int]] = {
    2: (1, 0),
    3: (2, 1),
    4: (2, 0),
    5: (3, 1),
    6: (3, 0),
    7: (4, 1),
}

#: low digit of n -> (low digit of b, low digit of a); averages likewise.
DIGIT_PAIRS: dict[int, tuple[int, int]] = {
    0: (1, 2),
    1: (1, 1),
    2: (2, 2),
    3: (2, 1),
}

MIN_N = 32


@dataclass(frozen=True)
class Witness:
    """A 3-term arithmetic progression a < b < n with a, b in A.

    `level` and `m` record which construction case produced it; both
    are None for ad-hoc triples built by hand.
    """

    a: int
    b: int
    n: int
    level: int | None = None
    m: int | None = None


def level_for(n: int) -> int:
    """The unique l >= 2 with 2 * 4**l <= n < 8 * 4**l (n >= 32)."""
    if n < MIN_N:
        raise ValueError(f"construction needs n >= {MIN_N}, got {n}")
    return ((n >> 1).bit_length() - 1) >> 1


def find_witness(n: int) -> Witness:
    """Canonical witness for n >= 32, built digit by digit from the tables."""
    level = level_for(n)
    m = n >> (2 * level)
    rem = n - (m << (2 * level))
    lead_b, lead_a = LEAD_PAIRS[m]
    b = lead_b << (2 * level)
    a = lead_a << (2 * level)
    for i in range(level):
        rem, d = divmod(rem, 4)
        v_b, v_a = DIGIT_PAIRS[d]
        b += v_b << (2 * i)
        a += v_a << (2 * i)
    return Witness(a=a, b=b, n=n, level=level, m=m)


def validate(w: Witness) -> bool:
    """Exact check of every Witness invariant.

    Ordering, the progression identity a + n = 2b, membership of both
    terms, and (when the witness carries its construction level) that
    b sits in T_level and a in T_level or T_{level-1}.
    """
    if not (1 <= w.a < w.b < w.n):
        return False
    if w.a + w.n != 2 * w.b:
        return False
    ea = decompose(w.a)
    eb = decompose(w.b)
    if ea is None or eb is None:
        return False
    if w.level is not None:
        if eb.level != w.level or ea.level not in (w.level - 1, w.level):
            return False
    return True
