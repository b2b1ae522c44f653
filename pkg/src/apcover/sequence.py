"""The block-built covering set A and its exact counting machinery.

A is the disjoint union over levels l >= 0 of the blocks

    T_l = { lead * 4**l  +  sum(low[i] * 4**i for i in range(l))
            : lead in {1,2,3,4}, low[i] in {1,2} }

so a member of level l is a number whose top base-4 digit position is
worth 1..4 and whose l low digits are all 1 or 2.  Levels are ordered
(max T_l < min T_{l+1}) and |T_l| = 4 * 2**l, which makes membership,
counting, ranking and unranking all cheap digit work on exact integers
of any size.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True)
class Element:
    """Canonical representation of a member of level `level`.

    `lead` is the coefficient of 4**level (1..4); `low` holds the
    little-endian coefficients of 4**i for i < level, each 1 or 2.
    """

    level: int
    lead: int
    low: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.level < 0:
            raise ValueError(f"level must be nonnegative, got {self.level}")
        if not 1 <= self.lead <= 4:
            raise ValueError(f"lead digit must be in 1..4, got {self.lead}")
        if len(self.low) != self.level:
            raise ValueError(
                f"expected {self.level} low digits, got {len(self.low)}"
            )
        if any(d not in (1, 2) for d in self.low):
            raise ValueError(f"low digits must be 1 or 2, got {self.low}")

    @property
    def value(self) -> int:
        return encode(self)


def encode(e: Element) -> int:
    """Integer value lead * 4**level + sum(low[i] * 4**i)."""
    n = e.lead << (2 * e.level)
    for i, d in enumerate(e.low):
        n += d << (2 * i)
    return n


def decompose(n: int) -> Element | None:
    """Canonical Element for n, or None when n is not in A.

    With L = floor(log4 n) the only possible levels are L (lead digit
    1..3) and L-1 (lead digit 4); a candidate is accepted when every
    low digit is 1 or 2.  At most one candidate can succeed.
    """
    if n < 1:
        return None
    top = (n.bit_length() - 1) >> 1
    for level in (top, top - 1):
        if level < 0:
            continue
        lead = n >> (2 * level)
        if not (1 <= lead <= 4) or (level == top and lead == 4):
            continue
        rest = n - (lead << (2 * level))
        low = []
        for _ in range(level):
            rest, d = divmod(rest, 4)
            if d not in (1, 2):
                low = None
                break
            low.append(d)
        if low is not None:
            return Element(level=level, lead=lead, low=tuple(low))
    return None


def member(n: int) -> bool:
    """True iff n is in A.  Same digit test as decompose, allocation-free."""
    if n < 1:
        return False
    top = (n.bit_length() - 1) >> 1
    for level in (top, top - 1):
        if level < 0:
            continue
        lead = n >> (2 * level)
        if not (1 <= lead <= 4) or (level == top and lead == 4):
            continue
        rest = n - (lead << (2 * level))
        ok = True
        for _ in range(level):
            rest, d = divmod(rest, 4)
            if d not in (1, 2):
                ok = False
                break
        if ok:
            return True
    return False


def level_min(level: int) -> int:
    """Smallest member of T_level: all digits at their minimum."""
    return (4 ** (level + 1) - 1) // 3


def level_max(level: int) -> int:
    """Largest member of T_level: lead 4, all low digits 2."""
    return (14 * 4**level - 2) // 3


def _top_level(n: int) -> int:
    """Largest level whose smallest member is <= n (requires n >= 1)."""
    # level_min(l) <= n  iff  4**(l+1) <= 3n + 1
    return ((3 * n + 1).bit_length() - 1) // 2 - 1


def count_leq(n: int) -> int:
    """Number of members of A that are <= n (the counting function A(n)).

    Levels strictly below the straddling one contribute 4 * (2**l - 1)
    in closed form; within the straddling level the rank of n is found
    by one tight digit walk, so a query costs O(log n) even at 4**60.
    """
    if n < 1:
        return 0
    level = _top_level(n)
    if n >= level_max(level):
        return 4 * ((1 << (level + 1)) - 1)
    total = 4 * ((1 << level) - 1)
    lead = n >> (2 * level)  # in 1..4 since level_min <= n < level_max
    total += (lead - 1) << level
    rest = n & ((1 << (2 * level)) - 1)
    for i in range(level - 1, -1, -1):
        d = rest >> (2 * i)
        rest &= (1 << (2 * i)) - 1
        if d >= 3:
            # both low-digit choices fall below; nothing stays tight
            return total + (2 << i)
        if d == 2:
            total += 1 << i
        elif d == 0:
            return total
    return total + 1  # every digit matched: n itself is a member


def element_at(j: int) -> int:
    """The j-th smallest member of A (1-based); inverse of count_leq on A.

    The level is the one with 4*(2**l - 1) < j <= 4*(2**(l+1) - 1); the
    remaining rank splits into the lead digit and the bits of the low
    digits (bit i set means low digit i is 2).
    """
    if j < 1:
        raise ValueError(f"rank must be >= 1, got {j}")
    level = 0
    while 4 * ((1 << (level + 1)) - 1) < j:
        level += 1
    r = j - 4 * ((1 << level) - 1) - 1
    lead = 1 + (r >> level)
    bits = r & ((1 << level) - 1)
    n = lead << (2 * level)
    for i in range(level):
        n += (1 + ((bits >> i) & 1)) << (2 * i)
    return n


def iter_range(lo: int, hi: int) -> Iterator[int]:
    """Yield the members of A in [lo, hi] in increasing order.

    Walks ranks with element_at, so memory stays O(1) for huge ranges.
    """
    if lo > hi:
        raise ValueError(f"empty range bounds: lo={lo} > hi={hi}")
    j = count_leq(lo - 1) + 1 if lo >= 1 else 1
    while True:
        n = element_at(j)
        if n > hi:
            return
        yield n
        j += 1


class BlockSequence:
    """Ordered-sequence interface over A for the generic oracles."""

    def member(self, n: int) -> bool:
        return member(n)

    def iter_upto(self, limit: int) -> Iterator[int]:
        return iter_range(0, limit) if limit >= 0 else iter(())


BLOCK_SEQUENCE = BlockSequence()
