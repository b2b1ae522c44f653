"""Brute-force ground truth for AP_k covering questions.

Everything here works against any object exposing the IntegerSequence
protocol (strictly increasing iteration + membership), so the same
oracle validates the block construction, Stanley sequences and ad-hoc
sets.  Single queries scan the common difference d = 1, 2, ...
directly; bulk range scans go through the kernel backend, which walks
candidate b-terms over a membership table instead (same verdicts,
much cheaper).
"""

from __future__ import annotations

from bisect import bisect_right
from typing import Iterator, Protocol, runtime_checkable

from . import _kernels

#: weak_covers result for n that is itself a sequence member.
EXEMPT = "exempt"


@runtime_checkable
class IntegerSequence(Protocol):
    def member(self, n: int) -> bool: ...

    def iter_upto(self, limit: int) -> Iterator[int]: ...


class FiniteSet:
    """IntegerSequence view of an explicit strictly increasing list."""

    def __init__(self, values) -> None:
        values = list(values)
        if any(y <= x for x, y in zip(values, values[1:])):
            raise ValueError("values must be strictly increasing")
        if values and values[0] < 0:
            raise ValueError("values must be nonnegative")
        self._values = values
        self._set = set(values)

    def member(self, n: int) -> bool:
        return n in self._set

    def iter_upto(self, limit: int) -> Iterator[int]:
        return iter(self._values[: bisect_right(self._values, limit)])


def covers(seq: IntegerSequence, n: int, k: int = 3) -> list[int] | None:
    """Smallest-difference witness that k-1 members of seq extend to n.

    Scans d = 1, 2, ... while n - (k-1)*d >= 0 and returns the full
    ascending witness [n-(k-1)d, ..., n-d], or None when no difference
    works.  All witness terms are nonnegative and below n.
    """
    if k < 3:
        raise ValueError(f"progression length must be >= 3, got {k}")
    for d in range(1, n // (k - 1) + 1):
        if not seq.member(n - d):
            continue
        if all(seq.member(n - j * d) for j in range(2, k)):
            return [n - j * d for j in range(k - 1, 0, -1)]
    return None


def weak_covers(seq: IntegerSequence, n: int, k: int = 3):
    """Like covers, but members of seq are exempt from the requirement."""
    if k < 3:
        raise ValueError(f"progression length must be >= 3, got {k}")
    if seq.member(n):
        return EXEMPT
    return covers(seq, n, k)


def uncovered_in_range(
    seq: IntegerSequence, lo: int, hi: int, k: int = 3
) -> list[int]:
    """All n in [lo, hi] that covers() would report as uncovered.

    Materializes seq up to hi into a membership table once and hands
    the scan to the kernel backend.
    """
    if k < 3:
        raise ValueError(f"progression length must be >= 3, got {k}")
    if lo < 0 or hi < lo:
        raise ValueError(f"bad scan range [{lo}, {hi}]")
    table = bytearray(hi + 1)
    elements = []
    for v in seq.iter_upto(hi):
        table[v] = 1
        elements.append(v)
    return _kernels.uncovered_scan(table, elements, lo, hi, k)


def min_threshold(seq: IntegerSequence, k: int, scan_to: int) -> int | None:
    """Largest n <= scan_to with no covering witness, or None if all covered.

    The empirical covering threshold: above the returned value every
    n <= scan_to extends k-1 smaller members of seq to a k-term AP.
    """
    if scan_to < 1:
        raise ValueError(f"scan_to must be >= 1, got {scan_to}")
    uncovered = uncovered_in_range(seq, 0, scan_to, k)
    return uncovered[-1] if uncovered else None


def has_k_ap(values, k: int = 3) -> bool:
    """True iff the strictly increasing list contains a k-term AP.

    Standalone all-pairs check: each pair fixes a start and difference,
    the remaining k-2 terms are looked up in a set.
    """
    if k < 3:
        raise ValueError(f"progression length must be >= 3, got {k}")
    values = list(values)
    if any(y <= x for x, y in zip(values, values[1:])):
        raise ValueError("values must be strictly increasing")
    present = set(values)
    for i, x in enumerate(values):
        for y in values[i + 1 :]:
            d = y - x
            if all(y + j * d in present for j in range(1, k - 1)):
                return True
    return False


def creates_ap(
    sorted_members: list[int], member_set: set[int], candidate: int, k: int = 3
) -> bool:
    """Would adding `candidate` (larger than every member) create a k-AP?

    Only progressions ending at the candidate can appear, so only
    differences d = candidate - m for existing members m matter; they
    are tried in increasing order until candidate - (k-1)*d would go
    negative.
    """
    d_max = candidate // (k - 1)
    for m in reversed(sorted_members):
        d = candidate - m
        if d > d_max:
            break
        if all(candidate - j * d in member_set for j in range(2, k)):
            return True
    return False
