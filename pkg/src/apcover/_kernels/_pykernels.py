"""Pure-Python kernel backend.

Reference implementations of the two hot sweep loops, built directly
on the library's own pure functions.  The compiled backend in
_ckernels.pyx must agree with these exactly; tests compare them on
shared ranges.
"""

from __future__ import annotations

from ..witness import MIN_N, find_witness, validate

BACKEND = "python"


def witness_sweep(lo: int, hi: int) -> list[int]:
    """All n in [lo, hi] whose constructed witness fails validation.

    An empty list is the expected outcome; any entry is a
    counterexample to the covering construction.
    """
    if lo < MIN_N:
        raise ValueError(f"sweep starts at {MIN_N}, got lo={lo}")
    failures = []
    for n in range(lo, hi + 1):
        if not validate(find_witness(n)):
            failures.append(n)
    return failures


def uncovered_scan(table, elements, lo: int, hi: int, k: int) -> list[int]:
    """All n in [lo, hi] with no k-AP witness inside the tabulated set.

    `table` is a 0/1 membership array covering [0, hi]; `elements`
    lists the members in increasing order.  For each n, candidate
    b-terms are walked downward from just below n, which tries the
    common differences d = n - b in increasing order and stops once
    n - (k-1)*d would be negative.
    """
    if len(table) <= hi:
        raise ValueError("membership table must cover [0, hi]")
    uncovered = []
    top = 0  # number of elements < n, maintained as n ascends
    count = len(elements)
    for n in range(lo, hi + 1):
        while top < count and elements[top] < n:
            top += 1
        found = False
        for idx in range(top - 1, -1, -1):
            d = n - elements[idx]
            if n - (k - 1) * d < 0:
                break
            if all(table[n - j * d] for j in range(2, k)):
                found = True
                break
        if not found:
            uncovered.append(n)
    return uncovered
