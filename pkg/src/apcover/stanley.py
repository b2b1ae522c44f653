"""Greedy Stanley-sequence generator.

Starting from a k-AP-free seed, each new term is the smallest integer
above the last one that keeps the set free of k-term arithmetic
progressions.  The generator is deliberately definitional: no digit
characterizations or closed-form shortcuts, those belong in tests as
cross-checks.
"""

from __future__ import annotations

from .oracle import creates_ap, has_k_ap


def _check_seed(seed: list[int], k: int) -> list[int]:
    seed = list(seed)
    if not seed:
        raise ValueError("seed must be non-empty")
    if seed[0] < 0:
        raise ValueError("seed terms must be nonnegative")
    if has_k_ap(seed, k):  # also rejects unsorted seeds
        raise ValueError(f"seed {seed} contains a {k}-term AP")
    return seed


def greedy_next(produced: list[int], k: int = 3) -> int:
    """Smallest integer above produced[-1] keeping the set k-AP-free."""
    member_set = set(produced)
    candidate = produced[-1] + 1
    while creates_ap(produced, member_set, candidate, k):
        candidate += 1
    return candidate


def generate(seed: list[int], k: int = 3, count: int = 0) -> list[int]:
    """First `count` terms of the Stanley sequence of order k from seed."""
    seed = _check_seed(seed, k)
    if count < len(seed):
        raise ValueError(
            f"count {count} is below the seed length {len(seed)}"
        )
    terms = seed
    while len(terms) < count:
        terms.append(greedy_next(terms, k))
    return terms


def generate_upto(seed: list[int], k: int = 3, limit: int = 0) -> list[int]:
    """All terms <= limit of the Stanley sequence of order k from seed."""
    seed = _check_seed(seed, k)
    if seed and seed[-1] > limit:
        raise ValueError(f"seed already exceeds limit {limit}")
    terms = seed
    while True:
        nxt = greedy_next(terms, k)
        if nxt > limit:
            return terms
        terms.append(nxt)
