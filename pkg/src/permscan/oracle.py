"""Brute-force reference implementations for cross-checking results.

Deliberately slow and obviously correct: per-window recounting, per-start
window growth, and textbook interval-scheduling recurrences. They share
no counting code with the scanning implementations, so agreement between
the two routes is meaningful. The CLI exposes them via --oracle so any
result can be re-derived on user data.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import Counter
from typing import Sequence

from .core import Symbol

# bitmask subset enumeration is 2^k; keep the self-check affordable
_EXHAUSTIVE_LIMIT = 25
_AUTO_VERIFY_LIMIT = 10


def brute_matches(text: Sequence[Symbol], pattern: Sequence[Symbol]) -> list[int]:
    """Start positions whose window multiset equals the pattern's,
    recounting every window from scratch (O(n*m)).

    Follows the scanning convention for degenerate inputs: an empty
    pattern reports the single match at position 0.
    """
    n, m = len(text), len(pattern)
    if m == 0:
        return [0]
    if m > n:
        return []
    want = Counter(pattern)
    return [i for i in range(n - m + 1) if Counter(text[i : i + m]) == want]


def brute_mfsp(text: Sequence[Symbol], pattern: Sequence[Symbol]) -> tuple[int, int, int]:
    """(start, end, length) of the longest substring whose counts stay
    within the pattern's, preferring the leftmost window on ties.

    Grows a fresh Counter from every start position; a window is
    abandoned at the first symbol that exceeds its budget, since longer
    windows only add counts. Empty result is (0, -1, 0).
    """
    supply = Counter(pattern)
    n = len(text)
    best = (0, -1, 0)
    for start in range(n):
        seen: Counter = Counter()
        for end in range(start, n):
            sym = text[end]
            seen[sym] += 1
            if seen[sym] > supply[sym]:
                break
            if end - start + 1 > best[2]:
                best = (start, end, end - start + 1)
    return best


def exhaustive_max_disjoint(matches: Sequence[int], m: int) -> int:
    """Maximum disjoint cardinality by enumerating all 2^k subsets."""
    starts = sorted(matches)
    k = len(starts)
    if k > _EXHAUSTIVE_LIMIT:
        raise ValueError(f"subset enumeration limited to {_EXHAUSTIVE_LIMIT} matches, got {k}")
    best = 0
    for mask in range(1 << k):
        prev_end = -1
        count = 0
        bits = mask
        idx = 0
        ok = True
        while bits:
            if bits & 1:
                s = starts[idx]
                if s <= prev_end:
                    ok = False
                    break
                prev_end = s + m - 1
                count += 1
            bits >>= 1
            idx += 1
        if ok and count > best:
            best = count
    return best


def brute_pack(matches: Sequence[int], m: int, verify_exhaustive: bool | None = None) -> int:
    """Maximum number of pairwise disjoint length-m intervals.

    Uses the interval-scheduling recurrence over the sorted starts:
    best(i) = max(skip interval i, take it and jump to the first start
    clear of it). For small inputs (or when forced) the 2^k subset
    enumeration is run as well and must agree.
    """
    starts = sorted(matches)
    k = len(starts)
    best_from = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        nxt = bisect_left(starts, starts[i] + m)
        take = 1 + best_from[nxt]
        skip = best_from[i + 1]
        best_from[i] = take if take > skip else skip
    result = best_from[0]
    if verify_exhaustive is None:
        verify_exhaustive = k <= _AUTO_VERIFY_LIMIT
    if verify_exhaustive:
        other = exhaustive_max_disjoint(starts, m)
        if other != result:
            raise AssertionError(
                f"interval-scheduling and subset enumeration disagree: {result} vs {other}"
            )
    return result
