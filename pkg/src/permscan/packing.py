"""Maximum-cardinality selection of pairwise disjoint equal-length matches.

Every match occupies the closed interval [start, start + m - 1]. With
equal lengths the earliest-start greedy rule is optimal: take the
leftmost available match, then skip past its window and repeat.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import Symbol
from .matcher import enumerate_matches


class InvalidMatchSet(ValueError):
    """The supplied match starts are not strictly ascending, fall outside
    [0, n - m], or the interval geometry is malformed."""


@dataclass(frozen=True)
class Selection:
    """Chosen disjoint intervals: ascending starts, all of length ``m``."""

    starts: tuple[int, ...]
    m: int

    @property
    def count(self) -> int:
        return len(self.starts)


def _validate(matches: Sequence[int], m: int, n: int) -> None:
    if m < 1:
        raise InvalidMatchSet(f"interval length must be >= 1, got {m}")
    prev = -1
    limit = n - m
    for s in matches:
        if s <= prev:
            raise InvalidMatchSet(f"match starts must be strictly ascending at {s}")
        if s < 0 or s > limit:
            raise InvalidMatchSet(f"match start {s} outside [0, {limit}]")
        prev = s


def greedy_pack(matches: Sequence[int], m: int, n: int) -> Selection:
    """Earliest-start greedy selection over ascending match starts.

    Scans the sorted match list once: a match is taken whenever it
    starts at or past the end of the previously taken interval.
    """
    _validate(matches, m, n)
    chosen: list[int] = []
    cursor = 0
    for s in matches:
        if s >= cursor:
            chosen.append(s)
            cursor = s + m
    return Selection(tuple(chosen), m)


def greedy_pack_dense(matches: Sequence[int], m: int, n: int) -> Selection:
    """Same selection computed by scanning a boolean membership array of
    length n - m + 1 (useful when matches arrive as a set)."""
    _validate(matches, m, n)
    limit = n - m
    member = bytearray(limit + 1 if limit >= 0 else 0)
    for s in matches:
        member[s] = 1
    chosen: list[int] = []
    i = 0
    while i <= limit:
        if member[i]:
            chosen.append(i)
            i += m
        else:
            i += 1
    return Selection(tuple(chosen), m)


def pack_text(text: Sequence[Symbol], pattern: Sequence[Symbol]) -> Selection:
    """Enumerate all permutation matches of ``pattern`` in ``text`` and
    greedily select a maximum disjoint subset.

    An empty pattern yields an empty selection: zero-length intervals
    have nothing to pack.
    """
    report = enumerate_matches(text, pattern)
    if report.m == 0:
        return Selection((), 0)
    return greedy_pack(report.positions, report.m, report.n)
