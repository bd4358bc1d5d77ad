"""Single-pass permutation (jumbled) match detection and enumeration.

A length-m window of the text matches when its frequency vector equals
the pattern's. The scan maintains the per-symbol difference between the
current window and the pattern: two O(1) updates per shift plus one
counter test decide each position, so a full enumeration performs
exactly m + 2(n-m) difference updates.

Conventions for degenerate inputs: an empty pattern matches once, at
position 0; a pattern longer than the text never matches and the text
is not scanned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import Symbol, build_alphabet, parikh, to_ids
from .diffstate import DiffState


@dataclass(frozen=True)
class MatchReport:
    """Match start positions for one (text, pattern) scan.

    ``positions`` is strictly ascending; ``applies`` is the number of
    difference updates the scan performed.
    """

    found: bool
    positions: tuple[int, ...]
    n: int
    m: int
    applies: int = 0


def find_first(text: Sequence[Symbol], pattern: Sequence[Symbol]) -> int | None:
    """Smallest start index of a window that is a permutation of
    ``pattern``, or None if there is none. Stops scanning at the first
    match."""
    n, m = len(text), len(pattern)
    if m == 0:
        return 0
    if m > n:
        return None
    alphabet = build_alphabet([pattern, text])
    state = DiffState.from_pattern(parikh(pattern, alphabet))
    ids = to_ids(text, alphabet)
    apply = state.apply
    for j in range(m):
        apply(ids[j], 1)
    if state.nonzero == 0:
        return 0
    for i in range(n - m):
        apply(ids[i], -1)
        apply(ids[i + m], 1)
        if state.nonzero == 0:
            return i + 1
    return None


def enumerate_matches(text: Sequence[Symbol], pattern: Sequence[Symbol]) -> MatchReport:
    """All permutation-match start positions, in one left-to-right pass."""
    n, m = len(text), len(pattern)
    if m == 0:
        return MatchReport(True, (0,), n, 0, 0)
    if m > n:
        return MatchReport(False, (), n, m, 0)
    alphabet = build_alphabet([pattern, text])
    state = DiffState.from_pattern(parikh(pattern, alphabet))
    ids = to_ids(text, alphabet)
    apply = state.apply
    for j in range(m):
        apply(ids[j], 1)
    positions: list[int] = []
    if state.nonzero == 0:
        positions.append(0)
    for i in range(n - m):
        apply(ids[i], -1)
        apply(ids[i + m], 1)
        if state.nonzero == 0:
            positions.append(i + 1)
    return MatchReport(bool(positions), tuple(positions), n, m, state.applies)


def scan_stream(symbols: Iterable[Symbol], pattern: Sequence[Symbol]) -> MatchReport:
    """Enumerate matches over a symbol stream without materializing it.

    Keeps a ring buffer of the last m symbol ids plus one difference
    slot per distinct symbol seen so far, so memory is O(sigma' + m).
    Produces the same report as :func:`enumerate_matches`, except that a
    stream shorter than the pattern still costs one update per consumed
    symbol (the length is only known once the stream ends).
    """
    m = len(pattern)
    if m == 0:
        n = sum(1 for _ in symbols)
        return MatchReport(True, (0,), n, 0, 0)
    seed = build_alphabet([pattern])
    state = DiffState.from_pattern(parikh(pattern, seed))
    forward = dict(seed.forward)
    ring = [0] * m
    apply = state.apply
    get = forward.get
    n = 0
    positions: list[int] = []
    for sym in symbols:
        dense = get(sym, -1)
        if dense < 0:
            dense = forward[sym] = state.grow()
        slot = n % m
        if n >= m:
            apply(ring[slot], -1)
        apply(dense, 1)
        ring[slot] = dense
        n += 1
        if n >= m and state.nonzero == 0:
            positions.append(n - m)
    return MatchReport(bool(positions), tuple(positions), n, m, state.applies)


def find_first_stream(symbols: Iterable[Symbol], pattern: Sequence[Symbol]) -> int | None:
    """Streaming :func:`find_first`; stops consuming at the first match."""
    m = len(pattern)
    if m == 0:
        return 0
    seed = build_alphabet([pattern])
    state = DiffState.from_pattern(parikh(pattern, seed))
    forward = dict(seed.forward)
    ring = [0] * m
    apply = state.apply
    get = forward.get
    n = 0
    for sym in symbols:
        dense = get(sym, -1)
        if dense < 0:
            dense = forward[sym] = state.grow()
        slot = n % m
        if n >= m:
            apply(ring[slot], -1)
        apply(dense, 1)
        ring[slot] = dense
        n += 1
        if n >= m and state.nonzero == 0:
            return n - m
    return None
