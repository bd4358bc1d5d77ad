"""Longest substring whose symbol counts fit inside a pattern's budget.

The pattern's frequency vector acts as a per-symbol supply; a window of
the text is feasible while no symbol count exceeds its supply (mfsp =
maximum feasible substring under pattern supply). Feasibility is
monotone under shrinking, so a two-pointer scan works: grow the window
on the right, then advance the left edge just far enough to clear any
violation. Every text symbol is pushed exactly once and popped at most
once, giving O(n + sigma) time overall.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import ParikhVector, Symbol, build_alphabet, parikh, to_ids


class UnderflowViolation(RuntimeError):
    """pop_left was asked to discount a symbol with a zero window count.

    This signals a scan-loop bug; it is never reachable from the public
    scanning entry points.
    """


class SupplyWindow:
    """Sliding-window counts measured against a fixed per-symbol supply.

    ``violations`` is the number of symbols currently over budget, so
    feasibility testing is O(1): the window is feasible iff it is zero.
    ``pushes``/``pops`` count the work done; the left edge advances once
    per pop, so ``left == pops`` throughout a scan that starts at 0.
    """

    __slots__ = ("supply", "counts", "violations", "pushes", "pops")

    def __init__(self, supply: Sequence[int]):
        self.supply = list(supply)
        self.counts = [0] * len(supply)
        self.violations = 0
        self.pushes = 0
        self.pops = 0

    @classmethod
    def from_pattern(cls, supply: ParikhVector) -> "SupplyWindow":
        return cls(supply.counts)

    @property
    def size(self) -> int:
        return len(self.supply)

    @property
    def left(self) -> int:
        """Left-pointer position; equals pops because the edge only moves right."""
        return self.pops

    def grow(self) -> int:
        """Append a fresh symbol slot with zero supply; returns its id."""
        self.supply.append(0)
        self.counts.append(0)
        return len(self.counts) - 1

    def push(self, dense_id: int) -> None:
        """Count one incoming symbol; a crossing above its supply adds a
        violation, any further excess leaves the tally unchanged."""
        counts = self.counts
        before = counts[dense_id]
        counts[dense_id] = before + 1
        self.pushes += 1
        if before == self.supply[dense_id]:
            self.violations += 1

    def pop_left(self, dense_id: int) -> None:
        """Discount one outgoing symbol; a crossing back to its supply
        clears that symbol's violation."""
        counts = self.counts
        before = counts[dense_id]
        if before == 0:
            raise UnderflowViolation(dense_id)
        counts[dense_id] = before - 1
        self.pops += 1
        if before == self.supply[dense_id] + 1:
            self.violations -= 1


@dataclass(frozen=True)
class MfspResult:
    """Longest feasible window, ends inclusive; the empty result is
    (0, -1, 0). ``pushes``/``pops`` report the scan's work."""

    start: int
    end: int
    length: int
    pushes: int = 0
    pops: int = 0


def mfsp(text: Sequence[Symbol], pattern: Sequence[Symbol]) -> MfspResult:
    """Longest substring of ``text`` whose counts never exceed the
    pattern's, leftmost on length ties."""
    n = len(text)
    alphabet = build_alphabet([pattern, text])
    state = SupplyWindow.from_pattern(parikh(pattern, alphabet))
    ids = to_ids(text, alphabet)
    push = state.push
    pop = state.pop_left
    left = 0
    best_len = 0
    best_start = 0
    best_end = -1
    for r in range(n):
        push(ids[r])
        while state.violations:
            pop(ids[left])
            left += 1
        if r - left + 1 > best_len:
            best_len = r - left + 1
            best_start = left
            best_end = r
    return MfspResult(best_start, best_end, best_len, state.pushes, state.pops)


def mfsp_stream(symbols: Iterable[Symbol], pattern: Sequence[Symbol]) -> MfspResult:
    """Streaming :func:`mfsp`; holds only the live window in memory.

    A feasible window never exceeds m symbols (total supply is m), so a
    ring buffer of m+1 ids covers the transient state right after a
    push. Memory is O(sigma' + m).
    """
    m = len(pattern)
    seed = build_alphabet([pattern])
    state = SupplyWindow.from_pattern(parikh(pattern, seed))
    forward = dict(seed.forward)
    width = m + 1
    ring = [0] * width
    push = state.push
    pop = state.pop_left
    get = forward.get
    left = 0
    best_len = 0
    best_start = 0
    best_end = -1
    r = 0
    for sym in symbols:
        dense = get(sym, -1)
        if dense < 0:
            dense = forward[sym] = state.grow()
        ring[r % width] = dense
        push(dense)
        while state.violations:
            pop(ring[left % width])
            left += 1
        if r - left + 1 > best_len:
            best_len = r - left + 1
            best_start = left
            best_end = r
        r += 1
    return MfspResult(best_start, best_end, best_len, state.pushes, state.pops)
