"""Signed count differences with O(1) zero-crossing bookkeeping."""

from __future__ import annotations

from .core import ParikhVector


class DiffState:
    """Per-symbol difference between a sliding window and a reference.

    ``delta[c]`` holds window-count minus reference-count for dense id
    ``c``; ``nonzero`` is how many entries are currently nonzero, so
    ``nonzero == 0`` certifies count equality in O(1). ``applies``
    counts update operations for work-accounting checks.

    A state is owned by one scan at a time; distinct states may be used
    concurrently on independent texts.
    """

    __slots__ = ("delta", "nonzero", "applies")

    def __init__(self, delta: list[int], nonzero: int):
        self.delta = delta
        self.nonzero = nonzero
        self.applies = 0

    @classmethod
    def from_pattern(cls, reference: ParikhVector) -> "DiffState":
        """Start at minus the reference counts (the empty window)."""
        delta = [-c for c in reference.counts]
        return cls(delta, sum(1 for c in reference.counts if c))

    @property
    def size(self) -> int:
        return len(self.delta)

    def grow(self) -> int:
        """Append a fresh symbol slot with zero difference; returns its id."""
        self.delta.append(0)
        return len(self.delta) - 1

    def apply(self, dense_id: int, step: int) -> None:
        """Shift one entry by +1 or -1, keeping ``nonzero`` consistent.

        The tally changes only at zero crossings: an entry leaving zero
        increments it, an entry arriving at zero decrements it.
        """
        delta = self.delta
        before = delta[dense_id]
        after = before + step
        delta[dense_id] = after
        self.applies += 1
        if before == 0:
            if after:
                self.nonzero += 1
        elif after == 0:
            self.nonzero -= 1

    def is_match(self) -> bool:
        """True iff every difference entry is zero."""
        return self.nonzero == 0
