"""Seeded synthetic workloads: uniform random texts and planted matches.

Symbols are drawn from a splitmix64 stream (state += 0x9E3779B97F4A7C15;
finalize by xor-shift 30, multiply 0xBF58476D1CE4E5B9, xor-shift 27,
multiply 0x94D049BB133111EB, xor-shift 31), so corpora are bit-identical
across runs and platforms. For a power-of-two sigma each 64-bit output
is sliced into floor(64/bits) symbols, least-significant bits first,
discarding the remainder of the word; otherwise each symbol costs one
rejection-sampled draw. The pattern, text, and planting streams are
seeded by the first three outputs of splitmix64(seed), in that order.

Planted mode overwrites each requested window of the uniform text with
an in-place Fisher-Yates shuffle of the pattern (positions processed in
ascending order, one shuffle stream across all windows), so every
planted position is a permutation match by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

Corpus = Union[bytes, tuple]


class SpecError(ValueError):
    """A workload description is internally inconsistent."""


class SplitMix64:
    """The 64-bit mixing generator the corpora are defined in terms of."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform draw in [0, bound) without modulo bias."""
        limit = _MASK64 + 1 - ((_MASK64 + 1) % bound)
        while True:
            r = self.next()
            if r < limit:
                return r % bound


@dataclass(frozen=True)
class WorkloadSpec:
    """Description of one synthetic (text, pattern) corpus."""

    n: int
    m: int
    sigma: int
    seed: int = 0
    distribution: str = "uniform"
    plants: tuple[int, ...] = ()

    def validate(self) -> None:
        if self.n < 0 or self.m < 0:
            raise SpecError("n and m must be non-negative")
        if self.sigma < 1:
            raise SpecError("sigma must be at least 1")
        if self.distribution not in ("uniform", "planted"):
            raise SpecError(f"unknown distribution {self.distribution!r}")
        if self.distribution == "uniform":
            if self.plants:
                raise SpecError("plants are only valid for the planted distribution")
            return
        if self.m < 1 or self.m > self.n:
            raise SpecError("planted mode needs 1 <= m <= n")
        prev_end = -1
        for p in self.plants:
            if p < 0 or p > self.n - self.m:
                raise SpecError(f"planted position {p} outside [0, {self.n - self.m}]")
            if p <= prev_end:
                raise SpecError(f"planted windows must be ascending and non-overlapping at {p}")
            prev_end = p + self.m - 1


def _draw_symbols(rng: SplitMix64, count: int, sigma: int) -> list[int]:
    if sigma == 1:
        return [0] * count
    if sigma & (sigma - 1) == 0:
        bits = (sigma - 1).bit_length()
        per_word = 64 // bits
        mask = sigma - 1
        out: list[int] = []
        left = count
        while left > 0:
            word = rng.next()
            take = per_word if per_word < left else left
            for _ in range(take):
                out.append(word & mask)
                word >>= bits
            left -= take
        return out
    return [rng.below(sigma) for _ in range(count)]


def _pack(symbols: list[int], sigma: int) -> Corpus:
    return bytes(symbols) if sigma <= 256 else tuple(symbols)


def generate(spec: WorkloadSpec) -> tuple[Corpus, Corpus]:
    """Produce the (text, pattern) pair described by ``spec``.

    Deterministic in the spec alone. Symbols are 0..sigma-1; they come
    back as ``bytes`` when sigma <= 256 and as an int tuple otherwise.
    """
    spec.validate()
    root = SplitMix64(spec.seed)
    pattern_rng = SplitMix64(root.next())
    text_rng = SplitMix64(root.next())
    plant_rng = SplitMix64(root.next())

    pattern = _draw_symbols(pattern_rng, spec.m, spec.sigma)
    text = _draw_symbols(text_rng, spec.n, spec.sigma)

    if spec.distribution == "planted":
        for pos in spec.plants:
            window = list(pattern)
            for i in range(spec.m - 1, 0, -1):
                j = plant_rng.below(i + 1)
                window[i], window[j] = window[j], window[i]
            text[pos : pos + spec.m] = window

    return _pack(text, spec.sigma), _pack(pattern, spec.sigma)
