"""Alphabet compression and frequency (Parikh) vectors.

Symbols are opaque hashable atoms: bytes yield integer symbols, strings
yield one-character symbols, and token sequences yield whatever the
tokens are. Observed symbols are remapped to dense ids 0..sigma_prime-1
so that all per-symbol state fits in small contiguous arrays regardless
of how sparse the raw symbol space is.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

Symbol = Hashable


class UnknownSymbol(KeyError):
    """A symbol is absent from the alphabet it was looked up in.

    Callers seeing this must rebuild (or extend) the alphabet over the
    offending input; scanning entry points avoid it by building the
    alphabet jointly over pattern and text.
    """

    def __init__(self, symbol: Symbol):
        super().__init__(symbol)
        self.symbol = symbol


@dataclass(frozen=True)
class CompressedAlphabet:
    """Bijection between observed symbols and dense ids 0..sigma_prime-1.

    Ids are assigned in first-occurrence order over the inputs given to
    :func:`build_alphabet`, so the mapping is deterministic. Instances
    are immutable after construction and safe to share across threads.
    """

    forward: dict
    reverse: tuple

    @property
    def sigma_prime(self) -> int:
        """Number of distinct symbols observed."""
        return len(self.reverse)

    def __len__(self) -> int:
        return len(self.reverse)

    def __contains__(self, symbol: Symbol) -> bool:
        return symbol in self.forward

    def id_of(self, symbol: Symbol) -> int:
        try:
            return self.forward[symbol]
        except KeyError:
            raise UnknownSymbol(symbol) from None

    def symbol_of(self, dense_id: int) -> Symbol:
        return self.reverse[dense_id]


@dataclass(frozen=True)
class ParikhVector:
    """Per-symbol occurrence counts over the dense ids of an alphabet."""

    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        """Sum of all counts, i.e. the length of the counted string."""
        return sum(self.counts)

    def __add__(self, other: "ParikhVector") -> "ParikhVector":
        if len(self.counts) != len(other.counts):
            raise ValueError("cannot add counts over different alphabets")
        return ParikhVector(tuple(a + b for a, b in zip(self.counts, other.counts)))


def build_alphabet(strings: Iterable[Sequence[Symbol]]) -> CompressedAlphabet:
    """Map every distinct symbol across ``strings`` to a dense id.

    Ids follow first-occurrence order over the concatenated scan of the
    inputs; empty input yields an empty alphabet.
    """
    forward: dict = {}
    reverse: list = []
    for s in strings:
        if isinstance(s, (bytes, bytearray, str)):
            # distinct symbols at C speed; order restored via .index()
            for _, sym in sorted((s.index(sym), sym) for sym in set(s)):
                if sym not in forward:
                    forward[sym] = len(reverse)
                    reverse.append(sym)
        else:
            for sym in s:
                if sym not in forward:
                    forward[sym] = len(reverse)
                    reverse.append(sym)
    return CompressedAlphabet(forward, tuple(reverse))


def parikh(s: Sequence[Symbol], alphabet: CompressedAlphabet) -> ParikhVector:
    """Count occurrences of each alphabet symbol in ``s``.

    Raises UnknownSymbol if ``s`` contains a symbol outside ``alphabet``.
    """
    counts = [0] * len(alphabet)
    forward = alphabet.forward
    for sym in s:
        try:
            counts[forward[sym]] += 1
        except KeyError:
            raise UnknownSymbol(sym) from None
    return ParikhVector(tuple(counts))


def to_ids(s: Sequence[Symbol], alphabet: CompressedAlphabet) -> Sequence[int]:
    """Translate a symbol sequence into its dense-id sequence.

    Byte inputs come back as ``bytes`` (translated in C); everything
    else becomes a list of ints. Raises UnknownSymbol on any symbol not
    covered by ``alphabet``.
    """
    forward = alphabet.forward
    if isinstance(s, (bytes, bytearray)):
        missing = set(s) - forward.keys()
        if missing:
            raise UnknownSymbol(min(missing))
        table = bytearray(256)
        for sym, dense in forward.items():
            table[sym] = dense
        return bytes(s).translate(bytes(table))
    try:
        return [forward[sym] for sym in s]
    except KeyError as exc:
        raise UnknownSymbol(exc.args[0]) from None
