"""Frequency-vector string scanning primitives.

Three single-pass operations over a text and a pattern, all driven by
per-symbol counts rather than symbol order:

- permutation (jumbled) matching: windows whose counts equal the
  pattern's (:func:`find_first`, :func:`enumerate_matches`);
- longest budgeted substring: the longest window whose counts never
  exceed the pattern's (:func:`mfsp`);
- disjoint selection: a maximum set of non-overlapping matches
  (:func:`pack_text`).

Brute-force references live in :mod:`permscan.oracle`; seeded workloads
and timing in :mod:`permscan.gen` and :mod:`permscan.bench`.
"""

from .bench import ALGOS, BenchCell, SkippedCell, SweepCaps, run_cell, run_sweep, scaling_ratios
from .core import (
    CompressedAlphabet,
    ParikhVector,
    Symbol,
    UnknownSymbol,
    build_alphabet,
    parikh,
    to_ids,
)
from .diffstate import DiffState
from .gen import SpecError, SplitMix64, WorkloadSpec, generate
from .matcher import (
    MatchReport,
    enumerate_matches,
    find_first,
    find_first_stream,
    scan_stream,
)
from .mfsp import MfspResult, SupplyWindow, UnderflowViolation, mfsp, mfsp_stream
from .oracle import brute_matches, brute_mfsp, brute_pack, exhaustive_max_disjoint
from .packing import InvalidMatchSet, Selection, greedy_pack, greedy_pack_dense, pack_text

__version__ = "0.1.0"

__all__ = [
    "ALGOS",
    "BenchCell",
    "CompressedAlphabet",
    "DiffState",
    "InvalidMatchSet",
    "MatchReport",
    "MfspResult",
    "ParikhVector",
    "Selection",
    "SkippedCell",
    "SpecError",
    "SplitMix64",
    "SupplyWindow",
    "SweepCaps",
    "Symbol",
    "UnderflowViolation",
    "UnknownSymbol",
    "WorkloadSpec",
    "brute_matches",
    "brute_mfsp",
    "brute_pack",
    "build_alphabet",
    "enumerate_matches",
    "exhaustive_max_disjoint",
    "find_first",
    "find_first_stream",
    "generate",
    "greedy_pack",
    "greedy_pack_dense",
    "mfsp",
    "mfsp_stream",
    "pack_text",
    "parikh",
    "run_cell",
    "run_sweep",
    "scaling_ratios",
    "scan_stream",
    "to_ids",
]
