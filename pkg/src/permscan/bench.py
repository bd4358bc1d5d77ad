"""Scan-time measurement over seeded workloads, with scaling checks.

Only the scan itself is timed: corpus generation and IO happen outside
the timed region, each cell is warmed up once, and the median of the
repetitions is reported. The exact work counters are re-checked on
every cell, so a benchmark run doubles as a correctness audit.
"""

from __future__ import annotations

import gc
import statistics
import time
from dataclasses import dataclass
from typing import Iterable, Sequence

from .gen import WorkloadSpec, generate
from .matcher import enumerate_matches
from .mfsp import mfsp

ALGOS = ("match", "mfsp")


@dataclass(frozen=True)
class SweepCaps:
    """Bounds a sweep so oversized cells are skipped, not attempted."""

    max_n: int = 10_000_000
    budget_seconds: float | None = None


@dataclass(frozen=True)
class BenchCell:
    """One measured (workload, algorithm) cell."""

    n: int
    m: int
    sigma: int
    seed: int
    algo: str
    reps: int
    time_s: float
    time_min_s: float
    time_max_s: float
    symbols_per_sec: float
    matches: int | None = None
    mfsp_length: int | None = None
    applies: int | None = None
    pushes: int | None = None
    pops: int | None = None


@dataclass(frozen=True)
class SkippedCell:
    """A cell that was not measured, and why."""

    n: int
    m: int
    sigma: int
    seed: int
    reason: str


def _check_match_work(n: int, m: int, applies: int) -> None:
    expected = m + 2 * (n - m)
    if applies != expected:
        raise RuntimeError(f"match scan made {applies} updates, expected {expected}")


def _check_mfsp_work(n: int, pushes: int, pops: int) -> None:
    if pushes != n or pops > n:
        raise RuntimeError(f"mfsp scan counters out of bounds: pushes={pushes} pops={pops} n={n}")


def _timed(fn, reps: int):
    """Median-of-reps timing with one warm-up run and GC paused."""
    result = fn()
    times = []
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(reps):
            t0 = time.perf_counter()
            result = fn()
            times.append(time.perf_counter() - t0)
    finally:
        if gc_was_enabled:
            gc.enable()
    return result, times


def run_cell(spec: WorkloadSpec, algo: str, reps: int = 3) -> BenchCell:
    """Generate the corpus for ``spec`` and time one algorithm over it."""
    if reps < 3:
        raise ValueError("at least 3 repetitions are required")
    text, pattern = generate(spec)
    if algo == "match":
        report, times = _timed(lambda: enumerate_matches(text, pattern), reps)
        _check_match_work(spec.n, spec.m, report.applies)
        extra = {"matches": len(report.positions), "applies": report.applies}
    elif algo == "mfsp":
        result, times = _timed(lambda: mfsp(text, pattern), reps)
        _check_mfsp_work(spec.n, result.pushes, result.pops)
        extra = {"mfsp_length": result.length, "pushes": result.pushes, "pops": result.pops}
    else:
        raise ValueError(f"unknown algorithm {algo!r}")
    median = statistics.median(times)
    return BenchCell(
        n=spec.n,
        m=spec.m,
        sigma=spec.sigma,
        seed=spec.seed,
        algo=algo,
        reps=reps,
        time_s=median,
        time_min_s=min(times),
        time_max_s=max(times),
        symbols_per_sec=spec.n / median if median > 0 else float("inf"),
        **extra,
    )


def run_sweep(
    grid: Iterable[WorkloadSpec],
    caps: SweepCaps = SweepCaps(),
    reps: int = 3,
    algos: Sequence[str] = ALGOS,
) -> list[BenchCell | SkippedCell]:
    """Measure every (spec, algo) cell of the grid, skipping those that
    exceed the caps (with a reason record) instead of failing."""
    out: list[BenchCell | SkippedCell] = []
    started = time.perf_counter()
    for spec in grid:
        skip_reason = None
        if spec.n > caps.max_n:
            skip_reason = f"n={spec.n} exceeds cap {caps.max_n}"
        elif spec.m > spec.n:
            skip_reason = "pattern longer than text"
        elif caps.budget_seconds is not None and time.perf_counter() - started > caps.budget_seconds:
            skip_reason = f"time budget of {caps.budget_seconds}s exhausted"
        if skip_reason is not None:
            out.append(SkippedCell(spec.n, spec.m, spec.sigma, spec.seed, skip_reason))
            continue
        for algo in algos:
            out.append(run_cell(spec, algo, reps=reps))
    return out


def scaling_ratios(cells: Iterable[BenchCell | SkippedCell]) -> dict[tuple[int, int, str], list[float]]:
    """Time ratios between consecutive doublings of n, grouped by
    (sigma, m, algo). A linear-time scan keeps these near 2.0."""
    groups: dict[tuple[int, int, str], list[BenchCell]] = {}
    for cell in cells:
        if isinstance(cell, BenchCell):
            groups.setdefault((cell.sigma, cell.m, cell.algo), []).append(cell)
    ratios: dict[tuple[int, int, str], list[float]] = {}
    for key, group in groups.items():
        group.sort(key=lambda c: c.n)
        pairs = []
        for lo, hi in zip(group, group[1:]):
            if hi.n == 2 * lo.n and lo.time_s > 0:
                pairs.append(hi.time_s / lo.time_s)
        if pairs:
            ratios[key] = pairs
    return ratios
