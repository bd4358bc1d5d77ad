"""Command-line front end for the scanning primitives.

Subcommands: match (first permutation occurrence, grep-style exit
status), enumerate (all match starts), mfsp (longest substring under
the pattern's symbol budget), pack (maximum disjoint match selection),
gen (seeded corpus files), bench (scan-time sweep).

Texts come from --text, --text-file, or stdin. In bytes mode (default)
file input is scanned as a stream with O(sigma + m) memory; tokens mode
splits input on whitespace and holds it in memory. Inline arguments are
UTF-8 encoded in bytes mode so they share a symbol domain with files.

--format records emits one JSON object per line with stable field
names; --oracle re-derives the answer with the brute-force reference
and fails loudly on any disagreement.

Exit codes: 0 success (match found, for match), 1 no match (match
only), 2 usage, IO, or verification errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager

from .bench import SkippedCell, SweepCaps, run_sweep, scaling_ratios
from .gen import SpecError, WorkloadSpec, generate
from .matcher import enumerate_matches, find_first, find_first_stream, scan_stream
from .mfsp import mfsp, mfsp_stream
from .oracle import brute_matches, brute_mfsp, brute_pack
from .packing import Selection, greedy_pack
from . import __version__

_CHUNK = 1 << 16


def _inline_symbols(arg: str, mode: str):
    if mode == "tokens":
        return arg.split()
    return arg.encode("utf-8")


def _file_symbols(path: str, mode: str):
    if mode == "tokens":
        with open(path, encoding="utf-8") as f:
            return f.read().split()
    with open(path, "rb") as f:
        return f.read()


def _load_pattern(args) -> bytes | list[str]:
    if args.pattern is not None:
        return _inline_symbols(args.pattern, args.mode)
    return _file_symbols(args.pattern_file, args.mode)


def _load_text(args, need_memory: bool):
    """Resolve the text source to (in_memory_data, stream_path).

    Exactly one of the two is usable: data is None when the text should
    be consumed as a byte stream (stream_path None means stdin).
    """
    if args.text is not None:
        return _inline_symbols(args.text, args.mode), None
    path = args.text_file if args.text_file not in (None, "-") else None
    if args.mode == "tokens":
        if path is None:
            return sys.stdin.read().split(), None
        return _file_symbols(path, "tokens"), None
    if need_memory:
        if path is None:
            return sys.stdin.buffer.read(), None
        with open(path, "rb") as f:
            return f.read(), None
    return None, path


def _iter_chunks(fobj):
    read = fobj.read
    while True:
        block = read(_CHUNK)
        if not block:
            return
        yield from block


@contextmanager
def _byte_stream(path):
    if path is None:
        yield _iter_chunks(sys.stdin.buffer)
    else:
        with open(path, "rb") as f:
            yield _iter_chunks(f)


def _emit(args, record: dict, lines: list[str]) -> None:
    if args.quiet:
        return
    if args.format == "records":
        print(json.dumps(record, separators=(",", ":"), sort_keys=True))
    else:
        for line in lines:
            print(line)


def _oracle_failed(what: str, expected, got) -> int:
    print(f"oracle mismatch for {what}: expected {expected!r}, got {got!r}", file=sys.stderr)
    return 2


def _cmd_match(args) -> int:
    pattern = _load_pattern(args)
    full_scan = args.stats or args.oracle
    data, stream_path = _load_text(args, need_memory=args.oracle)
    counters = None
    if full_scan:
        if data is not None:
            report = enumerate_matches(data, pattern)
        else:
            with _byte_stream(stream_path) as it:
                report = scan_stream(it, pattern)
        position = report.positions[0] if report.positions else None
        counters = {"applies": report.applies, "matches": len(report.positions)}
        if args.oracle:
            expected = brute_matches(data, pattern)
            if list(report.positions) != expected:
                return _oracle_failed("match", expected, list(report.positions))
    else:
        if data is not None:
            position = find_first(data, pattern)
        else:
            with _byte_stream(stream_path) as it:
                position = find_first_stream(it, pattern)
    found = position is not None
    record = {"command": "match", "found": found, "position": position, "m": len(pattern)}
    lines = [str(position)] if found else []
    if counters is not None and args.stats:
        record["counters"] = counters
        lines.append(f"stats: applies={counters['applies']} matches={counters['matches']}")
    _emit(args, record, lines)
    return 0 if found else 1


def _cmd_enumerate(args) -> int:
    pattern = _load_pattern(args)
    data, stream_path = _load_text(args, need_memory=args.oracle)
    if data is not None:
        report = enumerate_matches(data, pattern)
    else:
        with _byte_stream(stream_path) as it:
            report = scan_stream(it, pattern)
    if args.oracle:
        expected = brute_matches(data, pattern)
        if list(report.positions) != expected:
            return _oracle_failed("enumerate", expected, list(report.positions))
    record = {
        "command": "enumerate",
        "found": report.found,
        "positions": list(report.positions),
        "count": len(report.positions),
        "n": report.n,
        "m": report.m,
    }
    lines = [str(p) for p in report.positions]
    if args.stats:
        record["counters"] = {"applies": report.applies, "matches": len(report.positions)}
        lines.append(f"stats: applies={report.applies} matches={len(report.positions)}")
    _emit(args, record, lines)
    return 0


def _cmd_mfsp(args) -> int:
    pattern = _load_pattern(args)
    data, stream_path = _load_text(args, need_memory=args.oracle)
    if data is not None:
        result = mfsp(data, pattern)
        n = len(data)
    else:
        with _byte_stream(stream_path) as it:
            result = mfsp_stream(it, pattern)
        n = result.pushes
    if args.oracle:
        expected = brute_mfsp(data, pattern)
        got = (result.start, result.end, result.length)
        if got != expected:
            return _oracle_failed("mfsp", expected, got)
    record = {
        "command": "mfsp",
        "ell": result.start,
        "r": result.end,
        "length": result.length,
        "n": n,
        "m": len(pattern),
    }
    lines = [f"ell={result.start} r={result.end} length={result.length}"]
    if args.stats:
        record["counters"] = {"pushes": result.pushes, "pops": result.pops}
        lines.append(f"stats: pushes={result.pushes} pops={result.pops}")
    _emit(args, record, lines)
    return 0


def _cmd_pack(args) -> int:
    pattern = _load_pattern(args)
    data, stream_path = _load_text(args, need_memory=args.oracle)
    if data is not None:
        report = enumerate_matches(data, pattern)
    else:
        with _byte_stream(stream_path) as it:
            report = scan_stream(it, pattern)
    if report.m == 0:
        selection = Selection((), 0)
    else:
        selection = greedy_pack(report.positions, report.m, report.n)
    if args.oracle:
        expected_positions = brute_matches(data, pattern)
        if list(report.positions) != expected_positions:
            return _oracle_failed("pack match set", expected_positions, list(report.positions))
        if report.m > 0:
            expected_count = brute_pack(expected_positions, report.m)
            if selection.count != expected_count:
                return _oracle_failed("pack cardinality", expected_count, selection.count)
    record = {
        "command": "pack",
        "starts": list(selection.starts),
        "count": selection.count,
        "n": report.n,
        "m": report.m,
    }
    lines = [str(s) for s in selection.starts]
    lines.append(f"count={selection.count}")
    if args.stats:
        record["counters"] = {"applies": report.applies, "matches": len(report.positions)}
        lines.append(f"stats: applies={report.applies} matches={len(report.positions)}")
    _emit(args, record, lines)
    return 0


def _cmd_gen(args) -> int:
    plants = tuple(int(p) for p in args.plant.split(",")) if args.plant else ()
    spec = WorkloadSpec(
        n=args.n,
        m=args.m,
        sigma=args.sigma,
        seed=args.seed,
        distribution="planted" if plants else "uniform",
        plants=plants,
    )
    text, pattern = generate(spec)
    pattern_out = args.pattern_out or args.out + ".pattern"
    _write_corpus(args.out, text)
    _write_corpus(pattern_out, pattern)
    record = {
        "command": "gen",
        "text_file": args.out,
        "pattern_file": pattern_out,
        "n": spec.n,
        "m": spec.m,
        "sigma": spec.sigma,
        "seed": spec.seed,
        "distribution": spec.distribution,
        "plants": list(plants),
    }
    lines = [
        f"text={args.out} pattern={pattern_out} "
        f"n={spec.n} m={spec.m} sigma={spec.sigma} seed={spec.seed}"
    ]
    _emit(args, record, lines)
    return 0


def _write_corpus(path: str, corpus) -> None:
    if isinstance(corpus, bytes):
        with open(path, "wb") as f:
            f.write(corpus)
    else:
        with open(path, "w", encoding="utf-8") as f:
            f.write(" ".join(str(sym) for sym in corpus))
            f.write("\n")


def _csv_ints(arg: str) -> list[int]:
    return [int(part) for part in arg.split(",") if part]


def _cmd_bench(args) -> int:
    if args.full_grid:
        sigmas, ms = [4, 16, 64, 256], [16, 64, 256, 1024]
    else:
        sigmas, ms = _csv_ints(args.sigma), _csv_ints(args.m)
    ns = _csv_ints(args.n)
    grid = [
        WorkloadSpec(n=n, m=m, sigma=sigma, seed=args.seed)
        for sigma in sigmas
        for m in ms
        for n in ns
    ]
    caps = SweepCaps(max_n=args.max_n, budget_seconds=args.budget_seconds)
    cells = run_sweep(grid, caps=caps, reps=args.reps)
    for cell in cells:
        if isinstance(cell, SkippedCell):
            record = {
                "command": "bench",
                "skipped": True,
                "reason": cell.reason,
                "n": cell.n,
                "m": cell.m,
                "sigma": cell.sigma,
                "seed": cell.seed,
            }
            lines = [f"skip sigma={cell.sigma} m={cell.m} n={cell.n}: {cell.reason}"]
        else:
            record = {
                "command": "bench",
                "algo": cell.algo,
                "n": cell.n,
                "m": cell.m,
                "sigma": cell.sigma,
                "seed": cell.seed,
                "reps": cell.reps,
                "time_s": cell.time_s,
                "time_min_s": cell.time_min_s,
                "time_max_s": cell.time_max_s,
                "symbols_per_sec": cell.symbols_per_sec,
                "matches": cell.matches,
                "mfsp_length": cell.mfsp_length,
                "counters": {
                    "applies": cell.applies,
                    "pushes": cell.pushes,
                    "pops": cell.pops,
                },
            }
            lines = [
                f"{cell.algo:<6} sigma={cell.sigma:<4} m={cell.m:<5} n={cell.n:<9} "
                f"median={cell.time_s:.6f}s sym/s={cell.symbols_per_sec:.3e}"
            ]
        _emit(args, record, lines)
    for (sigma, m, algo), ratios in sorted(scaling_ratios(cells).items()):
        pretty = ",".join(f"{r:.2f}" for r in ratios)
        record = {
            "command": "bench",
            "scaling": {"sigma": sigma, "m": m, "algo": algo, "ratios": ratios},
        }
        _emit(args, record, [f"scaling {algo} sigma={sigma} m={m} ratios={pretty}"])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permscan",
        description="Frequency-vector string scanning: permutation matches, "
        "budgeted substrings, disjoint selections.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_scan_command(name: str, help_text: str):
        p = sub.add_parser(name, help=help_text)
        pat = p.add_mutually_exclusive_group(required=True)
        pat.add_argument("--pattern", help="inline pattern")
        pat.add_argument("--pattern-file", help="file holding the pattern")
        txt = p.add_mutually_exclusive_group()
        txt.add_argument("--text", help="inline text")
        txt.add_argument("--text-file", help="text file; '-' or omitted reads stdin")
        p.add_argument("--mode", choices=("bytes", "tokens"), default="bytes",
                       help="bytes: one symbol per byte; tokens: whitespace-delimited")
        p.add_argument("--format", choices=("text", "records"), default="text",
                       help="records emits one JSON object per line")
        p.add_argument("--stats", action="store_true", help="include work counters")
        p.add_argument("--oracle", action="store_true",
                       help="cross-check against the brute-force reference")
        p.add_argument("--quiet", action="store_true", help="no output, status code only")
        p.add_argument("--seed", type=int, default=0,
                       help="accepted for interface symmetry; used by gen/bench")
        return p

    add_scan_command("match", "first permutation occurrence of the pattern").set_defaults(
        func=_cmd_match
    )
    add_scan_command("enumerate", "all permutation-match start positions").set_defaults(
        func=_cmd_enumerate
    )
    add_scan_command("mfsp", "longest substring within the pattern's symbol budget").set_defaults(
        func=_cmd_mfsp
    )
    add_scan_command("pack", "maximum set of non-overlapping matches").set_defaults(
        func=_cmd_pack
    )

    g = sub.add_parser("gen", help="write a seeded synthetic corpus")
    g.add_argument("--n", type=int, required=True, help="text length")
    g.add_argument("--m", type=int, required=True, help="pattern length")
    g.add_argument("--sigma", type=int, required=True, help="alphabet size")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--plant", default="",
                   help="comma-separated positions to overwrite with pattern permutations")
    g.add_argument("--out", required=True, help="output path for the text")
    g.add_argument("--pattern-out", default=None,
                   help="output path for the pattern (default: <out>.pattern)")
    g.add_argument("--format", choices=("text", "records"), default="text")
    g.add_argument("--quiet", action="store_true")
    g.set_defaults(func=_cmd_gen)

    b = sub.add_parser("bench", help="time the scans over a workload grid")
    b.add_argument("--sigma", default="16", help="comma-separated alphabet sizes")
    b.add_argument("--m", default="64", help="comma-separated pattern lengths")
    b.add_argument("--n", default="100000,200000,400000",
                   help="comma-separated text lengths (doublings enable scaling ratios)")
    b.add_argument("--full-grid", action="store_true",
                   help="sweep sigma in {4,16,64,256} x m in {16,64,256,1024}")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--reps", type=int, default=3)
    b.add_argument("--max-n", type=int, default=10_000_000)
    b.add_argument("--budget-seconds", type=float, default=None)
    b.add_argument("--format", choices=("text", "records"), default="text")
    b.add_argument("--quiet", action="store_true")
    b.set_defaults(func=_cmd_bench)

    return parser


def run(argv=None) -> int:
    """Parse and execute one invocation; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except (OSError, UnicodeDecodeError, SpecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
