"""Command-line interface: sort, bench, verify and preprocess subcommands."""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import bench as bench_mod
from .engine import SchedulePolicy, SortConfig, SortVariant, sort_all_parallel, sort_all_sequential
from .ingest import load_text, preprocess_stats, tokenize
from .store import LayoutKind, build_buckets, build_store, emit_sorted
from .verify import generate_words, verify_words


def default_threads() -> int:
    env = os.environ.get("WORDSORT_THREADS")
    if env:
        return int(env)
    return os.cpu_count() or 1


def _parse_int_list(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part]


def _parse_layouts(text: str) -> list[LayoutKind]:
    return [LayoutKind(part) for part in text.split(",") if part]


def _parse_variants(text: str) -> list[SortVariant]:
    return [SortVariant(part) for part in text.split(",") if part]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wordsort",
        description="Length-bucketed parallel bubble sort of text corpora.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sort = sub.add_parser("sort", help="sort the words of a corpus file")
    p_sort.add_argument("input", type=Path)
    p_sort.add_argument("--layout", choices=[l.value for l in LayoutKind], default="flat")
    p_sort.add_argument("--variant", choices=[v.value for v in SortVariant], default="naive")
    p_sort.add_argument("--threads", type=int, default=None)
    p_sort.add_argument(
        "--schedule", choices=[s.value for s in SchedulePolicy], default="static"
    )
    p_sort.add_argument("--output", type=Path, default=None, help="default: stdout")

    p_bench = sub.add_parser("bench", help="run the timing matrix and emit a report")
    p_bench.add_argument("inputs", nargs="+", type=Path)
    p_bench.add_argument("--layout", type=_parse_layouts, default="ragged,flat")
    p_bench.add_argument("--variant", type=_parse_variants, default="naive")
    p_bench.add_argument("--threads", type=_parse_int_list, default="1,2,4,6,8,10,16")
    p_bench.add_argument("--reps", type=int, default=3)
    p_bench.add_argument("--warmups", type=int, default=1)
    p_bench.add_argument(
        "--schedule", choices=[s.value for s in SchedulePolicy], default="static"
    )
    p_bench.add_argument("--format", choices=["csv", "json", "plot"], default="csv")
    p_bench.add_argument(
        "--output", type=Path, default=None,
        help="report file, or directory for --format plot (default: stdout)",
    )

    p_verify = sub.add_parser("verify", help="check the pipeline against an oracle sort")
    p_verify.add_argument("input", nargs="?", type=Path, default=None)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument(
        "--sizes", type=_parse_int_list, default="0,1,100,1000",
        help="sizes of generated corpora to verify",
    )

    p_pre = sub.add_parser("preprocess", help="phase timings and corpus statistics")
    p_pre.add_argument("input", type=Path)

    return parser


def cmd_sort(args) -> int:
    words = tokenize(load_text(args.input))
    threads = args.threads if args.threads is not None else default_threads()
    config = SortConfig(
        layout=LayoutKind(args.layout),
        variant=SortVariant(args.variant),
        threads=threads,
        schedule=SchedulePolicy(args.schedule),
    )
    store = build_store(words, config.layout)
    if config.threads == 1:
        sort_all_sequential(store, config.variant)
    else:
        sort_all_parallel(store, config)
    payload = b"".join(word + b"\n" for word in emit_sorted(store))
    if args.output is None:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()
    else:
        args.output.write_bytes(payload)
    return 0


def _print_summary(report: bench_mod.BenchReport, stream) -> None:
    print(
        f"{'dataset':<16} {'layout':<8} {'variant':<10} {'threads':>7} "
        f"{'mean_s':>10} {'speedup':>8} {'eff':>7}",
        file=stream,
    )
    for row in report.rows:
        speedup = f"{row.speedup:.3f}" if row.speedup is not None else "-"
        eff = f"{row.efficiency * 100:.0f}%" if row.efficiency is not None else "-"
        print(
            f"{row.dataset:<16} {row.layout.value:<8} {row.variant.value:<10} "
            f"{row.threads:>7} {row.mean_seconds:>10.3f} {speedup:>8} {eff:>7}",
            file=stream,
        )


def cmd_bench(args) -> int:
    layouts = args.layout if isinstance(args.layout, list) else _parse_layouts(args.layout)
    variants = args.variant if isinstance(args.variant, list) else _parse_variants(args.variant)
    threads = args.threads if isinstance(args.threads, list) else _parse_int_list(args.threads)
    datasets = [(path.stem, path) for path in args.inputs]
    report = bench_mod.run_matrix(
        datasets,
        layouts=layouts,
        variants=variants,
        thread_list=threads,
        reps=args.reps,
        warmups=args.warmups,
        schedule=SchedulePolicy(args.schedule),
    )
    payload = bench_mod.emit_report(report, args.format)
    if isinstance(payload, dict):
        out_dir = args.output or Path("plot-data")
        out_dir.mkdir(parents=True, exist_ok=True)
        for name, body in payload.items():
            (out_dir / name).write_bytes(body)
        _print_summary(report, sys.stdout)
        print(f"wrote {len(payload)} plot files to {out_dir}", file=sys.stderr)
    elif args.output is not None:
        args.output.write_bytes(payload)
        _print_summary(report, sys.stdout)
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()
        _print_summary(report, sys.stderr)
    return 0


def cmd_verify(args) -> int:
    corpora: list[tuple[str, list[bytes]]] = []
    if args.input is not None:
        corpora.append((str(args.input), tokenize(load_text(args.input))))
    for size in args.sizes:
        corpora.append((f"generated(n={size})", generate_words(args.seed, size)))
    status = 0
    for label, words in corpora:
        divergence = verify_words(words)
        if divergence is None:
            print(f"{label}: OK ({len(words)} words)")
        else:
            print(f"{label}: {divergence}", file=sys.stderr)
            status = 1
    return status


def cmd_preprocess(args) -> int:
    timings = preprocess_stats(args.input)
    words = tokenize(load_text(args.input))
    buckets = build_buckets(words)
    print(f"load_strip,{timings.load_strip_seconds:.3f}")
    print(f"bucket_build,{timings.bucket_build_seconds:.3f}")
    print(f"words,{len(words)}")
    print(f"lmax,{buckets.lmax}")
    for length in buckets.lengths():
        print(f"hist,{length},{len(buckets.buckets[length])}")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "sort": cmd_sort,
        "bench": cmd_bench,
        "verify": cmd_verify,
        "preprocess": cmd_preprocess,
    }
    try:
        return handlers[args.command](args)
    except (OSError, ValueError, bench_mod.BenchError) as exc:
        print(f"wordsort: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
