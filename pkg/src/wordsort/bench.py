"""Wall-clock benchmark harness with speedup/efficiency derivation.

Each repetition rebuilds the store outside the timed region, so timings
cover the sort phase only. Speedup is serial mean / parallel mean, where
the serial baseline is the 1-thread row of the same (dataset, layout,
variant); efficiency is speedup / threads.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from pathlib import Path

from .engine import SchedulePolicy, SortConfig, SortVariant, sort_all_parallel, sort_all_sequential
from .ingest import load_text, tokenize
from .store import LayoutKind, build_store


class BenchError(Exception):
    pass


@dataclass
class TimingRow:
    dataset: str
    layout: LayoutKind
    variant: SortVariant
    threads: int
    runs: list[float]
    speedup: float | None = None
    efficiency: float | None = None

    @property
    def mean_seconds(self) -> float:
        return sum(self.runs) / len(self.runs)


@dataclass
class BenchReport:
    rows: list[TimingRow] = field(default_factory=list)
    meta: dict = field(default_factory=dict)


def compute_speedup(t_serial: float, t_parallel: float) -> float:
    """Serial time divided by parallel time."""
    if t_serial <= 0 or t_parallel <= 0:
        raise ValueError("times must be positive")
    return t_serial / t_parallel


def compute_efficiency(speedup: float, threads: int) -> float:
    """Speedup divided by thread count, as a fraction."""
    if threads < 1:
        raise ValueError("threads must be >= 1")
    if speedup <= 0:
        raise ValueError("speedup must be positive")
    return speedup / threads


def time_sort(
    corpus: list[bytes],
    config: SortConfig,
    reps: int = 10,
    warmups: int = 1,
    dataset: str = "corpus",
) -> TimingRow:
    """Measure the sort phase over reps repetitions, discarding warmups."""
    if reps < 1:
        raise ValueError("reps must be >= 1")
    runs: list[float] = []
    for i in range(warmups + reps):
        store = build_store(corpus, config.layout)
        t0 = time.perf_counter()
        if config.threads == 1:
            sort_all_sequential(store, config.variant)
        else:
            sort_all_parallel(store, config)
        elapsed = time.perf_counter() - t0
        if i >= warmups:
            runs.append(elapsed)
    return TimingRow(dataset, config.layout, config.variant, config.threads, runs)


def derive(report: BenchReport) -> BenchReport:
    """Fill in speedup/efficiency columns against each group's 1-thread row."""
    baselines: dict[tuple, float] = {}
    for row in report.rows:
        if row.threads == 1:
            baselines[(row.dataset, row.layout, row.variant)] = row.mean_seconds
    for row in report.rows:
        t_serial = baselines.get((row.dataset, row.layout, row.variant))
        if t_serial is None:
            continue
        row.speedup = compute_speedup(t_serial, row.mean_seconds)
        row.efficiency = compute_efficiency(row.speedup, row.threads)
    return report


def run_matrix(
    datasets: list[tuple[str, str | Path]],
    layouts: list[LayoutKind],
    variants: list[SortVariant],
    thread_list: list[int],
    reps: int = 3,
    warmups: int = 1,
    schedule: SchedulePolicy = SchedulePolicy.STATIC_BLOCK,
) -> BenchReport:
    """Measure the full (dataset, layout, variant, threads) cross-product."""
    threads_all = sorted(set(thread_list))
    if 1 not in threads_all:
        threads_all.insert(0, 1)  # required as the serial baseline

    corpora: dict[str, list[bytes]] = {}
    for label, path in datasets:
        try:
            corpora[label] = tokenize(load_text(path))
        except OSError as exc:
            raise BenchError(f"dataset {label!r}: cannot read {path}: {exc}") from exc

    report = BenchReport(
        meta={
            "reps": reps,
            "warmups": warmups,
            "threads": threads_all,
            "schedule": schedule.value,
        }
    )
    for label in corpora:
        for layout in layouts:
            for variant in variants:
                for threads in threads_all:
                    config = SortConfig(layout, variant, threads, schedule)
                    report.rows.append(
                        time_sort(corpora[label], config, reps, warmups, dataset=label)
                    )
    report.rows.sort(
        key=lambda r: (r.dataset, r.layout.value, r.variant.value, r.threads)
    )
    return derive(report)


def _max_reps(report: BenchReport) -> int:
    return max((len(r.runs) for r in report.rows), default=0)


def render_csv(report: BenchReport) -> str:
    """RFC-4180-style CSV with one run_i column per repetition."""
    n_runs = _max_reps(report)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = ["dataset", "layout", "variant", "threads", "mean_seconds", "speedup", "efficiency"]
    header += [f"run_{i + 1}" for i in range(n_runs)]
    writer.writerow(header)
    for row in report.rows:
        fields = [
            row.dataset,
            row.layout.value,
            row.variant.value,
            row.threads,
            repr(row.mean_seconds),
            "" if row.speedup is None else repr(row.speedup),
            "" if row.efficiency is None else repr(row.efficiency),
        ]
        fields += [repr(t) for t in row.runs]
        fields += [""] * (n_runs - len(row.runs))
        writer.writerow(fields)
    return buf.getvalue()


def parse_csv(text: str) -> BenchReport:
    """Inverse of render_csv (meta is not carried by the CSV format)."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    run_cols = [i for i, name in enumerate(header) if name.startswith("run_")]
    rows = []
    for rec in reader:
        runs = [float(rec[i]) for i in run_cols if rec[i] != ""]
        rows.append(
            TimingRow(
                dataset=rec[0],
                layout=LayoutKind(rec[1]),
                variant=SortVariant(rec[2]),
                threads=int(rec[3]),
                runs=runs,
                speedup=float(rec[5]) if rec[5] != "" else None,
                efficiency=float(rec[6]) if rec[6] != "" else None,
            )
        )
    return BenchReport(rows=rows)


def render_json(report: BenchReport) -> str:
    payload = {
        "meta": report.meta,
        "rows": [
            {
                "dataset": row.dataset,
                "layout": row.layout.value,
                "variant": row.variant.value,
                "threads": row.threads,
                "runs": row.runs,
                "mean_seconds": row.mean_seconds,
                "speedup": row.speedup,
                "efficiency": row.efficiency,
            }
            for row in report.rows
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def render_plot_data(report: BenchReport) -> dict[str, str]:
    """Two-column `threads value` files, one per curve.

    Emits a speedup curve and a mean-time curve for every
    (dataset, layout, variant) group, ordered by thread count.
    """
    groups: dict[tuple, list[TimingRow]] = {}
    for row in report.rows:
        groups.setdefault((row.dataset, row.layout, row.variant), []).append(row)
    files: dict[str, str] = {}
    for (dataset, layout, variant), rows in sorted(
        groups.items(), key=lambda kv: (kv[0][0], kv[0][1].value, kv[0][2].value)
    ):
        rows = sorted(rows, key=lambda r: r.threads)
        stem = f"{dataset}_{layout.value}_{variant.value}"
        files[f"speedup_{stem}.dat"] = "".join(
            f"{r.threads} {r.speedup!r}\n" for r in rows if r.speedup is not None
        )
        files[f"time_{stem}.dat"] = "".join(
            f"{r.threads} {r.mean_seconds!r}\n" for r in rows
        )
    return files


def emit_report(report: BenchReport, fmt: str) -> bytes | dict[str, bytes]:
    """Serialize a report; plot format yields a mapping of file name to body."""
    if fmt == "csv":
        return render_csv(report).encode()
    if fmt == "json":
        return render_json(report).encode()
    if fmt == "plot":
        return {name: body.encode() for name, body in render_plot_data(report).items()}
    raise ValueError(f"unknown format {fmt!r}")
