"""Length-bucketed parallel bubble sort of text corpora."""

from .bench import (
    BenchReport,
    TimingRow,
    compute_efficiency,
    compute_speedup,
    emit_report,
    run_matrix,
    time_sort,
)
from .engine import (
    SchedulePolicy,
    SortConfig,
    SortStats,
    SortVariant,
    bubble_sort_bucket,
    compare_words,
    sort_all_parallel,
    sort_all_sequential,
)
from .ingest import load_text, preprocess_stats, tokenize
from .store import (
    BucketSet,
    FlatBucketMatrix,
    LayoutKind,
    build_buckets,
    build_flat,
    build_store,
    emit_sorted,
)

__all__ = [
    "BenchReport",
    "BucketSet",
    "FlatBucketMatrix",
    "LayoutKind",
    "SchedulePolicy",
    "SortConfig",
    "SortStats",
    "SortVariant",
    "TimingRow",
    "bubble_sort_bucket",
    "build_buckets",
    "build_flat",
    "build_store",
    "compare_words",
    "compute_efficiency",
    "compute_speedup",
    "emit_report",
    "emit_sorted",
    "load_text",
    "preprocess_stats",
    "run_matrix",
    "sort_all_parallel",
    "sort_all_sequential",
    "time_sort",
    "tokenize",
]
