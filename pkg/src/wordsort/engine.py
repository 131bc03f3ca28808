"""Instrumented bubble sort of buckets plus sequential and parallel drivers.

Both layouts run the same triangular pass schedule: pass p compares the
first n-1-p adjacent pairs and swaps on strictly-greater, so the sort is
stable and the naive variant performs exactly n(n-1)/2 comparisons. The
early-exit variant stops after the first pass with zero swaps.

The unit of parallel work is one whole bucket; workers never share a
bucket, so the parallel driver is race-free by construction.
"""

from __future__ import annotations

import enum
import queue
import threading
from dataclasses import dataclass

from numba import njit

from .store import BucketSet, FlatBucketMatrix, LayoutKind, Store


class SortVariant(enum.Enum):
    NAIVE = "naive"
    EARLY_EXIT = "early-exit"


class SchedulePolicy(enum.Enum):
    STATIC_BLOCK = "static"
    STATIC_CYCLIC = "cyclic"
    DYNAMIC = "dynamic"


@dataclass
class SortStats:
    comparisons: int = 0
    swaps: int = 0
    passes: int = 0

    def __add__(self, other: "SortStats") -> "SortStats":
        return SortStats(
            self.comparisons + other.comparisons,
            self.swaps + other.swaps,
            self.passes + other.passes,
        )


@dataclass
class SortConfig:
    layout: LayoutKind
    variant: SortVariant = SortVariant.NAIVE
    threads: int = 1
    schedule: SchedulePolicy = SchedulePolicy.STATIC_BLOCK

    def __post_init__(self):
        if self.threads < 1:
            raise ValueError(f"threads must be >= 1, got {self.threads}")



def compare_words(a: bytes, b: bytes) -> int:
    """Raw byte-wise comparison of two equal-length words: -1, 0 or 1."""
    assert len(a) == len(b), "bucket-internal comparison requires equal lengths"
    if a < b:
        return -1
    if a > b:
        return 1
    return 0


def _bubble_list(items: list[bytes], naive: bool) -> SortStats:
    n = len(items)
    comparisons = swaps = passes = 0
    for end in range(n - 1, 0, -1):
        passes += 1
        pass_swaps = 0
        for j in range(end):
            comparisons += 1
            if items[j] > items[j + 1]:
                items[j], items[j + 1] = items[j + 1], items[j]
                swaps += 1
                pass_swaps += 1
        if not naive and pass_swaps == 0:
            break
    return SortStats(comparisons, swaps, passes)


@njit(cache=True, nogil=True)
def _bubble_rows(rows, naive):  # pragma: no cover - compiled
    n, width = rows.shape
    comparisons = 0
    swaps = 0
    passes = 0
    for end in range(n - 1, 0, -1):
        passes += 1
        pass_swaps = 0
        for j in range(end):
            comparisons += 1
            order = 0
            for k in range(width):
                if rows[j, k] != rows[j + 1, k]:
                    order = 1 if rows[j, k] > rows[j + 1, k] else -1
                    break
            if order > 0:
                for k in range(width):
                    tmp = rows[j, k]
                    rows[j, k] = rows[j + 1, k]
                    rows[j + 1, k] = tmp
                swaps += 1
                pass_swaps += 1
        if not naive and pass_swaps == 0:
            break
    return comparisons, swaps, passes


def bubble_sort_bucket(store: Store, length: int, variant: SortVariant) -> SortStats:
    """Sort one bucket in place, returning its comparison/swap/pass counts."""
    naive = variant is SortVariant.NAIVE
    if isinstance(store, BucketSet):
        bucket = store.buckets.get(length)
        if bucket is None or len(bucket) < 2:
            return SortStats()
        return _bubble_list(bucket, naive)
    block = store.blocks.get(length)
    if block is None or block.shape[0] < 2:
        return SortStats()
    comparisons, swaps, passes = _bubble_rows(block, naive)
    return SortStats(comparisons, swaps, passes)


def sort_all_sequential(store: Store, variant: SortVariant) -> SortStats:
    """Sort every bucket in ascending length order on the calling thread."""
    total = SortStats()
    for length in store.lengths():
        total += bubble_sort_bucket(store, length, variant)
    return total


def sort_all_parallel(store: Store, config: SortConfig) -> SortStats:
    """Sort all buckets with a worker pool, one whole bucket per task.

    Final store state and aggregate stats are identical to the sequential
    driver for every thread count and schedule; workers keep local stats
    that are reduced once after the join.
    """
    lengths = store.lengths()
    n_workers = min(config.threads, len(lengths))
    if n_workers <= 1:
        return sort_all_sequential(store, config.variant)

    if config.schedule is SchedulePolicy.STATIC_BLOCK:
        base, extra = divmod(len(lengths), n_workers)
        assignments, lo = [], 0
        for w in range(n_workers):
            hi = lo + base + (1 if w < extra else 0)
            assignments.append(lengths[lo:hi])
            lo = hi
    elif config.schedule is SchedulePolicy.STATIC_CYCLIC:
        assignments = [lengths[w::n_workers] for w in range(n_workers)]
    else:
        assignments = None

    work: queue.SimpleQueue[int] | None = None
    if assignments is None:
        work = queue.SimpleQueue()
        for length in lengths:
            work.put(length)

    results: list[SortStats] = [SortStats() for _ in range(n_workers)]
    errors: list[BaseException] = []

    def run(worker_id: int) -> None:
        local = SortStats()
        try:
            if work is None:
                for length in assignments[worker_id]:
                    local += bubble_sort_bucket(store, length, config.variant)
            else:
                while True:
                    try:
                        length = work.get_nowait()
                    except queue.Empty:
                        break
                    local += bubble_sort_bucket(store, length, config.variant)
        except BaseException as exc:  # surfaced after the join
            errors.append(exc)
        results[worker_id] = local

    threads = [threading.Thread(target=run, args=(w,)) for w in range(n_workers)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    if errors:
        raise errors[0]

    total = SortStats()
    for stats in results:
        total += stats
    return total
