"""Oracle-based end-to-end verification of the sort pipeline."""

from __future__ import annotations

import random
import string
from dataclasses import dataclass

from .engine import SortConfig, SortVariant, sort_all_parallel, sort_all_sequential
from .store import LayoutKind, build_store, emit_sorted

ALPHABET = (string.ascii_letters + string.digits).encode()

DEFAULT_THREAD_COUNTS = (1, 4, 16)


def oracle_sorted(words: list[bytes]) -> list[bytes]:
    """Baseline composite-order sort: length ascending, then raw bytes."""
    return sorted(words, key=lambda w: (len(w), w))


def generate_words(seed: int, count: int, max_len: int = 12) -> list[bytes]:
    """Deterministic pseudo-random corpus of alphanumeric words."""
    rng = random.Random(seed)
    return [
        bytes(rng.choices(ALPHABET, k=rng.randint(1, max_len)))
        for _ in range(count)
    ]


@dataclass
class Divergence:
    layout: LayoutKind
    variant: SortVariant
    threads: int
    index: int
    got: bytes
    expected: bytes

    def __str__(self) -> str:
        return (
            f"mismatch at index {self.index} "
            f"(layout={self.layout.value}, variant={self.variant.value}, "
            f"threads={self.threads}): got {self.got!r}, expected {self.expected!r}"
        )


def verify_words(
    words: list[bytes],
    thread_counts: tuple[int, ...] = DEFAULT_THREAD_COUNTS,
) -> Divergence | None:
    """Run every layout/variant/thread combination against the oracle.

    Returns the first divergence found, or None when all outputs match.
    """
    expected = oracle_sorted(words)
    for layout in LayoutKind:
        for variant in SortVariant:
            for threads in thread_counts:
                store = build_store(words, layout)
                if threads == 1:
                    sort_all_sequential(store, variant)
                else:
                    sort_all_parallel(store, SortConfig(layout, variant, threads))
                got = emit_sorted(store)
                if got != expected:
                    for i, (g, e) in enumerate(zip(got, expected)):
                        if g != e:
                            return Divergence(layout, variant, threads, i, g, e)
                    # same prefix, differing length: report at the shorter end
                    i = min(len(got), len(expected))
                    return Divergence(layout, variant, threads, i, b"", b"")
    return None
