"""Per-length bucket stores in the two layouts under comparison.

Ragged: each length maps to an independent Python list of bytes objects.
Flat: each length maps to one contiguous uint8 block of fixed-width rows,
which is what lets a compiled kernel walk it without pointer chasing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np


class LayoutKind(enum.Enum):
    RAGGED = "ragged"
    FLAT = "flat"


@dataclass
class BucketSet:
    """Ragged layout: length -> list of words, corpus order preserved.

    Only nonempty lengths are stored. Distinct buckets may be mutated by
    distinct threads concurrently; a single bucket must stay single-owner.
    """

    buckets: dict[int, list[bytes]] = field(default_factory=dict)

    def lengths(self) -> list[int]:
        return sorted(self.buckets)

    @property
    def lmax(self) -> int:
        return max(self.buckets, default=0)

    @property
    def word_count(self) -> int:
        return sum(len(b) for b in self.buckets.values())

    def words_for_length(self, length: int) -> list[bytes]:
        return list(self.buckets.get(length, []))


@dataclass
class FlatBucketMatrix:
    """Flat layout: length -> (count, length) uint8 array, corpus order rows."""

    blocks: dict[int, np.ndarray] = field(default_factory=dict)

    def lengths(self) -> list[int]:
        return sorted(self.blocks)

    @property
    def lmax(self) -> int:
        return max(self.blocks, default=0)

    @property
    def word_count(self) -> int:
        return sum(b.shape[0] for b in self.blocks.values())

    def count_for_length(self, length: int) -> int:
        block = self.blocks.get(length)
        return 0 if block is None else block.shape[0]

    def words_for_length(self, length: int) -> list[bytes]:
        block = self.blocks.get(length)
        if block is None:
            return []
        raw = block.tobytes()
        return [raw[i : i + length] for i in range(0, len(raw), length)]


Store = BucketSet | FlatBucketMatrix


def _group_by_length(words: list[bytes]) -> dict[int, list[bytes]]:
    groups: dict[int, list[bytes]] = {}
    for word in words:
        groups.setdefault(len(word), []).append(word)
    return groups


def build_buckets(words: list[bytes]) -> BucketSet:
    """Distribute words into per-length lists, corpus order within each."""
    return BucketSet(_group_by_length(words))


def build_flat(words: list[bytes]) -> FlatBucketMatrix:
    """Pack words into contiguous fixed-width byte blocks, one per length."""
    blocks = {}
    for length, group in _group_by_length(words).items():
        flat = np.frombuffer(b"".join(group), dtype=np.uint8)
        blocks[length] = flat.reshape(len(group), length).copy()
    return FlatBucketMatrix(blocks)


def build_store(words: list[bytes], layout: LayoutKind) -> Store:
    if layout is LayoutKind.RAGGED:
        return build_buckets(words)
    return build_flat(words)


def emit_sorted(store: Store) -> list[bytes]:
    """Concatenate buckets in ascending length order.

    With each bucket individually sorted this yields the composite order
    (length ascending, then byte-lexicographic within a length).
    """
    out: list[bytes] = []
    for length in store.lengths():
        out.extend(store.words_for_length(length))
    return out
