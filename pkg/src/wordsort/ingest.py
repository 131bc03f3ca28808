"""Corpus loading and tokenization.

A word is a maximal run of ASCII alphanumeric bytes. Everything else,
including any byte >= 0x80, is a separator and is discarded. Case is
preserved so words compare by raw byte value.
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass
from pathlib import Path

WORD_RE = re.compile(rb"[A-Za-z0-9]+")

# A corpus is just an ordered list of words (bytes), duplicates kept.
WordSequence = list


def load_text(path: str | Path) -> bytes:
    """Read the full byte contents of a file, no newline translation."""
    return Path(path).read_bytes()


def tokenize(text: bytes) -> list[bytes]:
    """Split raw bytes into words, preserving source order and duplicates."""
    return WORD_RE.findall(text)


@dataclass
class PhaseTimings:
    """Wall-clock seconds for the two pre-processing phases."""

    load_strip_seconds: float
    bucket_build_seconds: float


def preprocess_stats(path: str | Path) -> PhaseTimings:
    """Time the load+strip phase and the bucket-construction phase of a file."""
    from .store import build_buckets

    t0 = time.perf_counter()
    words = tokenize(load_text(path))
    t1 = time.perf_counter()
    build_buckets(words)
    t2 = time.perf_counter()
    return PhaseTimings(load_strip_seconds=t1 - t0, bucket_build_seconds=t2 - t1)
