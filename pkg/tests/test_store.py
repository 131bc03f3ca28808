import string

import numpy as np
from hypothesis import given, strategies as st

from wordsort.engine import SortVariant, sort_all_sequential
from wordsort.ingest import load_text, tokenize
from wordsort.store import (
    LayoutKind,
    build_buckets,
    build_flat,
    build_store,
    emit_sorted,
)

from conftest import SAMPLE_HISTOGRAM, SAMPLE_LMAX, SAMPLE_PATH, oracle_sort

words_st = st.lists(
    st.text(alphabet=string.ascii_letters + string.digits, min_size=1, max_size=12).map(
        str.encode
    ),
    max_size=80,
)


def test_build_buckets_example():
    s = build_buckets([b"a", b"bb", b"cc", b"d"])
    assert s.buckets[1] == [b"a", b"d"]
    assert s.buckets[2] == [b"bb", b"cc"]
    assert s.lmax == 2
    assert s.word_count == 4


def test_build_buckets_empty():
    s = build_buckets([])
    assert s.lengths() == []
    assert s.lmax == 0
    assert s.word_count == 0


def test_build_buckets_sample_histogram():
    s = build_buckets(tokenize(load_text(SAMPLE_PATH)))
    assert s.lmax == SAMPLE_LMAX
    assert {L: len(b) for L, b in s.buckets.items()} == SAMPLE_HISTOGRAM


def test_build_flat_example():
    m = build_flat([b"ab", b"cd"])
    assert m.blocks[2].tobytes() == b"abcd"
    assert m.count_for_length(2) == 2
    assert m.blocks[2].dtype == np.uint8


def test_build_flat_single():
    m = build_flat([b"x"])
    assert m.blocks[1].tobytes() == b"x"
    assert m.count_for_length(1) == 1
    assert m.lmax == 1


def test_flat_rows_are_contiguous_without_padding():
    m = build_flat([b"abc", b"def", b"gh"])
    assert m.blocks[3].shape == (2, 3)
    assert m.blocks[3].flags["C_CONTIGUOUS"]
    assert m.blocks[3].nbytes == 2 * 3
    assert m.blocks[2].nbytes == 1 * 2


@given(words_st)
def test_layouts_hold_same_words_per_bucket(words):
    ragged = build_buckets(words)
    flat = build_flat(words)
    assert ragged.lengths() == flat.lengths()
    for length in ragged.lengths():
        assert ragged.words_for_length(length) == flat.words_for_length(length)


@given(words_st)
def test_bucket_index_equals_word_length(words):
    s = build_buckets(words)
    for length, bucket in s.buckets.items():
        assert all(len(w) == length for w in bucket)
    assert s.word_count == len(words)


def test_emit_sorted_example():
    s = build_buckets([b"a", b"abc", b"b"])
    assert emit_sorted(s) == [b"a", b"b", b"abc"]


def test_emit_sorted_empty():
    assert emit_sorted(build_buckets([])) == []
    assert emit_sorted(build_flat([])) == []


@given(words_st)
def test_emit_sorted_matches_oracle_after_sort(words):
    for layout in LayoutKind:
        store = build_store(words, layout)
        sort_all_sequential(store, SortVariant.NAIVE)
        assert emit_sorted(store) == oracle_sort(words)


@given(words_st)
def test_multiset_preserved(words):
    for layout in LayoutKind:
        store = build_store(words, layout)
        sort_all_sequential(store, SortVariant.NAIVE)
        assert sorted(emit_sorted(store)) == sorted(words)
