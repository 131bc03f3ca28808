import random
import string
from pathlib import Path

import pytest

ALNUM = (string.ascii_letters + string.digits).encode()

SAMPLE_PATH = Path(__file__).resolve().parent.parent / "data" / "sample.txt"

# Golden values for data/sample.txt, frozen from an independent scan
# (grep -oE '[A-Za-z0-9]+' | wc -l and a length histogram one-liner).
SAMPLE_WORD_COUNT = 271
SAMPLE_LMAX = 12
SAMPLE_HISTOGRAM = {
    1: 13, 2: 55, 3: 57, 4: 55, 5: 36, 6: 18,
    7: 14, 8: 11, 9: 6, 10: 4, 11: 1, 12: 1,
}
SAMPLE_FIRST_WORDS = [b"HAMLET", b"To", b"be", b"or", b"not", b"to"]


def make_corpus(seed: int, count: int, max_len: int = 12, min_len: int = 1) -> list[bytes]:
    rng = random.Random(seed)
    return [
        bytes(rng.choices(ALNUM, k=rng.randint(min_len, max_len)))
        for _ in range(count)
    ]


def oracle_sort(words: list[bytes]) -> list[bytes]:
    return sorted(words, key=lambda w: (len(w), w))


@pytest.fixture(scope="session", autouse=True)
def warm_flat_kernel():
    # first flat sort pays the JIT compile/cache-load cost; keep that out
    # of timed or deadline-checked test bodies
    from wordsort.engine import SortVariant, sort_all_sequential
    from wordsort.store import LayoutKind, build_store

    store = build_store([b"ba", b"ab"], LayoutKind.FLAT)
    sort_all_sequential(store, SortVariant.NAIVE)
