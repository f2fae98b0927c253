"""Suffix array, LCP array, and the batched longest-common-extension demo."""

import numpy as np
import pytest

from rmqbatch import build_suffix_lcp, lce_batch

from helpers import on_each_backend


def char_lce(text, i, j):
    n = len(text)
    k = 0
    while i + k < n and j + k < n and text[i + k] == text[j + k]:
        k += 1
    return k


def test_banana_suffix_array():
    s = build_suffix_lcp("banana")
    assert s.sa.tolist() == [5, 3, 1, 0, 4, 2]
    assert s.lcp.tolist() == [0, 1, 3, 0, 0, 2]
    assert [int(s.rank[p]) for p in s.sa.tolist()] == list(range(6))


def test_small_texts():
    s = build_suffix_lcp("aaa")
    assert s.sa.tolist() == [2, 1, 0]
    assert s.lcp.tolist() == [0, 1, 2]
    s = build_suffix_lcp("b")
    assert s.sa.tolist() == [0]
    assert s.lcp.tolist() == [0]


def test_empty_text_rejected():
    with pytest.raises(ValueError):
        build_suffix_lcp("")


def test_bytes_and_str_agree():
    assert build_suffix_lcp(b"mississippi").sa.tolist() == \
        build_suffix_lcp("mississippi").sa.tolist()


def test_lce_banana():
    s = build_suffix_lcp("banana")
    assert [int(x) for x in lce_batch(s, [(1, 3)])] == [3]
    # same suffix: the full remaining length
    assert [int(x) for x in lce_batch(s, [(2, 2)])] == [4]
    assert [int(x) for x in lce_batch(s, [(0, 0)])] == [6]
    assert [int(x) for x in lce_batch(s, [(0, 1)])] == [0]
    assert list(lce_batch(s, [])) == []


def test_lce_rejects_bad_positions():
    s = build_suffix_lcp("banana")
    with pytest.raises(ValueError):
        lce_batch(s, [(0, 6)])
    with pytest.raises(ValueError):
        lce_batch(s, [(-1, 0)])


def test_lce_structure_reusable_across_batches():
    s = build_suffix_lcp("abracadabra")
    first = [int(x) for x in lce_batch(s, [(0, 7), (1, 8)])]
    second = [int(x) for x in lce_batch(s, [(0, 7), (1, 8)])]
    assert first == second == [4, 3]
    assert s.lcp.tolist() == build_suffix_lcp("abracadabra").lcp.tolist()


def test_lce_random_texts_match_char_oracle(rng):
    for trial in range(15):
        n = int(rng.integers(1, 1000))
        text = bytes(rng.integers(97, 100, size=n).astype(np.uint8))  # a..c
        s = build_suffix_lcp(text)
        pairs = [(int(rng.integers(0, n)), int(rng.integers(0, n)))
                 for _ in range(50)]
        want = [char_lce(text, i, j) for i, j in pairs]

        def run():
            return [int(x) for x in lce_batch(s, pairs)]

        for got in on_each_backend(run):
            assert got == want
