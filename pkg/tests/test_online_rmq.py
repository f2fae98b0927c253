"""Block-decomposition RMQ: signatures, shared tables, and the batch variant."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rmqbatch import on_build, on_query, on_rmq, on_rmq_con

from helpers import (EXAMPLE_A, EXAMPLE_ANS, EXAMPLE_Q, on_each_backend,
                     random_queries, rmq_oracle)


def test_equal_values_share_one_signature(kern):
    s = on_build(np.zeros(16, dtype=np.int64), b=4)
    assert len(set(int(x) for x in s.row_idx)) == 1


def test_increasing_array_answers_left_endpoint(kern):
    a = np.arange(16, dtype=np.int64)
    s = on_build(a, b=4)
    for i in range(16):
        for j in range(i, 16):
            assert on_query(s, i, j) == i


def test_partial_tail_block(kern):
    # n not a multiple of b: the tail pads as +inf and must stay queryable
    a = np.array([5, 3, 8, 1, 9, 2, 7], dtype=np.int64)
    s = on_build(a, b=4)
    vals = a.tolist()
    for i in range(7):
        for j in range(i, 7):
            assert on_query(s, i, j) == rmq_oracle(vals, [(i, j)])[0]


def test_on_query_range_validation(kern):
    s = on_build(np.array([1, 2, 3], dtype=np.int64))
    with pytest.raises(ValueError):
        on_query(s, 1, 3)
    with pytest.raises(ValueError):
        on_query(s, 2, 0)


def test_on_build_rejects_empty(kern):
    with pytest.raises(ValueError):
        on_build(np.array([], dtype=np.int64))


def test_exhaustive_small_arrays(kern, rng):
    a = rng.integers(0, 6, size=256).astype(np.int64)
    s = on_build(a)
    vals = a.tolist()
    queries = [(i, j) for i in range(256) for j in range(i, 256)]
    want = rmq_oracle(vals, queries)
    got = [on_query(s, i, j) for i, j in queries]
    assert got == want


def test_equal_signatures_mean_equal_block_shapes(kern, rng):
    # any two blocks sharing a row must give identical in-block argmin offsets
    a = rng.integers(0, 4, size=120).astype(np.int64)
    b = 4
    s = on_build(a, b=b)
    n = len(a)
    groups = {}
    for blk in range((n + b - 1) // b):
        groups.setdefault(int(s.row_idx[blk]), []).append(blk)
    for blocks in groups.values():
        offs = []
        for blk in blocks:
            start = blk * b
            end = min(start + b, n)
            offs.append([rmq_oracle(a.tolist(), [(start + i, start + j)])[0] - start
                         for i in range(end - start) for j in range(i, end - start)])
        assert all(o == offs[0] for o in offs)


def test_on_rmq_example(kern):
    a = np.array(EXAMPLE_A, dtype=np.int64)
    assert [int(x) for x in on_rmq(a, EXAMPLE_Q)] == EXAMPLE_ANS
    assert list(on_rmq(a, [])) == []


def test_on_rmq_con_example(kern):
    a = np.array(EXAMPLE_A, dtype=np.int64)
    keep = a.copy()
    assert [int(x) for x in on_rmq_con(a, EXAMPLE_Q)] == EXAMPLE_ANS
    assert np.array_equal(a, keep)
    assert list(on_rmq_con(a, [])) == []


def test_on_rmq_con_large_random(kern, rng):
    a = rng.integers(0, 1000, size=100_000).astype(np.int64)
    keep = a.copy()
    queries = random_queries(rng, 100_000, 316)
    want = [int(x) for x in on_rmq(a, queries)]
    got = [int(x) for x in on_rmq_con(a, queries)]
    assert got == want
    assert np.array_equal(a, keep)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-10, 10), min_size=1, max_size=80), st.data())
def test_on_variants_agree_property(vals, data):
    n = len(vals)
    q = data.draw(st.integers(1, 10))
    queries = []
    for _ in range(q):
        i = data.draw(st.integers(0, n - 1))
        queries.append((i, data.draw(st.integers(i, n - 1))))
    want = rmq_oracle(vals, queries)

    def run():
        a = np.array(vals, dtype=np.int64)
        full = [int(x) for x in on_rmq(a, queries)]
        conned = [int(x) for x in on_rmq_con(a, queries)]
        assert a.tolist() == vals
        return full, conned

    for full, conned in on_each_backend(run):
        assert full == want
        assert conned == want
