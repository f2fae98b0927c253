"""Sparse-table RMQ, online (ST-RMQ) and batched over a contraction (ST-RMQ_CON).

The online variant precomputes leftmost argmins of every power-of-two window
(O(n log n) time and space) and answers any query with one two-window
combine.  The batched variant never builds that table: it contracts the
array to A_Q, buckets the rewritten queries by floor(log2(j'-i')), and
sweeps k = 0, 1, ... while doubling a single O(q)-size window array D, whose
(value, position) entries are compared lexicographically.  Bucket k is
answered while D is at level k.  Total n + O(q log q) time and O(q) words
beyond the input.
"""

import numpy as np

from . import backend, contraction, rmq_core


class SparseTable:
    """Prebuilt window-argmin table; immutable, safe for concurrent queries."""

    __slots__ = ("a", "levels", "kern")

    def __init__(self, a, levels, kern):
        self.a = a
        self.levels = levels  # levels[k][m] = leftmost argmin of a[m..m+2^k-1]
        self.kern = kern


def st_build(a):
    """Build the full table: O(n log n). The array must not shrink afterwards."""
    if len(a) == 0:
        raise ValueError("cannot build a sparse table over an empty array")
    kern = backend.pick(a)
    return SparseTable(a, kern.st_build(a), kern)


def st_query(t, i, j):
    """Leftmost argmin of a[i..j] in O(1)."""
    n = len(t.a)
    if not 0 <= i <= j < n:
        raise ValueError(f"range ({i},{j}) invalid for array of length {n}")
    return int(t.kern.st_query(t.a, t.levels, i, j))


def st_rmq(a, queries):
    """Build the table, then answer the whole batch: O(n log n + q)."""
    qi, qj = rmq_core.check_queries(len(a), queries)
    if not qi:
        return rmq_core.empty_answers()
    kern = backend.pick(a)
    levels = kern.st_build(a)
    qi, qj = rmq_core.query_arrays(kern, qi, qj)
    out = rmq_core.out_array(kern, len(queries))
    kern.st_query_batch(a, levels, qi, qj, out)
    return np.asarray(out, dtype=np.int64)


def st_rmq_con(a, queries, mu=None):
    """Contract, then answer every bucket while doubling one O(q) window array.

    Queries with i == j are reported on the spot and never enter a bucket.
    Marks `a` during the call and restores it before returning; pass mu
    (a known upper bound on the entries) to skip the find_max scan.
    n + O(q log q) time, O(q) space.
    """
    if len(queries) == 0:
        rmq_core.check_queries(len(a), queries)
        return rmq_core.empty_answers()
    kern = backend.pick(a)
    con = contraction.contract(a, queries, mu)
    try:
        out = rmq_core.out_array(kern, len(queries))
        kern.doubling_batch(con.a_q, con.ri, con.rj, out)
    finally:
        contraction.restore(a, con)
    f = np.asarray(con.f, dtype=np.int64)
    return f[np.asarray(out, dtype=np.int64)]
