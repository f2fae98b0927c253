"""Block-decomposition RMQ with O(n) build and O(1) queries (ON-RMQ),
plus its batched contraction variant (ON-RMQ_CON).

The array is cut into blocks of b = 8.  Each block gets a 2b-bit ballot
signature: the push/pop sequence (push = 1, pop = 0) of the left-to-right
stack simulation of its treap shape, a trailing partial block padded as if
extended with +inf.  Blocks with equal signatures answer every in-block
range with the same offsets, so one b(b+1)/2-entry answer table is built per
DISTINCT signature only.  Queries spanning blocks combine an in-block
suffix, an in-block prefix, and a sparse-table lookup over the per-block
minima: at most 3 table reads plus one O(1) table query.

This stands in for the succinct structure usually cited for O(n)/O(1) RMQ;
same asymptotics, plainer constants (the benchmark labels it "block-FH").
"""

import numpy as np

from . import backend, contraction, rmq_core

BLOCK = 8


class BlockRmq:
    """Immutable after build; concurrent queries are safe."""

    __slots__ = ("a", "b", "row_idx", "rows", "bmin_val", "bmin_pos",
                 "levels", "kern")

    def __init__(self, a, b, row_idx, rows, bmin_val, bmin_pos, levels, kern):
        self.a = a
        self.b = b
        self.row_idx = row_idx    # block -> row in `rows`
        self.rows = rows          # one in-block answer table per signature
        self.bmin_val = bmin_val  # per-block minimum value
        self.bmin_pos = bmin_pos  # its leftmost position in `a`
        self.levels = levels      # sparse table over bmin_val
        self.kern = kern


def on_build(a, b=BLOCK):
    """O(n) for fixed b; signature tables are finished here, never at query
    time."""
    if len(a) == 0:
        raise ValueError("cannot build over an empty array")
    kern = backend.pick(a)
    row_idx, rows, bmin_val, bmin_pos = kern.block_build(a, b)
    levels = kern.st_build(bmin_val)
    return BlockRmq(a, b, row_idx, rows, bmin_val, bmin_pos, levels, kern)


def on_query(s, i, j):
    """Leftmost argmin of a[i..j] in O(1)."""
    n = len(s.a)
    if not 0 <= i <= j < n:
        raise ValueError(f"range ({i},{j}) invalid for array of length {n}")
    return int(s.kern.on_query(s.a, s.b, s.row_idx, s.rows, s.bmin_val,
                               s.bmin_pos, s.levels, i, j))


def on_rmq(a, queries):
    """Build the block structure, answer the batch: O(n + q)."""
    qi, qj = rmq_core.check_queries(len(a), queries)
    if not qi:
        return rmq_core.empty_answers()
    s = on_build(a)
    qi, qj = rmq_core.query_arrays(s.kern, qi, qj)
    out = rmq_core.out_array(s.kern, len(queries))
    s.kern.on_query_batch(a, s.b, s.row_idx, s.rows, s.bmin_val, s.bmin_pos,
                          s.levels, qi, qj, out)
    return np.asarray(out, dtype=np.int64)


def on_rmq_con(a, queries, mu=None):
    """Contract, then build the block structure over A_Q only:
    n + O(q) time, O(q) space.  Restores `a` before returning."""
    if len(queries) == 0:
        rmq_core.check_queries(len(a), queries)
        return rmq_core.empty_answers()
    kern = backend.pick(a)
    con = contraction.contract(a, queries, mu)
    try:
        s = on_build(con.a_q)
        out = rmq_core.out_array(kern, len(queries))
        s.kern.on_query_batch(con.a_q, s.b, s.row_idx, s.rows, s.bmin_val,
                              s.bmin_pos, s.levels, con.ri, con.rj, out)
    finally:
        contraction.restore(a, con)
    f = np.asarray(con.f, dtype=np.int64)
    return f[np.asarray(out, dtype=np.int64)]
