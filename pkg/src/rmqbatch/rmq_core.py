"""Shared query validation and the brute-force baselines.

A value array is any mutable sequence of signed 64-bit integers: a plain
list or a 1-D ``numpy.int64`` ndarray.  A query batch is a sequence of
``(i, j)`` index pairs with ``0 <= i <= j < n``; answers come back as an
``int64`` ndarray in batch order, each entry the LEFTMOST position of the
range minimum.  Every other algorithm in the package is tested against
:func:`bf_rmq`.
"""

import numpy as np

from . import backend


def check_queries(n, queries):
    """Validate a batch against an array of length n.

    Returns the endpoints as two int lists.  Raises ValueError naming the
    ordinal of the first malformed query.
    """
    qi = []
    qj = []
    for t, (i, j) in enumerate(queries):
        i = int(i)
        j = int(j)
        if not 0 <= i <= j <= n - 1:
            raise ValueError(
                f"query {t}: ({i},{j}) invalid for array of length {n}"
                " (need 0 <= i <= j < n)")
        qi.append(i)
        qj.append(j)
    return qi, qj


def query_arrays(kern, qi, qj):
    """Endpoint lists reshaped for the kernel."""
    if kern.BACKEND == "c":
        return np.asarray(qi, dtype=np.int64), np.asarray(qj, dtype=np.int64)
    return qi, qj


def out_array(kern, q):
    return np.empty(q, dtype=np.int64) if kern.BACKEND == "c" else [0] * q


def empty_answers():
    return np.empty(0, dtype=np.int64)


def bf_rmq(a, queries):
    """Answer each query by a linear scan of a[i..j].  A is not modified."""
    qi, qj = check_queries(len(a), queries)
    if not qi:
        return empty_answers()
    kern = backend.pick(a)
    qi, qj = query_arrays(kern, qi, qj)
    out = out_array(kern, len(qi))
    kern.bf_batch(a, qi, qj, out)
    return np.asarray(out, dtype=np.int64)


def bf_rmq_con(a, queries, mu=None):
    """bf_rmq over the contracted array: n + O(q^2) time, O(q) space.

    Marks `a` in place during the call and restores it before returning.
    """
    from . import contraction

    if len(queries) == 0:
        check_queries(len(a), queries)
        return empty_answers()
    kern = backend.pick(a)
    con = contraction.contract(a, queries, mu)
    try:
        out = out_array(kern, len(con.ri))
        kern.bf_batch(con.a_q, con.ri, con.rj, out)
    finally:
        contraction.restore(a, con)
    f = np.asarray(con.f, dtype=np.int64)
    return f[np.asarray(out, dtype=np.int64)]
