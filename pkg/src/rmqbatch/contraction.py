"""Array contraction: the O(q)-space core shared by every *_CON algorithm.

``contract`` marks the 2q query endpoints in place with values above the
array maximum mu, then builds in one more scan a contracted array A_Q of at
most min(n, 4q+1) entries together with the position map f back into A:
marked entries keep their original values, and every maximal block of
unmarked entries collapses to its leftmost minimum.  Queries are rewritten
into A_Q coordinates on the fly, so a range-minimum answer p in A_Q maps to
the answer f(p) in A.

The input array is left in the marked state; call ``restore`` to put the
saved values back (bit-exact).  The caller must hold exclusive access to the
array for the contract -> restore window; a ContractedArray itself is
immutable and safe to share.
"""

import numpy as np

from . import backend, rmq_core

INT64_MAX = np.iinfo(np.int64).max


class ContractedArray:
    """Result of ``contract``: A_Q, the map f, and the rewritten queries.

    Invariants: f is strictly increasing; a_q[p] equals the original A[f[p]];
    len(a_q) <= min(n, 4q+1); for query t, f[ri[t]] == i_t and f[rj[t]] == j_t.
    """

    __slots__ = ("a_q", "f", "ri", "rj", "mu", "mark_pos", "mark_val")

    def __init__(self, a_q, f, ri, rj, mu, mark_pos, mark_val):
        self.a_q = a_q
        self.f = f
        self.ri = ri        # remapped left endpoints, batch order
        self.rj = rj        # remapped right endpoints
        self.mu = mu
        self.mark_pos = mark_pos  # marked positions of A, in marking order
        self.mark_val = mark_val  # their saved original values (Z0 content)

    @property
    def n_q(self):
        return len(self.a_q)

    @property
    def remapped(self):
        """The queries in A_Q coordinates, as (i', j') pairs."""
        return [(int(i), int(j)) for i, j in zip(self.ri, self.rj)]

    @property
    def marks(self):
        """Marked original positions with their saved values."""
        return [(int(p), int(v)) for p, v in zip(self.mark_pos, self.mark_val)]


def find_max(a):
    """Maximum entry mu of the array, one left-to-right pass."""
    return int(backend.pick(a).find_max(a))


def contract(a, queries, mu=None):
    """Mark `a` in place and return its ContractedArray.

    mu, when given, is trusted to be >= the true maximum (the classic case
    passes the exact maximum, e.g. known a priori for an LCP array); that
    skips the find_max pass, so `a` is scanned only once.  Rejects empty
    batches and batches whose marks mu+1..mu+2q would not fit the signed
    64-bit word.
    """
    n = len(a)
    qi, qj = rmq_core.check_queries(n, queries)
    q = len(qi)
    if q == 0:
        raise ValueError("cannot contract around an empty batch")
    if isinstance(a, np.ndarray) and a.dtype != np.int64:
        raise TypeError(f"need an int64 array for in-place marks, got {a.dtype}")
    kern = backend.pick(a)
    if mu is None:
        mu = int(kern.find_max(a))
    else:
        mu = int(mu)
    if mu > INT64_MAX - 2 * q:
        raise ValueError(
            f"marks mu+1..mu+2q overflow the 64-bit word (mu={mu}, q={q})")
    qi, qj = rmq_core.query_arrays(kern, qi, qj)
    aq, f, ri, rj, mark_pos, mark_val = kern.contract(a, qi, qj, mu)
    return ContractedArray(aq, f, ri, rj, mu, mark_pos, mark_val)


def map_answer(con, p):
    """Original-array position f(p) of the contracted position p."""
    if not 0 <= p < con.n_q:
        raise IndexError(f"contracted position {p} out of range [0, {con.n_q})")
    return int(con.f[p])


def restore(a, con):
    """Undo the marks: writes a[f[p]] = a_q[p] for every p, O(q) time."""
    backend.pick(a).restore(a, con.f, con.a_q)
