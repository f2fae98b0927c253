"""Longest-common-extension demo: batched RMQ over an LCP array.

LCE(i, j) of a text is the length of the longest common prefix of the
suffixes starting at i and j, which equals the minimum of the LCP array over
the rank interval between the two suffixes.  A batch of LCE queries is
therefore one ST-RMQ_CON batch -- and because every LCP value is below the
text length n, mu = n can be passed a priori, so the contraction scans the
LCP array only once.

The suffix array is built by prefix doubling (O(n log^2 n), plenty at demo
scale) and the LCP array by the usual rank-walk; texts are treated as bytes.
"""

import numpy as np

from . import sparse_table


class SuffixLcp:
    """text with its suffix array, rank (inverse) array, and LCP array;
    lcp[r] = common prefix length of the suffixes at ranks r-1 and r,
    lcp[0] = 0.  Keeps a private mutable LCP copy for contraction."""

    __slots__ = ("text", "sa", "rank", "lcp", "_work")

    def __init__(self, text, sa, rank, lcp):
        self.text = text
        self.sa = sa
        self.rank = rank
        self.lcp = lcp
        self._work = lcp.copy()


def _suffix_array(s):
    n = len(s)
    rank = list(s)
    sa = list(range(n))
    tmp = [0] * n
    k = 1
    while True:
        def key(i):
            return (rank[i], rank[i + k] if i + k < n else -1)
        sa.sort(key=key)
        tmp[sa[0]] = 0
        for t in range(1, n):
            tmp[sa[t]] = tmp[sa[t - 1]] + (key(sa[t]) != key(sa[t - 1]))
        rank, tmp = tmp[:], rank
        if rank[sa[-1]] == n - 1:
            return sa, rank
        k *= 2


def _lcp_kasai(s, sa, rank):
    n = len(s)
    lcp = [0] * n
    h = 0
    for i in range(n):
        r = rank[i]
        if r == 0:
            h = 0
            continue
        j = sa[r - 1]
        while i + h < n and j + h < n and s[i + h] == s[j + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return lcp


def build_suffix_lcp(text):
    """Suffix + LCP arrays for a nonempty text (str is encoded as UTF-8;
    positions and lengths are in bytes)."""
    if isinstance(text, str):
        text = text.encode()
    if len(text) == 0:
        raise ValueError("empty text")
    sa, rank = _suffix_array(text)
    lcp = _lcp_kasai(text, sa, rank)
    return SuffixLcp(text,
                     np.asarray(sa, dtype=np.int64),
                     np.asarray(rank, dtype=np.int64),
                     np.asarray(lcp, dtype=np.int64))


def lce_batch(s, pairs):
    """LCE lengths for a batch of (i, j) text positions.

    i == j answers n-i on the spot; the rest become one contracted RMQ batch
    over the LCP array with mu = n supplied, i.e. a single scan.
    """
    n = len(s.text)
    res = np.empty(len(pairs), dtype=np.int64)
    sub = []
    subpos = []
    for t, (i, j) in enumerate(pairs):
        i = int(i)
        j = int(j)
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"query {t}: positions ({i},{j}) outside 0..{n - 1}")
        if i == j:
            res[t] = n - i
        else:
            ra = int(s.rank[i])
            rb = int(s.rank[j])
            if ra > rb:
                ra, rb = rb, ra
            sub.append((ra + 1, rb))
            subpos.append(t)
    if sub:
        idx = sparse_table.st_rmq_con(s._work, sub, mu=n)
        res[subpos] = s.lcp[idx]
    return res
