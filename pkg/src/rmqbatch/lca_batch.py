"""Batched LCA by tree contraction: mark, one DFS, then a batch RMQ.

The 2q query nodes are marked by relabelling them with n, n+1, ...; the
original labels go to a table Z0 indexed by mark slot, and each mark keeps
the list of query endpoints that reference it (Z1).  A single DFS then emits
a CONTRACTED Euler tour: the first visitation of a marked node contributes
its own (label, depth) entry and rewrites its queries to that position;
every other visitation, unmarked or a re-visit of a marked node, folds into
a maximal run contributing one (label, min depth) entry.  LCA(u, v) is then
E_Q at the argmin of L_Q between the rewritten endpoints.  The tour arrays
have at most 4q+1 entries, depth is carried incrementally, and the DFS walks
parent pointers instead of keeping a stack, so everything beyond the tree
itself is O(q).

ST-LCA_CON answers the RMQ batch with the bucket/doubling engine
(n + O(q log q) total), ON-LCA_CON with the block structure (n + O(q));
OFF-LCA runs union-find directly on the full tree, the better choice once q
grows to a constant fraction of n.
"""

import numpy as np

from . import backend, cartesian_offline, online_rmq, rmq_core

INT64_MAX = np.iinfo(np.int64).max


class MarkTables:
    """Saved original labels (z0) and per-mark endpoint chains (z1);
    counter marks issued, marked the relabelled node indices."""

    __slots__ = ("z0", "z1head", "z1next", "counter", "marked", "kern")

    def __init__(self, z0, z1head, z1next, counter, marked, kern):
        self.z0 = z0
        self.z1head = z1head
        self.z1next = z1next
        self.counter = counter
        self.marked = marked
        self.kern = kern


class EulerContraction:
    """Contracted tour arrays plus the rewritten first-occurrence endpoints."""

    __slots__ = ("e_q", "l_q", "ri", "rj", "marks", "edge_visits")

    def __init__(self, e_q, l_q, ri, rj, marks, edge_visits):
        self.e_q = e_q
        self.l_q = l_q
        self.ri = ri
        self.rj = rj
        self.marks = marks              # the MarkTables, kept for restoration
        self.edge_visits = edge_visits  # DFS edge traversals, always 2(n-1)

    @property
    def remapped(self):
        return [(int(u), int(v)) for u, v in zip(self.ri, self.rj)]


def mark_nodes(tree, queries):
    """Relabel the distinct query nodes in place with n, n+1, ...

    Rejects empty batches and label spaces where n-1+2q would overflow the
    signed 64-bit word.  Undo with unmark_nodes.
    """
    qu, qv = cartesian_offline.check_node_queries(tree.n, queries)
    q = len(qu)
    if q == 0:
        raise ValueError("cannot mark an empty batch")
    if tree.n - 1 > INT64_MAX - 2 * q:
        raise ValueError(f"marks n..n-1+2q overflow the 64-bit word (n={tree.n}, q={q})")
    kern = backend.pick(tree.lab)
    qu, qv = rmq_core.query_arrays(kern, qu, qv)
    z0, z1head, z1next, counter, marked = kern.lca_mark(tree.lab, qu, qv, tree.n)
    return MarkTables(z0, z1head, z1next, counter, marked, kern)


def unmark_nodes(tree, marks):
    """Put the original labels back (bit-exact round trip)."""
    marks.kern.unmark_labels(tree.lab, marks.marked)


def euler_contract(tree, queries, marks):
    """The single DFS over a marked tree; see the module docstring."""
    q = len(queries)
    kern = marks.kern
    ri = rmq_core.out_array(kern, q)
    rj = rmq_core.out_array(kern, q)
    e_q, l_q, edges = kern.euler_contract(
        tree.n, tree.root, tree.fc, tree.ns, tree.parent, tree.lab,
        marks.z0, marks.z1head, marks.z1next, q, ri, rj)
    return EulerContraction(e_q, l_q, ri, rj, marks, edges)


def _ordered(kern, ri, rj):
    """First-occurrence positions as (lo, hi) RMQ endpoints."""
    if kern.BACKEND == "c":
        return np.minimum(ri, rj), np.maximum(ri, rj)
    lo = [0] * len(ri)
    hi = [0] * len(ri)
    for t in range(len(ri)):
        u, v = ri[t], rj[t]
        if u > v:
            u, v = v, u
        lo[t] = u
        hi[t] = v
    return lo, hi


def _lca_con(tree, queries, answer_batch):
    if len(queries) == 0:
        cartesian_offline.check_node_queries(tree.n, queries)
        return rmq_core.empty_answers()
    marks = mark_nodes(tree, queries)
    try:
        ec = euler_contract(tree, queries, marks)
    finally:
        unmark_nodes(tree, marks)
    kern = marks.kern
    lo, hi = _ordered(kern, ec.ri, ec.rj)
    out = rmq_core.out_array(kern, len(queries))
    answer_batch(kern, ec.l_q, lo, hi, out)
    e_q = np.asarray(ec.e_q, dtype=np.int64)
    return e_q[np.asarray(out, dtype=np.int64)]


def st_lca_con(tree, queries):
    """Mark -> DFS -> bucket/doubling RMQ over L_Q: n + O(q log q) time,
    O(q) space beyond the tree.  Labels restored before returning."""
    def answer(kern, l_q, lo, hi, out):
        kern.doubling_batch(l_q, lo, hi, out)
    return _lca_con(tree, queries, answer)


def on_lca_con(tree, queries):
    """Mark -> DFS -> block-structure RMQ over L_Q: n + O(q) time,
    O(q) space beyond the tree.  Labels restored before returning."""
    def answer(kern, l_q, lo, hi, out):
        row_idx, rows, bmin_val, bmin_pos = kern.block_build(l_q, online_rmq.BLOCK)
        levels = kern.st_build(bmin_val)
        kern.on_query_batch(l_q, online_rmq.BLOCK, row_idx, rows, bmin_val,
                            bmin_pos, levels, lo, hi, out)
    return _lca_con(tree, queries, answer)


def off_lca(tree, queries):
    """Union-find LCA straight on the full tree: O(n + q) time, O(n) space."""
    return cartesian_offline.offline_lca(tree, queries)


def lca_queries(tree, queries, off_threshold=0.25):
    """Pick the better algorithm for the batch size: the contraction pipeline
    while q is small next to n, OFF-LCA once q >= off_threshold * n."""
    if len(queries) >= off_threshold * tree.n:
        return off_lca(tree, queries)
    return st_lca_con(tree, queries)


def save_tree(tree, path):
    """Write the n / "child parent" line format; requires root node 0."""
    if tree.root != 0:
        raise ValueError("tree file format requires the root to be node 0")
    with open(path, "w") as fh:
        fh.write(f"{tree.n}\n")
        for v in range(1, tree.n):
            fh.write(f"{v} {int(tree.parent[v])}\n")


def load_tree(path):
    """Read the format written by save_tree: first line n, then n-1 lines
    "child parent"; node 0 is the root."""
    with open(path) as fh:
        n = int(fh.readline())
        if n < 1:
            raise ValueError("tree must have at least one node")
        parent = np.full(n, -1, dtype=np.int64)
        seen = np.zeros(n, dtype=bool)
        for _ in range(n - 1):
            c, p = fh.readline().split()
            c = int(c)
            p = int(p)
            if not (1 <= c < n and 0 <= p < n):
                raise ValueError(f"bad edge line: {c} {p}")
            if seen[c]:
                raise ValueError(f"node {c} listed twice")
            seen[c] = True
            parent[c] = p
    return cartesian_offline.LabeledTree.from_parents(parent)
