"""Cartesian trees and offline LCA, composed into OFF-RMQ / OFF-RMQ_CON.

The Cartesian tree of an array has the leftmost minimum of every subrange as
that subrange's root, so RMQ(i, j) is the LCA of the nodes at positions i
and j.  The offline LCA pass is Tarjan's union-find algorithm (union by
rank + path compression): one DFS, answering each query when its second
endpoint finishes.  That is O((n+q) alpha(n)) rather than the truly linear
bound of the fancier offline algorithms; at any practical size the
difference is invisible, and the batch semantics are identical.
"""

import numpy as np

from . import backend, contraction, rmq_core


class CartesianTree:
    """Position-indexed binary tree; -1 is the no-child/no-parent sentinel."""

    __slots__ = ("parent", "left", "right", "root")

    def __init__(self, parent, left, right, root):
        self.parent = parent
        self.left = left
        self.right = right
        self.root = root

    def __len__(self):
        return len(self.parent)


class LabeledTree:
    """Rooted tree with nodes 0..n-1: parent array, first-child/next-sibling
    child lists, and a mutable label array (identity until a batch marks it).

    Arrays are int64 ndarrays so both kernel backends can walk them in place.
    """

    __slots__ = ("n", "root", "parent", "fc", "ns", "lab")

    def __init__(self, parent, root, fc, ns):
        self.n = len(parent)
        self.root = root
        self.parent = parent
        self.fc = fc
        self.ns = ns
        self.lab = np.arange(self.n, dtype=np.int64)

    @classmethod
    def from_parents(cls, parent, validate=True):
        """Build from a parent array (root entry -1, children sorted by index)."""
        parent = np.asarray(parent, dtype=np.int64)
        n = len(parent)
        roots = np.flatnonzero(parent == -1)
        if validate:
            if len(roots) != 1:
                raise ValueError(f"need exactly one root (-1 entry), found {len(roots)}")
            bad = np.flatnonzero((parent < -1) | (parent >= n))
            if len(bad):
                raise ValueError(f"node {bad[0]}: parent {parent[bad[0]]} out of range")
        if len(roots) == 0:
            raise ValueError("need exactly one root (-1 entry), found 0")
        root = int(roots[0])
        fc = np.full(n, -1, dtype=np.int64)
        ns = np.full(n, -1, dtype=np.int64)
        kids = np.flatnonzero(parent >= 0)
        if len(kids):
            # stable sort by parent keeps each child list in ascending order
            order = kids[np.argsort(parent[kids], kind="stable")]
            ps = parent[order]
            head = np.empty(len(order), dtype=bool)
            head[0] = True
            head[1:] = ps[1:] != ps[:-1]
            fc[ps[head]] = order[head]
            within = ~head[1:]
            ns[order[:-1][within]] = order[1:][within]
        tree = cls(parent, root, fc, ns)
        if validate:
            depth = np.full(n, -1, dtype=np.int64)
            depth[root] = 0
            for v in range(n):
                chain = []
                u = v
                while depth[u] < 0:
                    chain.append(u)
                    u = int(parent[u])
                    if len(chain) > n:
                        raise ValueError("parent array contains a cycle")
                d = int(depth[u])
                for w in reversed(chain):
                    d += 1
                    depth[w] = d
        return tree


def check_node_queries(n, queries):
    """Validate (u, v) node pairs; order-free, unlike array ranges."""
    qu = []
    qv = []
    for t, (u, v) in enumerate(queries):
        u = int(u)
        v = int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"query {t}: nodes ({u},{v}) outside 0..{n - 1}")
        qu.append(u)
        qv.append(v)
    return qu, qv


def cartesian_build(a):
    """O(n) stack construction; ties chain right, so subrange roots are the
    leftmost minima."""
    if len(a) == 0:
        raise ValueError("cannot build a Cartesian tree over an empty array")
    parent, left, right, root = backend.pick(a).cartesian_build(a)
    return CartesianTree(parent, left, right, root)


def offline_lca(tree, queries):
    """All LCAs of a batch of node pairs in one DFS over the tree.

    Read-only on the tree; answers are node indices in batch order.
    """
    qu, qv = check_node_queries(tree.n, queries)
    if not qu:
        return rmq_core.empty_answers()
    kern = backend.pick(tree.parent)
    qu, qv = rmq_core.query_arrays(kern, qu, qv)
    out = rmq_core.out_array(kern, len(queries))
    kern.offline_lca(tree.n, tree.root, tree.fc, tree.ns, qu, qv, out)
    return np.asarray(out, dtype=np.int64)


def off_rmq(a, queries):
    """Cartesian tree + offline LCA on the full array: O((n+q) alpha)."""
    qi, qj = rmq_core.check_queries(len(a), queries)
    if not qi:
        return rmq_core.empty_answers()
    kern = backend.pick(a)
    parent, left, right, root = kern.cartesian_build(a)
    fc, ns = kern.binary_to_fcns(parent, left, right)
    qi, qj = rmq_core.query_arrays(kern, qi, qj)
    out = rmq_core.out_array(kern, len(queries))
    kern.offline_lca(len(a), root, fc, ns, qi, qj, out)
    return np.asarray(out, dtype=np.int64)


def off_rmq_con(a, queries, mu=None):
    """Contract first, then Cartesian tree + offline LCA on A_Q:
    n + O(q alpha(q)) time, O(q) space.  Restores `a` before returning."""
    if len(queries) == 0:
        rmq_core.check_queries(len(a), queries)
        return rmq_core.empty_answers()
    kern = backend.pick(a)
    con = contraction.contract(a, queries, mu)
    try:
        parent, left, right, root = kern.cartesian_build(con.a_q)
        fc, ns = kern.binary_to_fcns(parent, left, right)
        out = rmq_core.out_array(kern, len(queries))
        kern.offline_lca(con.n_q, root, fc, ns, con.ri, con.rj, out)
    finally:
        contraction.restore(a, con)
    f = np.asarray(con.f, dtype=np.int64)
    return f[np.asarray(out, dtype=np.int64)]
