"""Oracles, instrumentation, and input builders shared by the test modules."""

import numpy as np

from rmqbatch import backend
from rmqbatch.cartesian_offline import LabeledTree

# worked example used across modules: array, queries, expected answers
EXAMPLE_A = [17, 22, 38, 4, 5, 8, 2, 8, 9, 21, 0, 12, 8, 7, 13, 3, 6, 14, 1, 36, 0, 4]
EXAMPLE_Q = [(4, 18), (0, 6), (6, 10)]
EXAMPLE_ANS = [10, 6, 10]


class CountingArray:
    """Sequence wrapper that counts element reads and writes."""

    def __init__(self, data):
        self.data = list(data)
        self.reads = 0
        self.writes = 0

    def __len__(self):
        return len(self.data)

    def __getitem__(self, idx):
        self.reads += 1
        return self.data[idx]

    def __setitem__(self, idx, value):
        self.writes += 1
        self.data[idx] = value


def rmq_oracle(a, queries):
    """Independent linear-scan minimum, leftmost index on ties."""
    out = []
    for i, j in queries:
        best = i
        for k in range(i + 1, j + 1):
            if a[k] < a[best]:
                best = k
        out.append(best)
    return out


def lca_oracle(parent, queries):
    """Climb both nodes to the root and intersect the paths."""
    out = []
    for u, v in queries:
        seen = set()
        x = int(u)
        while x != -1:
            seen.add(x)
            x = int(parent[x])
        y = int(v)
        while y not in seen:
            y = int(parent[y])
        out.append(y)
    return out


def available_backends():
    names = ["py"]
    if backend.compiled_available():
        names.append("c")
    return names


def on_each_backend(fn):
    """Run fn() under every built backend and return the list of results."""
    results = []
    for name in available_backends():
        prev = backend.use(name)
        try:
            results.append(fn())
        finally:
            backend.use(prev)
    return results


def random_queries(rng, n, q):
    qi = rng.integers(0, n, size=q)
    qj = rng.integers(0, n, size=q)
    lo = np.minimum(qi, qj)
    hi = np.maximum(qi, qj)
    return list(zip(lo.tolist(), hi.tolist()))


def random_attach_tree(rng, n):
    """Each node v >= 1 picks a uniformly random earlier node as parent."""
    parent = np.full(n, -1, dtype=np.int64)
    for v in range(1, n):
        parent[v] = int(rng.integers(0, v))
    return LabeledTree.from_parents(parent)


def path_tree(n):
    parent = np.arange(-1, n - 1, dtype=np.int64)
    return LabeledTree.from_parents(parent)


def star_tree(n):
    parent = np.zeros(n, dtype=np.int64)
    parent[0] = -1
    return LabeledTree.from_parents(parent)
