"""Benchmark harness and command line interface.

Generates seeded inputs, times the RMQ and LCA variants on identical data,
cross-checks their answers by checksum, and writes CSV rows with the schema
``algo,n,q,seed,rep,elapsed_ns``.
"""

import argparse
import csv
import math
import os
import statistics
import time
import zlib
from dataclasses import dataclass

import numpy as np

from . import backend
from .cartesian_offline import LabeledTree, off_rmq, off_rmq_con
from .lca_batch import load_tree, off_lca, on_lca_con, save_tree, st_lca_con
from .lce_demo import build_suffix_lcp, lce_batch
from .online_rmq import on_rmq, on_rmq_con
from .rmq_core import bf_rmq, bf_rmq_con
from .sparse_table import st_rmq, st_rmq_con

GENERATOR = "numpy-pcg64"  # recorded in CSV output for provenance
DEFAULT_SEED = 1
CSV_HEADER = ["algo", "n", "q", "seed", "rep", "elapsed_ns"]

RMQ_ALGOS = {
    "bf": bf_rmq,
    "bf-con": bf_rmq_con,
    "st": st_rmq,
    "st-con": st_rmq_con,
    "on": on_rmq,
    "on-con": on_rmq_con,
    "off": off_rmq,
    "off-con": off_rmq_con,
}
LCA_ALGOS = {
    "off": off_lca,
    "st-con": st_lca_con,
    "on-con": on_lca_con,
}


def default_seed():
    env = os.environ.get("RMQBATCH_SEED")
    return int(env) if env else DEFAULT_SEED


def gen_array(n, seed):
    """Uniform random values in [0, 2**31) as an int64 array."""
    if n <= 0:
        raise ValueError("n must be positive")
    rng = np.random.default_rng(seed)
    return rng.integers(0, 2 ** 31, size=n, dtype=np.int64)


def gen_queries(n, q, seed):
    """q index pairs drawn uniformly from all (i, j) with 0 <= i <= j < n.

    Draws a rank in [0, n*(n+1)/2) and inverts the row-major enumeration
    of pairs, so every valid pair is equally likely (with replacement).
    """
    if n <= 0:
        raise ValueError("n must be positive")
    if q < 0:
        raise ValueError("q must be nonnegative")
    rng = np.random.default_rng(seed)
    total = n * (n + 1) // 2
    ranks = rng.integers(0, total, size=q, dtype=np.int64)
    out = []
    for t in ranks:
        t = int(t)
        # row i starts at rank S(i) = i*(2n - i + 1)/2; isqrt is exact,
        # the fix-up loops run at most once
        i = (2 * n + 1 - math.isqrt((2 * n + 1) ** 2 - 8 * t)) // 2
        while i * (2 * n - i + 1) // 2 > t:
            i -= 1
        while (i + 1) * (2 * n - i) // 2 <= t:
            i += 1
        out.append((i, i + t - i * (2 * n - i + 1) // 2))
    return out


def gen_tree(n, seed):
    """Cartesian tree of a random array, relabeled so preorder is 0..n-1.

    The relabeling makes the root node 0 and gives parent pointers a
    cache-friendly layout, matching the on-disk tree format.
    """
    a = gen_array(n, seed)
    kern = backend.pick(a)
    parent, left, right, root = kern.cartesian_build(a)
    fc, ns = kern.binary_to_fcns(parent, left, right)
    order = np.asarray(kern.preorder(n, int(root), fc, ns, parent), dtype=np.int64)
    parent = np.asarray(parent, dtype=np.int64)
    new_id = np.empty(n, dtype=np.int64)
    new_id[order] = np.arange(n, dtype=np.int64)
    newp = np.full(n, -1, dtype=np.int64)
    mask = parent >= 0
    newp[new_id[mask]] = new_id[parent[mask]]
    return LabeledTree.from_parents(newp, validate=False)


def checksum(answers):
    return zlib.crc32(np.asarray(answers, dtype=np.int64).tobytes())


@dataclass
class BenchRecord:
    algo: str
    n: int
    q: int
    seed: int
    rep: int
    elapsed_ns: int
    checksum: int = 0

    def row(self):
        return [self.algo, self.n, self.q, self.seed, self.rep, self.elapsed_ns]


@dataclass
class BenchConfig:
    """One benchmark campaign: input size, query schedule, algorithms."""

    n: int
    seed: int = DEFAULT_SEED
    qs: list = None  # None: sqrt(n) to 128*sqrt(n), doubling
    algos: list = None  # None: every algorithm the runner knows
    reps: int = 5
    out: str = None

    def __post_init__(self):
        if self.n <= 0:
            raise ValueError("n must be positive")
        if self.reps < 1:
            raise ValueError("reps must be >= 1")
        total = self.n * (self.n + 1) // 2
        if self.qs is None:
            base = max(1, math.isqrt(self.n))
            self.qs = [base << i for i in range(8) if base << i <= total]
        else:
            for q in self.qs:
                if not 0 <= q <= total:
                    raise ValueError("q=%d out of range for n=%d" % (q, self.n))


def _check_names(algos, table):
    for name in algos:
        if name not in table:
            raise ValueError(
                "unknown algorithm: %s (choose from %s)" % (name, ",".join(table)))
    if not algos:
        raise ValueError("no algorithms given")


def _time_cell(table, algos, cfg, data, queries, q, records):
    """Time every algorithm on one (data, queries) cell and cross-check."""
    crcs = {}
    for name in algos:
        fn = table[name]
        ans = None
        for rep in range(cfg.reps):
            t0 = time.perf_counter_ns()
            ans = fn(data, queries)
            dt = time.perf_counter_ns() - t0
            records.append(BenchRecord(name, cfg.n, q, cfg.seed, rep, dt))
        crc = checksum(ans)
        for rec in records[-cfg.reps:]:
            rec.checksum = crc
        crcs[name] = crc
    first = algos[0]
    for other in algos[1:]:
        if crcs[other] != crcs[first]:
            raise RuntimeError(
                "answer mismatch between %s and %s at n=%d q=%d seed=%s"
                % (first, other, cfg.n, q, cfg.seed))


def run_rmq(cfg):
    """Time the configured RMQ algorithms over the query schedule."""
    algos = list(cfg.algos) if cfg.algos else list(RMQ_ALGOS)
    _check_names(algos, RMQ_ALGOS)
    a = gen_array(cfg.n, cfg.seed)
    records = []
    for q in cfg.qs:
        queries = gen_queries(cfg.n, q, [cfg.seed, q])
        _time_cell(RMQ_ALGOS, algos, cfg, a, queries, q, records)
    if cfg.out:
        write_csv(records, cfg.out)
    return records


def run_lca(cfg):
    """Time the configured LCA algorithms over the query schedule."""
    algos = list(cfg.algos) if cfg.algos else list(LCA_ALGOS)
    _check_names(algos, LCA_ALGOS)
    tree = gen_tree(cfg.n, cfg.seed)
    records = []
    for q in cfg.qs:
        queries = gen_queries(cfg.n, q, [cfg.seed, q])
        _time_cell(LCA_ALGOS, algos, cfg, tree, queries, q, records)
    if cfg.out:
        write_csv(records, cfg.out)
    return records


def write_csv(records, path):
    with open(path, "w", newline="") as f:
        f.write("# generator=%s\n" % GENERATOR)
        w = csv.writer(f)
        w.writerow(CSV_HEADER)
        for rec in records:
            w.writerow(rec.row())


def median_ns(records, algo, q=None):
    vals = [r.elapsed_ns for r in records
            if r.algo == algo and (q is None or r.q == q)]
    return statistics.median(vals)


def naive_lca(tree, queries):
    """Parent-walk oracle, small inputs only."""
    par = tree.parent
    out = []
    for u, v in queries:
        seen = set()
        x = u
        while x != -1:
            seen.add(x)
            x = int(par[x])
        y = v
        while y not in seen:
            y = int(par[y])
        out.append(y)
    return out


def verify(max_n=4096, max_q=128, seeds=100, seed=None, log=print):
    """Cross-check every RMQ and LCA variant against brute-force oracles."""
    base = default_seed() if seed is None else seed
    rmq_names = [k for k in RMQ_ALGOS if k != "bf"]
    fails = 0
    for s in range(seeds):
        rng = np.random.default_rng([base, s])
        n = int(rng.integers(1, max_n + 1))
        q = int(rng.integers(1, max_q + 1))
        # narrow value range so duplicates exercise the tie-breaks
        a = rng.integers(0, max(2, n // 4) + 1, size=n).astype(np.int64)
        queries = gen_queries(n, q, [base, s, 1])
        want = [int(x) for x in bf_rmq(a, queries)]
        for name in rmq_names:
            got = [int(x) for x in RMQ_ALGOS[name](a, queries)]
            if got != want:
                log("verify FAIL rmq %s seed=%d n=%d q=%d" % (name, s, n, q))
                fails += 1
        tn = int(rng.integers(1, max(2, max_n // 2) + 1))
        tree = gen_tree(tn, [base, s, 2])
        tq = [(int(x), int(y))
              for x, y in zip(rng.integers(0, tn, q), rng.integers(0, tn, q))]
        lwant = naive_lca(tree, tq)
        for name in LCA_ALGOS:
            got = [int(x) for x in LCA_ALGOS[name](tree, tq)]
            if got != lwant:
                log("verify FAIL lca %s seed=%d n=%d q=%d" % (name, s, tn, q))
                fails += 1
    log("verify: %d seeds, %d failures" % (seeds, fails))
    return fails == 0


def bench_backends(n=100000, q=None, reps=5, seed=None, log=print):
    """Median wall time of each contraction pipeline on both backends."""
    if q is None:
        q = max(1, math.isqrt(n))
    base = default_seed() if seed is None else seed
    a = gen_array(n, base)
    queries = gen_queries(n, q, [base, q])
    tree = gen_tree(n, [base, 3])
    jobs = [
        ("st-con", lambda: st_rmq_con(a, queries)),
        ("on-con", lambda: on_rmq_con(a, queries)),
        ("off-con", lambda: off_rmq_con(a, queries)),
        ("st-lca-con", lambda: st_lca_con(tree, queries)),
        ("on-lca-con", lambda: on_lca_con(tree, queries)),
        ("off-lca", lambda: off_lca(tree, queries)),
    ]
    avail = ["py"] + (["c"] if backend.compiled_available() else [])
    log("backend benchmark: n=%d q=%d reps=%d (median ns)" % (n, q, reps))
    results = {}
    for name, fn in jobs:
        times = {}
        for b in avail:
            prev = backend.use(b)
            try:
                samples = []
                for _ in range(reps):
                    t0 = time.perf_counter_ns()
                    fn()
                    samples.append(time.perf_counter_ns() - t0)
            finally:
                backend.use(prev)
            times[b] = int(statistics.median(samples))
        results[name] = times
        if "c" in times:
            log("  %-12s py %12d   c %12d   speedup %5.1fx"
                % (name, times["py"], times["c"], times["py"] / times["c"]))
        else:
            log("  %-12s py %12d   (compiled backend unavailable)"
                % (name, times["py"]))
    return results


def save_array(a, path, text=False):
    a = np.asarray(a, dtype=np.int64)
    if text:
        np.savetxt(path, a, fmt="%d")
    else:
        with open(path, "wb") as f:
            f.write(a.astype("<i8").tobytes())


def load_array(path, text=False):
    if text:
        return np.loadtxt(path, dtype=np.int64, ndmin=1)
    return np.fromfile(path, dtype="<i8").astype(np.int64)


def save_queries(queries, path):
    with open(path, "w") as f:
        for i, j in queries:
            f.write("%d %d\n" % (i, j))


def load_queries(path):
    out = []
    with open(path) as f:
        for line in f:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            i, j = line.split()
            out.append((int(i), int(j)))
    return out


def _parse_algos(text, table):
    names = [t.strip() for t in text.split(",") if t.strip()]
    try:
        _check_names(names, table)
    except ValueError as exc:
        raise SystemExit(str(exc))
    return names


def _add_seed(p):
    p.add_argument("--seed", type=int, default=None,
                   help="generator seed (default: RMQBATCH_SEED or %d)" % DEFAULT_SEED)


def main(argv=None):
    ap = argparse.ArgumentParser(
        prog="rmqbatch",
        description="batched RMQ/LCA solvers with input contraction")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("gen-array", help="write a random int64 array")
    p.add_argument("--n", type=int, required=True)
    _add_seed(p)
    p.add_argument("--out", required=True)
    p.add_argument("--text", action="store_true",
                   help="one value per line instead of little-endian binary")

    p = sub.add_parser("gen-queries", help="write random index pairs i <= j")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    _add_seed(p)
    p.add_argument("--out", required=True)

    p = sub.add_parser("gen-tree", help="write a random rooted tree")
    p.add_argument("--n", type=int, required=True)
    _add_seed(p)
    p.add_argument("--out", required=True)

    p = sub.add_parser("run", help="time RMQ algorithms on an array file")
    p.add_argument("--algos", required=True,
                   help="comma list from: %s" % ",".join(RMQ_ALGOS))
    p.add_argument("--array", required=True)
    p.add_argument("--queries", required=True)
    p.add_argument("--csv", required=True)
    p.add_argument("--text", action="store_true", help="array file is text")
    p.add_argument("--reps", type=int, default=5)
    _add_seed(p)

    p = sub.add_parser("run-lca", help="time LCA algorithms on a tree file")
    p.add_argument("--algos", required=True,
                   help="comma list from: %s" % ",".join(LCA_ALGOS))
    p.add_argument("--tree", required=True)
    p.add_argument("--queries", required=True)
    p.add_argument("--csv", required=True)
    p.add_argument("--reps", type=int, default=5)
    _add_seed(p)

    p = sub.add_parser("verify", help="cross-check all algorithms against oracles")
    p.add_argument("--max-n", type=int, default=4096)
    p.add_argument("--max-q", type=int, default=128)
    p.add_argument("--seeds", type=int, default=100)
    _add_seed(p)

    p = sub.add_parser("lce", help="longest common extensions of suffix pairs")
    p.add_argument("--text", required=True,
                   help="input text file (one trailing newline ignored)")
    p.add_argument("--queries", required=True, help="lines 'i j' of suffix starts")

    p = sub.add_parser("bench-backends", help="compare compiled and pure backends")
    p.add_argument("--n", type=int, default=100000)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--reps", type=int, default=5)
    _add_seed(p)

    args = ap.parse_args(argv)
    seed = getattr(args, "seed", None)
    if seed is None:
        seed = default_seed()

    if args.cmd == "gen-array":
        save_array(gen_array(args.n, seed), args.out, text=args.text)
    elif args.cmd == "gen-queries":
        save_queries(gen_queries(args.n, args.q, seed), args.out)
    elif args.cmd == "gen-tree":
        save_tree(gen_tree(args.n, seed), args.out)
    elif args.cmd == "run":
        a = load_array(args.array, text=args.text)
        queries = load_queries(args.queries)
        algos = _parse_algos(args.algos, RMQ_ALGOS)
        cfg = BenchConfig(n=len(a), seed=seed, qs=[len(queries)],
                          algos=algos, reps=args.reps)
        records = []
        _time_cell(RMQ_ALGOS, algos, cfg, a, queries, len(queries), records)
        write_csv(records, args.csv)
    elif args.cmd == "run-lca":
        tree = load_tree(args.tree)
        queries = load_queries(args.queries)
        algos = _parse_algos(args.algos, LCA_ALGOS)
        cfg = BenchConfig(n=len(tree.parent), seed=seed, qs=[len(queries)],
                          algos=algos, reps=args.reps)
        records = []
        _time_cell(LCA_ALGOS, algos, cfg, tree, queries, len(queries), records)
        write_csv(records, args.csv)
    elif args.cmd == "verify":
        return 0 if verify(args.max_n, args.max_q, args.seeds, seed=seed) else 1
    elif args.cmd == "lce":
        with open(args.text, "rb") as f:
            data = f.read()
        if data.endswith(b"\n"):
            data = data[:-1]
        s = build_suffix_lcp(data)
        pairs = load_queries(args.queries)
        for (i, j), r in zip(pairs, lce_batch(s, pairs)):
            print("%d %d %d" % (i, j, int(r)))
    elif args.cmd == "bench-backends":
        bench_backends(args.n, args.q, args.reps, seed=seed)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
