"""Batched range-minimum and lowest-common-ancestor queries by input
contraction: answer q offline queries over an array of n numbers (or a tree
of n nodes) in n + O(q) time and O(q) extra space.

Each *_con function contracts its input around the 2q query endpoints,
answers the small instance, maps the answers back, and restores the input
bit-exact before returning.  Hot loops run in a compiled extension when it
is available and fall back to pure Python otherwise; see
:mod:`rmqbatch.backend`.
"""

from . import backend
from .rmq_core import bf_rmq, bf_rmq_con, check_queries
from .contraction import (ContractedArray, contract, find_max, map_answer,
                          restore)
from .sparse_table import SparseTable, st_build, st_query, st_rmq, st_rmq_con
from .cartesian_offline import (CartesianTree, LabeledTree, cartesian_build,
                                offline_lca, off_rmq, off_rmq_con)
from .online_rmq import BlockRmq, on_build, on_query, on_rmq, on_rmq_con
from .lca_batch import (EulerContraction, MarkTables, euler_contract,
                        lca_queries, load_tree, mark_nodes, off_lca,
                        on_lca_con, save_tree, st_lca_con, unmark_nodes)
from .lce_demo import SuffixLcp, build_suffix_lcp, lce_batch

__version__ = "0.1.0"

__all__ = [
    "backend", "bf_rmq", "bf_rmq_con", "check_queries",
    "ContractedArray", "contract", "find_max", "map_answer", "restore",
    "SparseTable", "st_build", "st_query", "st_rmq", "st_rmq_con",
    "CartesianTree", "LabeledTree", "cartesian_build", "offline_lca",
    "off_rmq", "off_rmq_con",
    "BlockRmq", "on_build", "on_query", "on_rmq", "on_rmq_con",
    "EulerContraction", "MarkTables", "euler_contract", "lca_queries",
    "load_tree", "mark_nodes", "off_lca", "on_lca_con", "save_tree",
    "st_lca_con", "unmark_nodes",
    "SuffixLcp", "build_suffix_lcp", "lce_batch",
    "__version__",
]
