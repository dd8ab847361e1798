"""Extremal trade-off between the leaf count and the diameter of a tree.

Closed-form minimum/maximum leaf counts for a given diameter and diameters
for a given leaf count, explicit witness trees attaining them, a rewiring
procedure that canonicalizes any tree into a spider with the same order,
diameter and leaf set, and an exhaustive Prufer-enumeration oracle that
certifies the formulas exactly on small orders.
"""

from .errors import (
    CapExceeded,
    DegenerateOrder,
    EmptySpider,
    EntryOutOfRange,
    Infeasible,
    InvalidStem,
    LeafDiamError,
    LeafOnStem,
    NoBigVertex,
    NotALeaf,
    NotATree,
    ParseError,
    StemNotDiametral,
    VertexOutOfRange,
)
from .formulas import (
    feasible_leaf_diameter,
    feasible_order_leaves,
    lesniak_bound,
    max_diameter,
    max_leaves,
    min_diameter,
    min_leaves,
)
from .oracle import (
    DEFAULT_CAP,
    ExtremalTable,
    VerifyReport,
    all_trees,
    build_table,
    find_tree_with,
    prufer_decode,
    sequence_at,
    verify_sweep,
)
from .rewire import RewireStep, RewireTrace, is_spider, rewire_once, spiderize
from .stem import StemDecomposition, decompose, first_big_vertex, is_diametral_by_lemma1
from .tree import (
    Tree,
    TreePath,
    bfs_distances,
    build_tree,
    degree,
    diameter_and_path,
    leaves,
    path_between,
    read_tree,
    to_dot,
    write_tree,
)
from .witnesses import (
    Spider,
    max_diameter_tree,
    max_leaf_tree,
    min_diameter_spider,
    min_leaf_spider,
    spider_to_tree,
)

__version__ = "0.1.0"
