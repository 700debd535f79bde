"""
star-chromatic: exact star chromatic index and optimum star edge colourings of trees
"""

__version__ = "0.1.0"

from .bounds import (
    BoundReport,
    bound_report,
    caterpillar_index,
    cyclic_regular_coloring,
    lower_bound_2h,
    near_star_2h_index,
    regular_2h_coloring,
    regular_2h_index,
    upper_bound_2h,
)
from .errors import (
    InternalError,
    NotRealizable,
    StarColoringError,
    TreeError,
)
from .oracle import (
    Verdict,
    enumerate_trees,
    exact_index_bruteforce,
    validate_coloring,
)
from .ovs_realizer import OVS, OrientedGraph, realize, realize_constrained
from .star_2h import EdgeColoring, color_2h, min_k
from .star_tree import color_tree, star_index
from .tree_model import (
    RootedTree,
    Tree,
    TwoHProfile,
    build_tree,
    is_caterpillar,
    materialize,
    root_at,
    two_ball,
)

__all__ = [
    "BoundReport",
    "EdgeColoring",
    "InternalError",
    "NotRealizable",
    "OVS",
    "OrientedGraph",
    "RootedTree",
    "StarColoringError",
    "Tree",
    "TreeError",
    "TwoHProfile",
    "Verdict",
    "bound_report",
    "build_tree",
    "caterpillar_index",
    "color_2h",
    "color_tree",
    "cyclic_regular_coloring",
    "enumerate_trees",
    "exact_index_bruteforce",
    "is_caterpillar",
    "lower_bound_2h",
    "materialize",
    "min_k",
    "near_star_2h_index",
    "realize",
    "realize_constrained",
    "regular_2h_coloring",
    "regular_2h_index",
    "root_at",
    "star_index",
    "two_ball",
    "upper_bound_2h",
    "validate_coloring",
]
