"""
Optimum star edge coloring of 2H-trees (trees of diameter at most four).

Colouring T_{n_1,...,n_t} with t + k colours is the same problem as realizing
the OVS ((0, v_{t+k}), ..., (0, v_{t+1}), (n_1, v_1), ..., (n_t, v_t)): vertex
v_j stands for colour j, the root edge to u_i gets colour i, and the arcs out
of v_i are the colours on the leaf edges below u_i.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterator, List, Mapping, Optional, Set, Tuple

from .errors import (
    InternalError,
    NotRealizable,
    NotStarColoring,
    ProfileMismatch,
)
from .oracle import validate_coloring
from .ovs_realizer import OVS, OrientedGraph, is_realizable, realize
from .tree_model import Edge, Tree, TwoHProfile, materialize

logger = logging.getLogger(__name__)


def _edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class EdgeColoring:
    """
    An edge coloring with colours 1..palette_size.

    Keys of assignment are (u, v) with u < v; use EdgeColoring.of to build one
    from arbitrary endpoint order.
    """

    assignment: Mapping[Edge, int] = field(hash=False)
    palette_size: int = 0

    def __post_init__(self):
        for (u, v), c in self.assignment.items():
            if u >= v:
                raise ValueError(f"edge key ({u}, {v}) must have u < v")
            if not 1 <= c <= self.palette_size:
                raise ValueError(f"colour {c} on edge ({u}, {v}) is outside 1..{self.palette_size}")

    @classmethod
    def of(cls, colors: Mapping[Tuple[int, int], int], palette_size: Optional[int] = None) -> "EdgeColoring":
        assignment = {_edge_key(u, v): int(c) for (u, v), c in colors.items()}
        if palette_size is None:
            palette_size = max(assignment.values(), default=0)
        return cls(assignment, palette_size)

    def color(self, u: int, v: int) -> int:
        return self.assignment[_edge_key(u, v)]

    def colors_at(self, tree: Tree, v: int) -> Set[int]:
        return {self.color(v, w) for w in tree.neighbors(v)}

    def used_colors(self) -> Set[int]:
        return set(self.assignment.values())

    def edges(self) -> List[Edge]:
        return sorted(self.assignment)

    def __len__(self) -> int:
        return len(self.assignment)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges())


def ovs_for_profile(profile: TwoHProfile, k: int) -> OVS:
    """The OVS whose realizability decides a (t + k)-colouring of the profile."""
    t = profile.t
    zeros = [(0, t + j) for j in range(k, 0, -1)]
    return OVS.of(zeros + [(n_i, i) for i, n_i in enumerate(profile.n, start=1)])


@lru_cache(maxsize=4096)
def _min_k(counts: Tuple[int, ...]) -> int:
    profile = TwoHProfile(counts)
    t = profile.t
    bound = (3 * profile.max_degree) // 2 - t
    # fewer than max_degree colours can never work
    k = max(0, profile.max_degree - t)
    while True:
        if k > bound:
            raise InternalError(f"no colouring of {counts} within {bound + t} colours")
        ovs = ovs_for_profile(profile, k)
        if not is_realizable(ovs):
            logger.debug("Profile %s: k=%d fails the counting test", counts, k)
            k += 1
            continue
        try:
            realize(ovs)
            return k
        except NotRealizable as e:
            logger.debug("Profile %s: k=%d not realizable (%s)", counts, k, e.certificate)
            k += 1


def min_k(profile: TwoHProfile) -> int:
    """
    Smallest k such that the profile's 2H-tree has a star colouring with t + k colours.

    Raises:
        InternalError: the search passed the floor(3 * max_degree / 2) ceiling
    """
    return _min_k(tuple(profile.n))


def _locate(profile: TwoHProfile, tree: Optional[Tree]) -> Tuple[Tree, TwoHProfile]:
    if tree is None:
        return materialize(profile)
    if profile.vertex_map is None or profile.root is None:
        raise ProfileMismatch("a profile used with a concrete tree needs vertex_map and root")
    for i, u_i in enumerate(profile.vertex_map):
        if not tree.has_vertex(u_i) or profile.root not in tree.neighbors(u_i):
            raise ProfileMismatch(f"vertex {u_i} is not a neighbour of root {profile.root}")
        if tree.degree(u_i) - 1 != profile.n[i]:
            raise ProfileMismatch(
                f"vertex {u_i} has {tree.degree(u_i) - 1} children, profile says {profile.n[i]}"
            )
    if tree.degree(profile.root) != profile.t:
        raise ProfileMismatch(f"root {profile.root} does not have degree {profile.t}")
    return tree, profile


def _children(tree: Tree, root: int, u_i: int) -> List[int]:
    return [w for w in tree.neighbors(u_i) if w != root]


def coloring_from_realization(
    g: OrientedGraph, profile: TwoHProfile, tree: Optional[Tree] = None
) -> EdgeColoring:
    """
    Turn a realization into a colouring of the profile's 2H-tree.

    Edge root-u_i gets colour i; the children of u_i, by ascending id, get the
    out-neighbours of v_i in ascending order. Without a tree the profile is
    materialized.

    Raises:
        ProfileMismatch: the outdegrees of g disagree with the profile
    """
    tree, located = _locate(profile, tree)
    palette = len(g.vertices)
    if set(g.vertices) != set(range(1, palette + 1)) or palette < located.t:
        raise ProfileMismatch(f"realization vertices must be 1..{palette} with at least t={located.t}")

    root = located.root
    assert root is not None and located.vertex_map is not None
    colors: Dict[Edge, int] = {}
    for i, (u_i, n_i) in enumerate(zip(located.vertex_map, located.n), start=1):
        out = sorted(g.out_neighbors[i])
        if len(out) != n_i:
            raise ProfileMismatch(f"v_{i} has outdegree {len(out)}, profile says {n_i}")
        colors[_edge_key(root, u_i)] = i
        for w, c in zip(sorted(_children(tree, root, u_i)), out):
            colors[_edge_key(u_i, w)] = c
    for j in range(located.t + 1, palette + 1):
        if g.out_degree(j) != 0:
            raise ProfileMismatch(f"colour vertex v_{j} must have outdegree 0")
    return EdgeColoring(colors, palette)


def realization_from_coloring(
    coloring: EdgeColoring, profile: TwoHProfile, tree: Optional[Tree] = None
) -> OrientedGraph:
    """
    Read the oriented graph back off a colouring: v_i -> v_j iff colour j is on
    a leaf edge below u_i.

    Raises:
        ProfileMismatch: edge root-u_i does not have colour i
        NotStarColoring: the arcs would form a loop, a repeat or an anti-parallel pair
    """
    tree, located = _locate(profile, tree)
    root = located.root
    assert root is not None and located.vertex_map is not None
    g = OrientedGraph(range(1, coloring.palette_size + 1))
    for i, u_i in enumerate(located.vertex_map, start=1):
        if coloring.color(root, u_i) != i:
            raise ProfileMismatch(f"edge {root}-{u_i} must have colour {i}")
    for i, u_i in enumerate(located.vertex_map, start=1):
        for w in _children(tree, root, u_i):
            j = coloring.color(u_i, w)
            try:
                g.add_edge(i, j)
            except ValueError as e:
                raise NotStarColoring(f"colour {j} below u_{i}: {e}") from e
    return g


def color_2h(profile: TwoHProfile, tree: Optional[Tree] = None) -> Tuple[int, EdgeColoring]:
    """
    Optimum star colouring of a 2H-tree.

    Args:
        profile: The 2H-tree profile
        tree: Optional tree containing T_v; the profile must then carry
            vertex_map and root (as returned by two_ball)

    Returns:
        (index, coloring) where index = t + min_k(profile)
    """
    k = min_k(profile)
    g = realize(ovs_for_profile(profile, k))
    index = profile.t + k

    own_tree, own_profile = materialize(profile)
    own_coloring = coloring_from_realization(g, own_profile, own_tree)
    verdict = validate_coloring(own_tree, own_coloring)
    if not verdict.valid:
        logger.error("2H colouring of %s rejected: %s", profile.n, verdict)
        raise InternalError(f"invalid colouring produced for profile {profile.n}")

    if tree is None:
        coloring = own_coloring
    else:
        coloring = coloring_from_realization(g, profile, tree)
    logger.debug("Profile %s has star chromatic index %d", profile.n, index)
    return index, coloring
