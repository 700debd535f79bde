"""
Exact star chromatic index and an optimum star edge colouring of any tree.

The index of a tree is the largest index among its distance-2 balls T_v. A
colouring with that many colours is built from the root outwards: every parent
whose children still have uncoloured child edges gets one stage, which realizes
the OVS of its ball over the full palette while keeping the arcs forced by the
colours already placed around its own parent.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

from .errors import InternalError, NotRealizable
from .oracle import validate_coloring
from .ovs_realizer import OVS, realize_constrained
from .star_2h import EdgeColoring, min_k
from .tree_model import Edge, RootedTree, Tree, root_at, two_ball

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IndexSummary:
    """The index together with one vertex whose ball attains it."""

    index: int
    vertex: Optional[int]
    distinct_profiles: int


def index_summary(tree: Tree) -> IndexSummary:
    if tree.vertex_count == 1:
        return IndexSummary(0, None, 0)

    best, witness = -1, None
    profiles = set()
    for v in range(tree.vertex_count):
        profile = two_ball(tree, v)
        profiles.add(profile.n)
        value = profile.t + min_k(profile)
        if value > best:
            best, witness = value, v
    logger.info("Star chromatic index %d attained at vertex %s", best, witness)
    return IndexSummary(best, witness, len(profiles))


def star_index(tree: Tree) -> int:
    """Largest star chromatic index over all balls T_v; 0 for a single vertex."""
    return index_summary(tree).index


@dataclass
class LevelColoringState:
    """
    Partial colouring during the level-by-level extension.

    The coloured edges are always the complete stars of the vertices handled so
    far, and never contain a two-coloured path on four edges. level is the
    level whose parents are being processed; stages only run there.
    """

    rooted: RootedTree
    palette_size: int
    assignment: Dict[Edge, int] = field(default_factory=dict)
    level: int = 1

    def color(self, u: int, v: int) -> int:
        return self.assignment[(u, v) if u < v else (v, u)]

    def set_color(self, u: int, v: int, c: int) -> None:
        self.assignment[(u, v) if u < v else (v, u)] = c

    def colors_at(self, v: int) -> Set[int]:
        return {self.color(v, w) for w in self.rooted.tree.neighbors(v)}

    def needs_stage(self, v: int) -> bool:
        tree = self.rooted.tree
        return any(tree.degree(w) > 1 for w in self.rooted.children(v))

    def stage(self, parent: int) -> None:
        """Colour the edges below every child of parent."""
        rooted, tree = self.rooted, self.rooted.tree
        if rooted.level[parent] != self.level:
            raise ValueError(f"vertex {parent} is on level {rooted.level[parent]}, not {self.level}")
        palette = range(1, self.palette_size + 1)
        neighbors = rooted.ordered_neighbors[parent]
        q = [self.color(parent, f) for f in neighbors]
        at_parent = set(q)

        grandparent = rooted.parent[parent]
        if grandparent is None:
            around_grandparent: Set[int] = set()
            preset: Dict[int, List[int]] = {}
            preset_fixed: Tuple[int, ...] = ()
        else:
            around_grandparent = self.colors_at(grandparent)
            preset = {q[0]: sorted(around_grandparent - {q[0]})}
            preset_fixed = (q[0],)

        # free colours, those around the grandparent first
        free = sorted(
            (c for c in palette if c not in at_parent),
            key=lambda c: (c not in around_grandparent, c),
        )
        entries = [(0, c) for c in free]
        entries += [(tree.degree(f) - 1, q_i) for f, q_i in zip(neighbors, q)]

        try:
            g = realize_constrained(OVS.of(entries), preset, preset_fixed)
        except (NotRealizable, ValueError) as e:
            logger.error("Stage at vertex %d failed: %s", parent, e)
            raise InternalError(f"cannot extend the colouring below vertex {parent}") from e

        unused = set(free)
        for f, q_i in zip(neighbors, q):
            if f == grandparent:
                continue
            chosen = sorted(g.out_neighbors[q_i])
            ordered = [c for c in chosen if c not in unused] + [c for c in chosen if c in unused]
            for child, c in zip(rooted.children(f), ordered):
                self.set_color(f, child, c)
        logger.debug(
            "Stage at vertex %d (level %d) used colours %s",
            parent,
            self.level,
            q,
        )


def color_tree(tree: Tree) -> Tuple[int, EdgeColoring]:
    """
    Optimum star edge colouring of a tree.

    Returns:
        (m, coloring) with m the star chromatic index and colours exactly 1..m

    Raises:
        InternalError: a stage could not be realized or the result failed validation
    """
    m = star_index(tree)
    if tree.vertex_count == 1:
        return 0, EdgeColoring({}, 0)

    rooted = root_at(tree, 0)
    state = LevelColoringState(rooted, m)
    for i, f in enumerate(rooted.ordered_neighbors[rooted.root], start=1):
        state.set_color(rooted.root, f, i)

    for level, vertices in enumerate(rooted.levels(), start=1):
        state.level = level
        for v in vertices:
            if state.needs_stage(v):
                state.stage(v)

    coloring = EdgeColoring(dict(state.assignment), m)
    verdict = validate_coloring(tree, coloring)
    if not verdict.valid:
        logger.error("Tree colouring rejected: %s", verdict)
        raise InternalError(f"produced an invalid colouring: {verdict}")
    if coloring.used_colors() != set(range(1, m + 1)):
        raise InternalError(f"colouring does not use exactly the colours 1..{m}")
    return m, coloring
