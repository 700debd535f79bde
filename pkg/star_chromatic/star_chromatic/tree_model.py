"""
Tree construction, rooting and the distance-2 balls used by the coloring algorithms.

Vertices are dense 0-based integers. External labels are mapped to ids by the
file readers in utils before anything here sees them.
"""

from collections import deque
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .errors import (
    CycleDetected,
    Disconnected,
    DuplicateEdge,
    EmptyTree,
    InvalidVertex,
    ProfileShapeError,
    SelfLoop,
)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Tree:
    """
    An undirected tree on vertices 0..vertex_count-1.

    adjacency[v] is the ascending tuple of neighbours of v. Use build_tree to
    construct one; the constructor itself does not validate.
    """

    vertex_count: int
    adjacency: Tuple[Tuple[int, ...], ...]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def has_vertex(self, v: int) -> bool:
        return isinstance(v, int) and 0 <= v < self.vertex_count

    @property
    def edge_count(self) -> int:
        return self.vertex_count - 1

    @property
    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self.adjacency), default=0)

    def edges(self) -> List[Edge]:
        """All edges as (u, v) with u < v, sorted."""
        return [(u, v) for u in range(self.vertex_count) for v in self.adjacency[u] if u < v]

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges())
        return graph


def _find(parent: List[int], v: int) -> int:
    while parent[v] != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    return v


def build_tree(edges: Iterable[Sequence[int]], vertex_count: Optional[int] = None) -> Tree:
    """
    Validate an edge list and build a Tree.

    Args:
        edges: Pairs of 0-based vertex ids. Ids must be consecutive from 0.
        vertex_count: Optional explicit vertex count. An empty edge list is only
            accepted together with vertex_count=1.

    Returns:
        The validated Tree

    Raises:
        EmptyTree, SelfLoop, DuplicateEdge, InvalidVertex, CycleDetected, Disconnected
    """
    pairs: List[Edge] = []
    for pair in edges:
        if len(pair) != 2:
            raise InvalidVertex(f"edge {tuple(pair)!r} does not have two endpoints")
        u, v = int(pair[0]), int(pair[1])
        if u < 0 or v < 0:
            raise InvalidVertex(f"negative vertex id in edge ({u}, {v})")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        pairs.append((u, v))

    if not pairs:
        if vertex_count == 1:
            return Tree(1, ((),))
        raise EmptyTree("a tree needs at least one edge or vertex_count=1")

    n = vertex_count if vertex_count is not None else max(max(p) for p in pairs) + 1
    seen = set()
    adjacency: List[List[int]] = [[] for _ in range(n)]
    uf = list(range(n))
    for u, v in pairs:
        if u >= n or v >= n:
            raise InvalidVertex(f"edge ({u}, {v}) refers to a vertex outside 0..{n - 1}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"edge {key} appears more than once")
        seen.add(key)
        ru, rv = _find(uf, u), _find(uf, v)
        if ru == rv:
            raise CycleDetected(f"edge ({u}, {v}) closes a cycle")
        uf[ru] = rv
        adjacency[u].append(v)
        adjacency[v].append(u)

    if len(pairs) != n - 1:
        raise Disconnected(f"{n} vertices but only {len(pairs)} edges")

    return Tree(n, tuple(tuple(sorted(nbrs)) for nbrs in adjacency))


@dataclass(frozen=True)
class RootedTree:
    """
    A tree with a chosen root, levels and the canonical neighbour order.

    ordered_neighbors[v] lists f_1(v), ..., f_d(v): the parent first for a
    non-root vertex, then the children by ascending degree with ties broken by
    ascending id. The root's neighbours are all sorted that way.
    """

    tree: Tree
    root: int
    parent: Tuple[Optional[int], ...]
    level: Tuple[int, ...]
    ordered_neighbors: Tuple[Tuple[int, ...], ...]

    def children(self, v: int) -> Tuple[int, ...]:
        if v == self.root:
            return self.ordered_neighbors[v]
        return self.ordered_neighbors[v][1:]

    def levels(self) -> List[List[int]]:
        """Vertices grouped by level (index 0 holds level 1), ascending id inside a level."""
        depth = max(self.level)
        grouped: List[List[int]] = [[] for _ in range(depth)]
        for v in range(self.tree.vertex_count):
            grouped[self.level[v] - 1].append(v)
        return grouped


def _canonical_key(tree: Tree):
    return lambda w: (tree.degree(w), w)


def root_at(tree: Tree, root: int) -> RootedTree:
    """Root the tree at the given vertex; the root sits at level 1."""
    if not tree.has_vertex(root):
        raise InvalidVertex(f"vertex {root!r} is not in the tree")

    n = tree.vertex_count
    parent: List[Optional[int]] = [None] * n
    level = [0] * n
    level[root] = 1
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in tree.adjacency[v]:
            if level[w] == 0:
                level[w] = level[v] + 1
                parent[w] = v
                queue.append(w)

    key = _canonical_key(tree)
    ordered: List[Tuple[int, ...]] = []
    for v in range(n):
        children = sorted((w for w in tree.adjacency[v] if w != parent[v]), key=key)
        p = parent[v]
        ordered.append(tuple(children) if p is None else (p, *children))

    return RootedTree(tree, root, tuple(parent), tuple(level), tuple(ordered))


@dataclass(frozen=True)
class TwoHProfile:
    """
    The shape of a 2H-tree T_{n_1,...,n_t}.

    n holds, in ascending order, the number of children of each root neighbour.
    When the profile was read off a concrete tree, vertex_map[i] is the
    neighbour behind n[i] and root is the centre vertex.
    """

    n: Tuple[int, ...]
    vertex_map: Optional[Tuple[int, ...]] = None
    root: Optional[int] = None

    def __post_init__(self):
        if not self.n:
            raise ProfileShapeError("a profile needs at least one entry")
        if any(x < 0 for x in self.n):
            raise ProfileShapeError(f"negative entry in profile {self.n}")
        if any(a > b for a, b in zip(self.n, self.n[1:])):
            raise ProfileShapeError(f"profile {self.n} is not sorted ascending")
        if self.vertex_map is not None and len(self.vertex_map) != len(self.n):
            raise ProfileShapeError("vertex_map must have one entry per profile position")

    @classmethod
    def of(cls, counts: Iterable[int]) -> "TwoHProfile":
        """Build a profile from child counts in any order."""
        return cls(tuple(sorted(int(c) for c in counts)))

    @classmethod
    def parse(cls, text: str) -> "TwoHProfile":
        """Parse a comma separated list such as "2,3,3"."""
        parts = [p.strip() for p in text.split(",") if p.strip()]
        try:
            return cls.of(int(p) for p in parts)
        except ValueError as e:
            if isinstance(e, ProfileShapeError):
                raise
            raise ProfileShapeError(f"cannot parse profile {text!r}") from e

    @property
    def t(self) -> int:
        return len(self.n)

    @property
    def sigma(self) -> int:
        return sum(self.n)

    @property
    def max_degree(self) -> int:
        return max(self.t, self.n[-1] + 1)


def two_ball(tree: Tree, v: int) -> TwoHProfile:
    """
    Profile of T_v, the subtree spanned by the edges within distance 2 of v.

    Raises:
        InvalidVertex: v is not in the tree or has no neighbours
    """
    if not tree.has_vertex(v):
        raise InvalidVertex(f"vertex {v!r} is not in the tree")
    if tree.degree(v) == 0:
        raise InvalidVertex(f"vertex {v} has no neighbours")

    ordered = sorted(tree.adjacency[v], key=_canonical_key(tree))
    return TwoHProfile(
        n=tuple(tree.degree(w) - 1 for w in ordered),
        vertex_map=tuple(ordered),
        root=v,
    )


def is_caterpillar(tree: Tree) -> bool:
    """True iff removing every leaf leaves a path (or nothing)."""
    spine = [v for v in range(tree.vertex_count) if tree.degree(v) > 1]
    spine_set = set(spine)
    for v in spine:
        if sum(1 for w in tree.adjacency[v] if w in spine_set) > 2:
            return False
    return True


def materialize(profile: TwoHProfile) -> Tuple[Tree, TwoHProfile]:
    """
    Build the concrete 2H-tree of a profile.

    The root is 0, u_i is vertex i (1..t) in profile order and the children of
    each u_i follow consecutively from t+1.
    """
    edges: List[Edge] = [(0, i) for i in range(1, profile.t + 1)]
    next_id = profile.t + 1
    for i, count in enumerate(profile.n, start=1):
        for _ in range(count):
            edges.append((i, next_id))
            next_id += 1
    tree = build_tree(edges)
    located = TwoHProfile(profile.n, tuple(range(1, profile.t + 1)), 0)
    return tree, located


def regular_2h_tree(r: int, t: int) -> Tuple[Tree, TwoHProfile]:
    """T_{(r,t)}: a root of degree t whose neighbours all have degree r."""
    if r < 1 or t < 1:
        raise ProfileShapeError(f"regular 2H-tree needs r >= 1 and t >= 1, got r={r}, t={t}")
    return materialize(TwoHProfile((r - 1,) * t))

