"""
Realization of outdegree-vertex sequences (OVS) as oriented graphs.

An OVS lists (outdegree, vertex) pairs. It is realizable when some oriented
graph (no loops, no pair of opposite arcs) has exactly those outdegrees. The
greedy below fixes one vertex at a time and sends its arcs to the leftmost
possible out-neighbours in the current arrangement; it fails only when no
realization exists.
"""

import logging
from dataclasses import dataclass, field
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    List,
    Mapping,
    Optional,
    Set,
    Tuple,
    Union,
)

from .errors import InternalError, NotRealizable

logger = logging.getLogger(__name__)

Entry = Tuple[int, int]


@dataclass(frozen=True)
class OVS:
    """An outdegree-vertex sequence: (outdegree, vertex id) pairs with distinct ids."""

    entries: Tuple[Entry, ...]

    def __post_init__(self):
        ids = [v for _, v in self.entries]
        if len(set(ids)) != len(ids):
            raise ValueError(f"vertex ids in an OVS must be distinct: {ids}")
        if any(d < 0 for d, _ in self.entries):
            raise ValueError("outdegrees must be non-negative")

    @classmethod
    def of(cls, pairs: Iterable[Tuple[int, int]]) -> "OVS":
        return cls(tuple((int(d), int(v)) for d, v in pairs))

    @property
    def vertices(self) -> List[int]:
        return [v for _, v in self.entries]

    def outdegree(self, v: int) -> int:
        for d, w in self.entries:
            if w == v:
                return d
        raise KeyError(v)

    def __len__(self) -> int:
        return len(self.entries)


class OrientedGraph:
    """
    A digraph with no loops and no anti-parallel arcs.

    in_neighbors is kept as the exact transpose of out_neighbors by add_edge.
    """

    def __init__(self, vertices: Iterable[int]):
        self.vertices: Tuple[int, ...] = tuple(vertices)
        self.out_neighbors: Dict[int, Set[int]] = {v: set() for v in self.vertices}
        self.in_neighbors: Dict[int, Set[int]] = {v: set() for v in self.vertices}

    def add_edge(self, u: int, v: int) -> None:
        if u not in self.out_neighbors or v not in self.out_neighbors:
            raise ValueError(f"arc ({u}, {v}) uses a vertex outside the graph")
        if u == v:
            raise ValueError(f"loop at {u}")
        if u in self.out_neighbors[v]:
            raise ValueError(f"arc ({u}, {v}) would be anti-parallel to ({v}, {u})")
        if v in self.out_neighbors[u]:
            raise ValueError(f"arc ({u}, {v}) is already present")
        self.out_neighbors[u].add(v)
        self.in_neighbors[v].add(u)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.out_neighbors.get(u, ())

    def out_degree(self, v: int) -> int:
        return len(self.out_neighbors[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_neighbors[v])

    def edges(self) -> List[Tuple[int, int]]:
        return sorted((u, v) for u in self.vertices for v in self.out_neighbors[u])

    @property
    def edge_count(self) -> int:
        return sum(len(out) for out in self.out_neighbors.values())

    def outdegree_sequence(self) -> Dict[int, int]:
        return {v: len(self.out_neighbors[v]) for v in self.vertices}

    def check_invariants(self) -> None:
        """Raise InternalError if a loop, an anti-parallel pair or a stale transpose exists."""
        for u in self.vertices:
            if u in self.out_neighbors[u]:
                raise InternalError(f"loop at {u}")
            for v in self.out_neighbors[u]:
                if u in self.out_neighbors[v]:
                    raise InternalError(f"anti-parallel arcs between {u} and {v}")
                if u not in self.in_neighbors[v]:
                    raise InternalError(f"in-neighbour set of {v} is missing {u}")
        for v in self.vertices:
            for u in self.in_neighbors[v]:
                if v not in self.out_neighbors[u]:
                    raise InternalError(f"in-neighbour set of {v} has stale entry {u}")

    def __repr__(self) -> str:
        return f"OrientedGraph(vertices={len(self.vertices)}, edges={self.edges()})"


@dataclass
class RealizerState:
    """
    The greedy's working state.

    arrangement is the current permutation of the OVS entries, fixed is the set
    W of vertices whose out-neighbourhoods are final, and graph holds their arcs.
    """

    arrangement: List[Entry]
    fixed: Set[int] = field(default_factory=set)
    graph: Optional[OrientedGraph] = None

    def __post_init__(self):
        if self.graph is None:
            self.graph = OrientedGraph(v for _, v in self.arrangement)


@dataclass(frozen=True)
class Infeasible:
    """Certificate that the entry at position cannot get its out-neighbours."""

    position: int
    vertex: int
    required: int
    available: int

    def __str__(self) -> str:
        return (
            f"vertex {self.vertex} at position {self.position} needs {self.required} "
            f"out-neighbours but only {self.available} are allowed"
        )


def normalize(ovs: OVS) -> OVS:
    """Stable sort by outdegree, ascending."""
    return OVS(tuple(sorted(ovs.entries, key=lambda e: e[0])))


def gw_normalize(state: RealizerState) -> RealizerState:
    """
    Rearrange so that W comes first, in its previous order, and the remaining
    entries are sorted by (outdegree + in-degree from W, outdegree). Stable.
    """
    graph = state.graph
    assert graph is not None
    head = [e for e in state.arrangement if e[1] in state.fixed]
    tail = [e for e in state.arrangement if e[1] not in state.fixed]
    tail.sort(key=lambda e: (e[0] + graph.in_degree(e[1]), e[0]))
    return RealizerState(head + tail, state.fixed, graph)


def leftmost_pon(state: RealizerState, position: int) -> Union[FrozenSet[int], Infeasible]:
    """
    Leftmost possible out-neighbourhood of the entry at position.

    The candidates are all vertices except the entry itself and its current
    in-neighbours; the result is the required number of candidates with the
    smallest positions, or an Infeasible certificate if there are too few.
    """
    graph = state.graph
    assert graph is not None
    required, v = state.arrangement[position]
    if v in state.fixed:
        raise ValueError(f"vertex {v} is already fixed")

    blocked = graph.in_neighbors[v]
    candidates = [w for _, w in state.arrangement if w != v and w not in blocked]
    if len(candidates) < required:
        return Infeasible(position, v, required, len(candidates))
    return frozenset(candidates[:required])


def realize(ovs: OVS, trace: Optional[List[Tuple[int, FrozenSet[int]]]] = None) -> OrientedGraph:
    """
    Build the leftmost greedy realization of an OVS.

    Raises:
        NotRealizable: with the Infeasible certificate of the failing step
    """
    return realize_constrained(ovs, {}, (), trace=trace)


def realize_constrained(
    ovs: OVS,
    preset: Mapping[int, Iterable[int]],
    preset_fixed: Iterable[int],
    trace: Optional[List[Tuple[int, FrozenSet[int]]]] = None,
) -> OrientedGraph:
    """
    Extend a preset partial realization greedily.

    Args:
        ovs: The sequence to realize
        preset: Out-neighbourhoods that must appear unchanged in the result
        preset_fixed: Vertices whose out-neighbourhoods are final from the start;
            every preset source must be listed, and each listed vertex's preset
            must already have its full outdegree
        trace: Optional list receiving (vertex, out-neighbours) per greedy step

    Returns:
        An oriented graph whose outdegrees match the OVS

    Raises:
        ValueError: the preset is inconsistent with the OVS
        NotRealizable: no extension exists along the greedy path
    """
    fixed = set(preset_fixed)
    outdegree = dict((v, d) for d, v in ovs.entries)
    for v in fixed:
        if v not in outdegree:
            raise ValueError(f"preset vertex {v} is not in the sequence")
    for v in preset:
        if v not in fixed:
            raise ValueError(f"preset source {v} must be listed in preset_fixed")
    for v in fixed:
        size = len(set(preset.get(v, ())))
        if size != outdegree[v]:
            raise ValueError(
                f"preset for {v} has {size} out-neighbours, expected {outdegree[v]}"
            )

    state = RealizerState(list(normalize(ovs).entries))
    graph = state.graph
    assert graph is not None
    for v, targets in preset.items():
        for w in sorted(set(targets)):
            graph.add_edge(v, w)

    state.fixed = fixed | {v for d, v in state.arrangement if d == 0}
    while len(state.fixed) < len(state.arrangement):
        state = gw_normalize(state)
        position = len(state.fixed)
        pon = leftmost_pon(state, position)
        if isinstance(pon, Infeasible):
            logger.debug("Realization failed: %s", pon)
            raise NotRealizable(pon)
        v = state.arrangement[position][1]
        for w in sorted(pon):
            graph.add_edge(v, w)
        state.fixed.add(v)
        if trace is not None:
            trace.append((v, pon))
        logger.debug("Fixed vertex %d with out-neighbours %s", v, sorted(pon))

    graph.check_invariants()
    for v, d in outdegree.items():
        if graph.out_degree(v) != d:
            raise InternalError(f"vertex {v} ended with outdegree {graph.out_degree(v)}, not {d}")
    return graph


def is_realizable(ovs: OVS) -> bool:
    """
    Counting test for realizability, independent of the greedy.

    A sequence is realizable iff for every s the s largest outdegrees sum to at
    most the number of vertex pairs touching those s vertices.
    """
    n = len(ovs)
    degrees = sorted((d for d, _ in ovs.entries), reverse=True)
    total = 0
    for s, d in enumerate(degrees, start=1):
        total += d
        if total > s * (s - 1) // 2 + s * (n - s):
            return False
    return True
