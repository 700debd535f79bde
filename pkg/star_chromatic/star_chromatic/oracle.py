"""
Independent ground truth: a star colouring validator, an exhaustive exact
solver for small trees and an enumerator of non-isomorphic trees.

Nothing here depends on the OVS machinery, so it can be used to check it.
"""

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Dict, Iterator, List, Optional, Tuple

import networkx as nx

from .errors import CoverageMismatch, Exceeded, TooLarge
from .tree_model import Edge, Tree, build_tree

if TYPE_CHECKING:
    from .star_2h import EdgeColoring

logger = logging.getLogger(__name__)

MAX_BRUTEFORCE_EDGES = 16
MAX_ENUMERATION_VERTICES = 10

NOT_PROPER = "NotProper"
BICOLORED_P4 = "BiColoredP4"


@dataclass(frozen=True)
class Violation:
    """A witness: three vertices for NotProper, five for BiColoredP4."""

    kind: str
    witness: Tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.kind} at {'-'.join(str(v) for v in self.witness)}"


@dataclass(frozen=True)
class Verdict:
    valid: bool
    violation: Optional[Violation] = None

    def __str__(self) -> str:
        return "valid" if self.valid else f"invalid: {self.violation}"


def _key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _preorder(tree: Tree, start: int = 0) -> List[int]:
    order: List[int] = []
    seen = [False] * tree.vertex_count
    stack = [start]
    while stack:
        v = stack.pop()
        if seen[v]:
            continue
        seen[v] = True
        order.append(v)
        stack.extend(reversed([w for w in tree.neighbors(v) if not seen[w]]))
    return order


def _oriented(witness: Tuple[int, ...]) -> Tuple[int, ...]:
    return witness if witness[0] <= witness[-1] else tuple(reversed(witness))


def validate_coloring(tree: Tree, coloring: "EdgeColoring") -> Verdict:
    """
    Check that a colouring is a star edge colouring of the tree.

    It must be proper, and no path on four edges may use only two colours.
    Centres are scanned in DFS preorder from vertex 0 and the first witness
    found is reported.

    Raises:
        CoverageMismatch: the coloring does not cover exactly the tree's edges
    """
    colors = coloring.assignment
    expected = set(tree.edges())
    if set(colors) != expected:
        missing = sorted(expected - set(colors))[:3]
        extra = sorted(set(colors) - expected)[:3]
        raise CoverageMismatch(f"coloring does not match the tree (missing {missing}, extra {extra})")

    if tree.vertex_count == 1:
        return Verdict(True)

    order = _preorder(tree)
    by_color: List[Dict[int, int]] = [{} for _ in range(tree.vertex_count)]
    for v in order:
        for w in tree.neighbors(v):
            c = colors[_key(v, w)]
            if c in by_color[v]:
                u = by_color[v][c]
                return Verdict(False, Violation(NOT_PROPER, (min(u, w), v, max(u, w))))
            by_color[v][c] = w

    for c in order:
        if tree.degree(c) < 2:
            continue
        # (colour of c-b, other colour at b) -> b
        seen: Dict[Tuple[int, int], int] = {}
        for b in tree.neighbors(c):
            beta = colors[_key(c, b)]
            for gamma, a in sorted(by_color[b].items()):
                if gamma == beta:
                    continue
                d = seen.get((gamma, beta))
                if d is not None:
                    e = by_color[d][beta]
                    return Verdict(False, Violation(BICOLORED_P4, _oriented((a, b, c, d, e))))
                seen[(beta, gamma)] = b
    return Verdict(True)


def four_edge_paths(tree: Tree) -> List[Tuple[int, int, int, int, int]]:
    """Every path on four edges, once each, as a vertex tuple with first < last."""
    paths = []
    for c in range(tree.vertex_count):
        nbrs = tree.neighbors(c)
        for i, b in enumerate(nbrs):
            for d in nbrs[i + 1 :]:
                for a in tree.neighbors(b):
                    if a == c:
                        continue
                    for e in tree.neighbors(d):
                        if e != c:
                            paths.append(_oriented((a, b, c, d, e)))
    return sorted(paths)


def _dfs_edges(tree: Tree) -> List[Edge]:
    order = _preorder(tree)
    position = {v: i for i, v in enumerate(order)}
    edges = []
    for v in order[1:]:
        parent = min((w for w in tree.neighbors(v) if position[w] < position[v]), key=position.get)
        edges.append(_key(parent, v))
    return edges


def exact_index_bruteforce(tree: Tree, max_colors: Optional[int] = None) -> int:
    """
    Exact star chromatic index by backtracking.

    Edges are coloured in DFS order, a new colour is only ever the next unused
    one, and each assignment is checked against the 4-edge paths it completes.

    Args:
        tree: Tree with at most 16 edges
        max_colors: Largest palette to try (default: one colour per edge)

    Raises:
        TooLarge: the tree has more than 16 edges
        Exceeded: no star colouring with at most max_colors colours
    """
    if tree.edge_count > MAX_BRUTEFORCE_EDGES:
        raise TooLarge(f"{tree.edge_count} edges exceeds the limit of {MAX_BRUTEFORCE_EDGES}")
    if tree.edge_count == 0:
        return 0

    edges = _dfs_edges(tree)
    index = {e: i for i, e in enumerate(edges)}
    m = len(edges)

    # earlier edges sharing an endpoint
    adjacent_before: List[List[int]] = [[] for _ in range(m)]
    for v in range(tree.vertex_count):
        incident = sorted(index[_key(v, w)] for w in tree.neighbors(v))
        for j, i in enumerate(incident):
            adjacent_before[i].extend(incident[:j])

    # paths whose last coloured edge is i, as (e1, e2, e3, e4) indices
    closing: List[List[Tuple[int, int, int, int]]] = [[] for _ in range(m)]
    for a, b, c, d, e in four_edge_paths(tree):
        ids = (index[_key(a, b)], index[_key(b, c)], index[_key(c, d)], index[_key(d, e)])
        closing[max(ids)].append(ids)

    limit = max_colors if max_colors is not None else m
    assigned = [0] * m

    def extend(i: int, used: int, k: int) -> bool:
        if i == m:
            return True
        for c in range(1, min(used + 1, k) + 1):
            if any(assigned[j] == c for j in adjacent_before[i]):
                continue
            assigned[i] = c
            if not any(
                assigned[p] == assigned[r] and assigned[q] == assigned[s]
                for p, q, r, s in closing[i]
            ):
                if extend(i + 1, max(used, c), k):
                    return True
        assigned[i] = 0
        return False

    for k in range(max(1, tree.max_degree), limit + 1):
        logger.debug("Trying %d colours on %d edges", k, m)
        if extend(0, 0, k):
            return k
    raise Exceeded(f"no star colouring with at most {limit} colours")


def _rooted_code(tree: Tree, root: int) -> str:
    def code(v: int, parent: int) -> str:
        return "(" + "".join(sorted(code(w, v) for w in tree.neighbors(v) if w != parent)) + ")"

    return code(root, -1)


def canonical_form(tree: Tree) -> str:
    """Isomorphism-invariant encoding: the smallest rooted code over the tree's centres."""
    if tree.vertex_count == 1:
        return "()"
    centers = nx.center(tree.to_networkx())
    return min(_rooted_code(tree, c) for c in centers)


def _attach_leaf(tree: Tree, v: int) -> Tree:
    edges = tree.edges() + [(v, tree.vertex_count)]
    return build_tree(edges)


def enumerate_trees(n: int) -> Iterator[Tree]:
    """
    One tree per isomorphism class on n vertices, ordered by canonical form.

    Raises:
        ValueError: n < 1
        TooLarge: n > 10
    """
    if n < 1:
        raise ValueError("trees need at least one vertex")
    if n > MAX_ENUMERATION_VERTICES:
        raise TooLarge(f"enumeration is limited to {MAX_ENUMERATION_VERTICES} vertices")

    layer: Dict[str, Tree] = {"()": build_tree([], vertex_count=1)}
    for _ in range(n - 1):
        grown: Dict[str, Tree] = {}
        for code in sorted(layer):
            tree = layer[code]
            for v in range(tree.vertex_count):
                bigger = _attach_leaf(tree, v)
                grown.setdefault(canonical_form(bigger), bigger)
        layer = grown
    for code in sorted(layer):
        yield layer[code]
