"""
Utility functions for star-chromatic: tree files, colouring JSON, DOT output
and seeded generators.
"""

import json
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

import graphviz
import networkx as nx
import numpy as np

from .errors import CoverageMismatch, EmptyTree, TreeParseError
from .star_2h import EdgeColoring
from .tree_model import RootedTree, Tree, TwoHProfile, build_tree

Labels = Sequence[int]


def parse_tree_text(text: str) -> Tuple[Tree, List[int]]:
    """
    Parse a tree file.

    Each non-blank line holds an edge "u v" of non-negative integer labels, or a
    single label for a one-vertex tree. Text after '#' is ignored. Labels are
    mapped to dense ids in ascending label order.

    Args:
        text: The file contents

    Returns:
        (tree, labels) where labels[id] is the original label of vertex id
    """
    pairs: List[Tuple[int, int]] = []
    seen_labels = set()
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) not in (1, 2):
            raise TreeParseError(line_number, f"expected 'u v', got {line!r}")
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise TreeParseError(line_number, f"labels must be integers: {line!r}") from None
        if any(v < 0 for v in values):
            raise TreeParseError(line_number, "labels must be non-negative")
        seen_labels.update(values)
        if len(values) == 2:
            pairs.append((values[0], values[1]))

    if not seen_labels:
        raise EmptyTree("tree file contains no vertices")

    labels = sorted(seen_labels)
    ids = {label: i for i, label in enumerate(labels)}
    tree = build_tree([(ids[u], ids[v]) for u, v in pairs], vertex_count=len(labels))
    return tree, labels


def load_tree_file(path: str) -> Tuple[Tree, List[int]]:
    """Read and parse a tree file."""
    with open(path, "r", encoding="utf-8") as f:
        return parse_tree_text(f.read())


def format_tree(tree: Tree, labels: Optional[Labels] = None) -> str:
    """Tree file text, one edge per line, in ascending order."""
    name = labels if labels is not None else range(tree.vertex_count)
    if tree.vertex_count == 1:
        return f"{name[0]}\n"
    return "".join(f"{name[u]} {name[v]}\n" for u, v in tree.edges())


def serialize_coloring(coloring: EdgeColoring, labels: Optional[Labels] = None) -> Dict[str, Any]:
    """
    Convert a colouring to a JSON-serializable dictionary.

    Edge keys are "u-v" with u < v in external labels.
    """
    edges = {}
    for (u, v), c in coloring.assignment.items():
        if labels is not None:
            u, v = labels[u], labels[v]
        a, b = sorted((u, v))
        edges[f"{a}-{b}"] = c
    return {"palette": coloring.palette_size, "edges": dict(sorted(edges.items()))}


def dump_coloring(coloring: EdgeColoring, labels: Optional[Labels] = None) -> str:
    return json.dumps(serialize_coloring(coloring, labels), indent=2, sort_keys=True) + "\n"


def deserialize_coloring(data: Mapping[str, Any], labels: Optional[Labels] = None) -> EdgeColoring:
    """
    Build an EdgeColoring from serialized data.

    Args:
        data: Dictionary with "edges" and optionally "palette"
        labels: External labels of the tree the colouring belongs to

    Raises:
        CoverageMismatch: an edge key uses a label the tree does not have
        ValueError: the data is malformed
    """
    if "edges" not in data or not isinstance(data["edges"], Mapping):
        raise ValueError("coloring data needs an 'edges' object")
    ids = {label: i for i, label in enumerate(labels)} if labels is not None else None
    colors: Dict[Tuple[int, int], int] = {}
    for key, c in data["edges"].items():
        parts = str(key).split("-")
        if len(parts) != 2:
            raise ValueError(f"edge key {key!r} is not of the form 'u-v'")
        u, v = int(parts[0]), int(parts[1])
        if ids is not None:
            if u not in ids or v not in ids:
                raise CoverageMismatch(f"edge {key} is not in the tree")
            u, v = ids[u], ids[v]
        if u == v:
            raise CoverageMismatch(f"edge {key} is a loop")
        colors[(u, v)] = int(c)
    palette = data.get("palette")
    return EdgeColoring.of(colors, int(palette) if palette is not None else None)


def load_coloring_file(path: str, labels: Optional[Labels] = None) -> EdgeColoring:
    with open(path, "r", encoding="utf-8") as f:
        return deserialize_coloring(json.load(f), labels)


def coloring_to_dot(
    tree: Tree,
    coloring: EdgeColoring,
    labels: Optional[Labels] = None,
    rooted: Optional[RootedTree] = None,
) -> str:
    """DOT source with every edge labelled by its colour; nodes shaded by level when rooted."""
    name = labels if labels is not None else range(tree.vertex_count)
    dot = graphviz.Graph(name="star_coloring")
    dot.attr("node", shape="circle")
    for v in range(tree.vertex_count):
        attrs = {}
        if rooted is not None:
            level = rooted.level[v]
            attrs["style"] = "filled"
            attrs["fillcolor"] = "/blues9/%d" % min(level, 9)
            if level == 1:
                attrs["shape"] = "doublecircle"
        dot.node(str(v), str(name[v]), **attrs)
    for u, v in tree.edges():
        c = coloring.color(u, v)
        dot.edge(str(u), str(v), label=str(c), colorscheme="set312", color=str((c - 1) % 12 + 1))
    return dot.source


def random_tree(n: int, seed: int) -> Tree:
    """Uniform labelled tree on n vertices from a seeded Prüfer sequence."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        return build_tree([], vertex_count=1)
    if n == 2:
        return build_tree([(0, 1)])
    rng = np.random.default_rng(seed)
    sequence = [int(x) for x in rng.integers(0, n, size=n - 2)]
    return build_tree(nx.from_prufer_sequence(sequence).edges())


def random_caterpillar(spine: int, max_legs: int, seed: int) -> Tree:
    """A path of spine vertices, each with 0..max_legs pendant leaves."""
    if spine < 1 or max_legs < 0:
        raise ValueError("spine must be positive and max_legs non-negative")
    rng = np.random.default_rng(seed)
    edges = [(i, i + 1) for i in range(spine - 1)]
    next_id = spine
    for v in range(spine):
        for _ in range(int(rng.integers(0, max_legs + 1))):
            edges.append((v, next_id))
            next_id += 1
    if not edges:
        return build_tree([], vertex_count=1)
    return build_tree(edges)


def random_profile(max_t: int, max_n: int, rng: np.random.Generator) -> TwoHProfile:
    """A profile with 1..max_t entries drawn from 0..max_n."""
    t = int(rng.integers(1, max_t + 1))
    return TwoHProfile.of(int(x) for x in rng.integers(0, max_n + 1, size=t))
