"""
Example: colour a few trees with the Python API.

Run from this directory:
    python library_usage.py
"""

import logging
import os
import sys

# Add parent directory to path to import the package
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from star_chromatic import (
    TwoHProfile,
    bound_report,
    build_tree,
    color_tree,
    validate_coloring,
)
from star_chromatic.star_tree import index_summary
from star_chromatic.utils import dump_coloring, load_tree_file, random_tree


def show(name, tree, labels=None):
    m, coloring = color_tree(tree)
    summary = index_summary(tree)
    print(f"{name}: {tree.vertex_count} vertices, max degree {tree.max_degree}, index {m}")
    print(f"  attained at vertex {summary.vertex}, {validate_coloring(tree, coloring)}")
    return coloring


def main():
    logging.basicConfig(level=logging.WARNING)
    here = os.path.dirname(os.path.abspath(__file__))

    show("path P7", build_tree([(i, i + 1) for i in range(6)]))
    show("random tree", random_tree(200, seed=1))

    tree, labels = load_tree_file(os.path.join(here, "example_2h_tree.txt"))
    coloring = show("2H example", tree)
    print(dump_coloring(coloring, labels))

    tree, labels = load_tree_file(os.path.join(here, "caterpillar.txt"))
    show("caterpillar", tree)

    report = bound_report(TwoHProfile.parse("2,3,3"))
    print(f"bounds for (2,3,3): {report.to_dict()}")


if __name__ == "__main__":
    main()
