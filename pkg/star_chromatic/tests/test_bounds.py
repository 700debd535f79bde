"""
Tests for the closed-form bounds, exact formulas and explicit regular colourings.
"""

import os
import sys
import unittest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from star_chromatic.bounds import (
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
from star_chromatic.errors import DomainError, NotCaterpillar, ProfileShapeError
from star_chromatic.oracle import validate_coloring
from star_chromatic.star_2h import color_2h
from star_chromatic.star_tree import star_index
from star_chromatic.tree_model import TwoHProfile, build_tree
from star_chromatic.utils import random_caterpillar


def path(n):
    return build_tree([(i, i + 1) for i in range(n - 1)])


def branch_colors(tree, coloring, u):
    return sorted(coloring.color(u, w) for w in tree.neighbors(u) if w != 0)


class TestBounds(unittest.TestCase):
    """Tests for lower_bound_2h and upper_bound_2h."""

    def test_lower_bound(self):
        self.assertEqual(lower_bound_2h(TwoHProfile((2, 3, 3))), 5)
        self.assertEqual(lower_bound_2h(TwoHProfile((0, 0, 0, 0))), 4)
        self.assertEqual(lower_bound_2h(TwoHProfile((0, 0, 4))), 5)

    def test_upper_bound(self):
        self.assertEqual(upper_bound_2h(TwoHProfile((2, 3, 3))), 5)
        self.assertEqual(upper_bound_2h(TwoHProfile((0, 0, 0, 0))), 4)
        self.assertEqual(upper_bound_2h(TwoHProfile((2, 2, 2))), 4)

    def test_sandwich(self):
        for profile in [(1,), (0, 3), (1, 2, 2), (0, 1, 4, 4), (3, 3, 3, 3, 3), (1, 1, 1, 1, 1, 1, 6)]:
            profile = TwoHProfile(profile)
            index, _ = color_2h(profile)
            self.assertLessEqual(lower_bound_2h(profile), index, profile.n)
            self.assertLessEqual(index, upper_bound_2h(profile), profile.n)


class TestFormulas(unittest.TestCase):
    """Tests for the regular, near-star and caterpillar formulas."""

    def test_regular_index(self):
        self.assertEqual(regular_2h_index(3, 3), 4)
        self.assertEqual(regular_2h_index(2, 5), 5)
        self.assertEqual(regular_2h_index(2, 2), 3)
        with self.assertRaises(DomainError):
            regular_2h_index(0, 3)
        with self.assertRaises(DomainError):
            regular_2h_index(3, 1)

    def test_regular_index_matches_search(self):
        for r in range(1, 7):
            for t in range(2, 7):
                index, _ = color_2h(TwoHProfile((r - 1,) * t))
                self.assertEqual(index, regular_2h_index(r, t), (r, t))

    def test_near_star(self):
        self.assertEqual(near_star_2h_index(TwoHProfile((0, 0, 3, 3))), 5)
        self.assertEqual(near_star_2h_index(TwoHProfile((0, 0, 2, 3))), 4)
        self.assertEqual(near_star_2h_index(TwoHProfile((0, 0))), 2)

    def test_near_star_matches_search(self):
        for t in range(2, 6):
            for a in range(5):
                for b in range(a, 5):
                    profile = TwoHProfile((0,) * (t - 2) + (a, b))
                    index, _ = color_2h(profile)
                    self.assertEqual(index, near_star_2h_index(profile), profile.n)

    def test_near_star_shape(self):
        with self.assertRaises(ProfileShapeError):
            near_star_2h_index(TwoHProfile((1, 1, 1)))
        with self.assertRaises(ProfileShapeError):
            near_star_2h_index(TwoHProfile((3,)))

    def test_caterpillar(self):
        self.assertEqual(caterpillar_index(path(5)), 3)
        self.assertEqual(caterpillar_index(path(4)), 2)
        self.assertEqual(caterpillar_index(build_tree([], vertex_count=1)), 0)

        # two degree-5 centres joined through vertex 1
        edges = [(0, 1), (1, 2)] + [(0, v) for v in range(3, 7)] + [(2, v) for v in range(7, 11)]
        self.assertEqual(caterpillar_index(build_tree(edges)), 6)

    def test_caterpillar_matches_star_index(self):
        for seed in range(30):
            tree = random_caterpillar(8, 3, seed)
            self.assertEqual(caterpillar_index(tree), star_index(tree), tree.edges())

    def test_not_caterpillar(self):
        spider = build_tree([(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
        with self.assertRaises(NotCaterpillar):
            caterpillar_index(spider)


class TestRegularColorings(unittest.TestCase):
    """Tests for the cyclic colouring and its derived regular colourings."""

    def test_cyclic_t2(self):
        """t=2 colours the path leaf-u_1-root-u_2-leaf as 3,1,2,3."""
        tree, coloring = cyclic_regular_coloring(2)
        self.assertEqual(
            [coloring.color(3, 1), coloring.color(1, 0), coloring.color(0, 2), coloring.color(2, 4)],
            [3, 1, 2, 3],
        )
        self.assertEqual(coloring.palette_size, 3)

    def test_cyclic_t3(self):
        tree, coloring = cyclic_regular_coloring(3)
        self.assertEqual(branch_colors(tree, coloring, 1), [2, 4])
        self.assertEqual(branch_colors(tree, coloring, 2), [3, 4])
        self.assertEqual(branch_colors(tree, coloring, 3), [1, 4])
        self.assertEqual(coloring.palette_size, 4)

    def test_cyclic_valid(self):
        for t in range(2, 21):
            tree, coloring = cyclic_regular_coloring(t)
            self.assertTrue(validate_coloring(tree, coloring).valid, t)
            self.assertEqual(len(coloring.used_colors()), t + t // 2)
        with self.assertRaises(DomainError):
            cyclic_regular_coloring(1)

    def test_regular_same_size_is_cyclic(self):
        _, cyclic = cyclic_regular_coloring(5)
        _, regular = regular_2h_coloring(5, 5)
        self.assertEqual(dict(cyclic.assignment), dict(regular.assignment))

    def test_regular_branches(self):
        tree, coloring = regular_2h_coloring(4, 3)
        self.assertEqual(coloring.palette_size, 5)
        self.assertTrue(validate_coloring(tree, coloring).valid)

        tree, coloring = regular_2h_coloring(1, 4)
        self.assertEqual(coloring.palette_size, 4)
        self.assertEqual(tree.vertex_count, 5)

        tree, coloring = regular_2h_coloring(2, 3)
        self.assertEqual(coloring.palette_size, 3)
        self.assertTrue(validate_coloring(tree, coloring).valid)

    def test_regular_valid(self):
        for r in range(1, 11):
            for t in range(2, 11):
                tree, coloring = regular_2h_coloring(r, t)
                self.assertTrue(validate_coloring(tree, coloring).valid, (r, t))
                self.assertEqual(len(coloring.used_colors()), regular_2h_index(r, t), (r, t))
        with self.assertRaises(DomainError):
            regular_2h_coloring(0, 3)


class TestBoundReport(unittest.TestCase):
    """Tests for bound_report and BoundReport."""

    def test_example_profile(self):
        report = bound_report(TwoHProfile((2, 3, 3)))
        self.assertEqual((report.lower, report.upper, report.exact), (5, 5, 5))
        self.assertEqual(
            report.source,
            {"lower": "average-load", "upper": "regular-cover", "exact": "ovs-search"},
        )

    def test_exact_sources(self):
        self.assertEqual(bound_report(TwoHProfile((2, 2, 2))).source["exact"], "regular")
        report = bound_report(TwoHProfile((0, 0, 3, 3)))
        self.assertEqual(report.exact, 5)
        self.assertEqual(report.source["exact"], "near-star")
        self.assertEqual(report.source["lower"], "max-degree")

    def test_single_branch(self):
        report = bound_report(TwoHProfile((3,)))
        self.assertEqual(report.exact, 4)
        self.assertEqual(report.source["exact"], "ovs-search")

    def test_without_exact(self):
        report = bound_report(TwoHProfile((0, 0, 0, 0, 0)), exact=False)
        self.assertIsNone(report.exact)
        self.assertNotIn("exact", report.source)
        self.assertEqual(report.source["upper"], "star")

    def test_to_dict(self):
        data = bound_report(TwoHProfile((2, 3, 3))).to_dict()
        self.assertEqual(data["exact"], 5)
        self.assertEqual(data["source"]["exact"], "ovs-search")

    def test_inconsistent_report(self):
        with self.assertRaises(ValueError):
            BoundReport(5, 4)
        with self.assertRaises(ValueError):
            BoundReport(3, 4, exact=5)


if __name__ == "__main__":
    unittest.main()
