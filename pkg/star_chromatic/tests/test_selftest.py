"""
Tests for the acceptance-check runner, on reduced sweep sizes.
"""

import os
import sys
import unittest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from star_chromatic.selftest import (
    FAILED,
    PASSED,
    SKIPPED,
    SelfTestConfig,
    SelfTestRunner,
    attainable_outdegrees,
    check_bound_sandwich,
    check_caterpillar_oracle,
    check_ovs_completeness,
    check_worked_example,
)


def small_config(**overrides):
    values = dict(
        max_n=5,
        random_profiles=20,
        sandwich_max_t=6,
        sandwich_max_n=6,
        near_star_max_t=4,
        near_star_max_n=4,
        random_caterpillars=20,
        caterpillar_max_vertices=40,
        caterpillar_oracle_max_n=6,
        regular_max_r=4,
        regular_max_t=4,
        coloring_max=5,
        cyclic_max_t=6,
        ovs_max_vertices=3,
        ovs_max_outdegree=2,
    )
    values.update(overrides)
    return SelfTestConfig(**values)


class TestChecks(unittest.TestCase):
    """Tests for individual checks."""

    def test_example_profile(self):
        self.assertIn("index 5", check_worked_example())

    def test_attainable_outdegrees(self):
        self.assertEqual(attainable_outdegrees(2), {(0, 0), (1, 0), (0, 1)})
        self.assertNotIn((2, 2, 2), attainable_outdegrees(3))
        self.assertIn((1, 1, 1), attainable_outdegrees(3))

    def test_ovs_completeness(self):
        self.assertEqual(check_ovs_completeness(3, 2), "39 sequences")

    def test_caterpillar_oracle(self):
        # every tree on at most 6 vertices is a caterpillar; 10 of the 11 on 7 are
        self.assertEqual(check_caterpillar_oracle(7), "24 caterpillars")

    def test_bound_sandwich_large_profiles(self):
        self.assertEqual(check_bound_sandwich(25, 30, 30, 3), "25 profiles")

    def test_default_sizes(self):
        config = SelfTestConfig()
        self.assertEqual((config.random_profiles, config.sandwich_max_t, config.sandwich_max_n), (1000, 30, 30))
        self.assertEqual((config.near_star_max_t, config.near_star_max_n), (8, 6))
        self.assertEqual(config.caterpillar_oracle_max_n, 10)

    def test_caterpillar_oracle_planned(self):
        names = dict(SelfTestRunner(small_config()).checks())
        self.assertIn("caterpillar-oracle", names)


class TestSelfTestRunner(unittest.TestCase):
    """Tests for SelfTestRunner."""

    def test_all_checks_pass(self):
        seen = []
        runner = SelfTestRunner(small_config(), on_check_callback=seen.append)
        results = runner.run_all_sync()

        self.assertEqual([r.name for r in results], [name for name, _ in runner.checks()])
        self.assertEqual(len(seen), len(results))
        for result in results:
            self.assertEqual(result.status, PASSED, f"{result.name}: {result.detail}")

    def test_threads_keep_order(self):
        runner = SelfTestRunner(small_config(max_n=4, thread_count=3))
        results = runner.run_all_sync()
        self.assertEqual([r.name for r in results], [name for name, _ in runner.checks()])
        self.assertTrue(all(r.ok for r in results))

    def test_large_n_skipped(self):
        runner = SelfTestRunner(small_config(max_n=11))
        names = dict(runner.checks())
        self.assertIsNone(names["oracle-equivalence-n11"])
        self.assertIsNotNone(names["oracle-equivalence-n10"])

    def test_failure_reported(self):
        runner = SelfTestRunner(small_config())

        def broken():
            raise AssertionError("formula disagrees")

        runner.checks = lambda: [("broken", broken), ("skipped", None)]
        results = runner.run_all_sync()
        self.assertEqual(results[0].status, FAILED)
        self.assertFalse(results[0].ok)
        self.assertIn("formula disagrees", results[0].detail)
        self.assertEqual(results[1].status, SKIPPED)
        self.assertTrue(results[1].ok)


if __name__ == "__main__":
    unittest.main()
