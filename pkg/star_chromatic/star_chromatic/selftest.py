"""
Acceptance checks that cross-validate the algorithms against the oracle and
the closed-form results.
"""

import asyncio
import itertools
import logging
import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Set, Tuple

import numpy as np

from .bounds import (
    caterpillar_index,
    cyclic_regular_coloring,
    lower_bound_2h,
    near_star_2h_index,
    regular_2h_coloring,
    regular_2h_index,
    upper_bound_2h,
)
from .errors import NotRealizable, TooLarge
from .oracle import (
    MAX_ENUMERATION_VERTICES,
    enumerate_trees,
    exact_index_bruteforce,
    validate_coloring,
)
from .ovs_realizer import OVS, realize
from .star_2h import color_2h
from .star_tree import color_tree, star_index
from .tree_model import TwoHProfile, is_caterpillar, materialize
from .utils import random_caterpillar, random_profile

PASSED = "passed"
FAILED = "failed"
SKIPPED = "skipped"


@dataclass
class SelfTestConfig:  # pylint: disable=too-many-instance-attributes
    """
    Sizes of the acceptance sweeps.
    """

    max_n: int = 8
    random_profiles: int = 1000
    sandwich_max_t: int = 30
    sandwich_max_n: int = 30
    near_star_max_t: int = 8
    near_star_max_n: int = 6
    random_caterpillars: int = 1000
    caterpillar_max_vertices: int = 200
    caterpillar_oracle_max_n: int = 10
    regular_max_r: int = 12
    regular_max_t: int = 12
    coloring_max: int = 20
    cyclic_max_t: int = 50
    ovs_max_vertices: int = 5
    ovs_max_outdegree: int = 4
    seed: int = 0
    thread_count: int = 1


@dataclass
class CheckResult:
    name: str
    status: str
    detail: str = ""
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status != FAILED


def check_worked_example() -> str:
    profile = TwoHProfile((2, 3, 3))
    index, coloring = color_2h(profile)
    tree, _ = materialize(profile)
    below = []
    for u_i in (1, 2, 3):
        below.append(sorted(coloring.color(u_i, w) for w in tree.neighbors(u_i) if w != 0))
    if index != 5 or below != [[4, 5], [1, 4, 5], [1, 4, 5]]:
        raise AssertionError(f"profile (2,3,3) gave index {index} with branches {below}")
    return "index 5, branches {4,5} {1,4,5} {1,4,5}"


def check_oracle_equivalence(n: int) -> str:
    count = 0
    for tree in enumerate_trees(n):
        m, coloring = color_tree(tree)
        expected = exact_index_bruteforce(tree)
        if m != expected:
            raise AssertionError(f"tree {tree.edges()}: computed {m}, oracle {expected}")
        if not validate_coloring(tree, coloring).valid:
            raise AssertionError(f"tree {tree.edges()}: colouring rejected")
        count += 1
    return f"{count} trees"


def check_regular_formula(max_r: int, max_t: int) -> str:
    for r in range(1, max_r + 1):
        for t in range(2, max_t + 1):
            index, _ = color_2h(TwoHProfile((r - 1,) * t))
            if index != regular_2h_index(r, t):
                raise AssertionError(f"T_({r},{t}): computed {index}, formula {regular_2h_index(r, t)}")
    return f"r <= {max_r}, 2 <= t <= {max_t}"


def check_bound_sandwich(count: int, max_t: int, max_n: int, seed: int) -> str:
    rng = np.random.default_rng(seed)
    for _ in range(count):
        profile = random_profile(max_t, max_n, rng)
        index, coloring = color_2h(profile)
        if not lower_bound_2h(profile) <= index <= upper_bound_2h(profile):
            raise AssertionError(f"profile {profile.n}: index {index} outside bounds")
        if coloring.palette_size != index:
            raise AssertionError(f"profile {profile.n}: palette {coloring.palette_size} != {index}")
    return f"{count} profiles"


def check_caterpillar_formula(count: int, max_vertices: int, seed: int) -> str:
    rng = np.random.default_rng(seed)
    for _ in range(count):
        spine = int(rng.integers(1, max_vertices // 4 + 1))
        legs = int(rng.integers(0, 4))
        tree = random_caterpillar(spine, legs, int(rng.integers(0, 2**31)))
        if tree.vertex_count > max_vertices:
            continue
        if star_index(tree) != caterpillar_index(tree):
            raise AssertionError(f"caterpillar {tree.edges()}: formula disagrees")
    return f"{count} caterpillars"


def check_caterpillar_oracle(max_n: int) -> str:
    checked = 0
    for n in range(1, max_n + 1):
        for tree in enumerate_trees(n):
            if not is_caterpillar(tree):
                continue
            formula, expected = caterpillar_index(tree), exact_index_bruteforce(tree)
            if formula != expected:
                raise AssertionError(f"caterpillar {tree.edges()}: formula {formula}, oracle {expected}")
            checked += 1
    return f"{checked} caterpillars"


def check_near_star_formula(max_t: int, max_n: int) -> str:
    checked = 0
    for t in range(2, max_t + 1):
        for a in range(max_n + 1):
            for b in range(a, max_n + 1):
                profile = TwoHProfile((0,) * (t - 2) + (a, b))
                index, _ = color_2h(profile)
                if index != near_star_2h_index(profile):
                    raise AssertionError(f"profile {profile.n}: formula disagrees")
                checked += 1
    return f"{checked} profiles"


def check_constructive_colorings(max_t: int, coloring_max: int) -> str:
    for t in range(2, max_t + 1):
        tree, coloring = cyclic_regular_coloring(t)
        if not validate_coloring(tree, coloring).valid or len(coloring.used_colors()) != t + t // 2:
            raise AssertionError(f"cyclic colouring of T_({t},{t}) is wrong")
    for r in range(1, coloring_max + 1):
        for t in range(2, coloring_max + 1):
            tree, coloring = regular_2h_coloring(r, t)
            if not validate_coloring(tree, coloring).valid:
                raise AssertionError(f"colouring of T_({r},{t}) rejected")
            if len(coloring.used_colors()) != regular_2h_index(r, t):
                raise AssertionError(f"colouring of T_({r},{t}) has the wrong palette")
    return f"cyclic t <= {max_t}, regular r, t <= {coloring_max}"


def attainable_outdegrees(n: int) -> Set[Tuple[int, ...]]:
    """Outdegree tuples of every oriented graph on n labelled vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    found = set()
    for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
        out = [0] * n
        for (i, j), c in zip(pairs, choice):
            if c == 1:
                out[i] += 1
            elif c == 2:
                out[j] += 1
        found.add(tuple(out))
    return found


def check_ovs_completeness(max_vertices: int, max_outdegree: int) -> str:
    checked = 0
    for n in range(1, max_vertices + 1):
        attainable = attainable_outdegrees(n)
        for degrees in itertools.product(range(max_outdegree + 1), repeat=n):
            ovs = OVS.of((d, v) for v, d in enumerate(degrees, start=1))
            try:
                realize(ovs)
                realized = True
            except NotRealizable:
                realized = False
            if realized != (degrees in attainable):
                raise AssertionError(f"sequence {degrees}: greedy says {realized}")
            checked += 1
    return f"{checked} sequences"


class SelfTestRunner:
    """
    Runs the acceptance checks, optionally several at a time.
    """

    def __init__(
        self,
        config: Optional[SelfTestConfig] = None,
        on_check_callback: Optional[Callable[[CheckResult], None]] = None,
    ):
        self.config = config or SelfTestConfig()
        self.on_check_callback = on_check_callback
        self.logger = logging.getLogger(__name__)

    def checks(self) -> List[Tuple[str, Optional[Callable[[], str]]]]:
        """(name, check) pairs in report order; a None check is reported as skipped."""
        c = self.config
        plan: List[Tuple[str, Optional[Callable[[], str]]]] = [
            ("worked-example", check_worked_example),
        ]
        for n in range(1, c.max_n + 1):
            if n > MAX_ENUMERATION_VERTICES:
                plan.append((f"oracle-equivalence-n{n}", None))
            else:
                plan.append((f"oracle-equivalence-n{n}", lambda n=n: check_oracle_equivalence(n)))
        plan += [
            ("regular-formula", lambda: check_regular_formula(c.regular_max_r, c.regular_max_t)),
            (
                "bound-sandwich",
                lambda: check_bound_sandwich(c.random_profiles, c.sandwich_max_t, c.sandwich_max_n, c.seed),
            ),
            (
                "caterpillar-formula",
                lambda: check_caterpillar_formula(c.random_caterpillars, c.caterpillar_max_vertices, c.seed),
            ),
            ("caterpillar-oracle", lambda: check_caterpillar_oracle(c.caterpillar_oracle_max_n)),
            ("near-star-formula", lambda: check_near_star_formula(c.near_star_max_t, c.near_star_max_n)),
            ("constructive-colorings", lambda: check_constructive_colorings(c.cyclic_max_t, c.coloring_max)),
            ("ovs-completeness", lambda: check_ovs_completeness(c.ovs_max_vertices, c.ovs_max_outdegree)),
        ]
        return plan

    async def run_check(self, name: str, check: Optional[Callable[[], str]]) -> CheckResult:
        if check is None:
            result = CheckResult(name, SKIPPED, f"too-large: oracle limited to {MAX_ENUMERATION_VERTICES} vertices")
        else:
            start = time.perf_counter()
            try:
                detail = await asyncio.to_thread(check)
                result = CheckResult(name, PASSED, detail, time.perf_counter() - start)
            except TooLarge as e:
                result = CheckResult(name, SKIPPED, f"too-large: {e}")
            except Exception as e:  # pylint: disable=broad-except
                self.logger.error("Check %s failed: %s", name, str(e))
                result = CheckResult(name, FAILED, str(e), time.perf_counter() - start)

        if self.on_check_callback:
            self.on_check_callback(result)
        return result

    async def run_all(self) -> List[CheckResult]:
        tasks = [self.run_check(name, check) for name, check in self.checks()]

        if self.config.thread_count > 1:
            results: List[CheckResult] = []
            for i in range(0, len(tasks), self.config.thread_count):
                batch = tasks[i : i + self.config.thread_count]
                results.extend(await asyncio.gather(*batch))
        else:
            results = [await task for task in tasks]

        order: Dict[str, int] = {name: i for i, (name, _) in enumerate(self.checks())}
        return sorted(results, key=lambda r: order[r.name])

    def run_all_sync(self) -> List[CheckResult]:
        return asyncio.run(self.run_all())
