"""
Closed-form bounds and exact formulas for the star chromatic index of 2H-trees
and caterpillars, plus explicit colourings of regular 2H-trees.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .errors import DomainError, NotCaterpillar, ProfileShapeError
from .star_2h import EdgeColoring, min_k
from .tree_model import Tree, TwoHProfile, is_caterpillar, regular_2h_tree

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundReport:
    """
    Lower and upper bounds for a profile, and the exact index when computed.

    source maps "lower", "upper" and "exact" to the rule that produced the value.
    """

    lower: int
    upper: int
    exact: Optional[int] = None
    source: Dict[str, str] = field(default_factory=dict, hash=False)

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"lower bound {self.lower} exceeds upper bound {self.upper}")
        if self.exact is not None and not self.lower <= self.exact <= self.upper:
            raise ValueError(f"exact value {self.exact} outside [{self.lower}, {self.upper}]")

    def to_dict(self) -> Dict[str, object]:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "source": dict(self.source),
        }


def _average_load(profile: TwoHProfile) -> int:
    return math.ceil(Fraction(profile.sigma, profile.t) + Fraction(profile.t + 1, 2))


def lower_bound_2h(profile: TwoHProfile) -> int:
    """max(max degree, ceil(sigma / t + (t + 1) / 2)), in exact arithmetic."""
    return max(profile.max_degree, _average_load(profile))


def upper_bound_2h(profile: TwoHProfile) -> int:
    """n_t + 1 + floor(t / 2) when t <= 2 n_t + 1, otherwise t."""
    t, top = profile.t, profile.n[-1]
    if t <= 2 * top + 1:
        return top + 1 + t // 2
    return t


def regular_2h_index(r: int, t: int) -> int:
    """
    Index of T_{(r,t)}, the 2H-tree whose root has t neighbours of degree r.

    Raises:
        DomainError: r < 1 or t < 2
    """
    if r < 1 or t < 2:
        raise DomainError(f"regular formula needs r >= 1 and t >= 2, got r={r}, t={t}")
    if t <= 2 * r - 1:
        return r + t // 2
    return t


def _near_star_shape(profile: TwoHProfile) -> bool:
    return profile.t >= 2 and all(x == 0 for x in profile.n[:-2])


def near_star_2h_index(profile: TwoHProfile) -> int:
    """
    Index of a 2H-tree where at most two root neighbours have children.

    Raises:
        ProfileShapeError: t < 2, or some n_i with i <= t - 2 is positive
    """
    if not _near_star_shape(profile):
        raise ProfileShapeError(f"profile {profile.n} is not a near-star")
    delta = profile.max_degree
    if profile.n[-2] + 1 == delta and profile.n[-1] + 1 == delta:
        return delta + 1
    return delta


def caterpillar_index(tree: Tree) -> int:
    """
    Index of a caterpillar: max degree, plus one if two vertices of max degree
    are at distance two.

    Raises:
        NotCaterpillar
    """
    if not is_caterpillar(tree):
        raise NotCaterpillar("tree is not a caterpillar")
    delta = tree.max_degree
    if delta == 0:
        return 0
    for v in range(tree.vertex_count):
        if sum(1 for w in tree.neighbors(v) if tree.degree(w) == delta) >= 2:
            return delta + 1
    return delta


def _cyclic_branch_colors(t: int) -> List[List[int]]:
    """Colours of the child edges of u_1..u_t, listed as f_2, ..., f_t."""
    branches = []
    for i in range(t):
        colors = [0] * (t - 1)
        for j in range(1, t // 2 + 1):
            colors[t - j - 1] = t + j
        for j in range(1, (t + 1) // 2):
            colors[j - 1] = (i + j) % t + 1
        branches.append(colors)
    return branches


def _color_regular(r: int, t: int, branches: List[List[int]], palette: int) -> Tuple[Tree, EdgeColoring]:
    tree, profile = regular_2h_tree(r, t)
    assert profile.vertex_map is not None
    colors: Dict[Tuple[int, int], int] = {}
    for i, u_i in enumerate(profile.vertex_map, start=1):
        colors[(0, u_i)] = i
        children = sorted(w for w in tree.neighbors(u_i) if w != 0)
        for w, c in zip(children, branches[i - 1]):
            colors[(u_i, w)] = c
    return tree, EdgeColoring.of(colors, palette)


def cyclic_regular_coloring(t: int) -> Tuple[Tree, EdgeColoring]:
    """
    Star colouring of T_{(t,t)} with t + floor(t / 2) colours.

    Root edge to u_{i+1} gets i + 1. Below u_{i+1}, the last floor(t/2)
    children get t + 1, ..., t + floor(t/2) and the others get the next root
    colours cyclically.

    Raises:
        DomainError: t < 2
    """
    if t < 2:
        raise DomainError(f"cyclic colouring needs t >= 2, got {t}")
    return _color_regular(t, t, _cyclic_branch_colors(t), t + t // 2)


def regular_2h_coloring(r: int, t: int) -> Tuple[Tree, EdgeColoring]:
    """
    Star colouring of T_{(r,t)} matching regular_2h_index(r, t).

    Derived from the cyclic colouring of T_{(t,t)}: for r >= t each branch
    gets r - t fresh colours; for r < t <= 2r - 1 the lowest t - r of the
    high colours are dropped and the rest shifted down; for t >= 2r each branch
    drops its t - r largest colours.

    Raises:
        DomainError: r < 1 or t < 2
    """
    if r < 1 or t < 2:
        raise DomainError(f"regular colouring needs r >= 1 and t >= 2, got r={r}, t={t}")
    half = t // 2
    branches = _cyclic_branch_colors(t)
    if r >= t:
        fresh = list(range(t + half + 1, r + half + 1))
        branches = [colors + fresh for colors in branches]
        palette = r + half
    elif t <= 2 * r - 1:
        dropped = t - r
        branches = [
            [c if c <= t else c - dropped for c in colors if not t < c <= t + dropped]
            for colors in branches
        ]
        palette = r + half
    else:
        keep = r - 1
        branches = [sorted(colors)[:keep] for colors in branches]
        palette = t
    logger.debug("Regular colouring of T_(%d,%d) uses %d colours", r, t, palette)
    return _color_regular(r, t, branches, palette)


def bound_report(profile: TwoHProfile, exact: bool = True) -> BoundReport:
    """Bounds for a profile, with the exact index from the cheapest applicable rule."""
    source: Dict[str, str] = {}
    load = _average_load(profile)
    lower = max(profile.max_degree, load)
    source["lower"] = "max-degree" if profile.max_degree >= load else "average-load"
    upper = upper_bound_2h(profile)
    source["upper"] = "regular-cover" if profile.t <= 2 * profile.n[-1] + 1 else "star"

    value: Optional[int] = None
    if exact:
        if _near_star_shape(profile):
            value = near_star_2h_index(profile)
            source["exact"] = "near-star"
        elif profile.t >= 2 and profile.n[0] == profile.n[-1]:
            value = regular_2h_index(profile.n[0] + 1, profile.t)
            source["exact"] = "regular"
        else:
            value = profile.t + min_k(profile)
            source["exact"] = "ovs-search"
    return BoundReport(lower, upper, value, source)
