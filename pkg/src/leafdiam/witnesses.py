"""Deterministic constructors for trees attaining each extremal value.

The minimizers come out as spiders (legs packed as long as the diameter
allows); the maximizers are paths with pendants.  Vertex numbering is part of
the contract: a spider's branch vertex is 0 and leg vertices are numbered
consecutively outward, longest leg first, so witness files are stable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptySpider
from .formulas import (
    _require_leaf_diameter,
    _require_order_leaves,
)
from .tree import Tree, build_tree


@dataclass(frozen=True)
class Spider:
    """A tree with at most one vertex of degree above 2, stored as its
    nonincreasing leg lengths; the branch vertex is implicit."""

    leg_lengths: tuple[int, ...]

    def __post_init__(self):
        if not self.leg_lengths:
            raise EmptySpider("a spider needs at least one leg")
        if any(x < 1 for x in self.leg_lengths):
            raise ValueError(f"leg lengths must be positive: {self.leg_lengths}")
        ordered = tuple(sorted(self.leg_lengths, reverse=True))
        object.__setattr__(self, "leg_lengths", ordered)

    @property
    def order(self) -> int:
        return 1 + sum(self.leg_lengths)

    @property
    def leaf_count(self) -> int:
        return len(self.leg_lengths)

    @property
    def diameter(self) -> int:
        legs = self.leg_lengths
        return legs[0] + legs[1] if len(legs) >= 2 else legs[0]


def spider_to_tree(s: Spider) -> Tree:
    """Lay the spider out as a Tree: branch = 0, legs consecutive outward."""
    edges = []
    nxt = 1
    for length in s.leg_lengths:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_tree(s.order, edges)


def min_leaf_spider(n: int, d: int) -> Spider:
    """Spider of order n and diameter d with the fewest possible legs.

    One leg of length c+1 when d is odd (c = d // 2), then legs of length c
    greedily, remainder last.  The leg count equals min_leaves(n, d).
    """
    _require_leaf_diameter(n, d)
    if d == 1:
        return Spider((1,))
    c = d // 2
    legs = []
    budget = n - 1
    if d % 2 == 1:
        legs.append(c + 1)
        budget -= c + 1
    full, rem = divmod(budget, c)
    legs.extend([c] * full)
    if rem:
        legs.append(rem)
    return Spider(tuple(legs))


def min_diameter_spider(n: int, f: int) -> Spider:
    """Spider of order n with exactly f legs and the smallest diameter.

    Splits the n-1 non-branch vertices into f legs as evenly as possible:
    r' legs of length k+1 and f-r' of length k, where k = (n-2) // f and
    r' = (n-1) - k*f.
    """
    _require_order_leaves(n, f)
    k = (n - 2) // f
    longer = (n - 1) - k * f
    legs = [k + 1] * longer + [k] * (f - longer)
    return Spider(tuple(legs))


def max_leaf_tree(n: int, d: int) -> Tree:
    """Path of length d with all n-d-1 spare vertices pendant on its center."""
    _require_leaf_diameter(n, d)
    edges = [(i, i + 1) for i in range(d)]
    center = d // 2
    edges.extend((center, j) for j in range(d + 1, n))
    return build_tree(n, edges)


def max_diameter_tree(n: int, f: int) -> Tree:
    """Path of length n-f+1 with the f-2 spare vertices pendant on vertex 1."""
    _require_order_leaves(n, f)
    length = n - f + 1
    edges = [(i, i + 1) for i in range(length)]
    edges.extend((1, j) for j in range(length + 1, n))
    return build_tree(n, edges)
