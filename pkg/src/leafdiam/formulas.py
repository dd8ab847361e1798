"""Closed-form extremal values for trees of a given order.

L-direction: fewest/most leaves over trees of order n and diameter d.
D-direction: smallest/largest diameter over trees of order n with exactly f
leaves.  Everything is exact integer arithmetic; ceiling division is done as
(a + b - 1) // b, never through floats.
"""

from __future__ import annotations

from .errors import Infeasible


def _ceil_div(a: int, b: int) -> int:
    return (a + b - 1) // b


def feasible_leaf_diameter(n: int, d: int) -> bool:
    """A tree of order n and diameter d exists iff 1 <= d <= n-1, with d = 1
    forcing n = 2."""
    return n >= 2 and 1 <= d <= n - 1 and (d != 1 or n == 2)


def feasible_order_leaves(n: int, f: int) -> bool:
    """A tree of order n with exactly f leaves exists iff f >= 2 and n >= f+1."""
    return f >= 2 and n >= f + 1


def _require_leaf_diameter(n: int, d: int) -> None:
    if feasible_leaf_diameter(n, d):
        return
    if n < 2:
        raise Infeasible(f"order must be at least 2, got {n}")
    if d == 1 and n != 2:
        raise Infeasible("d=1 requires n=2")
    raise Infeasible(f"diameter {d} is outside 1..{n - 1} for order {n}")


def _require_order_leaves(n: int, f: int) -> None:
    if feasible_order_leaves(n, f):
        return
    if f < 2:
        raise Infeasible(f"leaf count must be at least 2, got {f}")
    raise Infeasible(f"{f} leaves require order at least {f + 1}, got {n}")


def min_leaves(n: int, d: int) -> int:
    """Minimum leaf count over trees of order n and diameter d."""
    _require_leaf_diameter(n, d)
    if d == 1:
        return 2
    if d % 2 == 0:
        return _ceil_div(2 * (n - 1), d)
    return _ceil_div(2 * (n - 2), d - 1)


def lesniak_bound(n: int, d: int) -> int:
    """The 1975 lower bound ceil(2(n-1)/d) on min_leaves; tight for even d."""
    _require_leaf_diameter(n, d)
    return _ceil_div(2 * (n - 1), d)


def max_leaves(n: int, d: int) -> int:
    """Maximum leaf count over trees of order n and diameter d: n - d + 1."""
    _require_leaf_diameter(n, d)
    if d == 1:
        return 2
    return n - d + 1


def min_diameter(n: int, f: int) -> int:
    """Minimum diameter over trees of order n with exactly f leaves.

    With k, r = divmod(n - 2, f) this is 2k+1 when r = 0 and 2k+2 otherwise,
    which folds the three published cases (star, one long leg, r long legs)
    into a single expression.
    """
    _require_order_leaves(n, f)
    k, r = divmod(n - 2, f)
    return 2 * k + 1 if r == 0 else 2 * k + 2


def max_diameter(n: int, f: int) -> int:
    """Maximum diameter over trees of order n with exactly f leaves: n - f + 1."""
    _require_order_leaves(n, f)
    return n - f + 1
