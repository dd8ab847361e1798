"""Canonicalize any tree into a spider without changing order, diameter,
or leaf set.

Fix the canonical diametral path P once and let z be its central vertex
v_{floor(d/2)}.  While some off-stem leaf u has a first big vertex b(u)
different from z, detach the subtree hanging below b(u) on the (b(u), u)-path
at its topmost vertex w and reattach w to z.  Each step moves every vertex of
that subtree strictly closer to z, so the total distance to z is a strictly
decreasing potential and the loop stops after at most sum_x d(x, z) steps,
at which point at most one vertex (namely z) can have degree above 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import StemNotDiametral
from .stem import StemDecomposition, _depths_fit, decompose, first_big_vertex
from .tree import Tree, TreePath, bfs_distances, build_tree, diameter_and_path, leaves


@dataclass(frozen=True)
class RewireStep:
    """One edge replacement: delete {w, big}, add {w, z}."""

    leaf: int
    big: int
    w: int
    z: int
    potential_before: int
    potential_after: int


@dataclass(frozen=True)
class RewireTrace:
    """Full record of a spiderize run: fixed stem, center index, steps, result."""

    stem: TreePath
    z_index: int
    steps: tuple[RewireStep, ...]
    result: Tree


def is_spider(t: Tree) -> tuple[bool, int | None]:
    """Whether t has at most one vertex of degree >= 3, and which.

    When no vertex forces the branch (t is a path), report the canonical
    central vertex: the smaller-id middle vertex of the canonical diametral
    path.
    """
    big = [v for v in range(t.n) if len(t.adj[v]) >= 3]
    if len(big) > 1:
        return False, None
    if len(big) == 1:
        return True, big[0]
    d, p = diameter_and_path(t)
    return True, min(p.vertices[d // 2], p.vertices[(d + 1) // 2])


def _potential(t: Tree, z: int) -> int:
    return sum(bfs_distances(t, z))


def _qualifying_leaf(t: Tree, dec: StemDecomposition, z: int) -> tuple[int, int] | None:
    """Smallest off-stem leaf whose first big vertex differs from z."""
    for u in leaves(t):
        if dec.toward_stem[u] < 0:  # on the stem
            continue
        b = first_big_vertex(t, dec, u)
        if b != z:
            return u, b
    return None


def rewire_once(
    t: Tree, dec: StemDecomposition, z: int
) -> tuple[Tree, RewireStep] | None:
    """Perform one rewiring step, or return None when no leaf qualifies.

    Requires dec's stem to be a diametral path of t (checked, since the
    correctness of the move leans on the depth bounds of that stem).
    """
    if not _depths_fit(dec):
        raise StemNotDiametral("the supplied stem is not a diametral path")
    if t.n < 2:
        return None
    found = _qualifying_leaf(t, dec, z)
    if found is None:
        return None
    u, b = found

    # w = neighbor of b on the (b, u)-path: last hop of the walk from u up to b
    w = u
    while dec.toward_stem[w] != b:
        w = dec.toward_stem[w]

    key = (w, b) if w < b else (b, w)
    edges = [e for e in t.edges() if e != key]
    edges.append((w, z) if w < z else (z, w))
    new_tree = build_tree(t.n, edges)

    step = RewireStep(
        leaf=u,
        big=b,
        w=w,
        z=z,
        potential_before=_potential(t, z),
        potential_after=_potential(new_tree, z),
    )
    return new_tree, step


def spiderize(t: Tree, validate: bool = True) -> RewireTrace:
    """Iterate rewire_once to its fixpoint and return the full trace.

    With validate=True every intermediate tree is checked against the step
    invariants: unchanged order and leaf set, stem still diametral by the
    depth criterion, and strictly decreasing potential.
    """
    d, stem = diameter_and_path(t)
    c = d // 2
    z = stem.vertices[c]
    if t.n == 1:
        return RewireTrace(stem=stem, z_index=c, steps=(), result=t)

    start_leaves = set(leaves(t))
    steps = []
    cur = t
    while True:
        dec = decompose(cur, stem)
        outcome = rewire_once(cur, dec, z)
        if outcome is None:
            break
        cur, step = outcome
        if validate:
            assert cur.n == t.n
            assert set(leaves(cur)) == start_leaves
            assert _depths_fit(decompose(cur, stem)), "stem lost diametrality"
            assert step.potential_after < step.potential_before
        steps.append(step)

    ok, _branch = is_spider(cur)
    assert ok, "rewiring fixpoint is not a spider"
    return RewireTrace(stem=stem, z_index=c, steps=tuple(steps), result=cur)
