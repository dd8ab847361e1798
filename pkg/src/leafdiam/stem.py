"""Structure of a tree relative to a designated stem path.

Every vertex originates from the unique stem vertex where its path to the
stem arrives; the decomposition records those origins and the per-stem-vertex
subtree depths.  A path of length k is diametral exactly when every subtree
depth at index i stays within min(i, k-i), which is the predicate exposed as
`is_diametral_by_lemma1`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import InvalidStem, LeafOnStem, NoBigVertex, NotALeaf
from .tree import Tree, TreePath


@dataclass(frozen=True)
class StemDecomposition:
    """Origin map and subtree depths of a tree for one fixed stem.

    origin[x] is the stem index the vertex x originates from (stem vertices
    originate from themselves); subtree_depth[i] is the largest distance from
    stem vertex i to a vertex originating from it; toward_stem[x] is the next
    vertex on the walk from x to its origin (-1 on the stem itself).
    """

    stem: TreePath
    origin: tuple[int, ...]
    subtree_depth: tuple[int, ...]
    toward_stem: tuple[int, ...]


def _validate_stem(t: Tree, stem: TreePath) -> None:
    verts = stem.vertices
    if not verts:
        raise InvalidStem("stem is empty")
    if len(set(verts)) != len(verts):
        raise InvalidStem("stem repeats a vertex")
    for v in verts:
        if not 0 <= v < t.n:
            raise InvalidStem(f"stem vertex {v} not in 0..{t.n - 1}")
    for a, b in zip(verts, verts[1:]):
        if b not in t.adj[a]:
            raise InvalidStem(f"stem vertices {a} and {b} are not adjacent")


def decompose(t: Tree, stem: TreePath) -> StemDecomposition:
    """Compute origins and subtree depths by one BFS out of the stem."""
    _validate_stem(t, stem)
    verts = stem.vertices
    origin = [-1] * t.n
    toward = [-1] * t.n
    dist = [0] * t.n
    queue = deque()
    for i, v in enumerate(verts):
        origin[v] = i
        queue.append(v)
    on_stem = set(verts)
    while queue:
        u = queue.popleft()
        for v in t.adj[u]:
            if origin[v] < 0 and v not in on_stem:
                origin[v] = origin[u]
                toward[v] = u
                dist[v] = dist[u] + 1
                queue.append(v)
    depth = [0] * len(verts)
    for x in range(t.n):
        i = origin[x]
        if dist[x] > depth[i]:
            depth[i] = dist[x]
    return StemDecomposition(
        stem=stem,
        origin=tuple(origin),
        subtree_depth=tuple(depth),
        toward_stem=tuple(toward),
    )


def first_big_vertex(t: Tree, dec: StemDecomposition, leaf: int) -> int:
    """Walk from an off-stem leaf toward its origin; return the first vertex
    of degree at least 3 (the origin itself qualifies last)."""
    if len(t.adj[leaf]) != 1:
        raise NotALeaf(f"vertex {leaf} has degree {len(t.adj[leaf])}")
    if dec.toward_stem[leaf] < 0:
        raise LeafOnStem(f"leaf {leaf} lies on the stem")
    v = dec.toward_stem[leaf]
    while True:
        if len(t.adj[v]) >= 3:
            return v
        nxt = dec.toward_stem[v]
        if nxt < 0:  # reached the origin without meeting a big vertex
            raise NoBigVertex(
                f"no vertex of degree >= 3 between leaf {leaf} and its origin"
            )
        v = nxt


def _depths_fit(dec: StemDecomposition) -> bool:
    k = dec.stem.length
    return all(
        depth <= min(i, k - i) for i, depth in enumerate(dec.subtree_depth)
    )


def is_diametral_by_lemma1(t: Tree, p: TreePath) -> bool:
    """True iff every vertex x with origin index i satisfies
    d(x, v_i) <= min(i, k - i), which characterizes diametral paths."""
    return _depths_fit(decompose(t, p))
