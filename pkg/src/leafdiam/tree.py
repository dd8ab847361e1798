"""Labeled trees on vertices 0..n-1: validation, distances, diameter, text I/O.

Trees are immutable after construction and every operation here is a pure
function, so values can be shared freely across workers.  All tie-breaking
(neighbor order, endpoint choice, path reconstruction) is by vertex id, which
makes diametral paths and downstream rewiring traces reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import DegenerateOrder, NotATree, ParseError, VertexOutOfRange


@dataclass(frozen=True)
class Tree:
    """Undirected labeled tree: vertex count plus sorted adjacency lists."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def __repr__(self) -> str:
        return f"Tree(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class TreePath:
    """Ordered sequence of distinct vertices, consecutive ones adjacent."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        """Edge count of the path."""
        return len(self.vertices) - 1

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)


def _check_vertex(t: Tree, v: int) -> None:
    if not 0 <= v < t.n:
        raise VertexOutOfRange(f"vertex {v} not in 0..{t.n - 1}")


def build_tree(n: int, edges) -> Tree:
    """Validate an edge list and return the canonical Tree.

    Raises NotATree on wrong edge count, self-loops, duplicate edges or a
    disconnected graph; VertexOutOfRange on endpoints outside 0..n-1.
    """
    if n < 1:
        raise NotATree(f"order must be at least 1, got {n}")
    seen: set[tuple[int, int]] = set()
    neighbors: list[list[int]] = [[] for _ in range(n)]
    count = 0
    for u, v in edges:
        if not 0 <= u < n:
            raise VertexOutOfRange(f"vertex {u} not in 0..{n - 1}")
        if not 0 <= v < n:
            raise VertexOutOfRange(f"vertex {v} not in 0..{n - 1}")
        if u == v:
            raise NotATree(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise NotATree(f"duplicate edge {key}")
        seen.add(key)
        neighbors[u].append(v)
        neighbors[v].append(u)
        count += 1
    if count != n - 1:
        raise NotATree(f"a tree of order {n} needs {n - 1} edges, got {count}")

    # n-1 edges and no duplicates: connected <=> acyclic <=> tree
    reached = [False] * n
    reached[0] = True
    stack = [0]
    total = 1
    while stack:
        u = stack.pop()
        for v in neighbors[u]:
            if not reached[v]:
                reached[v] = True
                total += 1
                stack.append(v)
    if total != n:
        raise NotATree("graph is disconnected")

    return Tree(n=n, adj=tuple(tuple(sorted(ns)) for ns in neighbors))


def degree(t: Tree, v: int) -> int:
    """Degree of vertex v."""
    _check_vertex(t, v)
    return len(t.adj[v])


def leaves(t: Tree) -> list[int]:
    """Sorted list of degree-1 vertices; requires order >= 2."""
    if t.n == 1:
        raise DegenerateOrder("the single-vertex tree has no leaves")
    return [v for v in range(t.n) if len(t.adj[v]) == 1]


def _bfs(t: Tree, source: int) -> tuple[list[int], list[int]]:
    """Distances and parent pointers from source (parent of source is -1)."""
    dist = [-1] * t.n
    parent = [-1] * t.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in t.adj[u]:
            if dist[v] < 0:
                dist[v] = du + 1
                parent[v] = u
                queue.append(v)
    return dist, parent


def bfs_distances(t: Tree, source: int) -> list[int]:
    """Unweighted shortest-path distances from source to every vertex."""
    _check_vertex(t, source)
    return _bfs(t, source)[0]


def diameter_and_path(t: Tree) -> tuple[int, TreePath]:
    """Exact diameter and the canonical diametral path.

    Double BFS with id tie-breaking: from vertex 0 take the smallest-id
    farthest vertex as the first endpoint, repeat from there for the second,
    then read the path off the parent pointers.

    When the diameter is odd the two orientations of that path put different
    vertices at index floor(d/2); we keep the orientation whose index-
    floor(d/2) vertex has the larger degree.  Downstream rewiring funnels
    subtrees onto that vertex, and this choice pins the funnel target so a
    tree that is already funneled stays fixed instead of re-centering onto
    the opposite middle vertex.
    """
    if t.n == 1:
        return 0, TreePath((0,))
    dist0, _ = _bfs(t, 0)
    far = max(dist0)
    a = dist0.index(far)
    dist_a, parent_a = _bfs(t, a)
    diam = max(dist_a)
    b = dist_a.index(diam)
    route = [b]
    while route[-1] != a:
        route.append(parent_a[route[-1]])
    route.reverse()
    if diam % 2 == 1:
        c = diam // 2
        if len(t.adj[route[c + 1]]) > len(t.adj[route[c]]):
            route.reverse()
    return diam, TreePath(tuple(route))


def path_between(t: Tree, x: int, y: int) -> TreePath:
    """The unique path from x to y."""
    _check_vertex(t, x)
    _check_vertex(t, y)
    _, parent = _bfs(t, x)
    route = [y]
    while route[-1] != x:
        route.append(parent[route[-1]])
    route.reverse()
    return TreePath(tuple(route))


def read_tree(text: str) -> Tree:
    """Parse the plain tree text format (see write_tree)."""
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise ParseError(1, "missing vertex count")
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(1, f"expected vertex count, got {lines[0]!r}") from None
    if n < 1:
        raise ParseError(1, f"vertex count must be positive, got {n}")
    edges = []
    for i, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            continue
        parts = raw.split()
        if len(parts) != 2:
            raise ParseError(i, f"expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(i, f"expected 'u v', got {raw!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(i, f"vertex id out of range 0..{n - 1} in {raw!r}")
        edges.append((u, v))
    return build_tree(n, edges)


def write_tree(t: Tree) -> str:
    """Canonical text: order line, then 'u v' edge lines (u < v, lex sorted)."""
    out = [str(t.n)]
    out.extend(f"{u} {v}" for u, v in t.edges())
    return "\n".join(out) + "\n"


def to_dot(t: Tree) -> str:
    """DOT text with edges in the canonical order."""
    lines = ["graph T {"]
    if t.n == 1:
        lines.append("  0;")
    lines.extend(f"  {u} -- {v};" for u, v in t.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
