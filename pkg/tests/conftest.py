"""Shared test helpers: seeded random trees and an independent distance oracle."""

from leafdiam import build_tree, prufer_decode


def random_tree(rng, n):
    """Uniform random labeled tree of order n from a random Prufer sequence."""
    if n == 1:
        return build_tree(1, [])
    if n == 2:
        return build_tree(2, [(0, 1)])
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)])


def naive_all_pairs(t):
    """Floyd-Warshall distance matrix; deliberately avoids the package's BFS."""
    n = t.n
    inf = float("inf")
    dist = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in t.edges():
        dist[u][v] = dist[v][u] = 1
    for k in range(n):
        row_k = dist[k]
        for i in range(n):
            d_ik = dist[i][k]
            if d_ik == inf:
                continue
            row_i = dist[i]
            for j in range(n):
                alt = d_ik + row_k[j]
                if alt < row_i[j]:
                    row_i[j] = alt
    return dist


def naive_diameter(t):
    """Max pairwise distance straight off the Floyd-Warshall matrix."""
    return max(max(row) for row in naive_all_pairs(t))


def naive_leaf_set(t):
    """Degree-1 vertices recomputed from the raw edge list."""
    deg = [0] * t.n
    for u, v in t.edges():
        deg[u] += 1
        deg[v] += 1
    return {v for v in range(t.n) if deg[v] == 1}
