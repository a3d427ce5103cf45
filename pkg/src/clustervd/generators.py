"""Graph families used by the CLI ``gen`` verb and the test suite.

All random generators take a seed (or a ``random.Random``) and are
deterministic under it.
"""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def grid_graph(rows: int, cols: int) -> Graph:
    """Vertex (r, c) is numbered r*cols + c."""
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


def gnp_graph(n: int, p: float, seed=None) -> Graph:
    """Erdos-Renyi G(n, p): pairs (u, v), u < v, are visited in lexicographic
    order and each becomes an edge when the next ``rng.random()`` is < p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = _rng(seed)
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def random_triangle_free(n: int, max_edges: int, seed=None, max_degree: int | None = None,
                         base: Graph | None = None) -> Graph:
    """Random triangle-free graph: candidate pairs are tried in random order
    and kept while no triangle appears and the degree cap holds.  ``base``
    seeds the edge set (it must itself be triangle-free)."""
    rng = _rng(seed)
    adj = [set() for _ in range(n)]
    edges = []
    if base is not None:
        for u, v in base.edges:
            adj[u].add(v)
            adj[v].add(u)
            edges.append((u, v))
    pairs = [(u, v) for u, v in combinations(range(n), 2) if v not in adj[u]]
    rng.shuffle(pairs)
    for u, v in pairs:
        if len(edges) >= max_edges:
            break
        if adj[u] & adj[v]:
            continue
        if max_degree is not None and (len(adj[u]) >= max_degree or len(adj[v]) >= max_degree):
            continue
        adj[u].add(v)
        adj[v].add(u)
        edges.append((u, v))
    return Graph(n, edges)


def random_bipartite(r: int, s: int, p: float, seed=None) -> Graph:
    """Vertices 0..r-1 on side X, r..r+s-1 on side Y; ``parts`` is set."""
    rng = _rng(seed)
    edges = [(u, v) for u in range(r) for v in range(r, r + s) if rng.random() < p]
    return Graph(r + s, edges, parts=["X"] * r + ["Y"] * s)
