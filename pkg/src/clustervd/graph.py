"""Simple undirected graphs on vertices 0..n-1 and the structural queries used
throughout the package: complement, union/join, components, girth, induced
pattern search and bipartition.

Every function here is pure; ``Graph`` values are immutable.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Sequence

from .errors import GraphFormatError

# Extended naturals: plain ints plus this value. It absorbs addition and is
# the top element for min/max, which is exactly what float('inf') gives us.
INFINITY = math.inf


def is_infinite(value) -> bool:
    return value == INFINITY


class Graph:
    """Immutable simple graph.

    ``weights`` (optional) is a tuple of positive ints, one per vertex.
    ``parts`` (optional) is a tuple of ``"X"``/``"Y"`` labels forming a proper
    2-coloring.
    """

    __slots__ = ("n", "edges", "weights", "parts", "_adj", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), weights=None, parts=None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = set()
        count = 0
        for u, v in edges:
            count += 1
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            norm.add((u, v) if u < v else (v, u))
        if len(norm) != count:
            raise ValueError("duplicate edge")
        adj = [set() for _ in range(n)]
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
        if weights is not None:
            weights = tuple(int(w) for w in weights)
            if len(weights) != n or any(w < 1 for w in weights):
                raise ValueError("weights must give a positive integer for every vertex")
        if parts is not None:
            parts = tuple(parts)
            if len(parts) != n or any(p not in ("X", "Y") for p in parts):
                raise ValueError("parts must label every vertex X or Y")
            for u, v in norm:
                if parts[u] == parts[v]:
                    raise ValueError(f"edge ({u}, {v}) lies inside part {parts[u]}")
        self.n = n
        self.edges = frozenset(norm)
        self.weights = weights
        self.parts = parts
        self._adj = tuple(frozenset(a) for a in adj)
        self._masks = None

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def adj(self) -> tuple[frozenset, ...]:
        return self._adj

    def neighbors(self, v: int) -> frozenset:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def weight(self, v: int) -> int:
        return 1 if self.weights is None else self.weights[v]

    def total_weight(self, vertices: Iterable[int] | None = None) -> int:
        if vertices is None:
            vertices = range(self.n)
        return sum(self.weight(v) for v in vertices)

    def masks(self) -> tuple[int, ...]:
        """Adjacency as int bitmasks (bit u of masks()[v] set iff uv is an edge)."""
        if self._masks is None:
            self._masks = tuple(sum(1 << u for u in a) for a in self._adj)
        return self._masks

    def with_weights(self, weights) -> Graph:
        return Graph(self.n, self.edges, weights, self.parts)

    def induced(self, keep: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph relabelled to 0..k-1, plus the new-to-old id map."""
        old = sorted(set(keep))
        new = {v: i for i, v in enumerate(old)}
        edges = [(new[u], new[v]) for u, v in self.edges if u in new and v in new]
        weights = None if self.weights is None else [self.weights[v] for v in old]
        parts = None if self.parts is None else [self.parts[v] for v in old]
        return Graph(len(old), edges, weights, parts), old

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n, self.edges, self.weights, self.parts) == (
            other.n, other.edges, other.weights, other.parts)

    def __hash__(self):
        return hash((self.n, self.edges, self.weights, self.parts))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


class Pattern(str, Enum):
    P3 = "P3"
    P4 = "P4"
    TRIANGLE = "TRIANGLE"
    THREE_P1 = "3P1"
    TWO_P2 = "2P2"
    CYCLE = "CYCLE"
    ODD_HOLE = "ODD_HOLE"


@dataclass(frozen=True)
class PatternWitness:
    """Vertices realizing an induced pattern, listed in path/cycle order where
    that applies (for 2P2: the two edges as consecutive pairs)."""

    kind: Pattern
    vertices: tuple[int, ...]


# ---------------------------------------------------------------------------
# Graph operations
# ---------------------------------------------------------------------------

def complement(g: Graph) -> Graph:
    edges = [(u, v) for u, v in combinations(range(g.n), 2) if v not in g.adj[u]]
    return Graph(g.n, edges, g.weights)


def _merge_weights(g1: Graph, g2: Graph):
    if g1.weights is None and g2.weights is None:
        return None
    return [g1.weight(v) for v in range(g1.n)] + [g2.weight(v) for v in range(g2.n)]


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Vertices of ``g2`` are shifted by ``g1.n``."""
    off = g1.n
    edges = list(g1.edges) + [(u + off, v + off) for u, v in g2.edges]
    parts = None
    if g1.parts is not None and g2.parts is not None:
        parts = g1.parts + g2.parts
    return Graph(g1.n + g2.n, edges, _merge_weights(g1, g2), parts)


def join(g1: Graph, g2: Graph) -> Graph:
    off = g1.n
    edges = list(g1.edges) + [(u + off, v + off) for u, v in g2.edges]
    edges += [(u, v + off) for u in range(g1.n) for v in range(g2.n)]
    return Graph(g1.n + g2.n, edges, _merge_weights(g1, g2))


def components_within(adj: Sequence[Iterable[int]], vertices: Iterable[int]) -> list[list[int]]:
    """Connected components of the subgraph induced by ``vertices``, each
    sorted, ordered by smallest member."""
    remaining = set(vertices)
    comps = []
    for s in sorted(remaining):
        if s not in remaining:
            continue
        remaining.discard(s)
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w in remaining:
                    remaining.discard(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def co_components_within(adj: Sequence[frozenset], vertices: Iterable[int]) -> list[list[int]]:
    """Components of the complement of the induced subgraph, without building
    the complement."""
    remaining = set(vertices)
    comps = []
    for s in sorted(remaining):
        if s not in remaining:
            continue
        remaining.discard(s)
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            nonadj = [w for w in remaining if w not in adj[u]]
            for w in nonadj:
                remaining.discard(w)
                comp.append(w)
                queue.append(w)
        comps.append(sorted(comp))
    return comps


def components(g: Graph) -> list[frozenset]:
    return [frozenset(c) for c in components_within(g.adj, range(g.n))]


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components_within(g.adj, range(g.n))) == 1


def is_cluster(g: Graph) -> bool:
    """Direct check: every component is a clique."""
    for comp in components_within(g.adj, range(g.n)):
        k = len(comp)
        if any(len(g.adj[v]) != k - 1 for v in comp):
            return False
    return True


def shortest_cycle(g: Graph) -> list[int] | None:
    """A shortest cycle as a vertex list, or None for forests."""
    best = None
    best_len = INFINITY
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best_len:
                break
            for v in g.adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif v != parent[u]:
                    length = dist[u] + dist[v] + 1
                    if length < best_len:
                        best_len = length
                        best = (parent, u, v)
        if best_len == 3:
            break
    if best is None:
        return None
    parent, u, v = best
    left = []
    while u != -1:
        left.append(u)
        u = parent[u]
    right = []
    while v != -1:
        right.append(v)
        v = parent[v]
    # both walks end at the BFS root; keep it once
    return left[::-1] + right[:-1]


def girth(g: Graph):
    cycle = shortest_cycle(g)
    return INFINITY if cycle is None else len(cycle)


def _find_p3(g: Graph):
    adj = g.adj
    for v in range(g.n):
        nb = sorted(adj[v])
        for a, b in combinations(nb, 2):
            if b not in adj[a]:
                return (a, v, b)
    return None


def _find_p4(g: Graph):
    adj = g.adj
    for a in range(g.n):
        for b in sorted(adj[a]):
            for c in sorted(adj[b]):
                if c == a or c in adj[a]:
                    continue
                for d in sorted(adj[c]):
                    if d != b and d not in adj[a] and d not in adj[b]:
                        return (a, b, c, d)
    return None


def _find_triangle(g: Graph):
    adj = g.adj
    for u, v in sorted(g.edges):
        common = adj[u] & adj[v]
        if common:
            return (u, v, min(common))
    return None


def _find_three_p1(g: Graph):
    adj = g.adj
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if v in adj[u]:
                continue
            for w in range(v + 1, g.n):
                if w not in adj[u] and w not in adj[v]:
                    return (u, v, w)
    return None


def _find_two_p2(g: Graph):
    adj = g.adj
    edges = sorted(g.edges)
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1:]:
            if len({a, b, c, d}) < 4:
                continue
            if adj[a] & {c, d} or adj[b] & {c, d}:
                continue
            return (a, b, c, d)
    return None


def _find_odd_hole(g: Graph):
    """Induced odd cycle of length >= 5, smallest vertex first."""
    adj = g.adj
    for s in range(g.n):
        # induced paths starting at s using only vertices > s
        stack = [(s, (s,))]
        while stack:
            u, path = stack.pop()
            for w in sorted(adj[u], reverse=True):
                if w <= s or w in path:
                    continue
                # w may touch only u among the path, except s when closing
                touches = adj[w].intersection(path)
                if len(path) >= 2 and s in adj[w]:
                    if touches == {u, s} and len(path) + 1 >= 5 and (len(path) + 1) % 2 == 1:
                        return path + (w,)
                    continue
                if touches == {u}:
                    stack.append((w, path + (w,)))
    return None


_FINDERS = {
    Pattern.P3: _find_p3,
    Pattern.P4: _find_p4,
    Pattern.TRIANGLE: _find_triangle,
    Pattern.THREE_P1: _find_three_p1,
    Pattern.TWO_P2: _find_two_p2,
    Pattern.ODD_HOLE: _find_odd_hole,
}


def find_induced(g: Graph, kind: Pattern | str) -> PatternWitness | None:
    kind = Pattern(kind)
    if kind is Pattern.CYCLE:
        cycle = shortest_cycle(g)
        return None if cycle is None else PatternWitness(kind, tuple(cycle))
    found = _FINDERS[kind](g)
    return None if found is None else PatternWitness(kind, tuple(found))


def bipartition(g: Graph) -> tuple[frozenset, frozenset] | None:
    side = [None] * g.n
    for s in range(g.n):
        if side[s] is not None:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if side[v] is None:
                    side[v] = 1 - side[u]
                    queue.append(v)
                elif side[v] == side[u]:
                    return None
    xs = frozenset(v for v in range(g.n) if side[v] == 0)
    return xs, frozenset(range(g.n)) - xs


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: ``n m`` header, ``m`` lines ``u v``, then
    optional ``w ...`` (weights) and ``X ...`` (bipartition side) lines.
    Lines starting with ``#`` are comments."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise GraphFormatError("missing 'n m' header", 1)
    lineno, head = rows[0]
    if len(head) != 2:
        raise GraphFormatError("header must be 'n m'", lineno)
    n, m = _ints(head, lineno)
    if n < 0 or m < 0:
        raise GraphFormatError("negative count in header", lineno)
    if len(rows) < 1 + m:
        last = rows[-1][0]
        raise GraphFormatError(f"expected {m} edge lines, found {len(rows) - 1}", last + 1)
    edges = []
    for lineno, tok in rows[1:1 + m]:
        if len(tok) != 2:
            raise GraphFormatError("edge line must be 'u v'", lineno)
        u, v = _ints(tok, lineno)
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise GraphFormatError(f"invalid edge {u} {v}", lineno)
        edges.append((u, v))
    weights = None
    xside = None
    for lineno, tok in rows[1 + m:]:
        if tok[0] == "w" and weights is None:
            weights = _ints(tok[1:], lineno)
            if len(weights) != n or any(w < 1 for w in weights):
                raise GraphFormatError("weight line needs n positive integers", lineno)
        elif tok[0] == "X" and xside is None:
            xside = set(_ints(tok[1:], lineno))
            if any(not 0 <= v < n for v in xside):
                raise GraphFormatError("X line names a vertex out of range", lineno)
        else:
            raise GraphFormatError(f"unexpected line starting with {tok[0]!r}", lineno)
    if len(set((min(e), max(e)) for e in edges)) != len(edges):
        raise GraphFormatError("duplicate edge", rows[0][0])
    parts = None
    if xside is not None:
        parts = ["X" if v in xside else "Y" for v in range(n)]
    try:
        return Graph(n, edges, weights, parts)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphFormatError(f"not an integer in {' '.join(tokens)!r}", lineno) from None


def format_graph(g: Graph, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{g.n} {g.m}")
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    if g.weights is not None:
        lines.append("w " + " ".join(map(str, g.weights)))
    if g.parts is not None:
        lines.append(" ".join(["X"] + [str(v) for v in range(g.n) if g.parts[v] == "X"]))
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path, comments: Sequence[str] = ()) -> None:
    with open(path, "w") as fh:
        fh.write(format_graph(g, comments))
