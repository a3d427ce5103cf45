"""Fixed example graphs and small utilities shared by the test modules."""

import random
from itertools import combinations, permutations

from clustervd.cotree import BinaryCotree
from clustervd.graph import Graph
from clustervd.oracle import verify


def nine_vertex_cograph() -> Graph:
    """9-vertex cograph: 0-2-1 path, 4-cycle 5-7-6-8, and 0..4 joined to 5..8."""
    edges = [(0, 2), (2, 1), (5, 7), (7, 6), (6, 8), (8, 5)]
    edges += [(a, b) for a in range(5) for b in range(5, 9)]
    return Graph(9, edges)


NINE_VERTEX_COTREE = "(1 (0 (1 (0 0 1) 2) 3 4) (0 5 6) (0 7 8))"


def chorded_c6() -> Graph:
    """6-cycle 0..5 with the chord 1-4."""
    return Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)])


def two_p3() -> Graph:
    return Graph(6, [(0, 1), (1, 2), (3, 4), (4, 5)])


def canonical(g: Graph):
    """Isomorphism-invariant key (brute force, small n only)."""
    return (g.n, min(tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in g.edges))
                     for p in permutations(range(g.n))))


def minimalize(g: Graph, s, variant="cvd") -> frozenset:
    """Drop vertices while the set stays valid (highest id first)."""
    s = set(s)
    for v in sorted(s, reverse=True):
        s.discard(v)
        if not verify(g, s, variant):
            s.add(v)
    return frozenset(s)


def random_cvd_set(g: Graph, rng: random.Random) -> frozenset:
    """A random CVD set: random seed subset, repaired by deleting P3 vertices."""
    s = {v for v in range(g.n) if rng.random() < 0.2}
    while True:
        verdict = verify(g, s, "cvd")
        if verdict:
            return frozenset(s)
        s.add(rng.choice(verdict.witness))


def binary_shapes(leaves):
    """Every binary tree shape over the ordered leaf list, as nested tuples."""
    if len(leaves) == 1:
        yield leaves[0]
        return
    for cut in range(1, len(leaves)):
        for left in binary_shapes(leaves[:cut]):
            for right in binary_shapes(leaves[cut:]):
                yield (left, right)


def all_binary_cotrees(n: int):
    """All binary cotrees on leaves 0..n-1 (in order) with every labelling,
    including equal labels on adjacent internal nodes."""
    for shape in binary_shapes(list(range(n))):
        internal = _count_internal(shape)
        for bits in range(1 << internal):
            yield _build(shape, bits)


def _count_internal(shape):
    return 0 if isinstance(shape, int) else 1 + _count_internal(shape[0]) + _count_internal(shape[1])


def _build(shape, bits):
    label, left, right, vertex = [], [], [], []
    counter = [0]

    def rec(node):
        if isinstance(node, int):
            label.append(2)
            left.append(-1)
            right.append(-1)
            vertex.append(node)
            return len(label) - 1
        a = rec(node[0])
        b = rec(node[1])
        lab = bits >> counter[0] & 1
        counter[0] += 1
        label.append(lab)
        left.append(a)
        right.append(b)
        vertex.append(-1)
        return len(label) - 1

    rec(shape)
    return BinaryCotree(label, left, right, vertex)


def all_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])
