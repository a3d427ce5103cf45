"""Hardness reductions as instance generators with solution maps.

Each generator returns a :class:`ReducedInstance` that remembers where every
produced vertex came from, so a solution on either side can be carried to
the other with :meth:`ReducedInstance.lift` / :meth:`ReducedInstance.restrict`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, permutations

from .errors import ReductionError, VerificationError
from .graph import Graph, Pattern, PatternWitness, bipartition, complement, find_induced, join
from .oracle import verify
from .solution import Variant

NOT_NORMALIZED = "NOT_NORMALIZED"


class ReductionKind(str, Enum):
    DENSE_VC_TO_CVD = "dense"
    SUBDIV3 = "subdiv3"
    AMPLIFY = "amplify"
    CCVD_GADGET = "ccvd-gadget"


@dataclass(frozen=True)
class ReducedInstance:
    """Source instance (graph, k) and produced instance (graph, k').

    ``vertex_origin[v]`` is a tuple tag for produced vertex ``v``:

    - ``("copy1", v)`` / ``("copy2", v)``, ``("pad1", i)`` / ``("pad2", i)`` for the dense reduction
    - ``("orig", v)`` and ``("sub", round, (x, y), role)`` with role ``e_x``, ``e_xy`` or ``e_y``
    - ``("source", v)`` and ``("gadget", name)`` for the gadget reduction
    """

    kind: ReductionKind
    source: Graph
    k: int
    produced: Graph
    k_prime: int
    vertex_origin: tuple
    black_set: frozenset | None = None
    params: dict = field(default_factory=dict)
    stages: tuple = ()

    def counts(self) -> dict:
        return {"n": self.source.n, "m": self.source.m,
                "n_prime": self.produced.n, "m_prime": self.produced.m}

    def lift(self, s) -> frozenset:
        return _LIFT[self.kind](self, s)

    def restrict(self, s_prime) -> frozenset:
        return _RESTRICT[self.kind](self, s_prime)

    def sidecar(self) -> dict:
        """JSON-ready description (produced graph excluded)."""
        return {
            "schema": "clustervd/1",
            "kind": self.kind.value,
            "params": dict(self.params),
            "k": self.k,
            "k'": self.k_prime,
            "counts": self.counts(),
            "vertex_origin": [_jsonable(tag) for tag in self.vertex_origin],
            "black_set": None if self.black_set is None else sorted(self.black_set),
        }


def _jsonable(tag):
    if isinstance(tag, tuple):
        return [_jsonable(x) for x in tag]
    return tag


def _require(g: Graph, s, variant: Variant, side: str) -> frozenset:
    s = frozenset(s)
    verdict = verify(g, s, variant)
    if not verdict:
        raise VerificationError(f"{side} set rejected: {verdict.reason}", verdict)
    return s


# ---------------------------------------------------------------------------
# vertex cover -> cluster vertex deletion on dense graphs
# ---------------------------------------------------------------------------

def vc_to_cvd_dense(g: Graph, k: int) -> ReducedInstance:
    """Pad with max(0, 2k-n) isolated vertices, complement, and join two copies."""
    if k < 0:
        raise ValueError("budget must be non-negative")
    pad = max(0, 2 * k - g.n)
    n_pad = g.n + pad
    comp = complement(Graph(n_pad, g.edges))
    produced = join(comp, comp)
    origin = []
    for copy in (1, 2):
        origin += [(f"copy{copy}", v) for v in range(g.n)]
        origin += [(f"pad{copy}", i) for i in range(pad)]
    return ReducedInstance(ReductionKind.DENSE_VC_TO_CVD, g, k, produced, 2 * k, tuple(origin),
                           params={"padding": pad})


def lift_dense(ri: ReducedInstance, s) -> frozenset:
    s = _require(ri.source, s, Variant.VERTEX_COVER, "source")
    shift = ri.produced.n // 2
    return s | frozenset(v + shift for v in s)


def restrict_dense(ri: ReducedInstance, s_prime) -> frozenset:
    s_prime = _require(ri.produced, s_prime, Variant.CVD, "produced")
    shift = ri.produced.n // 2
    first = frozenset(v for v in s_prime if v < shift)
    second = frozenset(v - shift for v in s_prime if v >= shift)
    chosen = first if len(first) <= len(second) else second
    return frozenset(v for v in chosen if v < ri.source.n)


# ---------------------------------------------------------------------------
# 3-subdivision and girth amplification
# ---------------------------------------------------------------------------

_ROLES = ("e_x", "e_xy", "e_y")


def _triangle_check(g: Graph) -> None:
    tri = find_induced(g, Pattern.TRIANGLE)
    if tri is not None:
        raise ReductionError("source graph contains a triangle", witness=tri)


def _subdivide(g: Graph, round_no: int, origin_prev) -> tuple[Graph, list]:
    n = g.n
    edges = []
    origin = list(origin_prev)
    for i, (x, y) in enumerate(g.sorted_edges()):
        ex, exy, ey = n + 3 * i, n + 3 * i + 1, n + 3 * i + 2
        edges += [(x, ex), (ex, exy), (exy, ey), (ey, y)]
        origin += [("sub", round_no, (x, y), role) for role in _ROLES]
    return Graph(n + 3 * g.m, edges), origin


def subdivide3(g: Graph, k: int) -> ReducedInstance:
    """Replace every edge xy by the path x, e_x, e_xy, e_y, y; k' = k + m.

    Edge i of ``g.sorted_edges()`` gets e_x = n+3i, e_xy = n+3i+1, e_y = n+3i+2.
    """
    if k < 0:
        raise ValueError("budget must be non-negative")
    _triangle_check(g)
    produced, origin = _subdivide(g, 1, [("orig", v) for v in range(g.n)])
    return ReducedInstance(ReductionKind.SUBDIV3, g, k, produced, k + g.m, tuple(origin))


def _edge_triples(ri: ReducedInstance):
    n = ri.source.n
    for i, (x, y) in enumerate(ri.source.sorted_edges()):
        yield x, y, n + 3 * i, n + 3 * i + 1, n + 3 * i + 2


def lift_subdiv(ri: ReducedInstance, s) -> frozenset:
    s = _require(ri.source, s, Variant.CVD, "source")
    out = set(s)
    for x, y, ex, exy, ey in _edge_triples(ri):
        if (x in s) == (y in s):
            out.add(exy)
        elif x in s:
            out.add(ey)
        else:
            out.add(ex)
    return frozenset(out)


def _shrink(g: Graph, s: set, order) -> None:
    """Drop vertices from ``s`` (in ``order``) while it stays a CVD set."""
    for v in order:
        if v in s:
            s.discard(v)
            if not verify(g, s, Variant.CVD):
                s.add(v)


def restrict_subdiv(ri: ReducedInstance, s_prime) -> frozenset:
    """Normalize so each edge keeps exactly one subdivision vertex, then
    intersect with the source vertices."""
    s = set(_require(ri.produced, s_prime, Variant.CVD, "produced"))
    if len(s) > ri.k_prime:
        raise ReductionError(f"produced set has {len(s)} vertices, budget is {ri.k_prime}")
    g2 = ri.produced
    order = sorted(range(ri.source.n, g2.n), reverse=True) + sorted(range(ri.source.n), reverse=True)
    triples = list(_edge_triples(ri))
    while True:
        _shrink(g2, s, order)
        move = None
        for x, y, ex, exy, ey in triples:
            hit = {ex, exy, ey} & s
            if len(hit) == 2:
                if hit == {ex, exy}:
                    move = (exy, y)
                elif hit == {exy, ey}:
                    move = (exy, x)
                else:
                    move = (ex, x)
                break
        if move is None:
            break
        s.discard(move[0])
        s.add(move[1])
        if not verify(g2, s, Variant.CVD):
            raise ReductionError("exchange step produced an invalid set", flag=NOT_NORMALIZED)
    return frozenset(v for v in s if v < ri.source.n)


def amplify(g: Graph, k: int, t: int) -> ReducedInstance:
    """Apply the 3-subdivision ``t`` times; girth grows by a factor 4^t."""
    if t < 1:
        raise ValueError("t must be at least 1")
    if k < 0:
        raise ValueError("budget must be non-negative")
    _triangle_check(g)
    stages = []
    cur, budget = g, k
    origin = [("orig", v) for v in range(g.n)]
    for r in range(1, t + 1):
        produced, origin = _subdivide(cur, r, origin)
        stages.append(ReducedInstance(ReductionKind.SUBDIV3, cur, budget, produced,
                                      budget + cur.m, ()))
        cur, budget = produced, budget + cur.m
    return ReducedInstance(ReductionKind.AMPLIFY, g, k, cur, budget, tuple(origin),
                           params={"t": t}, stages=tuple(stages))


def lift_amplify(ri: ReducedInstance, s) -> frozenset:
    for stage in ri.stages:
        s = lift_subdiv(stage, s)
    return frozenset(s)


def restrict_amplify(ri: ReducedInstance, s_prime) -> frozenset:
    for stage in reversed(ri.stages):
        s_prime = restrict_subdiv(stage, s_prime)
    return frozenset(s_prime)


def choose_t(g_target: int, tree_size: int) -> int:
    """max(ceil(log4 g_target), tree_size), computed in integers."""
    if g_target < 3 or tree_size < 1:
        raise ValueError("need g_target >= 3 and tree_size >= 1")
    t = 0
    while 4 ** t < g_target:
        t += 1
    return max(t, tree_size)


# ---------------------------------------------------------------------------
# cluster vertex deletion -> connected cluster vertex deletion
# ---------------------------------------------------------------------------

def _gadget(g: int, r: int, s: int):
    if g < 3 or g % 2 == 0:
        raise ValueError("gadget parameter g must be an odd integer >= 3")
    if r < 1 or s < 1:
        raise ValueError("r and s must be positive")
    names: list[tuple] = []
    index: dict[tuple, int] = {}

    def add(name):
        index[name] = len(names)
        names.append(name)
        return index[name]

    edges = []
    for side, link, count in (("x", "a", r), ("y", "b", s)):
        prev = None
        for i in range(1, count + 1):
            root = add((side, i, 0))
            if prev is not None:
                edges.append((prev, root))
            prev = add((link, i))
            edges.append((root, prev))
    edges.append((index[("a", r)], index[("b", s)]))
    for side, count in (("x", r), ("y", s)):
        for i in range(1, count + 1):
            for ell in range(1, g + 1):
                edges.append((index[(side, i, ell - 1)], add((side, i, ell))))
    black = list(range(len(names)))
    for v in black:
        p1 = add(("pend", names[v], 1))
        p2 = add(("pend", names[v], 2))
        edges += [(v, p1), (p1, p2)]
    return Graph(len(names), edges), frozenset(black), names, index


def build_gadget_tree(g: int, r: int, s: int) -> tuple[Graph, frozenset]:
    """The tree H(g, r, s) and its black set (spine and hanging-path vertices).

    Spines x_{i,0}, a_i (i = 1..r) and y_{j,0}, b_j (j = 1..s) are paths joined
    by the edge a_r b_s; each x_{i,0} and y_{j,0} carries a hanging path of
    length g, and every black vertex gets a pendant 2-path.
    """
    tree, black, _, _ = _gadget(g, r, s)
    return tree, black


def gadget_names(g: int, r: int, s: int) -> list[tuple]:
    """Names of the vertices of H(g, r, s) in id order."""
    return _gadget(g, r, s)[2]


def cvd_to_ccvd(g: Graph, k: int, g_girth: int) -> ReducedInstance:
    """Attach H(g', |X|, |Y|) to a bipartite graph; g' is g_girth rounded up to odd."""
    if k < 0:
        raise ValueError("budget must be non-negative")
    if g_girth < 3:
        raise ValueError("g_girth must be at least 3")
    g_odd = g_girth if g_girth % 2 else g_girth + 1
    if g.parts is not None:
        xs = sorted(v for v in range(g.n) if g.parts[v] == "X")
        ys = sorted(v for v in range(g.n) if g.parts[v] == "Y")
        bad = [(u, v) for u, v in g.edges if g.parts[u] == g.parts[v]]
        if bad:
            raise ReductionError("edge inside a declared side", witness=bad[0])
    else:
        split = bipartition(g)
        if split is None:
            witness = find_induced(g, Pattern.TRIANGLE) or find_induced(g, Pattern.ODD_HOLE)
            raise ReductionError("source graph is not bipartite", witness=witness)
        xs, ys = sorted(split[0]), sorted(split[1])
    if not xs or not ys:
        raise ReductionError("both sides of the bipartition must be nonempty")
    tree, black, names, index = _gadget(g_odd, len(xs), len(ys))
    n = g.n
    edges = list(g.edges) + [(u + n, v + n) for u, v in tree.edges]
    for i, v in enumerate(xs, 1):
        edges.append((v, n + index[("x", i, g_odd)]))
    for j, v in enumerate(ys, 1):
        edges.append((v, n + index[("y", j, g_odd)]))
    produced = Graph(n + tree.n, edges)
    origin = [("source", v) for v in range(n)] + [("gadget", name) for name in names]
    return ReducedInstance(ReductionKind.CCVD_GADGET, g, k, produced, k + (g_odd + 2) * n,
                           tuple(origin), frozenset(v + n for v in black),
                           params={"g": g_odd, "r": len(xs), "s": len(ys)})


def lift_gadget(ri: ReducedInstance, s) -> frozenset:
    return _require(ri.source, s, Variant.CVD, "source") | ri.black_set


def restrict_gadget(ri: ReducedInstance, s_prime) -> frozenset:
    s_prime = frozenset(s_prime)
    if not ri.black_set <= s_prime:
        missing = min(ri.black_set - s_prime)
        raise ReductionError(f"set misses black vertex {missing}", witness=missing, flag=NOT_NORMALIZED)
    s_prime = _require(ri.produced, s_prime, Variant.CONNECTED_CVD, "produced")
    return frozenset(v for v in s_prime if v < ri.source.n)


_LIFT = {ReductionKind.DENSE_VC_TO_CVD: lift_dense, ReductionKind.SUBDIV3: lift_subdiv,
         ReductionKind.AMPLIFY: lift_amplify, ReductionKind.CCVD_GADGET: lift_gadget}
_RESTRICT = {ReductionKind.DENSE_VC_TO_CVD: restrict_dense, ReductionKind.SUBDIV3: restrict_subdiv,
             ReductionKind.AMPLIFY: restrict_amplify, ReductionKind.CCVD_GADGET: restrict_gadget}


# ---------------------------------------------------------------------------
# dichotomy
# ---------------------------------------------------------------------------

class Side(str, Enum):
    POLYNOMIAL = "POLYNOMIAL"
    NP_COMPLETE = "NP_COMPLETE"


@dataclass(frozen=True)
class ClassifyVerdict:
    side: Side
    witness: PatternWitness | None = None

    def to_json(self) -> dict:
        w = self.witness
        return {"schema": "clustervd/1", "side": self.side.value,
                "witness": None if w is None else {"kind": w.kind.value, "vertices": list(w.vertices)}}


def dichotomy_classify(h: Graph) -> ClassifyVerdict:
    """H-free CVD is polynomial iff H is an induced subgraph of P4, i.e. a
    forest without induced 3P1 or 2P2.  Witness search order: shortest
    cycle, then 2P2, then 3P1."""
    for kind in (Pattern.CYCLE, Pattern.TWO_P2, Pattern.THREE_P1):
        w = find_induced(h, kind)
        if w is not None:
            return ClassifyVerdict(Side.NP_COMPLETE, w)
    return ClassifyVerdict(Side.POLYNOMIAL)


def all_graphs_up_to_iso(max_n: int) -> list[Graph]:
    """One representative per isomorphism class, 1 <= n <= max_n (small n only)."""
    reps = []
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        seen = set()
        perms = list(permutations(range(n)))
        for bits in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
            key = min(tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges)) for p in perms)
            if key in seen:
                continue
            seen.add(key)
            reps.append(Graph(n, edges))
    return reps
