"""Exact solvers for arbitrary graphs, used as ground truth.

``brute_min`` enumerates vertex subsets; ``branch_cvd`` is the classic
search that hits an induced P3 with one of its three vertices; ``verify``
checks a proposed deletion set and explains a rejection.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable

from .errors import OracleLimitError
from .graph import INFINITY, Graph
from .solution import Solution, Variant

MAX_BRUTE_VERTICES = 22
MAX_BRANCH_DEPTH = 30


class Target(str, Enum):
    CLUSTER = "cluster"      # remainder P3-free
    CLIQUE = "clique"        # remainder complete
    EDGELESS = "edgeless"    # remainder independent


@dataclass(frozen=True)
class TargetPredicate:
    kind: Target
    connected_deleter: bool = False

    @classmethod
    def for_variant(cls, variant: Variant | str) -> TargetPredicate:
        variant = Variant(variant)
        return {
            Variant.CVD: cls(Target.CLUSTER),
            Variant.CONNECTED_CVD: cls(Target.CLUSTER, True),
            Variant.CLIQUE_DEL: cls(Target.CLIQUE),
            Variant.COMPLEMENT_VC: cls(Target.CLIQUE),
            Variant.CONNECTED_CLIQUE_DEL: cls(Target.CLIQUE, True),
            Variant.VERTEX_COVER: cls(Target.EDGELESS),
        }[variant]

    @property
    def variant(self) -> Variant:
        if self.kind is Target.EDGELESS:
            if self.connected_deleter:
                raise ValueError("connected vertex cover is not a supported variant")
            return Variant.VERTEX_COVER
        if self.kind is Target.CLUSTER:
            return Variant.CONNECTED_CVD if self.connected_deleter else Variant.CVD
        return Variant.CONNECTED_CLIQUE_DEL if self.connected_deleter else Variant.CLIQUE_DEL


# ---------------------------------------------------------------------------
# bitmask predicates
# ---------------------------------------------------------------------------

def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _is_cluster(masks, rem: int) -> bool:
    todo = rem
    while todo:
        low = todo & -todo
        v = low.bit_length() - 1
        closed = (masks[v] & rem) | low
        rest = closed ^ low
        while rest:
            lb = rest & -rest
            if (masks[lb.bit_length() - 1] & rem) | lb != closed:
                return False
            rest ^= lb
        todo &= ~closed
    return True


def _is_clique(masks, rem: int) -> bool:
    for v in _bits(rem):
        if (masks[v] | (1 << v)) & rem != rem:
            return False
    return True


def _is_edgeless(masks, rem: int) -> bool:
    for v in _bits(rem):
        if masks[v] & rem:
            return False
    return True


_CHECK = {Target.CLUSTER: _is_cluster, Target.CLIQUE: _is_clique, Target.EDGELESS: _is_edgeless}


def _is_connected(masks, sub: int) -> bool:
    if sub == 0:
        return True
    reach = sub & -sub
    frontier = reach
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= masks[v]
        frontier = nxt & sub & ~reach
        reach |= frontier
    return reach == sub


def _find_p3_mask(masks, rem: int):
    """(a, center, b) with a, b adjacent to the centre but not to each other."""
    for v in _bits(rem):
        nb = masks[v] & rem
        if nb & (nb - 1) == 0:
            continue
        for u in _bits(nb):
            far = nb & ~masks[u] & ~(1 << u)
            if far:
                return u, v, (far & -far).bit_length() - 1
    return None


# ---------------------------------------------------------------------------
# solvers
# ---------------------------------------------------------------------------

def brute_min(g: Graph, target: TargetPredicate | Variant | str, weights=None,
              *, force: bool = False) -> Solution:
    """Exhaustive minimum deletion set for ``target``.

    Unweighted: subsets are tried by increasing size, ties in lexicographic
    order, and the first hit is returned.  Weighted (``weights`` given, or
    ``True`` to use ``g.weights``): the minimum total weight, ties broken by
    size and then lexicographically.  INFINITY when no subset qualifies.
    """
    if not isinstance(target, TargetPredicate):
        target = TargetPredicate.for_variant(target)
    n = g.n
    if n > MAX_BRUTE_VERTICES and not force:
        raise OracleLimitError(f"brute_min is limited to {MAX_BRUTE_VERTICES} vertices (got {n}); pass force=True")
    if weights is True:
        weights = [g.weight(v) for v in range(n)]
    masks = g.masks()
    full = (1 << n) - 1
    ok = _CHECK[target.kind]
    need_conn = target.connected_deleter
    variant = target.variant

    if weights is None:
        for k in range(n + 1):
            for combo in combinations(range(n), k):
                sub = 0
                for v in combo:
                    sub |= 1 << v
                if ok(masks, full & ~sub) and (not need_conn or _is_connected(masks, sub)):
                    return Solution(variant, k, frozenset(combo), False, "brute")
        return Solution(variant, INFINITY, None, False, "brute")

    if len(weights) != n or any(w < 1 for w in weights):
        raise ValueError("weights must give a positive integer for every vertex")
    best_w = INFINITY
    best = None
    for k in range(n + 1):
        for combo in combinations(range(n), k):
            w = sum(weights[v] for v in combo)
            if w >= best_w:
                continue
            sub = 0
            for v in combo:
                sub |= 1 << v
            if ok(masks, full & ~sub) and (not need_conn or _is_connected(masks, sub)):
                best_w, best = w, frozenset(combo)
    return Solution(variant, best_w, best, True, "brute")


def branch_cvd(g: Graph, k: int, *, force: bool = False) -> frozenset | None:
    """Decide whether some set of at most ``k`` vertices hits every induced P3.

    Returns such a set, or None.  Each search node finds an induced P3 and
    branches on deleting one of its three vertices.  Two prunings keep the
    answer exact: a greedy packing of vertex-disjoint P3s is a lower bound on
    the remaining cost, and deletion sets already refuted are memoized.
    """
    if k < 0:
        raise ValueError("budget must be non-negative")
    if k > MAX_BRANCH_DEPTH and not force:
        raise OracleLimitError(f"branch_cvd is limited to budget {MAX_BRANCH_DEPTH} (got {k}); pass force=True")
    masks = g.masks()
    full = (1 << g.n) - 1
    refuted: set[int] = set()

    def packing_exceeds(rem, budget):
        count = 0
        while True:
            p3 = _find_p3_mask(masks, rem)
            if p3 is None:
                return False
            count += 1
            if count > budget:
                return True
            a, v, b = p3
            rem &= ~((1 << a) | (1 << v) | (1 << b))

    def search(deleted, budget):
        rem = full & ~deleted
        p3 = _find_p3_mask(masks, rem)
        if p3 is None:
            return deleted
        if budget == 0 or deleted in refuted:
            return None
        if packing_exceeds(rem, budget):
            refuted.add(deleted)
            return None
        for x in p3:
            found = search(deleted | (1 << x), budget - 1)
            if found is not None:
                return found
        refuted.add(deleted)
        return None

    found = search(0, k)
    return None if found is None else frozenset(_bits(found))


def min_cvd_branch(g: Graph, *, force: bool = False) -> frozenset:
    """Minimum cluster vertex deletion set by iterating the branching budget."""
    k = 0
    while True:
        found = branch_cvd(g, k, force=force)
        if found is not None:
            return found
        k += 1


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


def verify(g: Graph, vertices: Iterable[int], variant: Variant | str) -> Verdict:
    """Check that deleting ``vertices`` from ``g`` meets ``variant``.

    A rejection names the failure and carries a concrete witness: an induced
    P3 ``(a, centre, b)``, a missing remainder edge ``(u, v)``, a remaining
    edge ``(u, v)``, or a split ``(part, rest)`` of a disconnected deleter.
    """
    target = TargetPredicate.for_variant(variant)
    chosen = set(vertices)
    bad = [v for v in chosen if not (isinstance(v, int) and 0 <= v < g.n)]
    if bad:
        raise ValueError(f"vertex ids out of range for n={g.n}: {sorted(bad, key=str)}")
    masks = g.masks()
    sub = sum(1 << v for v in chosen)
    rem = ((1 << g.n) - 1) & ~sub

    if target.kind is Target.CLUSTER:
        p3 = _find_p3_mask(masks, rem)
        if p3 is not None:
            return Verdict(False, "remainder contains an induced P3", p3)
    elif target.kind is Target.CLIQUE:
        for v in _bits(rem):
            missing = rem & ~masks[v] & ~(1 << v)
            if missing:
                return Verdict(False, "remainder is not a clique",
                               (v, (missing & -missing).bit_length() - 1))
    else:
        for v in _bits(rem):
            if masks[v] & rem:
                return Verdict(False, "remainder has an edge",
                               (v, (masks[v] & rem & -(masks[v] & rem)).bit_length() - 1))

    if target.connected_deleter and not _is_connected(masks, sub):
        start = sub & -sub
        reach = start
        frontier = start
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= masks[v]
            frontier = nxt & sub & ~reach
            reach |= frontier
        return Verdict(False, "deletion set is not connected",
                       (tuple(_bits(reach)), tuple(_bits(sub & ~reach))))
    return Verdict(True)
