"""Cographs and their cotrees.

A cotree node is a leaf (one vertex), a UNION (label 0, disjoint union of the
children) or a JOIN (label 1, union plus every edge between different
children).  ``Cotree`` is the canonical form: internal nodes have at least two
children and no two adjacent internal nodes share a label.  ``BinaryCotree``
is a flat post-order array form in which every internal node has exactly two
children; it is the input of the dynamic program in :mod:`clustervd.dp`.

Vertex numbering: a leaf's vertex id is the vertex it stands for, so the leaves
of a tree for an n-vertex graph are exactly 0..n-1.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from enum import IntEnum

from .errors import CotreeParseError, CotreeStructureError
from .graph import (Graph, Pattern, PatternWitness, co_components_within,
                    components_within, find_induced)


class Label(IntEnum):
    UNION = 0
    JOIN = 1
    LEAF = 2


@dataclass(frozen=True)
class CotreeNode:
    label: Label
    children: tuple[CotreeNode, ...] = ()
    vertex: int | None = None

    @classmethod
    def leaf(cls, v: int) -> CotreeNode:
        return cls(Label.LEAF, (), v)

    @classmethod
    def union(cls, *children: CotreeNode) -> CotreeNode:
        return cls(Label.UNION, tuple(children))

    @classmethod
    def join(cls, *children: CotreeNode) -> CotreeNode:
        return cls(Label.JOIN, tuple(children))

    @property
    def is_leaf(self) -> bool:
        return self.label is Label.LEAF

    def walk(self):
        """Pre-order iteration over the subtree."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def leaves(self) -> list[int]:
        return [node.vertex for node in self.walk() if node.is_leaf]


def _check_leaves(leaves, what):
    n = len(leaves)
    if sorted(leaves) != list(range(n)):
        raise CotreeStructureError(f"{what} leaves must be exactly the vertices 0..{n - 1}, each once")
    return n


@dataclass(frozen=True)
class Cotree:
    """Canonical cotree; construction validates every structural invariant."""

    root: CotreeNode

    def __post_init__(self):
        for node in self.root.walk():
            if node.is_leaf:
                if node.children:
                    raise CotreeStructureError("leaf with children")
                continue
            if len(node.children) < 2:
                raise CotreeStructureError(
                    f"internal node with {len(node.children)} child(ren); at least two are required")
            for child in node.children:
                if child.label is node.label:
                    raise CotreeStructureError(
                        f"adjacent internal nodes both labelled {node.label.name}")
        _check_leaves(self.root.leaves(), "cotree")

    @property
    def n(self) -> int:
        return len(self.root.leaves())

    def node_count(self) -> int:
        return sum(1 for _ in self.root.walk())

    def flip(self) -> Cotree:
        """Swap UNION and JOIN everywhere: the cotree of the complement."""
        return Cotree(_flip(self.root))


def _flip(node: CotreeNode) -> CotreeNode:
    built = {}
    order = list(node.walk())
    for nd in reversed(order):
        if nd.is_leaf:
            built[id(nd)] = nd
        else:
            label = Label.JOIN if nd.label is Label.UNION else Label.UNION
            built[id(nd)] = CotreeNode(label, tuple(built[id(c)] for c in nd.children))
    return built[id(node)]


class BinaryCotree:
    """Binary cotree stored as parallel lists in post-order.

    Node ``i`` has ``label[i]``; internal nodes have children ``left[i]`` and
    ``right[i]`` (both smaller than ``i``), leaves have ``vertex[i]``.  The
    root is the last node.  Adjacent equal labels are allowed.
    """

    __slots__ = ("label", "left", "right", "vertex", "n")

    def __init__(self, label, left, right, vertex, validate=True):
        self.label = label
        self.left = left
        self.right = right
        self.vertex = vertex
        self.n = (len(label) + 1) // 2
        if validate:
            self.validate()

    @property
    def root(self) -> int:
        return len(self.label) - 1

    def __len__(self):
        return len(self.label)

    def validate(self) -> None:
        size = len(self.label)
        if size == 0 or not (len(self.left) == len(self.right) == len(self.vertex) == size):
            raise CotreeStructureError("inconsistent binary cotree arrays")
        used = [False] * size
        leaves = []
        for i in range(size):
            if self.label[i] == Label.LEAF:
                leaves.append(self.vertex[i])
                continue
            if self.label[i] not in (Label.UNION, Label.JOIN):
                raise CotreeStructureError(f"node {i} has unknown label {self.label[i]}")
            for c in (self.left[i], self.right[i]):
                if not 0 <= c < i or used[c]:
                    raise CotreeStructureError(f"node {i} has invalid child {c}")
                used[c] = True
        if used.count(False) != 1 or used[-1]:
            raise CotreeStructureError("binary cotree is not a single tree rooted at the last node")
        _check_leaves(leaves, "binary cotree")

    def to_node(self) -> CotreeNode:
        built = [None] * len(self.label)
        for i, lab in enumerate(self.label):
            if lab == Label.LEAF:
                built[i] = CotreeNode.leaf(self.vertex[i])
            else:
                built[i] = CotreeNode(Label(lab), (built[self.left[i]], built[self.right[i]]))
        return built[-1]

    def to_cotree(self) -> Cotree:
        """Canonical view; fails if two adjacent nodes share a label."""
        return Cotree(self.to_node())

    def leaves_under(self, i: int) -> list[int]:
        out = []
        stack = [i]
        label, left, right, vertex = self.label, self.left, self.right, self.vertex
        while stack:
            j = stack.pop()
            if label[j] == Label.LEAF:
                out.append(vertex[j])
            else:
                stack.append(right[j])
                stack.append(left[j])
        return out

    def __eq__(self, other):
        if not isinstance(other, BinaryCotree):
            return NotImplemented
        return (list(self.label), list(self.left), list(self.right), list(self.vertex)) == (
            list(other.label), list(other.left), list(other.right), list(other.vertex))

    def __repr__(self):
        return f"BinaryCotree(n={self.n}, {serialize_cotree(self)})"


# ---------------------------------------------------------------------------
# Recognition
# ---------------------------------------------------------------------------

_VISIT, _MAKE = 0, 1


def build_cotree(g: Graph) -> Cotree | PatternWitness:
    """Cotree of ``g``, or an induced-P4 witness when ``g`` is not a cograph.

    Recursive decomposition: a disconnected (sub)graph becomes a UNION of its
    components, a connected one whose complement is disconnected becomes a
    JOIN of the co-components, and a graph that is both connected and
    co-connected on two or more vertices contains an induced P4, which is
    extracted by exhaustive search on that subgraph.
    """
    if g.n == 0:
        raise ValueError("the empty graph has no cotree")
    adj = g.adj
    out: list[CotreeNode] = []
    stack = [(_VISIT, list(range(g.n)))]
    while stack:
        item = stack.pop()
        if item[0] == _MAKE:
            _, label, k = item
            kids = tuple(out[-k:])
            del out[-k:]
            out.append(CotreeNode(label, kids))
            continue
        verts = item[1]
        if len(verts) == 1:
            out.append(CotreeNode.leaf(verts[0]))
            continue
        parts = components_within(adj, verts)
        label = Label.UNION
        if len(parts) == 1:
            parts = co_components_within(adj, verts)
            label = Label.JOIN
            if len(parts) == 1:
                sub, old = g.induced(verts)
                found = find_induced(sub, Pattern.P4)
                assert found is not None, "connected and co-connected graph without P4"
                return PatternWitness(Pattern.P4, tuple(old[v] for v in found.vertices))
        stack.append((_MAKE, label, len(parts)))
        for p in reversed(parts):
            stack.append((_VISIT, p))
    return Cotree(out[0])


def is_cograph(g: Graph) -> bool:
    return isinstance(build_cotree(g), Cotree)


def binarize(t: Cotree) -> BinaryCotree:
    """Right-associate every node: children c1..ck under label L become
    c1 L (c2 L (... L ck))."""
    label, left, right, vertex = [], [], [], []

    def emit(lab, lft, rgt, v):
        label.append(int(lab))
        left.append(lft)
        right.append(rgt)
        vertex.append(v)
        return len(label) - 1

    index = {}
    stack = [(t.root, False)]
    while stack:
        node, expanded = stack.pop()
        if node.is_leaf:
            index[id(node)] = emit(Label.LEAF, -1, -1, node.vertex)
            continue
        if not expanded:
            stack.append((node, True))
            for child in reversed(node.children):
                stack.append((child, False))
            continue
        acc = index[id(node.children[-1])]
        for child in reversed(node.children[:-1]):
            acc = emit(node.label, index[id(child)], acc, -1)
        index[id(node)] = acc
    return BinaryCotree(label, left, right, vertex)


def expand(t: Cotree | BinaryCotree) -> Graph:
    """The cograph a (binary) cotree describes."""
    if isinstance(t, BinaryCotree):
        n = t.n
        leaves: list = [None] * len(t)
        edges = []
        for i, lab in enumerate(t.label):
            if lab == Label.LEAF:
                leaves[i] = [t.vertex[i]]
                continue
            a, b = leaves[t.left[i]], leaves[t.right[i]]
            if lab == Label.JOIN:
                edges.extend((u, v) for u in a for v in b)
            leaves[i] = a + b
            leaves[t.left[i]] = leaves[t.right[i]] = None
        return Graph(n, edges)
    edges = []
    collected = {}
    order = list(t.root.walk())
    for node in reversed(order):
        if node.is_leaf:
            collected[id(node)] = [node.vertex]
            continue
        groups = [collected.pop(id(c)) for c in node.children]
        if node.label is Label.JOIN:
            for i, a in enumerate(groups):
                for b in groups[i + 1:]:
                    edges.extend((u, v) for u in a for v in b)
        collected[id(node)] = [v for grp in groups for v in grp]
    return Graph(len(collected[id(t.root)]), edges)


# ---------------------------------------------------------------------------
# Text form: leaf = vertex id, internal = "(L c1 c2 ...)" with L in {0, 1}
# ---------------------------------------------------------------------------

def serialize_cotree(t: Cotree | BinaryCotree | CotreeNode) -> str:
    if isinstance(t, BinaryCotree):
        node = t.to_node()
    elif isinstance(t, Cotree):
        node = t.root
    else:
        node = t
    parts = []
    stack: list = [node]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            parts.append(item)
        elif item.is_leaf:
            parts.append(str(item.vertex))
        else:
            parts.append(f"({int(item.label)}")
            stack.append(")")
            stack.extend(reversed(item.children))
    # join with spaces, but no space before ')'
    return re.sub(r" \)", ")", " ".join(parts))


_TOKEN = re.compile(r"\s*(?:(\()|(\))|(\d+)|(\S))")


def parse_cotree(text: str) -> Cotree:
    """Parse the s-expression form; raises CotreeParseError on malformed
    text and CotreeStructureError on a tree violating cotree invariants."""
    tokens = []
    pos = 0
    for m in _TOKEN.finditer(text):
        if m.group(4) is not None:
            raise CotreeParseError(f"unexpected character {m.group(4)!r}", m.start(4))
        kind = "(" if m.group(1) else ")" if m.group(2) else "num"
        start = m.start(1) if m.group(1) else m.start(2) if m.group(2) else m.start(3)
        tokens.append((kind, m.group(3), start))
        pos = m.end()
    if text[pos:].strip():
        raise CotreeParseError("trailing garbage", pos)
    if not tokens:
        raise CotreeParseError("empty input", 0)

    frames: list[tuple[Label, list, int]] = []
    result = None
    i = 0
    while i < len(tokens):
        kind, val, at = tokens[i]
        if result is not None:
            raise CotreeParseError("text after complete tree", at)
        if kind == "(":
            if i + 1 >= len(tokens) or tokens[i + 1][0] != "num" or tokens[i + 1][1] not in ("0", "1"):
                where = tokens[i + 1][2] if i + 1 < len(tokens) else len(text)
                raise CotreeParseError("expected label 0 or 1 after '('", where)
            frames.append((Label(int(tokens[i + 1][1])), [], at))
            i += 2
            continue
        if kind == ")":
            if not frames:
                raise CotreeParseError("unbalanced ')'", at)
            label, kids, opened = frames.pop()
            if len(kids) < 2:
                raise CotreeStructureError(
                    f"node opened at position {opened} has {len(kids)} child(ren); at least two are required")
            node = CotreeNode(label, tuple(kids))
        else:
            node = CotreeNode.leaf(int(val))
        if frames:
            frames[-1][1].append(node)
        else:
            result = node
        i += 1
    if frames:
        raise CotreeParseError("unclosed '('", frames[-1][2])
    return Cotree(result)


def read_cotree(path) -> Cotree:
    with open(path) as fh:
        return parse_cotree(fh.read())


def write_cotree(t, path, comments=()) -> None:
    with open(path, "w") as fh:
        for c in comments:
            fh.write(f"# {c}\n")
        fh.write(serialize_cotree(t) + "\n")


def strip_comments(text: str) -> str:
    return "\n".join(line for line in text.splitlines() if not line.lstrip().startswith("#"))


# ---------------------------------------------------------------------------
# Random generation
# ---------------------------------------------------------------------------

def random_binary_cotree(n: int, rng: random.Random | int | None = None,
                         alternate: bool = True) -> BinaryCotree:
    """Random binary cotree with ``n`` leaves.

    Shape: a node with s leaves splits into a left part of uniform size in
    1..s-1.  Labels alternate UNION/JOIN by depth from a random root label
    (``alternate=False`` draws every label independently).  Leaf vertex ids
    are a random permutation of 0..n-1 read left to right.
    """
    if n < 1:
        raise ValueError("need at least one leaf")
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    perm = list(range(n))
    rng.shuffle(perm)
    label, left, right, vertex = [], [], [], []
    out = []
    next_leaf = 0
    randint = rng.randint
    stack = [(n, randint(0, 1))]
    while stack:
        size, lab = stack.pop()
        if size < 0:
            # combine marker
            r = out.pop()
            lft = out.pop()
            label.append(lab)
            left.append(lft)
            right.append(r)
            vertex.append(-1)
            out.append(len(label) - 1)
        elif size == 1:
            label.append(2)
            left.append(-1)
            right.append(-1)
            vertex.append(perm[next_leaf])
            next_leaf += 1
            out.append(len(label) - 1)
        else:
            k = randint(1, size - 1)
            child = 1 - lab if alternate else None
            stack.append((-1, lab))
            stack.append((size - k, child if alternate else randint(0, 1)))
            stack.append((k, child if alternate else randint(0, 1)))
    return BinaryCotree(label, left, right, vertex, validate=False)
