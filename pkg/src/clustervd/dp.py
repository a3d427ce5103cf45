"""Linear-time dynamic program on binary cotrees.

For every node v of a binary cotree, with children l and r, the table holds

* ``tau_bar``  minimum clique deletion set (= vertex cover of the complement),
* ``sigma``    minimum cluster vertex deletion set,
* ``theta_c``  minimum connected clique deletion set (INFINITY if none),
* ``sigma_c``  minimum connected cluster vertex deletion set (INFINITY if none),

of the cograph below v, their vertex-weighted analogues ``w_tau_bar`` and
``w_sigma``, and three structural flags (``complete``, ``connected`` and
``ncq``, the number of non-clique components capped at 2) that decide which
recurrence applies to the connected quantities.

A binarized node whose child carries the same label is evaluated with the
same two-operand recurrences; the multi-operand union/join decomposes into
nested two-operand ones, so this is sound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cotree import BinaryCotree, Cotree, binarize, build_cotree
from .errors import NoSolutionError, NotACographError, UnsupportedVariantError
from .graph import INFINITY, Graph
from .solution import Solution, Variant


@dataclass(frozen=True)
class NodeStats:
    n: int
    w: int
    tau_bar: int
    sigma: int
    w_tau_bar: int
    w_sigma: int
    theta_c: float | int
    sigma_c: float | int
    complete: bool
    connected: bool
    ncq: int


class CotreeStats:
    """Per-node DP table stored column-wise; ``stats[i]`` gives a NodeStats."""

    _fields = ("n", "w", "tau_bar", "sigma", "w_tau_bar", "w_sigma",
               "theta_c", "sigma_c", "complete", "connected", "ncq")

    def __init__(self, **columns):
        for name in self._fields:
            setattr(self, name, columns[name])

    def __len__(self):
        return len(self.n)

    def __getitem__(self, i: int) -> NodeStats:
        return NodeStats(*(getattr(self, name)[i] for name in self._fields))

    @property
    def root(self) -> NodeStats:
        return self[len(self) - 1]


def dp_stats(t: BinaryCotree, weights: Sequence[int] | None = None) -> CotreeStats:
    """Bottom-up evaluation over the post-order node arrays of ``t``."""
    label, left, right, vertex = t.label, t.left, t.right, t.vertex
    size = len(label)
    if weights is not None:
        if len(weights) != t.n or any(x < 1 for x in weights):
            raise ValueError("weights must give a positive integer for every leaf")
    INF = INFINITY

    n_ = [0] * size
    tau = [0] * size
    sig = [0] * size
    thc = [0] * size
    sgc = [0] * size
    comp = [True] * size
    conn = [True] * size
    ncq = [0] * size

    for i in range(size):
        lab = label[i]
        if lab == 2:
            n_[i] = 1
            continue
        l = left[i]
        r = right[i]
        nl = n_[l]
        nr = n_[r]
        tl = tau[l]
        tr = tau[r]
        sl = sig[l]
        sr = sig[r]
        cl = comp[l]
        cr = comp[r]
        n_[i] = nl + nr
        if lab == 0:
            a = tl + nr
            b = tr + nl
            tau[i] = a if a < b else b
            sig[i] = sl + sr
            comp[i] = False
            conn[i] = False
            ql = ncq[l]
            q = ql + ncq[r]
            if q > 2:
                q = 2
            ncq[i] = q
            if not (conn[l] and conn[r]) or not (cl or cr):
                thc[i] = INF
            elif cl and cr:
                thc[i] = nl if nl < nr else nr
            elif cr:
                thc[i] = nl
            else:
                thc[i] = nr
            if q == 0:
                sgc[i] = 0
            elif q == 1:
                sgc[i] = sgc[l] if ql == 1 else sgc[r]
            else:
                sgc[i] = INF
        else:
            tv = tl + tr
            tau[i] = tv
            s = sl + nr
            b = sr + nl
            if b < s:
                s = b
            if tv < s:
                s = tv
            sig[i] = s
            cv = cl and cr
            comp[i] = cv
            # conn[i] already True
            ncq[i] = 0 if cv else 1
            if cl or cr:
                best = INF
                if cl:
                    best = min(thc[r], 1 + tr)
                if cr:
                    best = min(best, thc[l], 1 + tl)
                thc[i] = best
            else:
                thc[i] = tv
            if cv:
                sgc[i] = 0
            elif cl:
                sgc[i] = min(nl + sr, thc[r], 1 + tr)
            elif cr:
                sgc[i] = min(nr + sl, thc[l], 1 + tl)
            elif conn[l] or conn[r]:
                sgc[i] = min(nl + sr, nr + sl, tv)
            else:
                sgc[i] = min(nl + (sr if sr > 1 else 1), nr + (sl if sl > 1 else 1), tv)

    if weights is None:
        w_, wtau, wsig = n_, tau, sig
    else:
        w_ = [0] * size
        wtau = [0] * size
        wsig = [0] * size
        for i in range(size):
            lab = label[i]
            if lab == 2:
                w_[i] = weights[vertex[i]]
                continue
            l = left[i]
            r = right[i]
            wl = w_[l]
            wr = w_[r]
            w_[i] = wl + wr
            if lab == 0:
                wtau[i] = min(wtau[l] + wr, wtau[r] + wl)
                wsig[i] = wsig[l] + wsig[r]
            else:
                tv = wtau[l] + wtau[r]
                wtau[i] = tv
                wsig[i] = min(wsig[l] + wr, wsig[r] + wl, tv)

    return CotreeStats(n=n_, w=w_, tau_bar=tau, sigma=sig, w_tau_bar=wtau, w_sigma=wsig,
                       theta_c=thc, sigma_c=sgc, complete=comp, connected=conn, ncq=ncq)


_ROOT_FIELD = {
    Variant.CVD: "sigma",
    Variant.CONNECTED_CVD: "sigma_c",
    Variant.CLIQUE_DEL: "tau_bar",
    Variant.CONNECTED_CLIQUE_DEL: "theta_c",
    Variant.COMPLEMENT_VC: "tau_bar",
}

# extraction tasks
_ALL, _TAU, _SIG, _THC, _SGC = range(5)
_START = {
    Variant.CVD: _SIG,
    Variant.CONNECTED_CVD: _SGC,
    Variant.CLIQUE_DEL: _TAU,
    Variant.CONNECTED_CLIQUE_DEL: _THC,
    Variant.COMPLEMENT_VC: _TAU,
}


def root_value(stats: CotreeStats, variant: Variant, weighted: bool = False):
    name = _ROOT_FIELD[variant]
    if weighted:
        name = {"sigma": "w_sigma", "tau_bar": "w_tau_bar"}[name]
    return getattr(stats, name)[len(stats) - 1]


def extract_set(t: BinaryCotree, stats: CotreeStats, variant: Variant,
                weighted: bool = False) -> frozenset:
    """Replay the argmin choices of the DP from the root down.

    At every node the candidate expressions of the recurrence are re-evaluated
    in a fixed order and the first one attaining the stored minimum is
    followed.  Where a recurrence adds one arbitrary vertex of a side, the
    smallest vertex id under that side is used.
    """
    variant = Variant(variant)
    if variant not in _START:
        raise UnsupportedVariantError(f"no cotree extraction for variant {variant.value}")
    if weighted and variant.connected:
        raise UnsupportedVariantError("weighted connected variants are not supported")
    if root_value(stats, variant, weighted) == INFINITY:
        raise NoSolutionError(f"{variant.value} value is infinite; no deletion set exists")

    label, left, right = t.label, t.left, t.right
    n_ = stats.n
    size_ = stats.w if weighted else stats.n
    tau = stats.w_tau_bar if weighted else stats.tau_bar
    sig = stats.w_sigma if weighted else stats.sigma
    thc, sgc = stats.theta_c, stats.sigma_c
    comp, conn, ncq = stats.complete, stats.connected, stats.ncq

    chosen: list[int] = []
    stack = [(len(label) - 1, _START[variant])]

    def smallest(i):
        return min(t.leaves_under(i))

    while stack:
        i, task = stack.pop()
        if task == _ALL:
            chosen.extend(t.leaves_under(i))
            continue
        lab = label[i]
        if lab == 2:
            continue  # every quantity is 0 on a single vertex
        l, r = left[i], right[i]
        target = (tau, sig, thc, sgc)[task - 1][i]

        if task == _TAU:
            if lab == 1:
                stack += [(l, _TAU), (r, _TAU)]
            elif tau[l] + size_[r] == target:
                stack += [(l, _TAU), (r, _ALL)]
            else:
                stack += [(r, _TAU), (l, _ALL)]

        elif task == _SIG:
            if lab == 0:
                stack += [(l, _SIG), (r, _SIG)]
            elif sig[l] + size_[r] == target:
                stack += [(l, _SIG), (r, _ALL)]
            elif sig[r] + size_[l] == target:
                stack += [(r, _SIG), (l, _ALL)]
            else:
                stack += [(l, _TAU), (r, _TAU)]

        elif task == _THC:
            if lab == 0:
                if comp[r] and conn[l] and n_[l] == target:
                    stack.append((l, _ALL))
                else:
                    stack.append((r, _ALL))
            elif not (comp[l] or comp[r]):
                stack += [(l, _TAU), (r, _TAU)]
            else:
                cands = []
                if comp[l]:
                    cands += [(thc[r], [(r, _THC)], None), (1 + tau[r], [(r, _TAU)], l)]
                if comp[r]:
                    cands += [(thc[l], [(l, _THC)], None), (1 + tau[l], [(l, _TAU)], r)]
                _follow(cands, target, stack, chosen, smallest)

        else:  # _SGC
            if lab == 0:
                if ncq[i] == 1:
                    stack.append((l, _SGC) if ncq[l] == 1 else (r, _SGC))
                continue
            if comp[i]:
                continue
            if comp[l]:
                cands = [(n_[l] + sig[r], [(l, _ALL), (r, _SIG)], None),
                         (thc[r], [(r, _THC)], None),
                         (1 + tau[r], [(r, _TAU)], l)]
            elif comp[r]:
                cands = [(n_[r] + sig[l], [(r, _ALL), (l, _SIG)], None),
                         (thc[l], [(l, _THC)], None),
                         (1 + tau[l], [(l, _TAU)], r)]
            elif conn[l] or conn[r]:
                cands = [(n_[l] + sig[r], [(l, _ALL), (r, _SIG)], None),
                         (n_[r] + sig[l], [(r, _ALL), (l, _SIG)], None),
                         (tau[l] + tau[r], [(l, _TAU), (r, _TAU)], None)]
            else:
                cands = [(n_[l] + max(sig[r], 1), [(l, _ALL), (r, _SIG)], r if sig[r] == 0 else None),
                         (n_[r] + max(sig[l], 1), [(r, _ALL), (l, _SIG)], l if sig[l] == 0 else None),
                         (tau[l] + tau[r], [(l, _TAU), (r, _TAU)], None)]
            _follow(cands, target, stack, chosen, smallest)

    return frozenset(chosen)


def _follow(cands, target, stack, chosen, smallest):
    for value, tasks, extra in cands:
        if value == target:
            stack.extend(tasks)
            if extra is not None:
                chosen.append(smallest(extra))
            return
    raise AssertionError("no candidate reproduces the stored optimum")


def as_binary(obj, weights=None) -> tuple[BinaryCotree, Sequence[int] | None]:
    """Normalize a Graph / Cotree / BinaryCotree input to a binary cotree.
    A Graph's own weights are used when ``weights`` is not given."""
    if isinstance(obj, Graph):
        tree = build_cotree(obj)
        if not isinstance(tree, Cotree):
            raise NotACographError(tree)
        if weights is None:
            weights = obj.weights
        return binarize(tree), weights
    if isinstance(obj, Cotree):
        return binarize(obj), weights
    if isinstance(obj, BinaryCotree):
        return obj, weights
    raise TypeError(f"expected Graph, Cotree or BinaryCotree, got {type(obj).__name__}")


def solve(obj, variant: Variant | str, weighted: bool = False, weights=None) -> Solution:
    """Optimum of ``variant`` on a cograph given as a graph or (binary) cotree,
    with a witness set whenever the optimum is finite."""
    variant = Variant(variant)
    if variant not in _ROOT_FIELD:
        raise UnsupportedVariantError(f"variant {variant.value} is not solved on cotrees")
    if weighted and variant.connected:
        raise UnsupportedVariantError(
            f"weighted {variant.value} is not supported; weighted recurrences exist for cvd, clique and covc")
    tree, weights = as_binary(obj, weights)
    stats = dp_stats(tree, weights if weighted else None)
    value = root_value(stats, variant, weighted)
    chosen = None
    if value != INFINITY:
        chosen = extract_set(tree, stats, variant, weighted)
    return Solution(variant, value, chosen, weighted, "cotree-dp")
