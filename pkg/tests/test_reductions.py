import json
import random

import pytest

from clustervd.errors import ReductionError, VerificationError
from clustervd.generators import (complete_graph, cycle_graph, path_graph, random_bipartite,
                                  random_triangle_free, star_graph)
from clustervd.graph import Graph, Pattern, bipartition, components, find_induced, girth
from clustervd.oracle import branch_cvd, brute_min, min_cvd_branch, verify
from clustervd.reductions import (NOT_NORMALIZED, ReductionKind, Side, all_graphs_up_to_iso,
                                  amplify, build_gadget_tree, choose_t, cvd_to_ccvd,
                                  dichotomy_classify, gadget_names, subdivide3, vc_to_cvd_dense)
from clustervd.solution import Variant

from helpers import canonical, minimalize, random_cvd_set


def _vc_yes(g, k):
    return brute_min(g, Variant.VERTEX_COVER).value <= k


class TestDense:
    def test_p3(self):
        ri = vc_to_cvd_dense(path_graph(3), 1)
        assert (ri.produced.n, ri.k_prime) == (6, 2)
        assert ri.params["padding"] == 0
        assert _vc_yes(ri.source, 1) and branch_cvd(ri.produced, 2) is not None

    def test_k1(self):
        ri = vc_to_cvd_dense(Graph(1), 0)
        assert ri.produced == Graph(2, [(0, 1)]) and ri.k_prime == 0
        assert branch_cvd(ri.produced, 0) is not None

    def test_padding_and_numbering(self):
        ri = vc_to_cvd_dense(path_graph(3), 3)
        assert ri.params["padding"] == 3 and ri.produced.n == 12
        assert ri.vertex_origin[:6] == (("copy1", 0), ("copy1", 1), ("copy1", 2),
                                        ("pad1", 0), ("pad1", 1), ("pad1", 2))
        assert ri.vertex_origin[6] == ("copy2", 0)
        assert len(set(ri.vertex_origin)) == ri.produced.n

    def test_min_degree_on_subcubic(self):
        for seed in range(40):
            g = random_triangle_free(9, 13, seed, max_degree=3)
            for k in (0, 3, 6):
                p = vc_to_cvd_dense(g, k).produced
                assert min(p.degree(v) for v in range(p.n)) >= p.n - 4

    def test_lift(self):
        ri = vc_to_cvd_dense(path_graph(3), 1)
        lifted = ri.lift({1})
        assert lifted == frozenset({1, 4})
        assert verify(ri.produced, lifted, Variant.CVD)
        rest, _ = ri.produced.induced(set(range(6)) - lifted)
        assert rest == complete_graph(4)

    def test_lift_rejects_non_cover(self):
        ri = vc_to_cvd_dense(path_graph(3), 1)
        with pytest.raises(VerificationError):
            ri.lift({0})

    def test_restrict_smaller_side(self):
        ri = vc_to_cvd_dense(Graph(1), 1)
        assert ri.produced.n == 4
        assert ri.restrict({2, 3}) == frozenset()

    def test_round_trip(self):
        rng = random.Random(41)
        for _ in range(60):
            g = random_triangle_free(rng.randint(2, 7), 8, rng, max_degree=3)
            cover = brute_min(g, Variant.VERTEX_COVER).set
            for extra in range(3):
                s = set(cover) | set(rng.sample(range(g.n), min(extra, g.n)))
                ri = vc_to_cvd_dense(g, len(s))
                assert ri.restrict(ri.lift(s)) == frozenset(s)

    def test_forward_direction_any_source(self):
        rng = random.Random(42)
        for _ in range(40):
            g = random_triangle_free(rng.randint(1, 7), 9, rng, max_degree=3)
            tau = brute_min(g, Variant.VERTEX_COVER).value
            for k in range(tau, g.n + 1):
                assert branch_cvd(vc_to_cvd_dense(g, k).produced, 2 * k) is not None

    def test_equivalence_with_odd_hole(self):
        rng = random.Random(43)
        checked = 0
        while checked < 15:
            g = random_triangle_free(rng.randint(5, 7), 9, rng, max_degree=3,
                                     base=Graph(7, cycle_graph(5).edges))
            if find_induced(g, Pattern.ODD_HOLE) is None:
                continue
            checked += 1
            for k in range(0, (g.n + 1) // 2 + 1):
                ri = vc_to_cvd_dense(g, k)
                assert _vc_yes(g, k) == (branch_cvd(ri.produced, 2 * k) is not None)


class TestSubdivide:
    def test_p3(self):
        ri = subdivide3(path_graph(3), 1)
        assert ri.produced.n == 9 and ri.produced.m == 8 and ri.k_prime == 3
        assert sorted(ri.produced.degree(v) for v in range(9)) == [1, 1] + [2] * 7
        assert len(components(ri.produced)) == 1
        assert brute_min(ri.produced, Variant.CVD).value == 3
        assert branch_cvd(ri.source, 1) is not None and branch_cvd(ri.produced, 3) is not None

    def test_c4_girth(self):
        ri = subdivide3(cycle_graph(4), 0)
        assert all(ri.produced.degree(v) == 2 for v in range(16))
        assert len(components(ri.produced)) == 1 and girth(ri.produced) == 16

    def test_triangle_rejected(self):
        with pytest.raises(ReductionError) as exc:
            subdivide3(complete_graph(3), 0)
        assert exc.value.witness.kind is Pattern.TRIANGLE

    def test_counts_and_origin(self):
        g = random_triangle_free(8, 10, 3)
        ri = subdivide3(g, 2)
        assert (ri.produced.n, ri.produced.m, ri.k_prime) == (g.n + 3 * g.m, 4 * g.m, 2 + g.m)
        x, y = g.sorted_edges()[0]
        assert ri.vertex_origin[g.n:g.n + 3] == tuple(("sub", 1, (x, y), r) for r in ("e_x", "e_xy", "e_y"))
        assert len(set(ri.vertex_origin)) == ri.produced.n
        for v in range(g.n, ri.produced.n):
            assert ri.produced.degree(v) == 2

    def test_lift_rules(self):
        ri = subdivide3(path_graph(3), 1)
        # edge 0: (0,1) -> 3,4,5 ; edge 1: (1,2) -> 6,7,8
        lifted = ri.lift({1})
        assert lifted == frozenset({1, 3, 8})
        assert verify(ri.produced, lifted, Variant.CVD)
        assert ri.lift({0, 1}) == frozenset({0, 1, 4, 8})

    def test_empty(self):
        ri = subdivide3(Graph(4), 0)
        assert ri.produced == Graph(4) and ri.k_prime == 0
        assert ri.lift(set()) == frozenset()

    def test_round_trip_minimal_sets(self):
        rng = random.Random(44)
        for _ in range(80):
            g = random_triangle_free(rng.randint(2, 8), 9, rng)
            s = minimalize(g, random_cvd_set(g, rng))
            ri = subdivide3(g, len(s))
            lifted = ri.lift(s)
            assert len(lifted) == len(s) + g.m
            assert ri.restrict(lifted) == s

    def test_restrict_normalizes(self):
        ri = subdivide3(Graph(2, [(0, 1)]), 1)
        # path 0, 2, 3, 4, 1 ; {e_x, e_xy} is a valid but unnormalized choice
        assert verify(ri.produced, {2, 3}, Variant.CVD)
        s = ri.restrict({2, 3})
        assert verify(ri.source, s, Variant.CVD) and len(s) <= 1

    def test_restrict_arbitrary_optimal(self):
        rng = random.Random(45)
        for _ in range(60):
            g = random_triangle_free(rng.randint(2, 6), 7, rng)
            k = brute_min(g, Variant.CVD).value
            ri = subdivide3(g, k)
            s_prime = min_cvd_branch(ri.produced)
            assert len(s_prime) == ri.k_prime
            s = ri.restrict(s_prime)
            assert len(s) <= k and verify(g, s, Variant.CVD)

    def test_restrict_budget_checked(self):
        ri = subdivide3(path_graph(3), 0)
        with pytest.raises(ReductionError):
            ri.restrict(set(range(9)))


class TestAmplify:
    def test_c4_t2(self):
        ri = amplify(cycle_graph(4), 1, 2)
        assert ri.produced.n == 64 and girth(ri.produced) == 64
        assert all(ri.produced.degree(v) == 2 for v in range(64))
        assert ri.k_prime == 1 + 20

    def test_t1_matches_subdivide3(self):
        g = random_triangle_free(7, 9, 5)
        a, s = amplify(g, 2, 1), subdivide3(g, 2)
        assert a.produced == s.produced and a.k_prime == s.k_prime
        assert a.vertex_origin == s.vertex_origin
        assert a.kind is ReductionKind.AMPLIFY and a.params == {"t": 1}

    def test_vertex_count_formula(self):
        rng = random.Random(46)
        for _ in range(100):
            g = random_triangle_free(rng.randint(1, 9), rng.randint(0, 12), rng)
            t = rng.randint(1, 3)
            k = rng.randint(0, 3)
            ri = amplify(g, k, t)
            assert ri.produced.n == g.n + (4 ** t - 1) * g.m
            assert ri.k_prime == k + g.m * (4 ** t - 1) // 3

    def test_round_trip(self):
        rng = random.Random(47)
        for _ in range(20):
            g = random_triangle_free(rng.randint(2, 6), 6, rng)
            s = minimalize(g, random_cvd_set(g, rng))
            ri = amplify(g, len(s), 2)
            lifted = ri.lift(s)
            assert verify(ri.produced, lifted, Variant.CVD) and len(lifted) <= ri.k_prime
            assert ri.restrict(lifted) == s

    def test_errors(self):
        with pytest.raises(ValueError):
            amplify(path_graph(3), 0, 0)
        with pytest.raises(ReductionError):
            amplify(complete_graph(3), 0, 2)


class TestChooseT:
    def test_examples(self):
        assert choose_t(16, 1) == 2
        assert choose_t(3, 7) == 7
        assert choose_t(100, 2) == 4

    def test_bounds(self):
        assert choose_t(4, 1) == 1 and choose_t(5, 1) == 2 and choose_t(65, 1) == 4
        with pytest.raises(ValueError):
            choose_t(2, 1)


def _is_tree(g):
    return g.m == g.n - 1 and len(components(g)) == 1


class TestGadget:
    @pytest.mark.parametrize("g, r, s, n, black", [(3, 1, 1, 30, 10), (3, 4, 3, 105, 35)])
    def test_examples(self, g, r, s, n, black):
        tree, bs = build_gadget_tree(g, r, s)
        assert (tree.n, len(bs)) == (n, black)
        assert _is_tree(tree)
        assert verify(tree, bs, Variant.CONNECTED_CVD)

    def test_every_black_vertex_has_pendant_p3(self):
        tree, bs = build_gadget_tree(5, 2, 3)
        for b in bs:
            assert any(tree.degree(p) == 2 and any(tree.degree(q) == 1 for q in tree.adj[p] if q != b)
                       for p in tree.adj[b] if p not in bs)

    def test_names(self):
        names = gadget_names(3, 2, 1)
        assert names[:6] == [("x", 1, 0), ("a", 1), ("x", 2, 0), ("a", 2), ("y", 1, 0), ("b", 1)]
        assert len(set(names)) == len(names)

    @pytest.mark.parametrize("args", [(4, 1, 1), (1, 1, 1), (3, 0, 1), (3, 1, 0)])
    def test_bad_parameters(self, args):
        with pytest.raises(ValueError):
            build_gadget_tree(*args)


class TestCcvd:
    def test_seven_vertex_configuration(self):
        src = random_bipartite(4, 3, 0.5, 1)
        ri = cvd_to_ccvd(src, 2, 3)
        assert (ri.produced.n, ri.k_prime) == (112, 2 + 35)
        assert bipartition(ri.produced) is not None
        assert len(ri.black_set) == 35

    def test_parity_rule(self):
        ri = cvd_to_ccvd(path_graph(2), 0, 4)
        assert ri.params["g"] == 5
        assert ri.produced.n == (7 + 3 * 5) * 2

    def test_non_bipartite_rejected(self):
        with pytest.raises(ReductionError) as exc:
            cvd_to_ccvd(cycle_graph(5), 1, 3)
        assert exc.value.witness.kind is Pattern.ODD_HOLE
        with pytest.raises(ReductionError):
            cvd_to_ccvd(Graph(3), 0, 3)

    def test_uses_bipartition_without_parts(self):
        ri = cvd_to_ccvd(path_graph(3), 1, 3)
        assert ri.params["r"] == 2 and ri.params["s"] == 1

    def test_cluster_source_lifts_to_black_set(self):
        src = Graph(4, [(0, 1), (2, 3)])
        ri = cvd_to_ccvd(src, 0, 3)
        lifted = ri.lift(set())
        assert lifted == ri.black_set and verify(ri.produced, lifted, Variant.CONNECTED_CVD)

    def test_lift_restrict(self):
        rng = random.Random(48)
        src = random_bipartite(3, 3, 0.5, 5)
        ri = cvd_to_ccvd(src, 3, 3)
        for _ in range(20):
            s = random_cvd_set(src, rng)
            lifted = ri.lift(s)
            assert len(lifted) == len(s) + (3 + 2) * src.n
            assert verify(ri.produced, lifted, Variant.CONNECTED_CVD)
            assert ri.restrict(lifted) == s

    def test_restrict_flag(self):
        ri = cvd_to_ccvd(Graph(2, [(0, 1)]), 0, 3)
        missing = min(ri.black_set)
        with pytest.raises(ReductionError) as exc:
            ri.restrict(set(range(ri.produced.n)) - {missing})
        assert exc.value.flag == NOT_NORMALIZED and exc.value.witness == missing

    def test_black_set_is_forced(self):
        # a pendant 2-path keeps its black vertex in every connected CVD set
        # with more than two vertices, so verified sets are always normalized
        ri = cvd_to_ccvd(Graph(2, [(0, 1)]), 0, 3)
        for b in ri.black_set:
            everything = set(range(ri.produced.n)) - {b}
            assert not verify(ri.produced, everything, Variant.CONNECTED_CVD)

    def test_local_minimality(self):
        rng = random.Random(49)
        src = random_bipartite(2, 3, 0.6, 8)
        ri = cvd_to_ccvd(src, 2, 3)
        for _ in range(5):
            s = minimalize(src, random_cvd_set(src, rng))
            lifted = ri.lift(s)
            for v in lifted:
                assert not verify(ri.produced, lifted - {v}, Variant.CONNECTED_CVD)

    def test_sidecar(self):
        ri = cvd_to_ccvd(Graph(2, [(0, 1)]), 1, 3)
        data = json.loads(json.dumps(ri.sidecar()))
        assert data["kind"] == "ccvd-gadget" and data["k"] == 1 and data["k'"] == 11
        assert data["vertex_origin"][0] == ["source", 0]
        assert data["vertex_origin"][2] == ["gadget", ["x", 1, 0]]
        assert len(data["black_set"]) == 10


class TestClassify:
    def test_examples(self):
        assert dichotomy_classify(path_graph(4)).side is Side.POLYNOMIAL
        v = dichotomy_classify(complete_graph(3))
        assert v.side is Side.NP_COMPLETE and v.witness.kind is Pattern.CYCLE
        assert dichotomy_classify(path_graph(5)).witness.vertices == (0, 1, 3, 4)
        assert dichotomy_classify(Graph(2)).side is Side.POLYNOMIAL

    def test_named_graphs(self):
        assert dichotomy_classify(Graph(3)).witness.kind is Pattern.THREE_P1
        assert dichotomy_classify(Graph(4, [(0, 1), (2, 3)])).witness.kind is Pattern.TWO_P2
        assert dichotomy_classify(star_graph(3)).witness.kind is Pattern.THREE_P1
        assert dichotomy_classify(cycle_graph(4)).witness.kind is Pattern.CYCLE

    def test_census(self):
        reps = all_graphs_up_to_iso(4)
        assert [sum(1 for g in reps if g.n == n) for n in range(1, 5)] == [1, 2, 4, 11]
        poly = {canonical(g) for g in reps if dichotomy_classify(g).side is Side.POLYNOMIAL}
        expected = {canonical(g) for g in (Graph(1), Graph(2), path_graph(2), Graph(3, [(0, 1)]),
                                       path_graph(3), path_graph(4))}
        assert poly == expected

    def test_json(self):
        data = dichotomy_classify(path_graph(5)).to_json()
        assert data == {"schema": "clustervd/1", "side": "NP_COMPLETE",
                        "witness": {"kind": "2P2", "vertices": [0, 1, 3, 4]}}
