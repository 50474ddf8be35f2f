"""Exact solvers against independent brute-force oracles."""

import pytest

from dichrolab.colorings import verify_acyclic_coloring
from dichrolab.digraph import (
    Digraph,
    FamilyGraph,
    categorical_product,
    induced_subdigraph,
    is_acyclic,
    orientation_from_mask,
)
from dichrolab.families import gen_generalized_kneser, gen_johnson
from dichrolab.solvers import (
    SolveBudget,
    chromatic_number,
    dichromatic_number,
    dichromatic_number_graph,
    greedy_chromatic_upper,
    list_dichromatic_at_most,
    list_dichromatic_number,
)

from brute import min_acyclic_partition, random_arcs


def triangle():
    return Digraph(3, [(0, 1), (1, 2), (2, 0)])


class TestDichromaticNumber:
    def test_transitive_tournaments(self):
        for n in range(2, 11):
            D = Digraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
            res = dichromatic_number(D)
            assert res.value == 1 and res.exact

    def test_directed_triangle(self):
        assert dichromatic_number(triangle()).value == 2

    def test_directed_5_cycle(self):
        D = Digraph(5, [(i, (i + 1) % 5) for i in range(5)])
        assert dichromatic_number(D).value == 2

    def test_certificate_verifies(self):
        for seed in range(10):
            D = Digraph(6, random_arcs(6, 0.5, seed))
            res = dichromatic_number(D)
            assert res.exact
            report = verify_acyclic_coloring(D, res.coloring)
            assert report.proper
            assert res.coloring.colors_used() <= res.value

    def test_matches_partition_oracle(self):
        # oracle: exhaustive minimum over all set partitions
        for seed in range(40):
            n = 5 + seed % 3
            arcs = random_arcs(n, 0.3 + 0.05 * (seed % 8), seed)
            got = dichromatic_number(Digraph(n, arcs)).value
            assert got == min_acyclic_partition(n, arcs), (seed, arcs)

    def test_acyclic_iff_value_one(self):
        for seed in range(30):
            D = Digraph(6, random_arcs(6, 0.35, seed + 500))
            assert (dichromatic_number(D).value == 1) == is_acyclic(D).acyclic

    def test_induced_monotone(self):
        for seed in range(10):
            D = Digraph(7, random_arcs(7, 0.5, seed + 900))
            whole = dichromatic_number(D).value
            H, _ = induced_subdigraph(D, [0, 2, 3, 5])
            assert dichromatic_number(H).value <= whole

    def test_budget_exhaustion_gives_interval(self):
        D = Digraph(7, [(u, v) for u in range(7) for v in range(7) if u != v])
        res = dichromatic_number(D, SolveBudget(node_limit=3))
        if not res.exact:
            assert res.lower <= res.upper
            assert verify_acyclic_coloring(D, res.coloring).proper

    def test_vertex_cap(self):
        with pytest.raises(ValueError):
            dichromatic_number(Digraph(65, []))


class TestChromaticNumber:
    def test_petersen(self):
        assert chromatic_number(gen_generalized_kneser(5, 2, 0)).value == 3

    def test_kg_6_2(self):
        assert chromatic_number(gen_generalized_kneser(6, 2, 0)).value == 4

    def test_complete(self):
        assert chromatic_number(gen_generalized_kneser(4, 2, 1)).value == 6

    def test_certificate_independent_classes(self):
        G = gen_generalized_kneser(6, 2, 0)
        res = chromatic_number(G)
        c = res.coloring
        for u, v in G.edges:
            assert c.colors[u] != c.colors[v]

    def test_odd_cycle_and_bipartite(self):
        C5 = FamilyGraph(5, [(i, (i + 1) % 5) for i in range(5)])
        assert chromatic_number(C5).value == 3
        C6 = FamilyGraph(6, [(i, (i + 1) % 6) for i in range(6)])
        assert chromatic_number(C6).value == 2

    def test_dichromatic_at_most_chromatic(self):
        G = gen_johnson(4, 2)
        chi = chromatic_number(G).value
        for mask in range(0, 4096, 137):
            D = orientation_from_mask(G, mask)
            assert dichromatic_number(D).value <= chi


class TestDichromaticGraph:
    def test_edgeless(self):
        res = dichromatic_number_graph(FamilyGraph(4, []))
        assert res.value == 1 and res.exact

    def test_k3(self):
        res = dichromatic_number_graph(FamilyGraph(3, [(0, 1), (0, 2), (1, 2)]))
        assert res.value == 2
        D = orientation_from_mask(FamilyGraph(3, [(0, 1), (0, 2), (1, 2)]),
                                  res.witness_orientation_mask)
        assert dichromatic_number(D).value == 2

    def test_reversal_symmetry(self):
        # value is invariant under reversing every arc
        G = gen_johnson(3, 2)
        for mask, D in [(m, orientation_from_mask(G, m)) for m in range(8)]:
            rev = orientation_from_mask(G, (1 << G.n_edges) - 1 - mask)
            assert dichromatic_number(D).value == dichromatic_number(rev).value

    def test_exhaustive_matches_full_enumeration(self):
        # oracle: plain max over all 2^|E| orientations, no symmetry
        G = FamilyGraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        full = max(dichromatic_number(orientation_from_mask(G, m)).value
                   for m in range(1 << G.n_edges))
        assert dichromatic_number_graph(G).value == full == 2

    def test_sample_mode_lower_bound(self):
        G = gen_generalized_kneser(5, 2, 0)
        res = dichromatic_number_graph(G, "sample", SolveBudget(sample_count=30, seed=3))
        assert not res.exact
        assert 1 <= res.lower <= res.upper
        assert res.upper <= greedy_chromatic_upper(G).palette_size

    def test_sample_deterministic(self):
        G = gen_johnson(4, 2)
        a = dichromatic_number_graph(G, "sample", SolveBudget(sample_count=20, seed=9))
        b = dichromatic_number_graph(G, "sample", SolveBudget(sample_count=20, seed=9))
        assert (a.lower, a.upper) == (b.lower, b.upper)

    def test_orientation_cap(self):
        G = gen_generalized_kneser(5, 2, 0)
        with pytest.raises(ValueError):
            dichromatic_number_graph(G, "exhaustive", SolveBudget(orientation_cap=10))

    def test_witness_is_lower_bound(self):
        G = gen_johnson(4, 2)
        res = dichromatic_number_graph(G)
        D = orientation_from_mask(G, res.witness_orientation_mask)
        assert dichromatic_number(D).value == res.value


class TestProductBound:
    def test_triangle_pair(self):
        P = categorical_product(triangle(), triangle())
        assert dichromatic_number(P).value == 2

    def test_acyclic_factor(self):
        D = Digraph(3, [(0, 1), (1, 2)])
        P = categorical_product(triangle(), D)
        assert dichromatic_number(P).value == 1

    def test_min_bound_random_pairs(self):
        for seed in range(15):
            D1 = Digraph(4, random_arcs(4, 0.5, seed))
            D2 = Digraph(5, random_arcs(5, 0.5, seed + 50))
            v1 = dichromatic_number(D1).value
            v2 = dichromatic_number(D2).value
            vp = dichromatic_number(categorical_product(D1, D2)).value
            assert vp <= min(v1, v2)


class TestListDichromatic:
    def test_acyclic_t1(self):
        D = Digraph(4, [(0, 1), (1, 2), (2, 3)])
        ok, bad = list_dichromatic_at_most(D, 1)
        assert ok and bad is None

    def test_triangle_t1_false(self):
        ok, bad = list_dichromatic_at_most(triangle(), 1)
        assert not ok
        assert len(bad) == 3 and all(len(L) == 1 for L in bad)

    def test_triangle_t2_true(self):
        ok, _ = list_dichromatic_at_most(triangle(), 2)
        assert ok
        assert list_dichromatic_number(triangle()) == 2

    def test_identical_lists_special_case(self):
        # list value at most t forces plain dichromatic number at most t
        for seed in range(8):
            D = Digraph(4, random_arcs(4, 0.5, seed + 300))
            t = list_dichromatic_number(D)
            assert t is not None
            assert dichromatic_number(D).value <= t

    def test_caps(self):
        with pytest.raises(ValueError):
            list_dichromatic_at_most(Digraph(7, []), 1)
        with pytest.raises(ValueError):
            list_dichromatic_at_most(Digraph(3, []), 4)
