"""Digraph substrate: certificates, induced subdigraphs, products,
orientation enumeration, exchange format."""

import itertools

import pytest

from dichrolab.digraph import (
    AcyclicityCertificate,
    Digraph,
    FamilyGraph,
    categorical_product,
    induced_subdigraph,
    is_acyclic,
    orientation_from_mask,
    orientations_iter,
    random_orientation,
    read_digraph,
    read_graph,
    read_labels,
    write_digraph,
    write_graph,
    write_labels,
)
from dichrolab.families import gen_generalized_kneser, orient_min_rule

from brute import has_directed_cycle


def triangle():
    return Digraph(3, [(0, 1), (1, 2), (2, 0)])


class TestIsAcyclic:
    def test_arcless(self):
        cert = is_acyclic(Digraph(5, []))
        assert cert.acyclic and sorted(cert.topo_order) == list(range(5))

    def test_directed_triangle(self):
        cert = is_acyclic(triangle())
        assert not cert.acyclic
        assert sorted(cert.cycle) == [0, 1, 2]
        assert cert.check(triangle())

    def test_transitive_tournament(self):
        D = Digraph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
        cert = is_acyclic(D)
        assert cert.acyclic and cert.topo_order == [0, 1, 2, 3]
        assert cert.check(D)

    def test_certificates_sound_on_random_digraphs(self):
        from brute import random_arcs
        for seed in range(50):
            arcs = random_arcs(6, 0.3, seed)
            D = Digraph(6, arcs)
            cert = is_acyclic(D)
            assert cert.check(D)
            assert cert.acyclic == (not has_directed_cycle(6, arcs))

    def test_checker_rejects_bad_certificates(self):
        D = triangle()
        assert not AcyclicityCertificate(topo_order=[0, 1, 2]).check(D)
        assert not AcyclicityCertificate(cycle=[0, 2, 1]).check(D)
        assert not AcyclicityCertificate(cycle=[0]).check(D)

    def test_no_self_loops(self):
        with pytest.raises(ValueError):
            Digraph(2, [(0, 0)])


class TestInduced:
    def test_full_set_identity(self):
        D = triangle()
        H, m = induced_subdigraph(D, [0, 1, 2])
        assert m == {0: 0, 1: 1, 2: 2}
        assert sorted(H.arcs()) == sorted(D.arcs())

    def test_two_of_triangle(self):
        H, m = induced_subdigraph(triangle(), [1, 2])
        assert H.n_vertices == 2 and H.n_arcs == 1
        assert list(H.arcs()) == [(m[1], m[2])]

    def test_petersen_neighborhood_recount(self):
        # oracle: recount arcs by direct pairwise adjacency test
        G = gen_generalized_kneser(5, 2, 0)
        D = orient_min_rule(G)
        nbrs = [v for v in range(10) if G.has_edge(0, v)]
        H, m = induced_subdigraph(D, nbrs)
        assert H.n_vertices == 3
        expect = sum(1 for u in nbrs for v in nbrs if D.has_arc(u, v))
        assert H.n_arcs == expect

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            induced_subdigraph(triangle(), [0, 7])


class TestProduct:
    def test_arcless_factor(self):
        P = categorical_product(triangle(), Digraph(1, []))
        assert P.n_vertices == 3 and P.n_arcs == 0

    def test_triangle_times_triangle(self):
        # oracle: direct construction, three disjoint directed triangles
        P = categorical_product(triangle(), triangle())
        assert P.n_vertices == 9 and P.n_arcs == 9
        arcs = set(P.arcs())
        expect = {(a * 3 + b, ((a + 1) % 3) * 3 + (b + 1) % 3)
                  for a in range(3) for b in range(3)}
        assert arcs == expect

    def test_single_arcs(self):
        P = categorical_product(Digraph(2, [(0, 1)]), Digraph(2, [(0, 1)]))
        assert P.n_vertices == 4 and P.n_arcs == 1

    def test_cap(self):
        with pytest.raises(ValueError):
            categorical_product(Digraph(70, []), Digraph(70, []))

    def test_acyclic_factor_gives_acyclic_product(self):
        from brute import random_arcs
        for seed in range(20):
            D1 = Digraph(4, random_arcs(4, 0.5, seed))
            D2 = Digraph(4, [(u, v) for u, v in random_arcs(4, 0.5, seed + 100) if u < v])
            assert is_acyclic(D2).acyclic
            assert is_acyclic(categorical_product(D1, D2)).acyclic

    def test_cycle_projects_to_closed_walk(self):
        D1 = triangle()
        D2 = Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        P = categorical_product(D1, D2)
        cert = is_acyclic(P)
        if not cert.acyclic:
            cyc = cert.cycle
            t = len(cyc)
            for i in range(t):
                u1, u2 = divmod(cyc[i], 4)
                v1, v2 = divmod(cyc[(i + 1) % t], 4)
                assert D1.has_arc(u1, v1) and D2.has_arc(u2, v2)


class TestOrientations:
    def test_single_edge(self):
        G = FamilyGraph(2, [(0, 1)])
        seen = list(orientations_iter(G))
        assert len(seen) == 2
        assert sorted(list(D.arcs()) for _, D in seen) == [[(0, 1)], [(1, 0)]]

    def test_triangle_exhaustive(self):
        # oracle: exhaustive count of cyclic orientations
        G = FamilyGraph(3, [(0, 1), (0, 2), (1, 2)])
        ds = list(orientations_iter(G))
        assert len(ds) == 8
        arcsets = {frozenset(D.arcs()) for _, D in ds}
        assert len(arcsets) == 8
        assert all(D.n_arcs == 3 for _, D in ds)
        cyclic = sum(not is_acyclic(D).acyclic for _, D in ds)
        assert cyclic == 2

    def test_petersen_count(self):
        G = gen_generalized_kneser(5, 2, 0)
        assert G.n_edges == 15
        assert sum(1 for _ in orientations_iter(G)) == 2 ** 15

    def test_edge_cap(self):
        G = gen_generalized_kneser(5, 2, 0)
        with pytest.raises(ValueError):
            next(orientations_iter(G, edge_cap=10))

    def test_partitioned_ranges_cover_all(self):
        G = FamilyGraph(3, [(0, 1), (0, 2), (1, 2)])
        a = [m for m, _ in orientations_iter(G, start=0, stop=4)]
        b = [m for m, _ in orientations_iter(G, start=4, stop=8)]
        assert a + b == list(range(8))


class TestRandomOrientation:
    def test_deterministic(self):
        G = gen_generalized_kneser(5, 2, 0)
        a = random_orientation(G, 42)
        b = random_orientation(G, 42)
        assert list(a.arcs()) == list(b.arcs())

    def test_arc_count_no_digons(self):
        G = gen_generalized_kneser(5, 2, 0)
        D = random_orientation(G, 7)
        assert D.n_arcs == G.n_edges
        assert not any(D.has_arc(v, u) for u, v in D.arcs())

    def test_cyclic_fraction_near_exact(self):
        # oracle: exact fraction 2/8 from exhaustive enumeration
        G = FamilyGraph(3, [(0, 1), (0, 2), (1, 2)])
        frac = sum(not is_acyclic(random_orientation(G, s)).acyclic
                   for s in range(1000)) / 1000
        assert abs(frac - 2 / 8) < 0.1


class TestExchangeFormat:
    def test_digraph_round_trip(self, tmp_path):
        D = triangle()
        path = tmp_path / "tri.dg"
        write_digraph(D, path)
        text = path.read_text()
        assert text.splitlines()[0] == "p digraph 3 3"
        assert "\r" not in text
        D2 = read_digraph(path)
        assert sorted(D2.arcs()) == sorted(D.arcs())

    def test_graph_and_labels_round_trip(self, tmp_path):
        G = gen_generalized_kneser(5, 2, 0)
        gpath, lpath = tmp_path / "g.graph", tmp_path / "g.labels.json"
        write_graph(G, gpath)
        write_labels(G.labels, lpath)
        labels = read_labels(lpath, 5)
        G2 = read_graph(gpath, labels)
        assert G2.edges == G.edges
        assert [L.mask for L in G2.labels] == [L.mask for L in G.labels]

    def test_header_mismatch(self, tmp_path):
        path = tmp_path / "bad.dg"
        path.write_text("p digraph 2 2\na 0 1\n")
        with pytest.raises(ValueError):
            read_digraph(path)
