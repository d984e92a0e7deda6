import pytest
from hypothesis import given, settings

from signedgraph.core import (
    Edge,
    GraphError,
    SignedGraph,
    complete_graph,
    components,
    cycle_graph,
    disjoint_union,
    negate,
    new_graph,
    path_graph,
    random_graph,
    regular_degree,
    star_graph,
    triangle_census,
    underlying,
    vertex_cover_number,
)

from .conftest import signed_graphs


class TestConstruction:
    def test_new_graph_normalizes_endpoint_order(self):
        g = new_graph(3, [(2, 0, -1)])
        assert g.edges == (Edge(0, 2, -1),)

    def test_sign_strings_accepted(self):
        g = new_graph(2, [(0, 1, "-")])
        assert g.edges[0].sign == -1

    def test_rejects_loop(self):
        with pytest.raises(GraphError, match="loop"):
            new_graph(3, [(1, 1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphError):
            new_graph(3, [(0, 3, 1)])

    def test_rejects_duplicate_edge(self):
        with pytest.raises(GraphError, match="parallel"):
            new_graph(3, [(0, 1, 1), (1, 0, -1)])

    def test_rejects_bad_sign(self):
        with pytest.raises(GraphError):
            new_graph(2, [(0, 1, 0)])

    def test_rejects_negative_order(self):
        with pytest.raises(GraphError):
            SignedGraph(-1, ())

    def test_frozen(self, c4_pendant):
        with pytest.raises(AttributeError):
            c4_pendant.n = 7


class TestAccessors:
    def test_fixture_shape(self, c4_pendant):
        assert c4_pendant.n == 5
        assert c4_pendant.m == 5
        assert c4_pendant.degrees() == (2, 3, 2, 2, 1)

    def test_sign_of_is_symmetric(self, c4_pendant):
        assert c4_pendant.sign_of(3, 0) == -1
        assert c4_pendant.sign_of(0, 3) == -1

    def test_sign_of_missing_edge(self, c4_pendant):
        with pytest.raises(GraphError):
            c4_pendant.sign_of(0, 2)

    def test_neighbors_sorted(self, c4_pendant):
        assert c4_pendant.neighbors(1) == (0, 2, 4)

    def test_has_edge(self, c4_pendant):
        assert c4_pendant.has_edge(4, 1)
        assert not c4_pendant.has_edge(0, 4)

    def test_checksum_changes_with_sign(self):
        a = new_graph(2, [(0, 1, 1)])
        b = new_graph(2, [(0, 1, -1)])
        assert a.checksum != b.checksum
        assert len(a.checksum) == 12

    def test_iter_yields_edges(self, c4_pendant):
        assert list(c4_pendant) == list(c4_pendant.edges)


class TestGenerators:
    def test_path(self):
        g = path_graph(4, "+-+")
        assert [e.sign for e in g.edges] == [1, -1, 1]
        assert g.degrees() == (1, 2, 2, 1)

    def test_cycle_closing_edge(self):
        g = cycle_graph(4, "-")
        assert Edge(0, 3, -1) in g.edges
        assert all(d == 2 for d in g.degrees())

    def test_cycle_too_short(self):
        with pytest.raises(GraphError):
            cycle_graph(2, "+")

    def test_complete_edge_count(self):
        g = complete_graph(5, "+")
        assert g.m == 10

    def test_star_center_zero(self):
        g = star_graph(3, "-")
        assert g.n == 4
        assert g.degree(0) == 3

    def test_sign_pattern_cycled(self):
        g = path_graph(5, "+-")
        assert [e.sign for e in g.edges] == [1, -1, 1, -1]

    def test_sign_pattern_rejects_garbage(self):
        with pytest.raises(GraphError):
            path_graph(3, "+x")

    def test_random_graph_deterministic(self):
        a = random_graph(8, 0.5, 0.5, seed=11)
        b = random_graph(8, 0.5, 0.5, seed=11)
        assert a == b

    def test_random_graph_respects_extremes(self):
        full = random_graph(6, 1.0, 1.0, seed=3)
        assert full.m == 15
        assert all(e.sign == -1 for e in full.edges)
        assert random_graph(6, 0.0, 0.5, seed=3).m == 0


class TestRewrites:
    def test_negate_involution(self, c4_pendant):
        assert negate(negate(c4_pendant)) == c4_pendant

    def test_underlying_all_positive(self, c4_pendant):
        assert all(e.sign == 1 for e in underlying(c4_pendant).edges)

    def test_disjoint_union_offsets(self):
        g = disjoint_union([path_graph(2, "+"), path_graph(2, "-")])
        assert g.n == 4
        assert g.edges == (Edge(0, 1, 1), Edge(2, 3, -1))

    def test_components(self):
        g = disjoint_union([path_graph(3, "+"), cycle_graph(3, "+")])
        assert components(g) == [[0, 1, 2], [3, 4, 5]]

    def test_regular_degree(self):
        assert regular_degree(cycle_graph(5, "+")) == 2
        assert regular_degree(path_graph(3, "+")) is None


class TestTriangles:
    def test_census_complete(self):
        census = triangle_census(complete_graph(4, "+"))
        assert (census.positive, census.negative, census.total) == (4, 0, 4)

    def test_census_signs(self):
        g = cycle_graph(3, "++-")
        census = triangle_census(g)
        assert census.positive == 0
        assert census.negative == 1

    def test_census_empty(self):
        assert triangle_census(path_graph(4, "+")).total == 0


class TestVertexCover:
    def test_fixture_golden(self, c4_pendant):
        tau, cover = vertex_cover_number(c4_pendant)
        assert tau == 2
        assert cover == frozenset({1, 3})

    def test_star(self):
        tau, cover = vertex_cover_number(star_graph(4, "+"))
        assert tau == 1 and cover == frozenset({0})

    def test_empty_graph(self):
        assert vertex_cover_number(SignedGraph(3, ())) == (0, frozenset())

    @settings(max_examples=40, deadline=None)
    @given(signed_graphs(max_n=6))
    def test_cover_covers_every_edge(self, g):
        tau, cover = vertex_cover_number(g)
        assert len(cover) == tau
        assert all(e.u in cover or e.v in cover for e in g.edges)

    @settings(max_examples=40, deadline=None)
    @given(signed_graphs(max_n=6))
    def test_cover_is_minimum_by_brute_force(self, g):
        from itertools import combinations

        tau, _ = vertex_cover_number(g)
        for k in range(tau):
            for subset in combinations(range(g.n), k):
                chosen = set(subset)
                assert not all(e.u in chosen or e.v in chosen for e in g.edges)


class TestPackageSurface:
    def test_all_names_resolve(self):
        import signedgraph

        for name in signedgraph.__all__:
            assert hasattr(signedgraph, name), name

    def test_public_bindings_are_exported(self):
        import types

        import signedgraph

        public = {
            name
            for name, value in vars(signedgraph).items()
            if not name.startswith("_")
            and not isinstance(value, types.ModuleType)
            and getattr(value, "__module__", "").startswith("signedgraph")
        }
        assert public <= set(signedgraph.__all__)
