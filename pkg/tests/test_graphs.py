import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mainspec.graphs import (
    MAX_ENUM_ORDER,
    Graph,
    ParameterError,
    bipartition,
    complement,
    complete,
    complete_bipartite,
    cycle,
    degree_data,
    double_star,
    empty_graph,
    enumerate_graphs,
    harmonic_tree,
    is_bipartite,
    is_connected,
    is_semiregular_bipartite,
    path,
    pendant_decorated,
    star,
    triangle_pairs,
)

# Frozen labeled-graph counts (total, connected) up to n = 5.
ENUM_COUNTS = {1: (1, 1), 2: (2, 1), 3: (8, 4), 4: (64, 38), 5: (1024, 728)}


def mask_strategy(max_n=7):
    return st.integers(min_value=1, max_value=max_n).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.integers(min_value=0, max_value=(1 << (n * (n - 1) // 2)) - 1),
        )
    )


class TestGraphType:
    def test_rejects_loops(self):
        with pytest.raises(ParameterError):
            Graph.from_edges(2, [(0, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ParameterError):
            Graph.from_edges(2, [(0, 2)])

    def test_rejects_nonpositive_order(self):
        with pytest.raises(ParameterError):
            Graph(0, ())

    def test_rejects_asymmetric_rows(self):
        with pytest.raises(ParameterError):
            Graph(2, (0b10, 0b00))

    def test_duplicate_edges_collapse(self):
        g = Graph.from_edges(3, [(0, 1), (1, 0), (0, 1)])
        assert g.m == 1

    def test_neighbors_and_degree(self):
        g = star(4)
        assert g.degree(0) == 3
        assert sorted(g.neighbors(0)) == [1, 2, 3]
        assert g.degrees() == (3, 1, 1, 1)

    def test_adjacency_matrix_symmetric(self):
        a = double_star(2, 3).adjacency_matrix()
        assert (a == a.T).all()
        assert a.trace() == 0

    def test_triangle_pairs_column_major(self):
        # (0,1), (0,2), (1,2), (0,3), ... — the graph6 bit order.
        assert triangle_pairs(4) == ((0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3))


class TestEnumeration:
    @pytest.mark.parametrize("n", sorted(ENUM_COUNTS))
    def test_total_counts(self, n):
        total, _ = ENUM_COUNTS[n]
        assert sum(1 for _ in enumerate_graphs(n)) == total

    @pytest.mark.parametrize("n", sorted(ENUM_COUNTS))
    def test_connected_counts(self, n):
        _, conn = ENUM_COUNTS[n]
        assert sum(1 for _ in enumerate_graphs(n, connected_only=True)) == conn

    def test_order_cap(self):
        with pytest.raises(ParameterError):
            next(enumerate_graphs(MAX_ENUM_ORDER + 1))

    def test_masks_are_distinct(self):
        seen = {g.edge_mask() for g in enumerate_graphs(4)}
        assert len(seen) == 64


@settings(max_examples=300)
@given(mask_strategy())
def test_complement_involution(nm):
    n, mask = nm
    g = Graph.from_edge_mask(n, mask)
    assert complement(complement(g)) == g


@settings(max_examples=300)
@given(mask_strategy())
def test_complement_edge_count(nm):
    n, mask = nm
    g = Graph.from_edge_mask(n, mask)
    assert g.m + complement(g).m == n * (n - 1) // 2


@settings(max_examples=300)
@given(mask_strategy())
def test_handshake(nm):
    n, mask = nm
    g = Graph.from_edge_mask(n, mask)
    assert sum(g.degrees()) == 2 * g.m


@settings(max_examples=200)
@given(mask_strategy(6))
def test_degree_data_consistent(nm):
    n, mask = nm
    g = Graph.from_edge_mask(n, mask)
    dv = degree_data(g)
    assert dv.m == g.m
    assert dv.sum_squares == sum(d * d for d in g.degrees())


class TestPredicates:
    def test_connected_path(self):
        assert is_connected(path(6))

    def test_disconnected(self):
        assert not is_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))

    def test_single_vertex_connected(self):
        assert is_connected(empty_graph(1))

    def test_bipartite_even_cycle(self):
        assert is_bipartite(cycle(6))
        assert not is_bipartite(cycle(5))

    def test_bipartition_is_valid(self):
        g = double_star(2, 3)
        parts = bipartition(g)
        assert parts is not None
        left, right = parts
        assert set(left) | set(right) == set(range(g.n))
        for u, v in g.edges():
            assert (u in left) != (v in left)

    def test_semiregular_star(self):
        assert is_semiregular_bipartite(star(4))

    def test_semiregular_double_star_false(self):
        # centers land in the same part with degrees 3 and 4
        assert not is_semiregular_bipartite(double_star(2, 3))

    def test_semiregular_needs_connected(self):
        assert not is_semiregular_bipartite(Graph.from_edges(4, [(0, 1), (2, 3)]))

    def test_semiregular_odd_cycle_false(self):
        assert not is_semiregular_bipartite(cycle(5))

    def test_semiregular_unbalanced_complete_bipartite(self):
        assert is_semiregular_bipartite(complete_bipartite(2, 5))


class TestFamilies:
    @pytest.mark.parametrize("n,expected_m", [(1, 0), (2, 1), (5, 4)])
    def test_path_edges(self, n, expected_m):
        assert path(n).m == expected_m

    def test_cycle(self):
        g = cycle(5)
        assert g.m == 5 and set(g.degrees()) == {2}

    def test_cycle_min_order(self):
        with pytest.raises(ParameterError):
            cycle(2)

    def test_complete(self):
        g = complete(5)
        assert g.m == 10 and set(g.degrees()) == {4}

    def test_star_is_complete_bipartite(self):
        assert star(5) == complete_bipartite(1, 4)

    def test_double_star_counts(self):
        for k, s in [(1, 1), (2, 3), (5, 2)]:
            g = double_star(k, s)
            assert g.n == k + s + 2
            assert g.m == k + s + 1
            assert is_connected(g) and is_bipartite(g)

    def test_double_star_degrees(self):
        g = double_star(2, 3)
        assert sorted(g.degrees(), reverse=True) == [4, 3, 1, 1, 1, 1, 1]

    @pytest.mark.parametrize("ell", [2, 3, 4])
    def test_harmonic_tree_degree_multiset(self, ell):
        g = harmonic_tree(ell)
        h = ell * ell - ell + 1
        expected = sorted([h] + [ell] * h + [1] * (h * (ell - 1)), reverse=True)
        assert sorted(g.degrees(), reverse=True) == expected
        assert g.n == ell**3 - ell**2 + ell + 1
        assert is_connected(g)
        assert g.m == g.n - 1  # a tree

    def test_pendant_order(self):
        g = pendant_decorated(cycle(5), 2)
        assert g.n == 15
        assert sorted(set(g.degrees())) == [1, 4]

    def test_pendant_requires_regular(self):
        with pytest.raises(ParameterError):
            pendant_decorated(path(4), 1)

    def test_pendant_requires_connected(self):
        with pytest.raises(ParameterError):
            pendant_decorated(Graph.from_edges(4, [(0, 1), (2, 3)]), 1)
