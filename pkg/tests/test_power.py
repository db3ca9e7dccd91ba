from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphpowers import (
    DisconnectedGraphError,
    build_digraph,
    build_graph,
    cayley_directed,
    cycle,
    diameter,
    digraph_power,
    directed_cycle,
    graph_power,
    growth_profile,
    layered_h,
    path,
    power_edge_count,
    power_oracle,
)
from graphpowers.graph import ball

from conftest import brute_power_edges, sumset_distance
from test_graph import connected_graphs, small_graphs


def test_complete_stays_complete():
    K2 = build_graph(2, [(0, 1)])
    assert graph_power(K2, 5) == K2


def test_p4_cubed_is_k4():
    P = graph_power(path(4), 3)
    assert P.m == 6


def test_c12_squared():
    P = graph_power(cycle(12), 2)
    assert P.m == 24 and all(len(row) == 4 for row in P.adj)
    assert set(P.edges()) == brute_power_edges(12, cycle(12).edges(), 2)
    assert power_oracle(cycle(12), 2) == P


def test_oracle_small_cases():
    assert power_oracle(path(4), 1) == path(4)
    assert power_oracle(cycle(7), 3).m == 21


def test_oracle_size_guard():
    with pytest.raises(ValueError, match="exceeds"):
        power_oracle(cycle(1001), 2)


def test_radius_guard():
    with pytest.raises(ValueError):
        graph_power(cycle(5), 0)


def test_disconnected_power_acts_per_component():
    G = build_graph(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    assert set(graph_power(G, 5).edges()) == {(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)}


@given(small_graphs(), st.integers(1, 6))
@settings(max_examples=80)
def test_power_matches_floyd_warshall(G, r):
    assert set(graph_power(G, r).edges()) == brute_power_edges(G.n, G.edges(), r)
    assert power_edge_count(G, r) == graph_power(G, r).m


@given(small_graphs(), st.integers(1, 6))
@settings(max_examples=80)
def test_power_matches_oracle(G, r):
    assert graph_power(G, r) == power_oracle(G, r)


@given(small_graphs(), st.integers(1, 5))
@settings(max_examples=60)
def test_monotone_and_contains_base(G, r):
    lo, hi = set(graph_power(G, r).edges()), set(graph_power(G, r + 1).edges())
    assert set(G.edges()) <= lo <= hi
    P = graph_power(G, r)
    assert 2 * P.m == sum(len(row) for row in P.adj)


@given(small_graphs(), st.integers(1, 5))
@settings(max_examples=60)
def test_one_more_step(G, r):
    # every (r+1)-edge factors as an r-step (or stay) followed by one G-step (or stay)
    Pa = graph_power(G, r)
    closed_a = [set(row) | {v} for v, row in enumerate(Pa.adj)]
    closed_1 = [set(row) | {v} for v, row in enumerate(G.adj)]
    for x, y in graph_power(G, r + 1).edges():
        assert any(y in closed_1[z] for z in closed_a[x])


@given(connected_graphs(), st.integers(0, 3))
@settings(max_examples=40)
def test_complete_from_diameter_on(G, extra):
    P = graph_power(G, diameter(G) + extra)
    assert P.m == comb(G.n, 2)


def test_regular_input_irregular_power():
    from graphpowers import regularized_h, regularity

    G = regularized_h(4, 9)
    assert regularity(G) == 9
    assert regularity(graph_power(G, 2)) is None


class TestDigraphPower:
    def test_directed_five_cycle(self):
        P = digraph_power(directed_cycle(5), 2)
        assert P.m == 10 and all(len(row) == 2 for row in P.out_adj)

    def test_identity_at_one(self):
        D = build_digraph(4, [(0, 1), (1, 2), (3, 0), (2, 0)])
        assert digraph_power(D, 1) == D

    def test_cayley_z7(self):
        P = digraph_power(cayley_directed(7, {1, 2}), 2)
        dist = sumset_distance(7, {1, 2}, directed=True)
        assert sum(1 for x, k in dist.items() if 1 <= k <= 2) == 4
        assert P.m == 28 and all(len(row) == 4 for row in P.out_adj)

    @given(st.integers(2, 8), st.data())
    @settings(max_examples=50)
    def test_matches_floyd_warshall(self, n, data):
        pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
        arcs = data.draw(st.lists(st.sampled_from(pairs), unique=True))
        r = data.draw(st.integers(1, 4))
        D = build_digraph(n, arcs)
        assert set(digraph_power(D, r).arcs()) == brute_power_edges(n, arcs, r, directed=True)
        assert power_edge_count(D, r) == digraph_power(D, r).m


class TestGrowthProfile:
    def test_c12(self):
        prof = growth_profile(cycle(12))
        assert prof.base_edges == 12 and prof.diam == 6
        assert [(row.r, row.power_edges, row.ratio) for row in prof.rows] == [
            (1, 12, 1), (2, 24, 2), (3, 36, 3), (4, 48, 4), (5, 60, 5), (6, 66, Fraction(11, 2))
        ]

    def test_k5(self):
        from graphpowers import complete

        prof = growth_profile(complete(5))
        assert [(row.r, row.power_edges, row.ratio) for row in prof.rows] == [(1, 10, 1)]

    def test_h39(self):
        prof = growth_profile(layered_h(3, 9))
        assert prof.rows[-1].r == 3 and prof.rows[-1].power_edges == comb(20, 2) == 190

    def test_csv(self):
        assert growth_profile(cycle(4)).to_csv() == "r,edges,ratio_num,ratio_den\n1,4,1,1\n2,6,3,2\n"

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            growth_profile(build_graph(3, [(0, 1)]))

    @given(connected_graphs())
    @settings(max_examples=40)
    def test_rows_match_power(self, G):
        prof = growth_profile(G)
        counts = [row.power_edges for row in prof.rows]
        assert counts == sorted(counts)
        assert counts[-1] == comb(G.n, 2)
        assert prof.rows[0].ratio == 1
        for row in prof.rows:
            assert row.power_edges == graph_power(G, row.r).m


def test_ball_excludes_source():
    assert ball(cycle(6), 0, 2) == [1, 2, 4, 5]
