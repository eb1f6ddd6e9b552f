import random
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_force_wedge, graph_with_k, perm_sign_by_inversions, signed_graphs
from extpow.combinat import Permutation
from extpow.exterior import (
    connecting_permutation,
    connecting_sign,
    expected_edge_count,
    mirror_map,
    relabel_power,
    subset_switching,
    transposition_switching,
    wedge_degree,
    wedge_graph,
    wedge_power,
)
from extpow.families import cycle, path, star
from extpow.signed import (
    SignedGraph,
    is_balanced,
    relabel,
    sign_of_cycle,
    switch,
    switching_equivalent,
    underlying,
)

A, B, C, D = 0, 1, 2, 3


def brute_connecting(u, v):
    """All pi in S_k matching every coordinate but one, with the odd one out on a base pair."""
    found = []
    for pi in permutations(range(len(u))):
        bad = [t for t in range(len(u)) if u[pi[t]] != v[t]]
        if len(bad) == 1:
            found.append(pi)
    return found


class TestConnectingPermutation:
    def test_shared_prefix(self):
        pi, pair = connecting_permutation((A, B), (A, C))
        assert pi.is_identity() and pair == (B, C) and pi.sign == 1

    def test_swapped_pair_edge(self):
        pi, pair = connecting_permutation((A, B), (B, C))
        assert pi == Permutation([1, 0]) and pair == (A, C) and pi.sign == -1

    def test_against_search(self):
        found = brute_connecting((0, 1), (1, 3))
        assert len(found) == 1
        assert perm_sign_by_inversions(found[0]) == -1
        assert connecting_permutation((0, 1), (1, 3))[0].sign == -1

    def test_not_adjacent(self):
        assert connecting_permutation((0, 1), (2, 3)) is None
        assert connecting_permutation((0, 1), (0, 1)) is None

    @pytest.mark.parametrize("k", range(1, 6))
    def test_closed_form_matches_search(self, k):
        rng = random.Random(k)
        n = k + 3
        subs = list(combinations(range(n), k))
        pairs = [(u, v) for u in subs for v in subs if len(set(u) & set(v)) == k - 1]
        for u, v in rng.sample(pairs, min(len(pairs), 300)):
            found = brute_connecting(u, v)
            assert len(found) == 1
            pi, _ = connecting_permutation(u, v)
            assert pi.images == found[0]
            assert connecting_sign(u, v) == perm_sign_by_inversions(found[0]) == pi.sign
            # reversing the edge inverts pi and keeps the sign
            back, _ = connecting_permutation(v, u)
            assert back == pi.inverse() and back.sign == pi.sign


class TestWedgePower:
    def test_k1_is_identity(self):
        g = SignedGraph(5, [(0, 1, -1), (1, 2, 1), (2, 4, -1), (0, 3, 1)])
        assert wedge_graph(g, 1) == g

    def test_c4_example(self):
        wp = wedge_power(cycle(4), 2)
        g = wp.graph
        degrees = {wp.subsets[i]: g.degree(i) for i in range(g.n)}
        assert {u for u, d in degrees.items() if d == 4} == {(0, 2), (1, 3)}
        assert all(d == 2 for u, d in degrees.items() if u not in {(0, 2), (1, 3)})
        assert g.m == 8
        negatives = {(e.u, e.v) for e in wp.edges if e.sign < 0}
        assert negatives == {((0, 1), (1, 3)), ((0, 2), (2, 3))}
        assert not is_balanced(g).balanced
        assert brute_force_wedge(cycle(4), 2) == {(u, v): s for u, v, s in g.edges()}

    def test_claw_square_hexagon(self):
        wp = wedge_power(star(3), 2)
        hexagon = [(A, B), (B, C), (A, C), (C, D), (A, D), (B, D)]
        idx = [wp.index[u] for u in hexagon]
        signs = [wp.graph.sign(idx[i], idx[(i + 1) % 6]) for i in range(6)]
        assert signs == [-1, 1, -1, 1, 1, -1]
        assert sign_of_cycle(wp.graph, idx) == -1
        assert wp.graph.m == 6

    def test_k_out_of_range(self):
        with pytest.raises(ValueError):
            wedge_power(path(4), 4)
        with pytest.raises(ValueError):
            wedge_power(path(4), 0)

    @given(graph_with_k(max_n=6))
    @settings(max_examples=150, deadline=None)
    def test_matches_definition(self, gk):
        g, k = gk
        wp = wedge_power(g, k)
        assert {(u, v): s for u, v, s in wp.graph.edges()} == brute_force_wedge(g, k)
        assert wedge_graph(g, k) == wp.graph

    @given(graph_with_k(max_n=7))
    @settings(max_examples=150, deadline=None)
    def test_edge_count_and_degrees(self, gk):
        g, k = gk
        wp = wedge_power(g, k)
        assert wp.graph.m == expected_edge_count(g, k)
        for i, u in enumerate(wp.subsets):
            assert wp.graph.degree(i) == wedge_degree(g, u)

    @given(graph_with_k(max_n=7))
    @settings(max_examples=100, deadline=None)
    def test_provenance(self, gk):
        g, k = gk
        for e in wedge_power(g, k).edges:
            a, b = e.base_edge
            assert set(e.u) ^ set(e.v) == {a, b} and a in e.u and b in e.v
            assert e.sign == e.pi.sign * g.sign(a, b)
            assert e.pi.act(e.u) == tuple(a if x == b else x for x in e.v)

    @given(graph_with_k(max_n=7), st.randoms(use_true_random=False))
    @settings(max_examples=100, deadline=None)
    def test_switching_lifts(self, gk, rng):
        g, k = gk
        d = [rng.choice((-1, 1)) for _ in range(g.n)]
        wp = wedge_power(g, k)
        assert wedge_graph(switch(g, d), k) == switch(wp.graph, subset_switching(d, wp.subsets))

    @given(graph_with_k(max_n=7), st.randoms(use_true_random=False))
    @settings(max_examples=100, deadline=None)
    def test_ordering_invariance(self, gk, rng):
        g, k = gk
        rho = list(range(g.n))
        rng.shuffle(rho)
        wp = wedge_power(g, k)
        assert switching_equivalent(wedge_graph(relabel(g, rho), k), relabel_power(wp, rho)) is not None

    @given(graph_with_k(max_n=7), st.data())
    @settings(max_examples=100, deadline=None)
    def test_adjacent_transposition_witness(self, gk, data):
        g, k = gk
        x = data.draw(st.integers(0, g.n - 2))
        swap = list(range(g.n))
        swap[x], swap[x + 1] = x + 1, x
        wp = wedge_power(g, k)
        d = transposition_switching(x, x + 1, wp.subsets)
        assert switch(relabel_power(wp, swap), d) == wedge_graph(relabel(g, swap), k)


class TestMirror:
    def test_complement(self):
        assert mirror_map((0, 1), 4) == (2, 3)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_involution(self, n):
        for k in range(1, n):
            for u in combinations(range(n), k):
                assert mirror_map(mirror_map(u, n), n) == u

    @pytest.mark.parametrize("k, other", [(2, 2), (1, 3), (3, 1)])
    def test_p4_edge_bijection(self, k, other):
        low, high = wedge_power(path(4), k), wedge_power(path(4), other)
        relabeled = {
            tuple(sorted((high.index[mirror_map(low.subsets[i], 4)], high.index[mirror_map(low.subsets[j], 4)])))
            for i, j in low.graph.edge_pairs()
        }
        assert relabeled == set(high.graph.edge_pairs())

    @given(signed_graphs(max_n=7))
    @settings(max_examples=60, deadline=None)
    def test_mirror_isomorphism(self, g):
        n = g.n
        for k in range(1, n):
            low, high = wedge_power(g, k), wedge_power(g, n - k)
            mapped = {
                tuple(sorted((high.index[mirror_map(low.subsets[i], n)], high.index[mirror_map(low.subsets[j], n)])))
                for i, j in low.graph.edge_pairs()
            }
            assert mapped == set(underlying(high.graph).edge_pairs())
