from __future__ import annotations

from itertools import combinations, permutations

import networkx as nx
from hypothesis import strategies as st

from extpow.signed import SignedGraph


def perm_sign_by_inversions(p) -> int:
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return -1 if inv % 2 else 1


def brute_force_wedge(g: SignedGraph, k: int) -> dict[tuple[int, int], int]:
    """Signed edges of the exterior power straight from the adjacency definition.

    Tries every pair of k-subsets and every permutation of range(k); keys are
    pairs of lexicographic ranks with the smaller first.
    """
    subs = list(combinations(range(g.n), k))
    out = {}
    for i, u in enumerate(subs):
        for j, v in enumerate(subs):
            if j <= i:
                continue
            for pi in permutations(range(k)):
                bad = [t for t in range(k) if u[pi[t]] != v[t]]
                if len(bad) == 1:
                    t = bad[0]
                    a, b = u[pi[t]], v[t]
                    if g.has_edge(a, b):
                        out[i, j] = perm_sign_by_inversions(pi) * g.sign(a, b)
    return out


def to_nx(g: SignedGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    for u, v, s in g.edges():
        h.add_edge(u, v, sign=s)
    return h


def cycles_all_positive(g: SignedGraph) -> bool:
    h = to_nx(g)
    for cyc in nx.simple_cycles(h):
        s = 1
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            s *= g.sign(a, b)
        if s < 0:
            return False
    return True


@st.composite
def signed_graphs(draw, min_n: int = 2, max_n: int = 7, connected: bool = False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    signs = draw(st.lists(st.sampled_from([-1, 1]), min_size=len(pairs), max_size=len(pairs)))
    edges = [(u, v, s) for (u, v), keep, s in zip(pairs, mask, signs) if keep]
    if connected:
        # stitch in a random spanning path so the graph is connected
        order = draw(st.permutations(range(n)))
        present = {(u, v) for u, v, _ in edges}
        for a, b in zip(order, order[1:]):
            key = (min(a, b), max(a, b))
            if key not in present:
                present.add(key)
                edges.append((key[0], key[1], draw(st.sampled_from([-1, 1]))))
    return SignedGraph(n, edges)


@st.composite
def graph_with_k(draw, min_n: int = 2, max_n: int = 7, connected: bool = False):
    g = draw(signed_graphs(min_n, max_n, connected))
    k = draw(st.integers(1, g.n - 1))
    return g, k


@st.composite
def switching_vectors(draw, n: int):
    return tuple(draw(st.lists(st.sampled_from([-1, 1]), min_size=n, max_size=n)))


# one line per acceptance criterion, filled in by test_acceptance
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
