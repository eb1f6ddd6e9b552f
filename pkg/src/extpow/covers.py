"""S_k gain graphs on exterior powers and their covers.

The gain of the oriented edge ``u -> v`` (``u`` before ``v`` in rank order)
is the permutation connecting ``u`` to ``v``; the reverse orientation carries
the inverse. A cover vertex is a pair ``(u, pi)`` and sits at index
``rank(u) * k! + perm_index(pi)``, with S_k listed in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import factorial

import numpy as np
import scipy.sparse as sp

from .algebra import IntMatrix, _check_rows
from .combinat import KSubset, Permutation, all_permutations, compose
from .exterior import wedge_power
from .signed import SignedGraph, underlying


@dataclass(frozen=True)
class GainGraph:
    k: int
    subsets: list[KSubset]
    base: SignedGraph
    gains: dict[tuple[int, int], Permutation]

    def gain(self, i: int, j: int) -> Permutation:
        """Gain along ``i -> j`` for base vertices given by rank."""
        if (i, j) in self.gains:
            return self.gains[i, j]
        return self.gains[j, i].inverse()


@dataclass(frozen=True)
class CoverGraph:
    k: int
    vertices: list[tuple[int, Permutation]]
    graph: SignedGraph

    def projection(self, index: int) -> int:
        return self.vertices[index][0]


@dataclass(frozen=True)
class TupleGraph:
    """A graph whose vertices are k-tuples of base vertices."""

    tuples: list[tuple[int, ...]]
    index: dict[tuple[int, ...], int]
    graph: SignedGraph


def gain_graph(g: SignedGraph, k: int) -> GainGraph:
    wp = wedge_power(g, k)
    gains = {(wp.index[e.u], wp.index[e.v]): e.pi for e in wp.edges}
    return GainGraph(k, wp.subsets, underlying(wp.graph), gains)


def lift(pi: Permutation, gain: Permutation) -> Permutation:
    """Sheet reached from sheet ``pi`` when crossing an edge with ``gain``.

    With ``pi(u) = (u[pi[0]], ...)`` this is ``gain^-1`` after ``pi``, the
    choice that makes ``(u, pi) -> pi(u)`` edge-preserving.
    """
    return compose(gain.inverse(), pi)


def build_cover(phi: GainGraph) -> CoverGraph:
    perms = all_permutations(phi.k)
    order = len(perms)
    pindex = {p: j for j, p in enumerate(perms)}
    vertices = [(i, p) for i in range(len(phi.subsets)) for p in perms]
    edges = []
    for (i, j), gain in phi.gains.items():
        for p in perms:
            edges.append((i * order + pindex[p], j * order + pindex[lift(p, gain)]))
    return CoverGraph(phi.k, vertices, SignedGraph(len(vertices), edges))


def cover_adjacency(phi: GainGraph) -> IntMatrix:
    """``sum_g A(G^g) (x) P_g`` with ``P_g[a, b] = [a == g b]``.

    ``A(G^g)`` holds the oriented edges whose gain is ``g``, so the sum runs
    over both orientations of each base edge.
    """
    perms = all_permutations(phi.k)
    nbase = len(phi.subsets)
    pindex = {p: j for j, p in enumerate(perms)}
    by_gain: dict[Permutation, list[tuple[int, int]]] = {}
    for (i, j), gain in phi.gains.items():
        by_gain.setdefault(gain, []).append((i, j))
        by_gain.setdefault(gain.inverse(), []).append((j, i))
    total = sp.csr_matrix((nbase * len(perms),) * 2, dtype=np.int64)
    for gain, arcs in by_gain.items():
        rows, cols = zip(*arcs)
        a_g = sp.csr_matrix(([1] * len(arcs), (rows, cols)), shape=(nbase, nbase), dtype=np.int64)
        p_rows = [pindex[compose(gain, b)] for b in perms]
        p_g = sp.csr_matrix(([1] * len(perms), (p_rows, range(len(perms)))), shape=(len(perms),) * 2, dtype=np.int64)
        total = total + sp.kron(a_g, p_g, format="csr")
    return IntMatrix(total)


def diagonal_deleted_power(g: SignedGraph, k: int) -> TupleGraph:
    """The k-fold Cartesian power restricted to tuples of distinct vertices.

    Tuples are listed in lexicographic order. Edges join tuples that differ
    in one coordinate by a base edge, and carry that edge's sign.
    """
    n = g.n
    if not (1 <= k <= n):
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    _check_rows(factorial(n) // factorial(n - k), "diagonal-deleted power")
    tuples = list(permutations(range(n), k))
    index = {t: i for i, t in enumerate(tuples)}
    edges = []
    for t in tuples:
        members = set(t)
        for j, x in enumerate(t):
            for y in g.neighbors(x):
                if y in members:
                    continue
                s = t[:j] + (y,) + t[j + 1:]
                if t < s:
                    edges.append((index[t], index[s], g.sign(x, y)))
    return TupleGraph(tuples, index, SignedGraph(len(tuples), edges))


def cover_map(phi: GainGraph, cover: CoverGraph, target: TupleGraph) -> list[int]:
    """Index of ``pi(u)`` in ``target`` for every cover vertex ``(u, pi)``."""
    return [target.index[p.act(phi.subsets[i])] for i, p in cover.vertices]


def verify_cover_isomorphism(g: SignedGraph, k: int) -> bool:
    """Check that ``(u, pi) -> pi(u)`` is an isomorphism onto the diagonal-deleted power."""
    phi = gain_graph(g, k)
    cover = build_cover(phi)
    target = diagonal_deleted_power(g, k)
    mapping = cover_map(phi, cover, target)
    if len(set(mapping)) != len(mapping) or len(mapping) != target.graph.n:
        return False
    if cover.graph.m != target.graph.m:
        return False
    return all(target.graph.has_edge(mapping[a], mapping[b]) for a, b in cover.graph.edge_pairs())


def is_covering_projection(phi: GainGraph, cover: CoverGraph) -> bool:
    fibers: dict[int, int] = {}
    for i, _ in cover.vertices:
        fibers[i] = fibers.get(i, 0) + 1
    order = factorial(phi.k)
    if sorted(fibers) != list(range(len(phi.subsets))) or any(c != order for c in fibers.values()):
        return False
    return all(phi.base.has_edge(cover.projection(a), cover.projection(b)) for a, b in cover.graph.edge_pairs())


def double_cover_matches_signs(g: SignedGraph) -> bool:
    """For k = 2: an edge of the exterior square is positive exactly when its
    lifts stay on their sheets, after accounting for the base edge sign."""
    wp = wedge_power(g, 2)
    phi = gain_graph(g, 2)
    cover = build_cover(phi)
    identity = Permutation.identity(2)
    for e in wp.edges:
        i, j = wp.index[e.u], wp.index[e.v]
        same_sheet = cover.graph.has_edge(i * 2, j * 2)
        expected = e.sign * g.sign(*e.base_edge) > 0
        if same_sheet != expected or same_sheet != (phi.gain(i, j) == identity):
            return False
    return True
