"""Combinatorial exterior powers of signed graphs.

The exterior k-th power of a signed graph on ``n`` vertices has the
k-subsets of the vertex set as vertices (in lexicographic order, so vertex
``i`` of the result is ``unrank(i, n, k)``). Two subsets ``u`` and ``v`` are
adjacent when ``u ^ v == {a, b}`` for a base edge ``(a, b)``. The edge sign is
the sign of the permutation connecting ``u`` to ``v`` times the sign of the
base edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Optional, Sequence

from .combinat import KSubset, Permutation, check_subset, subsets
from .signed import SignedGraph


@dataclass(frozen=True)
class WedgeEdge:
    """An edge of an exterior power with its provenance.

    ``pi`` connects ``u`` to ``v``: ``u[pi[j]] == v[j]`` for every position
    except ``i``, where ``u[pi[i]] == a`` and ``v[i] == b``. ``base_edge`` is
    ``(a, b)`` with ``a`` in ``u`` and ``b`` in ``v``.
    """

    u: KSubset
    v: KSubset
    pi: Permutation
    base_edge: tuple[int, int]
    sign: int


@dataclass(frozen=True)
class WedgePower:
    base: SignedGraph
    k: int
    subsets: list[KSubset]
    index: dict[KSubset, int]
    graph: SignedGraph
    edges: list[WedgeEdge]


def edge_sign(perm_sign: int, base_sign: int) -> int:
    return perm_sign * base_sign


def connecting_permutation(
    u: Sequence[int], v: Sequence[int]
) -> Optional[tuple[Permutation, tuple[int, int]]]:
    """The permutation connecting ``u`` to ``v`` and the differing pair.

    Returns ``None`` unless the subsets share exactly ``k - 1`` elements.
    """
    u, v = tuple(u), tuple(v)
    if len(u) != len(v):
        raise ValueError("subsets must have the same size")
    only_u = set(u).difference(v)
    only_v = set(v).difference(u)
    if len(only_u) != 1:
        return None
    (a,), (b,) = only_u, only_v
    pos_in_u = {x: j for j, x in enumerate(u)}
    images = [pos_in_u[x] if x != b else pos_in_u[a] for x in v]
    return Permutation(images), (a, b)


def connecting_sign(u: Sequence[int], v: Sequence[int]) -> int:
    """Closed form ``(-1)**(p + q)`` for the connecting permutation's sign.

    ``p`` is the position of ``u \\ v`` inside ``u`` and ``q`` the position of
    ``v \\ u`` inside ``v``. Only valid when ``|u & v| == k - 1``.
    """
    (a,) = set(u).difference(v)
    (b,) = set(v).difference(u)
    p = list(u).index(a)
    q = list(v).index(b)
    return -1 if (p + q) % 2 else 1


def _check_k(n: int, k: int) -> None:
    if not (1 <= k <= n - 1):
        raise ValueError(f"exterior power needs 1 <= k <= n-1, got n={n}, k={k}")


@lru_cache(maxsize=8192)
def _skeleton(n: int, k: int, pairs: tuple[tuple[int, int], ...]):
    """Sign-free structure of the k-th power of the graph with edge set ``pairs``.

    One entry ``(u, v, perm_sign, edge_position)`` per edge with ``u < v``;
    ``edge_position`` indexes ``pairs``.
    """
    subs = subsets(n, k)
    index = {u: i for i, u in enumerate(subs)}
    entries = []
    for u in subs:
        members = set(u)
        for pos, (a, b) in enumerate(pairs):
            if (a in members) == (b in members):
                continue
            x, y = (a, b) if a in members else (b, a)
            v = tuple(sorted((members - {x}) | {y}))
            # each undirected edge is met from both ends; keep the u < v one
            if v < u:
                continue
            p = u.index(x)
            q = sum(1 for z in u if z != x and z < y)
            entries.append((u, v, -1 if (p + q) % 2 else 1, pos))
    return subs, index, tuple(entries)


def wedge_power(g: SignedGraph, k: int) -> WedgePower:
    _check_k(g.n, k)
    base = g.edges()
    subs, index, entries = _skeleton(g.n, k, tuple((a, b) for a, b, _ in base))
    edges = []
    for u, v, ps, pos in entries:
        pi, pair = connecting_permutation(u, v)
        edges.append(WedgeEdge(u, v, pi, pair, edge_sign(ps, base[pos][2])))
    graph = SignedGraph(len(subs), ((index[e.u], index[e.v], e.sign) for e in edges))
    return WedgePower(g, k, subs, index, graph, edges)


def wedge_graph(g: SignedGraph, k: int) -> SignedGraph:
    """Just the signed graph of :func:`wedge_power`, without provenance."""
    _check_k(g.n, k)
    base = g.edges()
    _, index, entries = _skeleton(g.n, k, tuple((a, b) for a, b, _ in base))
    return SignedGraph._from_trusted(
        comb(g.n, k),
        {(index[u], index[v]): edge_sign(ps, base[pos][2]) for u, v, ps, pos in entries},
    )


def expected_edge_count(g: SignedGraph, k: int) -> int:
    return g.m * comb(g.n - 2, k - 1)


def wedge_degree(g: SignedGraph, u: Sequence[int]) -> int:
    """Number of base edges with exactly one endpoint in ``u``."""
    members = set(u)
    return sum(1 for a, b, _ in g.edges() if (a in members) != (b in members))


def mirror_map(u: Sequence[int], n: int) -> KSubset:
    u = check_subset(u, n)
    members = set(u)
    return tuple(x for x in range(n) if x not in members)


def subset_switching(d: Sequence[int], subs: Sequence[KSubset]) -> tuple[int, ...]:
    """Lift a vertex switching to subsets: the product of ``d`` over each subset."""
    out = []
    for u in subs:
        s = 1
        for x in u:
            s *= d[x]
        out.append(s)
    return tuple(out)


def transposition_switching(x: int, y: int, subs: Sequence[KSubset]) -> tuple[int, ...]:
    """-1 on subsets containing both ``x`` and ``y``, +1 elsewhere."""
    return tuple(-1 if (x in u and y in u) else 1 for u in subs)


def relabel_power(wp: WedgePower, mapping: Sequence[int]) -> SignedGraph:
    """Carry ``wp.graph`` through a base relabeling onto the relabeled subset order.

    Vertex ``u`` goes to the rank of ``sorted(mapping[x] for x in u)``; edge
    signs are kept as they are.
    """
    index = wp.index
    target = [index[tuple(sorted(mapping[x] for x in u))] for u in wp.subsets]
    return SignedGraph(wp.graph.n, ((target[i], target[j], s) for i, j, s in wp.graph.edges()))
