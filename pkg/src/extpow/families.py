"""Standard graph families, signings, and small-graph enumeration."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Mapping, Optional, Sequence, Union

from .combinat import subsets
from .signed import SignedGraph

KINDS = ("path", "cycle", "complete", "hypercube", "johnson", "star")
SIGNINGS = ("positive", "negative", "one-negative", "explicit", "random")
DEFAULT_MAX_ENUM = 6


@dataclass(frozen=True)
class FamilySpec:
    """Which graph to build and how to sign it.

    ``params`` is ``(n,)`` for path, cycle and complete graphs, ``(d,)`` for
    hypercubes, ``(leaves,)`` for stars and ``(n, k, l)`` for J(n, k, l).
    ``negative_edge`` picks the edge for the ``one-negative`` signing;
    ``signs`` lists one sign per edge in sorted edge order for ``explicit``.
    """

    kind: str
    params: tuple[int, ...]
    signing: str = "positive"
    negative_edge: Optional[tuple[int, int]] = None
    signs: tuple[int, ...] = field(default_factory=tuple)
    seed: int = 0


def path(n: int) -> SignedGraph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return SignedGraph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> SignedGraph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return SignedGraph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def complete(n: int) -> SignedGraph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return SignedGraph(n, combinations(range(n), 2))


def star(leaves: int) -> SignedGraph:
    """K_{1,leaves} centred at vertex 0."""
    if leaves < 1:
        raise ValueError("star needs at least one leaf")
    return SignedGraph(leaves + 1, ((0, j) for j in range(1, leaves + 1)))


def hypercube(d: int) -> SignedGraph:
    """Q_d on bit strings read as integers; edges join strings at Hamming distance 1."""
    if d < 1:
        raise ValueError("hypercube needs d >= 1")
    n = 1 << d
    return SignedGraph(n, ((x, x | (1 << b)) for x in range(n) for b in range(d) if not x & (1 << b)))


def johnson(n: int, k: int, l: int) -> SignedGraph:
    """J(n, k, l): k-subsets of range(n) in lexicographic order, adjacent when
    they share exactly ``l`` elements."""
    if not (n >= k >= l >= 1):
        raise ValueError(f"johnson graph needs n >= k >= l >= 1, got ({n}, {k}, {l})")
    subs = subsets(n, k)
    sets = [set(u) for u in subs]
    return SignedGraph(
        len(subs),
        ((i, j) for i, j in combinations(range(len(subs)), 2) if len(sets[i] & sets[j]) == l),
    )


def _base(spec: FamilySpec) -> SignedGraph:
    builders = {"path": path, "cycle": cycle, "complete": complete, "hypercube": hypercube, "star": star}
    if spec.kind == "johnson":
        if len(spec.params) != 3:
            raise ValueError("johnson takes three parameters n k l")
        return johnson(*spec.params)
    if spec.kind not in builders:
        raise ValueError(f"unknown family {spec.kind!r}; expected one of {', '.join(KINDS)}")
    if len(spec.params) != 1:
        raise ValueError(f"{spec.kind} takes one parameter")
    return builders[spec.kind](spec.params[0])


def apply_signing(
    g: SignedGraph,
    signing: str,
    negative_edge: Optional[tuple[int, int]] = None,
    signs: Sequence[int] = (),
    seed: int = 0,
) -> SignedGraph:
    pairs = g.edge_pairs()
    if signing == "positive":
        values = [1] * len(pairs)
    elif signing == "negative":
        values = [-1] * len(pairs)
    elif signing == "one-negative":
        if not pairs:
            raise ValueError("graph has no edges to sign")
        if negative_edge is None:
            # the (0, n-1) closing edge for cycles, else the first edge
            negative_edge = (0, g.n - 1) if g.has_edge(0, g.n - 1) else pairs[0]
        a, b = sorted(negative_edge)
        if not g.has_edge(a, b):
            raise ValueError(f"({a}, {b}) is not an edge")
        values = [-1 if p == (a, b) else 1 for p in pairs]
    elif signing == "explicit":
        if len(signs) != len(pairs):
            raise ValueError(f"explicit signing needs {len(pairs)} signs, got {len(signs)}")
        values = list(signs)
    elif signing == "random":
        rng = random.Random(seed)
        values = [rng.choice((-1, 1)) for _ in pairs]
    else:
        raise ValueError(f"unknown signing {signing!r}; expected one of {', '.join(SIGNINGS)}")
    return SignedGraph(g.n, ((u, v, s) for (u, v), s in zip(pairs, values)))


def generate(spec: FamilySpec) -> SignedGraph:
    return apply_signing(_base(spec), spec.signing, spec.negative_edge, spec.signs, spec.seed)


def edge_sets_equal_under_map(
    g1: SignedGraph, g2: SignedGraph, vertex_map: Union[Sequence[int], Mapping[int, int]]
) -> bool:
    """True iff ``vertex_map`` carries the edges of ``|g1|`` exactly onto those of ``|g2|``."""
    if isinstance(vertex_map, Mapping):
        image = [vertex_map[x] for x in range(g1.n)]
    else:
        image = list(vertex_map)
    if g1.n != g2.n or sorted(image) != list(range(g2.n)):
        raise ValueError("vertex map is not a bijection between the vertex sets")
    mapped = {(min(image[u], image[v]), max(image[u], image[v])) for u, v in g1.edge_pairs()}
    return mapped == set(g2.edge_pairs())


def all_graphs(n: int) -> Iterator[SignedGraph]:
    """Every labeled simple graph on ``n`` vertices, all edges positive."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield SignedGraph(n, (p for b, p in enumerate(pairs) if mask >> b & 1))


def connected_graph_enumerator(n: int, max_n: int = DEFAULT_MAX_ENUM) -> Iterator[SignedGraph]:
    """Connected labeled graphs on ``n`` vertices, not reduced by isomorphism."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n > max_n:
        raise ValueError(f"enumeration of n={n} exceeds the limit {max_n}")
    return (g for g in all_graphs(n) if g.is_connected())


def all_signings(g: SignedGraph) -> Iterator[SignedGraph]:
    pairs = g.edge_pairs()
    for mask in range(1 << len(pairs)):
        yield SignedGraph(g.n, ((u, v, -1 if mask >> b & 1 else 1) for b, (u, v) in enumerate(pairs)))


def random_signing(g: SignedGraph, rng: random.Random) -> SignedGraph:
    return SignedGraph(g.n, ((u, v, rng.choice((-1, 1))) for u, v in g.edge_pairs()))


def random_graph(n: int, p: float, rng: random.Random, signed: bool = True) -> SignedGraph:
    edges = []
    for u, v in combinations(range(n), 2):
        if rng.random() < p:
            edges.append((u, v, rng.choice((-1, 1)) if signed else 1))
    return SignedGraph(n, edges)


def random_connected_graph(n: int, p: float, rng: random.Random, signed: bool = True) -> SignedGraph:
    while True:
        g = random_graph(n, p, rng, signed)
        if g.is_connected():
            return g
