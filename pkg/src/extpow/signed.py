"""Signed graphs: switching, balance and anti-balance, cycle signs.

Vertices are the integers ``0..n-1``. Edges are stored once, as ``(u, v)``
with ``u < v``, together with a sign in ``{-1, +1}``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence


class InvalidGraphError(ValueError):
    pass


class InvalidCycleError(ValueError):
    pass


class GraphMismatchError(ValueError):
    """The two graphs do not share an underlying graph."""


Edge = tuple[int, int, int]


class SignedGraph:
    """Simple undirected graph with a +1/-1 sign on every edge.

    Instances are immutable; every operation in this module returns a new
    graph.
    """

    __slots__ = ("_n", "_signs", "_adj", "_hash")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise InvalidGraphError(f"vertex count must be non-negative, got {n}")
        signs: dict[tuple[int, int], int] = {}
        for edge in edges:
            if len(edge) == 2:
                u, v = edge
                s = 1
            else:
                u, v, s = edge
            u, v, s = int(u), int(v), int(s)
            if u == v:
                raise InvalidGraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidGraphError(f"edge ({u}, {v}) out of range for n={n}")
            if s not in (-1, 1):
                raise InvalidGraphError(f"edge ({u}, {v}) has sign {s}, expected -1 or +1")
            key = (u, v) if u < v else (v, u)
            if key in signs:
                raise InvalidGraphError(f"parallel edge {key}")
            signs[key] = s
        self._init(n, signs)

    def _init(self, n: int, signs: dict[tuple[int, int], int]) -> None:
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in sorted(signs):
            adj[u].append(v)
            adj[v].append(u)
        self._n = n
        self._signs = signs
        self._adj = tuple(tuple(sorted(nb)) for nb in adj)
        self._hash: Optional[int] = None

    @classmethod
    def _from_trusted(cls, n: int, signs: dict[tuple[int, int], int]) -> SignedGraph:
        # caller guarantees u < v keys in range and +-1 values
        g = cls.__new__(cls)
        g._init(n, signs)
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._signs)

    def edges(self) -> list[Edge]:
        """Edges as ``(u, v, s)`` sorted by ``(u, v)``."""
        return [(u, v, self._signs[u, v]) for u, v in sorted(self._signs)]

    def edge_pairs(self) -> list[tuple[int, int]]:
        return sorted(self._signs)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._signs

    def sign(self, u: int, v: int) -> int:
        """Sign of edge ``{u, v}``; ``KeyError`` if the edge is absent."""
        return self._signs[(u, v) if u < v else (v, u)]

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self._adj[u]

    def degree(self, u: int) -> int:
        return len(self._adj[u])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self._adj]

    def is_connected(self) -> bool:
        if self._n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in self._adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self._n

    def same_underlying(self, other: SignedGraph) -> bool:
        return self._n == other._n and self._signs.keys() == other._signs.keys()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return self._n == other._n and self._signs == other._signs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, frozenset(self._signs.items())))
        return self._hash

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges())

    def __repr__(self) -> str:
        neg = sum(1 for s in self._signs.values() if s < 0)
        return f"SignedGraph(n={self._n}, m={self.m}, negative={neg})"


@dataclass(frozen=True)
class BalanceReport:
    """Outcome of a balance test.

    ``switching`` is set when balanced: switching by it makes every edge
    positive. ``cycle`` is set when unbalanced: a simple cycle of sign -1.
    """

    balanced: bool
    switching: Optional[tuple[int, ...]] = None
    cycle: Optional[tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.balanced


def sign_of_cycle(g: SignedGraph, cycle: Sequence[int]) -> int:
    if len(cycle) < 3:
        raise InvalidCycleError(f"cycle needs at least 3 vertices, got {len(cycle)}")
    if len(set(cycle)) != len(cycle):
        raise InvalidCycleError(f"cycle {tuple(cycle)} repeats a vertex")
    sign = 1
    for i, u in enumerate(cycle):
        v = cycle[(i + 1) % len(cycle)]
        if not g.has_edge(u, v):
            raise InvalidCycleError(f"({u}, {v}) is not an edge")
        sign *= g.sign(u, v)
    return sign


def _tree_path(parent: list[int], depth: list[int], u: int, v: int) -> tuple[int, ...]:
    # u ... lca ... v along tree edges
    left, right = [u], [v]
    while depth[u] > depth[v]:
        u = parent[u]
        left.append(u)
    while depth[v] > depth[u]:
        v = parent[v]
        right.append(v)
    while u != v:
        u, v = parent[u], parent[v]
        left.append(u)
        right.append(v)
    right.pop()
    return tuple(left + right[::-1])


def is_balanced(g: SignedGraph) -> BalanceReport:
    """Decide balance by propagating signs along a BFS spanning forest.

    Each tree root gets +1 and each child gets its parent's value times the
    tree-edge sign. The graph is balanced iff every non-tree edge agrees with
    the product of its endpoint values; otherwise the fundamental cycle of
    the first disagreeing edge (in sorted edge order) is returned.
    """
    n = g.n
    value = [0] * n
    parent = [-1] * n
    depth = [0] * n
    for root in range(n):
        if value[root]:
            continue
        value[root] = 1
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if not value[y]:
                    value[y] = value[x] * g.sign(x, y)
                    parent[y] = x
                    depth[y] = depth[x] + 1
                    queue.append(y)
    for u, v, s in g.edges():
        if s != value[u] * value[v]:
            return BalanceReport(False, cycle=_tree_path(parent, depth, u, v))
    return BalanceReport(True, switching=tuple(value))


def negate(g: SignedGraph) -> SignedGraph:
    return SignedGraph(g.n, ((u, v, -s) for u, v, s in g.edges()))


def underlying(g: SignedGraph) -> SignedGraph:
    return SignedGraph(g.n, ((u, v, 1) for u, v, _ in g.edges()))


def is_antibalanced(g: SignedGraph) -> BalanceReport:
    """Anti-balance test; the witness switching makes every edge negative."""
    return is_balanced(negate(g))


def switch(g: SignedGraph, d: Sequence[int]) -> SignedGraph:
    if len(d) != g.n:
        raise ValueError(f"switching vector has length {len(d)}, graph has {g.n} vertices")
    if any(x not in (-1, 1) for x in d):
        raise ValueError("switching vector entries must be -1 or +1")
    return SignedGraph(g.n, ((u, v, s * d[u] * d[v]) for u, v, s in g.edges()))


def switch_set(g: SignedGraph, vertices: Iterable[int]) -> SignedGraph:
    """Switch around a vertex subset: flip every edge crossing the cut."""
    d = [1] * g.n
    for x in vertices:
        d[x] = -1
    return switch(g, d)


def switching_equivalent(g1: SignedGraph, g2: SignedGraph) -> Optional[tuple[int, ...]]:
    """Return ``D`` with ``A(g1) = D A(g2) D``, or ``None`` if none exists."""
    if not g1.same_underlying(g2):
        raise GraphMismatchError("switching equivalence needs identical underlying graphs")
    product = SignedGraph(g1.n, ((u, v, s * g2.sign(u, v)) for u, v, s in g1.edges()))
    report = is_balanced(product)
    return report.switching if report.balanced else None


def contains_claw(g: SignedGraph) -> bool:
    return any(d >= 3 for d in g.degrees())


def relabel(g: SignedGraph, mapping: Sequence[int]) -> SignedGraph:
    """Move vertex ``j`` to ``mapping[j]``; signs travel with their edges."""
    if sorted(mapping) != list(range(g.n)):
        raise ValueError("relabeling must be a permutation of the vertices")
    return SignedGraph(g.n, ((mapping[u], mapping[v], s) for u, v, s in g.edges()))


def is_path_graph(g: SignedGraph) -> bool:
    if g.n < 2:
        return False
    return g.m == g.n - 1 and max(g.degrees()) <= 2 and g.is_connected()


def is_cycle_graph(g: SignedGraph) -> bool:
    return g.n >= 3 and g.m == g.n and all(d == 2 for d in g.degrees()) and g.is_connected()
