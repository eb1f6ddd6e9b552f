"""Reading and writing signed graphs.

The ``.sg`` text format is a header line ``n m`` followed by ``m`` lines
``u v s`` with ``0 <= u < v < n`` and ``s`` one of ``+1``, ``-1``, ``+``,
``-`` (``1`` is read as ``+1``). Blank lines and ``#`` comments are
ignored. Writing always emits edges sorted by ``(u, v)`` and signs as
``+1``/``-1``, so a canonical file round-trips byte for byte.
"""

from __future__ import annotations

import json
from typing import Optional, Sequence

from .exterior import WedgePower
from .signed import SignedGraph

_SIGNS = {"+1": 1, "+": 1, "1": 1, "-1": -1, "-": -1}


class GraphFormatError(ValueError):
    pass


def parse_sg(text: str) -> SignedGraph:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise GraphFormatError("empty graph file")
    header = lines[0].split()
    if len(header) != 2:
        raise GraphFormatError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphFormatError(f"header must be two integers, got {lines[0]!r}") from None
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for line in body:
        parts = line.split()
        if len(parts) != 3 or parts[2] not in _SIGNS:
            raise GraphFormatError(f"edge line must be 'u v s' with s in +1/-1/+/-, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"bad vertex in {line!r}") from None
        if not u < v:
            raise GraphFormatError(f"edge line needs u < v, got {line!r}")
        edges.append((u, v, _SIGNS[parts[2]]))
    try:
        return SignedGraph(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def format_sg(g: SignedGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v} {'+1' if s > 0 else '-1'}" for u, v, s in g.edges()]
    return "\n".join(lines) + "\n"


def read_sg(path: str) -> SignedGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_sg(fh.read())


def write_sg(g: SignedGraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_sg(g))


def graph_to_json(g: SignedGraph) -> dict:
    return {
        "n": g.n,
        "vertices": [{"id": i} for i in range(g.n)],
        "edges": [{"u": u, "v": v, "sign": s} for u, v, s in g.edges()],
    }


def wedge_to_json(wp: WedgePower) -> dict:
    """Exterior power with each vertex's subset and each edge's provenance."""
    return {
        "n": wp.graph.n,
        "base_n": wp.base.n,
        "k": wp.k,
        "vertices": [{"id": i, "subset": list(u)} for i, u in enumerate(wp.subsets)],
        "edges": [
            {
                "u": wp.index[e.u],
                "v": wp.index[e.v],
                "sign": e.sign,
                "base_edge": list(e.base_edge),
                "base_sign": wp.base.sign(*e.base_edge),
                "permutation": list(e.pi),
                "permutation_sign": e.pi.sign,
            }
            for e in wp.edges
        ],
    }


def subset_labels(wp: WedgePower) -> dict:
    return {"k": wp.k, "base_n": wp.base.n, "labels": {str(i): list(u) for i, u in enumerate(wp.subsets)}}


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def format_dot(g: SignedGraph, labels: Optional[Sequence[str]] = None, name: str = "G") -> str:
    """Graphviz export; negative edges are dashed and labelled ``-``."""
    out = [f"graph {name} {{"]
    for i in range(g.n):
        label = labels[i] if labels else str(i)
        out.append(f'  {i} [label="{label}"];')
    for u, v, s in g.edges():
        if s < 0:
            out.append(f'  {u} -- {v} [style=dashed, label="-"];')
        else:
            out.append(f'  {u} -- {v} [label="+"];')
    out.append("}")
    return "\n".join(out) + "\n"
