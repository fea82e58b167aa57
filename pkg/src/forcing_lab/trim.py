"""Edge contraction, subdivision, and tree trimming.

Trimming repeatedly contracts edges that have one endpoint of degree exactly 2
and the other endpoint of degree at most 2, until none remain.  A path
collapses to P_2; any other tree reaches a fixpoint in which every edge touches
a vertex of degree >= 3.  The result carries a surjective vertex map from the
original tree onto the trimmed one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph_core import Graph, InputError, TreeCert


@dataclass(frozen=True)
class TrimResult:
    trimmed: TreeCert
    vmap: tuple[int, ...]
    contracted_edges: tuple[tuple[int, int], ...]


def contract_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Contract edge e; parallel edges merge, so the result stays simple.

    The endpoint of larger degree keeps its slot (smaller id on a tie);
    vertices above the removed id shift down by one.
    """
    x, y = e
    if not g.has_edge(x, y):
        raise InputError(f"({x},{y}) is not an edge")
    if (g.degree(y), -y) > (g.degree(x), -x):
        x, y = y, x
    # x survives, y is removed.
    merged = (g.bits[x] | g.bits[y]) & ~(1 << x) & ~(1 << y)

    def relabel(v: int) -> int:
        return v - 1 if v > y else v

    edges = [
        (relabel(u), relabel(v))
        for u, v in g.edges()
        if y not in (u, v) and (x not in (u, v))
    ]
    sx = relabel(x)
    edges.extend((min(sx, relabel(u)), max(sx, relabel(u))) for u in _bits_iter(merged))
    return Graph.from_edges(g.n - 1, edges)


def _bits_iter(b: int):
    while b:
        low = b & -b
        yield low.bit_length() - 1
        b ^= low


def subdivide_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Replace edge (x,y) by a new degree-2 vertex n adjacent to x and y."""
    x, y = e
    if not g.has_edge(x, y):
        raise InputError(f"({x},{y}) is not an edge")
    edges = [(u, v) for u, v in g.edges() if {u, v} != {x, y}]
    edges.extend([(x, g.n), (y, g.n)])
    return Graph.from_edges(g.n + 1, edges)


def is_path(t: TreeCert) -> bool:
    g = t.graph
    return all(len(g.adj[v]) <= 2 for v in range(g.n))


def eligible_edges(g: Graph) -> list[tuple[int, int]]:
    """Edges with one endpoint of degree exactly 2, the other of degree <= 2,
    in ascending (u,v) order."""
    out = []
    for u, v in g.edges():
        du, dv = g.degree(u), g.degree(v)
        if (du == 2 and dv <= 2) or (dv == 2 and du <= 2):
            out.append((u, v))
    return out


def trim_tree(t: TreeCert, order_rng: random.Random | None = None) -> TrimResult:
    """Contract eligible edges to the fixpoint.

    Deterministically the first eligible edge in ascending order is contracted
    each round; passing order_rng instead picks a random eligible edge, which
    the confluence tests exercise.  The survivor of a contraction is the
    endpoint of larger degree (smaller id on a tie), so vmap stays stable.
    """
    g = t.graph
    if g.n < 2:
        raise InputError("trimming needs a tree of order >= 2")
    nbr: dict[int, set[int]] = {v: set(g.adj[v]) for v in range(g.n)}
    rep = list(range(g.n))
    contracted: list[tuple[int, int]] = []
    while True:
        elig = sorted(
            (u, v)
            for u in nbr
            for v in nbr[u]
            if u < v
            and (
                (len(nbr[u]) == 2 and len(nbr[v]) <= 2)
                or (len(nbr[v]) == 2 and len(nbr[u]) <= 2)
            )
        )
        if not elig:
            break
        x, y = elig[order_rng.randrange(len(elig))] if order_rng else elig[0]
        if (len(nbr[y]), -y) > (len(nbr[x]), -x):
            x, y = y, x
        contracted.append((min(x, y), max(x, y)))
        for w in nbr[y]:
            nbr[w].discard(y)
            if w != x:
                nbr[w].add(x)
                nbr[x].add(w)
        nbr[x].discard(y)
        del nbr[y]
        for v in range(g.n):
            if rep[v] == y:
                rep[v] = x
    alive = sorted(nbr)
    pos = {v: i for i, v in enumerate(alive)}
    edges = [(pos[u], pos[v]) for u in alive for v in nbr[u] if u < v]
    trimmed = TreeCert(Graph.from_edges(len(alive), edges))
    vmap = tuple(pos[rep[v]] for v in range(g.n))
    return TrimResult(trimmed, vmap, tuple(contracted))
