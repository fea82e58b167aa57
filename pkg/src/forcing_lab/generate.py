"""Tree enumeration, seeded random trees, and named graph constructors.

Non-isomorphic free trees come from networkx's level-sequence generator
(each isomorphism class exactly once); the test suite cross-checks the stream
against an independent Prufer enumeration and the known class counts.
Random labeled trees are drawn uniformly via random Prufer sequences from a
small explicit generator (splitmix64), so runs reproduce across platforms.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterator, Sequence

import networkx as nx

from .graph_core import CapacityError, Graph, InputError, TreeCert

ENUMERATION_LIMIT = 12

# Free-tree class counts for order 1..12.
FREE_TREE_COUNTS = (1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551)

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Tiny explicit PRNG (splitmix64) for reproducible sampling."""

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = self._state + 0x9E3779B97F4A7C15 & _MASK64
        z = self._state
        z = (z ^ z >> 30) * 0xBF58476D1CE4E5B9 & _MASK64
        z = (z ^ z >> 27) * 0x94D049BB133111EB & _MASK64
        return z ^ z >> 31

    def randrange(self, n: int) -> int:
        # Rejection keeps the draw exactly uniform.
        lim = (1 << 64) - (1 << 64) % n
        while True:
            x = self.next_u64()
            if x < lim:
                return x % n


@dataclass(frozen=True)
class TreeStream:
    """Single pass over the pairwise non-isomorphic trees of one order."""

    order: int

    def __iter__(self) -> Iterator[TreeCert]:
        if self.order == 1:
            yield TreeCert(Graph.from_edges(1, []))
            return
        for g in nx.nonisomorphic_trees(self.order):
            edges = sorted((min(u, v), max(u, v)) for u, v in g.edges())
            yield TreeCert(Graph.from_edges(self.order, edges))


def all_trees(n: int) -> TreeStream:
    """Every isomorphism class of trees on n vertices, exactly once."""
    if n < 1:
        raise InputError("tree order must be >= 1")
    if n > ENUMERATION_LIMIT:
        raise CapacityError(f"tree enumeration limited to n <= {ENUMERATION_LIMIT}")
    return TreeStream(n)


def prufer_to_edges(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    """Decode a Prufer sequence over 0..n-1 (length n-2) into tree edges."""
    if n < 2:
        raise InputError("Prufer decoding needs n >= 2")
    if len(seq) != n - 2:
        raise InputError(f"sequence length must be n-2 = {n - 2}")
    degree = [1] * n
    for a in seq:
        if not 0 <= a < n:
            raise InputError(f"sequence entry {a} out of range")
        degree[a] += 1
    heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(heap)
    edges = []
    for a in seq:
        leaf = heapq.heappop(heap)
        edges.append((min(leaf, a), max(leaf, a)))
        degree[a] -= 1
        if degree[a] == 1:
            heapq.heappush(heap, a)
    u = heapq.heappop(heap)
    v = heapq.heappop(heap)
    edges.append((min(u, v), max(u, v)))
    return edges


def random_tree(n: int, seed: int) -> TreeCert:
    """Uniform random labeled tree, deterministic per seed."""
    if n < 1:
        raise InputError("tree order must be >= 1")
    if n == 1:
        return TreeCert(Graph.from_edges(1, []))
    if n == 2:
        return TreeCert(Graph.from_edges(2, [(0, 1)]))
    rng = SplitMix64(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return TreeCert(Graph.from_edges(n, prufer_to_edges(seq, n)))


def named(name: str, params: Sequence[int]) -> Graph:
    """Standard graphs: path, cycle, complete, star, double_star,
    complete_bipartite."""
    p = list(params)
    if name == "path":
        (n,) = _arity(name, p, 1)
        if n < 1:
            raise InputError("path needs n >= 1")
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if name == "cycle":
        (n,) = _arity(name, p, 1)
        if n < 3:
            raise InputError("cycle needs n >= 3")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if name == "complete":
        (n,) = _arity(name, p, 1)
        if n < 1:
            raise InputError("complete graph needs n >= 1")
        return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if name == "star":
        if len(p) == 2:
            if p[0] != 1:
                raise InputError("star takes k or 1,k")
            p = p[1:]
        (k,) = _arity(name, p, 1)
        if k < 1:
            raise InputError("star needs k >= 1 leaves")
        return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])
    if name == "double_star":
        r, s = _arity(name, p, 2)
        if r < 1 or s < 1:
            raise InputError("double star needs r, s >= 1")
        edges = [(0, 1)]
        edges.extend((0, 2 + i) for i in range(r))
        edges.extend((1, 2 + r + i) for i in range(s))
        return Graph.from_edges(r + s + 2, edges)
    if name == "complete_bipartite":
        a, b = _arity(name, p, 2)
        if a < 1 or b < 1:
            raise InputError("complete bipartite needs a, b >= 1")
        return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    raise InputError(f"unknown graph name {name!r}")


def _arity(name: str, params: list[int], k: int) -> list[int]:
    if len(params) != k:
        raise InputError(f"{name} takes {k} parameter(s), got {len(params)}")
    return params
