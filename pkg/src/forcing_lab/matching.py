"""Maximum matchings: linear greedy on trees, exact search on small graphs."""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .graph_core import CapacityError, Graph, TreeCert

GENERAL_MATCHING_LIMIT = 16


@dataclass(frozen=True)
class Matching:
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for u, v in self.edges:
            if u == v or u in seen or v in seen:
                raise ValueError("edges are not pairwise independent")
            seen.update((u, v))

    def __len__(self) -> int:
        return len(self.edges)


def matching_number_tree(t: TreeCert) -> tuple[int, Matching]:
    """Exact maximum matching of a tree by leaf elimination.

    Repeatedly match the smallest-id current leaf to its support and delete
    both; deletions that create new leaves feed the worklist.
    """
    g = t.graph
    alive = [True] * g.n
    deg = [len(g.adj[v]) for v in range(g.n)]
    heap = [v for v in range(g.n) if deg[v] == 1]
    heapq.heapify(heap)
    picked: list[tuple[int, int]] = []
    while heap:
        u = heapq.heappop(heap)
        if not alive[u] or deg[u] != 1:
            continue
        v = next(w for w in g.adj[u] if alive[w])
        picked.append((min(u, v), max(u, v)))
        alive[u] = alive[v] = False
        for w in g.adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    heapq.heappush(heap, w)
    matching = Matching(tuple(sorted(picked)))
    return len(matching), matching


def matching_number_general(
    g: Graph, limit: int = GENERAL_MATCHING_LIMIT
) -> tuple[int, Matching]:
    """Exact maximum matching of a small graph.

    Branches on the lowest vertex that still has a neighbor (leave it exposed,
    or match it to each neighbor in turn), memoized on the set of remaining
    vertices.
    """
    if g.n > limit:
        raise CapacityError(f"exact matching limited to n <= {limit}, got {g.n}")
    memo: dict[int, int] = {}

    def best(mask: int) -> int:
        v = _lowest_matchable(g, mask)
        if v < 0:
            return 0
        if mask in memo:
            return memo[mask]
        res = best(mask & ~(1 << v))
        for u in g.adj[v]:
            if mask >> u & 1:
                res = max(res, 1 + best(mask & ~(1 << v) & ~(1 << u)))
        memo[mask] = res
        return res

    picked: list[tuple[int, int]] = []
    mask = g.full_mask
    while True:
        v = _lowest_matchable(g, mask)
        if v < 0:
            break
        target = best(mask)
        chosen = -1
        for u in g.adj[v]:
            if mask >> u & 1 and 1 + best(mask & ~(1 << v) & ~(1 << u)) == target:
                chosen = u
                break
        if chosen >= 0:
            picked.append((min(v, chosen), max(v, chosen)))
            mask &= ~(1 << v) & ~(1 << chosen)
        else:
            mask &= ~(1 << v)
    matching = Matching(tuple(sorted(picked)))
    return len(matching), matching


def _lowest_matchable(g: Graph, mask: int) -> int:
    b = mask
    while b:
        low = b & -b
        v = low.bit_length() - 1
        if g.bits[v] & mask:
            return v
        b ^= low
    return -1


def contraction_monotonicity_check(t: TreeCert, e: tuple[int, int]) -> bool:
    """True iff contracting e does not increase the matching number."""
    from .trim import contract_edge

    before, _ = matching_number_tree(t)
    after, _ = matching_number_tree(TreeCert(contract_edge(t.graph, e)))
    return after <= before
