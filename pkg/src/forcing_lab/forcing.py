"""Forcing process simulation and exact forcing numbers.

A colored vertex with exactly one uncolored neighbor colors that neighbor;
repeating this to a fixpoint from an initial colored set is the forcing
process.  The final colored set is independent of the order eligible forcers
are played, so the deterministic simulation (smallest eligible id first) is
canonical; a randomized play order is exposed for the confluence tests.

The minimum-set searches iterate candidates as integer bitmasks grouped by
popcount, ascending within each group.  Pruning is sound and optional:
tree searches start at the path-cover lower bound, and the total-forcing
search pre-commits every strong support together with all but the largest-id
leaf of its bundle (leaves hanging on one support are interchangeable by
symmetry, so this loses no minimum).  use_bounds=False disables every prune
for oracle cross-checks.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass

from .graph_core import (
    CapacityError,
    Graph,
    InputError,
    TreeCert,
    VertexSet,
    is_tree,
    leaves,
    support_vertices,
)
from .path_cover import pc_tree

SEARCH_LIMIT = 20


@dataclass
class ColoringState:
    """Colored bitset plus per-vertex count of uncolored neighbors."""

    colored: int
    uncolored_nbr_count: list[int]

    @classmethod
    def initial(cls, g: Graph, s: VertexSet) -> "ColoringState":
        colored = s.bits
        counts = [(g.bits[v] & ~colored & g.full_mask).bit_count() for v in range(g.n)]
        return cls(colored, counts)

    def consistent(self, g: Graph) -> bool:
        mask = g.full_mask
        return all(
            self.uncolored_nbr_count[v] == (g.bits[v] & ~self.colored & mask).bit_count()
            for v in range(g.n)
        )


@dataclass(frozen=True)
class ForcingTrace:
    initial: VertexSet
    moves: tuple[tuple[int, int], ...]
    final_colored: VertexSet


@dataclass(frozen=True)
class ForcingNumbers:
    z: int | None = None
    ft: int | None = None
    z_witness: VertexSet | None = None
    ft_witness: VertexSet | None = None


def propagate(
    g: Graph, s: VertexSet, order_rng: random.Random | None = None
) -> ForcingTrace:
    """Run the forcing process from s to its fixpoint.

    The trace records one valid play order: ascending forcer id by default,
    or uniformly random among the currently eligible forcers with order_rng.
    """
    if s.n != g.n:
        raise InputError("vertex set belongs to a different order")
    state = ColoringState.initial(g, s)
    cnt = state.uncolored_nbr_count
    colored = state.colored
    moves: list[tuple[int, int]] = []

    def play(v: int) -> None:
        nonlocal colored
        lone = g.bits[v] & ~colored
        u = lone.bit_length() - 1
        colored |= 1 << u
        moves.append((v, u))
        for w in g.adj[u]:
            cnt[w] -= 1

    if order_rng is None:
        heap = [v for v in range(g.n) if colored >> v & 1 and cnt[v] == 1]
        heapq.heapify(heap)
        while heap:
            v = heapq.heappop(heap)
            if cnt[v] != 1:
                continue
            play(v)
            u = moves[-1][1]
            for w in g.adj[u]:
                if colored >> w & 1 and cnt[w] == 1:
                    heapq.heappush(heap, w)
            if cnt[u] == 1:
                heapq.heappush(heap, u)
    else:
        while True:
            eligible = [v for v in range(g.n) if colored >> v & 1 and cnt[v] == 1]
            if not eligible:
                break
            play(eligible[order_rng.randrange(len(eligible))])
    state.colored = colored
    return ForcingTrace(s, tuple(moves), VertexSet(colored, g.n))


def replay_trace(g: Graph, trace: ForcingTrace) -> bool:
    """Re-validate a trace move by move."""
    colored = trace.initial.bits
    for v, u in trace.moves:
        if not colored >> v & 1 or colored >> u & 1:
            return False
        if g.bits[v] & ~colored & g.full_mask != 1 << u:
            return False
        colored |= 1 << u
    return colored == trace.final_colored.bits


def is_forcing_set(g: Graph, s: VertexSet) -> bool:
    return propagate(g, s).final_colored.bits == g.full_mask


def is_total_forcing_set(g: Graph, s: VertexSet) -> bool:
    """Forcing set whose induced subgraph has no isolated vertex."""
    if s.bits == 0:
        return g.n == 0
    for v in s:
        if g.bits[v] & s.bits == 0:
            return False
    return is_forcing_set(g, s)


def mandatory_tf_vertices(
    g: Graph,
) -> tuple[VertexSet, tuple[tuple[int, tuple[int, ...]], ...]]:
    """Strong support vertices and their leaf bundles.

    Every strong support belongs to every total forcing set, and so do all but
    at most one leaf of its bundle; the search uses this to pre-commit.
    """
    if any(len(g.adj[v]) == 0 for v in range(g.n)):
        raise InputError("graph has an isolated vertex")
    leaf_bits = leaves(g).bits
    _, strong = support_vertices(g)
    bundles = tuple(
        (v, tuple(VertexSet(g.bits[v] & leaf_bits, g.n)))
        for v in strong
    )
    return strong, bundles


def _masks_of_size(pool: tuple[int, ...], k: int):
    """k-subsets of pool as expanded bitmasks, in ascending numeric order."""
    if k == 0:
        yield 0
        return
    if k > len(pool):
        return
    sub = (1 << k) - 1
    top = 1 << len(pool)
    while sub < top:
        mask = 0
        s = sub
        while s:
            low = s & -s
            mask |= 1 << pool[low.bit_length() - 1]
            s ^= low
        yield mask
        carry = sub & -sub
        ripple = sub + carry
        sub = ((sub ^ ripple) >> 2) // carry | ripple


def zero_forcing_number(
    g: Graph, *, use_bounds: bool = True, search_limit: int = SEARCH_LIMIT
) -> ForcingNumbers:
    """Minimum forcing set size, searching cardinalities from the lower bound
    (the path cover number on trees, 1 otherwise)."""
    if g.n == 0:
        raise InputError("zero forcing needs a nonempty graph")
    if g.n > search_limit:
        raise CapacityError(f"exact forcing search limited to n <= {search_limit}")
    lo = 1
    if use_bounds and is_tree(g):
        lo = max(1, pc_tree(TreeCert(g)).pc)
    pool = tuple(range(g.n))
    for k in range(lo, g.n + 1):
        for mask in _masks_of_size(pool, k):
            s = VertexSet(mask, g.n)
            if is_forcing_set(g, s):
                return ForcingNumbers(z=k, z_witness=s)
    raise AssertionError("unreachable: V(G) always forces")


def total_forcing_number(
    g: Graph, *, use_bounds: bool = True, search_limit: int = SEARCH_LIMIT
) -> ForcingNumbers:
    """Minimum total forcing set size.

    Undefined (InputError) when the order is below 2 or an isolated vertex is
    present: no set can force while inducing an isolate-free subgraph.
    """
    if g.n < 2 or any(len(g.adj[v]) == 0 for v in range(g.n)):
        raise InputError("total forcing needs order >= 2 and no isolated vertex")
    if g.n > search_limit:
        raise CapacityError(f"exact forcing search limited to n <= {search_limit}")
    committed = 0
    lo = 2
    if use_bounds:
        strong, bundles = mandatory_tf_vertices(g)
        committed = strong.bits
        for _, bundle in bundles:
            for leaf in bundle[:-1]:
                committed |= 1 << leaf
        lo = max(lo, committed.bit_count())
        if is_tree(g):
            lo = max(lo, pc_tree(TreeCert(g)).pc + 1)
    pool = tuple(v for v in range(g.n) if not committed >> v & 1)
    base = committed.bit_count()
    for k in range(lo, g.n + 1):
        for mask in _masks_of_size(pool, k - base):
            s = VertexSet(committed | mask, g.n)
            if is_total_forcing_set(g, s):
                return ForcingNumbers(ft=k, ft_witness=s)
    raise AssertionError("unreachable: V(G) is a total forcing set here")
