"""Recognizers and constructors for the extremal tree families.

Three structural certificates matter for a nontrivial tree T:

* lower extremal: the trimmed tree is P_2 or a star with at least 3 leaves
  (exactly the trees whose total forcing number is pc + 1);
* upper extremal: the minimum path cover is unique and every path in it runs
  between two distinct leaves (exactly the trees with total forcing 2 pc);
* bundled-support family: T is K_2, or is built from an underlying tree F by
  attaching >= 2 pendant leaves to each vertex of an attacher set A, where the
  complement of A in F is independent and contains no leaf of F (exactly the
  trees whose total forcing number is the matching number plus pc).

Recognition is purely structural; the harness verifies each certificate
against the brute-force equalities.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from .graph_core import (
    Graph,
    InputError,
    TreeCert,
    VertexSet,
    induced_subgraph,
    leaves,
    support_vertices,
)
from .path_cover import pc_tree
from .trim import trim_tree


@dataclass(frozen=True)
class FamilyTWitness:
    """Membership certificate for the bundled-support family.

    underlying is the tree F on compacted ids (None only for the K_2 member);
    f_vertices maps each F id back to the realized tree; attachers and b_set
    partition V(F); bundles maps each attacher (F id) to its pendant leaf ids
    in the realized tree, every bundle of size >= 2.
    """

    k2: bool
    underlying: TreeCert | None
    f_vertices: tuple[int, ...]
    attachers: VertexSet
    b_set: VertexSet
    bundles: Mapping[int, tuple[int, ...]]


@dataclass(frozen=True)
class ExtremalVerdict:
    case_pc_plus_1: bool
    case_2pc: bool
    case_family_t: bool
    witness: FamilyTWitness | None = None


def _require_nontrivial(t: TreeCert) -> None:
    if t.n < 2:
        raise InputError("needs a tree of order >= 2")


def is_lower_extremal(t: TreeCert) -> bool:
    """True iff trim(t) is P_2 or a star with at least 3 leaves."""
    _require_nontrivial(t)
    trimmed = trim_tree(t).trimmed.graph
    if trimmed.n == 2:
        return True
    return trimmed.n >= 4 and max(len(trimmed.adj[v]) for v in range(trimmed.n)) == trimmed.n - 1


def is_upper_extremal(t: TreeCert) -> bool:
    """True iff the minimum path cover is unique and leaf-to-leaf."""
    _require_nontrivial(t)
    profile = pc_tree(t)
    return profile.unique and profile.leaf_to_leaf


def recognize_family_t(t: TreeCert) -> FamilyTWitness | None:
    """Decompose t as underlying tree + leaf bundles, or return None."""
    _require_nontrivial(t)
    g = t.graph
    if g.n == 2:
        return FamilyTWitness(
            k2=True,
            underlying=None,
            f_vertices=(),
            attachers=VertexSet(0, 0),
            b_set=VertexSet(0, 0),
            bundles=MappingProxyType({}),
        )
    leaf_bits = leaves(g).bits
    supports, strong = support_vertices(g)
    if supports.bits != strong.bits:
        return None  # some support has a single pendant leaf
    interior = [v for v in range(g.n) if not leaf_bits >> v & 1]
    f_graph, f_vertices = induced_subgraph(g, interior)
    pos = {v: i for i, v in enumerate(f_vertices)}
    attacher_bits = 0
    b_bits = 0
    for i, v in enumerate(f_vertices):
        if supports.bits >> v & 1:
            attacher_bits |= 1 << i
        else:
            b_bits |= 1 << i
    nf = len(f_vertices)
    for i in range(nf):
        if not b_bits >> i & 1:
            continue
        if len(f_graph.adj[i]) < 2:
            return None  # complement vertex would be a leaf (or isolated) in F
        if f_graph.bits[i] & b_bits:
            return None  # complement of the attacher set is not independent
    bundles = {
        pos[v]: tuple(VertexSet(g.bits[v] & leaf_bits, g.n))
        for v in range(g.n)
        if supports.bits >> v & 1
    }
    return FamilyTWitness(
        k2=False,
        underlying=TreeCert(f_graph),
        f_vertices=f_vertices,
        attachers=VertexSet(attacher_bits, nf),
        b_set=VertexSet(b_bits, nf),
        bundles=MappingProxyType(bundles),
    )


def family_t_invariants(w: FamilyTWitness) -> tuple[int, int, int]:
    """(matching number, path cover number, total forcing number) implied by
    the witness: alpha = |A|, pc = |V(F)| + sum of (bundle - 2), ft = alpha + pc."""
    if w.k2:
        return 1, 1, 2
    alpha = len(w.attachers)
    pc = len(w.f_vertices) + sum(len(b) - 2 for b in w.bundles.values())
    return alpha, pc, alpha + pc


def build_family_t(
    f: TreeCert, a: VertexSet, bundle_sizes: Mapping[int, int]
) -> TreeCert:
    """Attach bundle_sizes[v] >= 2 pendant leaves to each vertex v of a.

    Requires a = V(f), or V(f) minus a independent in f with no leaf of f.
    New leaves get ids after V(f), grouped by ascending attacher id.
    """
    g = f.graph
    if a.n != g.n:
        raise InputError("attacher set belongs to a different order")
    if a.bits == 0:
        raise InputError("attacher set must be nonempty")
    if set(bundle_sizes) != set(a):
        raise InputError("bundle sizes must be given exactly for the attachers")
    for v, size in bundle_sizes.items():
        if size < 2:
            raise InputError(f"attacher {v} needs at least 2 pendant edges, got {size}")
    outside = g.full_mask & ~a.bits
    if outside:
        for v in range(g.n):
            if not outside >> v & 1:
                continue
            if len(g.adj[v]) <= 1:
                raise InputError(f"vertex {v} outside the attacher set is a leaf of f")
            if g.bits[v] & outside:
                raise InputError("vertices outside the attacher set must be independent")
    edges = list(g.edges())
    nxt = g.n
    for v in sorted(a):
        for _ in range(bundle_sizes[v]):
            edges.append((v, nxt))
            nxt += 1
    return TreeCert(Graph.from_edges(nxt, edges))


def build_range_tree(k: int, l: int) -> TreeCert:
    """A tree with path cover number l and total forcing number k + l.

    k = 1 gives the star on l + 2 vertices; k = l hangs two pendant leaves on
    each vertex of a path of length l; otherwise a path on k - 1 + 1 vertices
    gets l - k + 2 pendants on its first vertex and two on each of the rest.
    """
    if not 1 <= k <= l:
        raise InputError(f"need 1 <= k <= l, got k={k}, l={l}")
    if k == 1:
        return TreeCert(Graph.from_edges(l + 2, [(0, i) for i in range(1, l + 2)]))
    path_len = l if k == l else k - 1 + 1
    f = TreeCert(Graph.from_edges(path_len, [(i, i + 1) for i in range(path_len - 1)]))
    all_of_f = VertexSet(f.graph.full_mask, path_len)
    if k == l:
        sizes = {v: 2 for v in range(path_len)}
    else:
        sizes = {v: 2 for v in range(path_len)}
        sizes[0] = l - k + 2
    return build_family_t(f, all_of_f, sizes)


def classify_extremal(t: TreeCert) -> ExtremalVerdict:
    """All three structural certificates at once."""
    witness = recognize_family_t(t)
    return ExtremalVerdict(
        case_pc_plus_1=is_lower_extremal(t),
        case_2pc=is_upper_extremal(t),
        case_family_t=witness is not None,
        witness=witness,
    )
