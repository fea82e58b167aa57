"""Minimum path covers.

For a tree the path cover number equals n minus the maximum number of edges in
a subforest of maximum degree <= 2 (the chosen edges are exactly the interior
edges of the cover's paths), which a rooted dynamic program computes in linear
time.  The same DP carries a saturating solution counter {0, 1, many} so cover
uniqueness is decided without enumerating, and a constrained variant rebuilds
the lexicographically smallest optimal edge set as the witness.

Small general graphs (needed only for complete / complete-bipartite spot
checks) go through an exhaustive Hamiltonian-path-set dynamic program.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations

from .graph_core import (
    CapacityError,
    Graph,
    InputError,
    TreeCert,
    VertexSet,
    leaves,
)
from .trim import contract_edge

ENUMERATION_LIMIT = 12
GENERAL_PC_LIMIT = 12

_NEG = -(1 << 30)


@dataclass(frozen=True)
class PathCover:
    """Vertex-disjoint paths covering all vertices, as ordered id sequences."""

    paths: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.paths)


@dataclass(frozen=True)
class CoverProfile:
    pc: int
    unique: bool
    leaf_to_leaf: bool
    witness: PathCover


def validate_cover(g: Graph, cover: PathCover) -> None:
    """Raise InputError unless cover partitions V(g) into paths of g."""
    seen: set[int] = set()
    for p in cover.paths:
        if not p:
            raise InputError("empty path in cover")
        for x in p:
            if not 0 <= x < g.n or x in seen:
                raise InputError(f"vertex {x} repeated or out of range in cover")
            seen.add(x)
        for a, b in zip(p, p[1:]):
            if not g.has_edge(a, b):
                raise InputError(f"consecutive cover vertices {a},{b} not adjacent")
    if len(seen) != g.n:
        raise InputError("cover does not cover every vertex")


def _rooted_children(g: Graph, root: int = 0) -> tuple[list[int], list[list[int]]]:
    parent = [-1] * g.n
    parent[root] = root
    order = [root]
    children: list[list[int]] = [[] for _ in range(g.n)]
    for v in order:
        for u in g.adj[v]:
            if parent[u] == -1:
                parent[u] = v
                children[v].append(u)
                order.append(u)
    return order, children


def _sat_add(a: int, b: int) -> int:
    return min(2, a + b)


def _sat_mul(a: int, b: int) -> int:
    return 0 if a == 0 or b == 0 else min(2, a * b)


def _max_subforest(
    t: TreeCert, constraint: dict[tuple[int, int], str] | None = None
) -> tuple[int, int]:
    """(max edges of a degree-<=2 subforest, saturating count of optima).

    constraint maps an edge (u,v), u < v, to "forced" or "forbidden"; an
    infeasible constraint set yields a negative value with count 0.
    """
    g = t.graph
    order, children = _rooted_children(g)
    A = [0] * g.n
    cA = [0] * g.n
    B = [0] * g.n
    cB = [0] * g.n
    for v in reversed(order):
        val = [0, _NEG, _NEG]
        cnt = [1, 0, 0]
        for c in children[v]:
            e = (v, c) if v < c else (c, v)
            state = constraint.get(e, "free") if constraint else "free"
            skip_v, skip_c = (A[c], cA[c]) if state != "forced" else (_NEG, 0)
            if state != "forbidden" and B[c] > _NEG:
                take_v, take_c = B[c] + 1, cB[c]
            else:
                take_v, take_c = _NEG, 0
            nval = [_NEG, _NEG, _NEG]
            ncnt = [0, 0, 0]
            for j in range(3):
                if val[j] <= _NEG:
                    continue
                if skip_v > _NEG:
                    _merge(nval, ncnt, j, val[j] + skip_v, _sat_mul(cnt[j], skip_c))
                if j < 2 and take_v > _NEG:
                    _merge(nval, ncnt, j + 1, val[j] + take_v, _sat_mul(cnt[j], take_c))
            val, cnt = nval, ncnt
        A[v], cA[v] = _collapse(val, cnt, 3)
        B[v], cB[v] = _collapse(val, cnt, 2)
    return A[order[0]], cA[order[0]]


def _merge(vals: list[int], cnts: list[int], j: int, value: int, count: int) -> None:
    if value > vals[j]:
        vals[j], cnts[j] = value, count
    elif value == vals[j]:
        cnts[j] = _sat_add(cnts[j], count)


def _collapse(vals: list[int], cnts: list[int], upto: int) -> tuple[int, int]:
    best = max(vals[:upto])
    if best <= _NEG:
        return _NEG, 0
    count = 0
    for j in range(upto):
        if vals[j] == best:
            count = _sat_add(count, cnts[j])
    return best, count


def _lexmin_subforest(t: TreeCert, optimum: int) -> list[tuple[int, int]]:
    """Lexicographically smallest optimal edge set, by greedy inclusion."""
    chosen: dict[tuple[int, int], str] = {}
    for e in t.graph.edges():
        if len(chosen) == optimum:
            break
        chosen[e] = "forced"
        if _max_subforest(t, chosen)[0] != optimum:
            del chosen[e]
    return sorted(chosen)


def _edges_to_cover(g: Graph, chosen: list[tuple[int, int]]) -> PathCover:
    cadj: dict[int, list[int]] = defaultdict(list)
    for u, v in chosen:
        cadj[u].append(v)
        cadj[v].append(u)
    seen = [False] * g.n
    paths: list[tuple[int, ...]] = []
    for v in range(g.n):
        if seen[v]:
            continue
        comp = [v]
        seen[v] = True
        stack = [v]
        while stack:
            x = stack.pop()
            for y in cadj.get(x, ()):
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        start = min(x for x in comp if len(cadj.get(x, ())) <= 1)
        path = [start]
        prev, cur = -1, start
        while True:
            nxt = [y for y in cadj.get(cur, ()) if y != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            path.append(cur)
        paths.append(tuple(path))
    paths.sort(key=lambda p: p[0])
    return PathCover(tuple(paths))


def pc_tree(t: TreeCert) -> CoverProfile:
    """Exact path cover number with uniqueness flag and reconstructed witness."""
    optimum, count = _max_subforest(t)
    witness = _edges_to_cover(t.graph, _lexmin_subforest(t, optimum))
    leaf_bits = leaves(t.graph).bits
    ltl = all(
        len(p) >= 2 and leaf_bits >> p[0] & 1 and leaf_bits >> p[-1] & 1
        for p in witness.paths
    )
    return CoverProfile(
        pc=t.n - optimum, unique=count == 1, leaf_to_leaf=ltl, witness=witness
    )


def enumerate_min_covers(t: TreeCert, limit: int = ENUMERATION_LIMIT) -> list[PathCover]:
    """All minimum covers, by exhausting optimal degree-<=2 edge subsets."""
    if t.n > limit:
        raise CapacityError(f"cover enumeration limited to n <= {limit}, got {t.n}")
    optimum, _ = _max_subforest(t)
    g = t.graph
    out = []
    for subset in combinations(g.edges(), optimum):
        deg: dict[int, int] = defaultdict(int)
        ok = True
        for u, v in subset:
            deg[u] += 1
            deg[v] += 1
            if deg[u] > 2 or deg[v] > 2:
                ok = False
                break
        if ok:
            out.append(_edges_to_cover(g, list(subset)))
    out.sort(key=lambda c: c.paths)
    return out


def pc_exhaustive(g: Graph, limit: int = GENERAL_PC_LIMIT) -> int:
    """Exact path cover number of a small general graph.

    Marks every vertex subset that carries a Hamiltonian path of its induced
    subgraph, then covers V by a minimum number of such subsets.
    """
    if g.n > limit:
        raise CapacityError(f"general path cover limited to n <= {limit}, got {g.n}")
    n = g.n
    if n == 0:
        return 0
    endp = [0] * (1 << n)
    for v in range(n):
        endp[1 << v] = 1 << v
    for mask in range(1, 1 << n):
        ends = endp[mask]
        if not ends:
            continue
        e = ends
        while e:
            low = e & -e
            v = low.bit_length() - 1
            ext = g.bits[v] & ~mask
            while ext:
                lu = ext & -ext
                endp[mask | lu] |= lu
                ext ^= lu
            e ^= low
    full = g.full_mask
    inf = n + 1
    dp = [inf] * (1 << n)
    dp[0] = 0
    for mask in range(1, 1 << n):
        v0 = mask & -mask
        sub = mask
        while sub:
            if sub & v0 and endp[sub]:
                cand = dp[mask ^ sub] + 1
                if cand < dp[mask]:
                    dp[mask] = cand
            sub = (sub - 1) & mask
    return dp[full]


def normalize_strong_support(
    g: Graph, cover: PathCover, v: int, u: int, w: int
) -> PathCover:
    """Rearrange a minimum cover into one of equal size containing path u-v-w,
    where u and w are leaf neighbors of the strong support v.

    Three cases: the path u-v-w is already present; u sits on a trivial path
    while w shares v's path (strip v,w off and splice in u-v-w); or both u and
    w sit on trivial paths (split v's path at v and splice in u-v-w).
    """
    validate_cover(g, cover)
    for leaf in (u, w):
        if g.degree(leaf) != 1 or not g.has_edge(v, leaf):
            raise InputError(f"{leaf} is not a leaf neighbor of {v}")
    if u == w:
        raise InputError("u and w must be distinct leaves")
    where = {x: i for i, p in enumerate(cover.paths) for x in p}
    pu, pv, pw = where[u], where[v], where[w]
    if pu == pv == pw:
        if cover.paths[pv] not in ((u, v, w), (w, v, u)):
            raise InputError("shared path is not exactly u-v-w")
        return cover
    if pu == pv:
        u, w = w, u
        pu, pw = pw, pu
    if cover.paths[pu] != (u,):
        raise InputError("cover is not minimum: detached leaf path is nontrivial")
    pvpath = list(cover.paths[pv])
    untouched = [p for i, p in enumerate(cover.paths) if i not in (pu, pv, pw)]
    if pv == pw:
        if pvpath[0] == w:
            pvpath.reverse()
        rest = pvpath[:-2]
        if not rest:
            raise InputError("cover is not minimum: u-v-w path was splittable")
        new_paths = untouched + [(u, v, w), tuple(rest)]
    else:
        if cover.paths[pw] != (w,):
            raise InputError("cover is not minimum: detached leaf path is nontrivial")
        i = pvpath.index(v)
        if i == 0 or i == len(pvpath) - 1:
            raise InputError("cover is not minimum: support sits at a path end")
        new_paths = untouched + [(u, v, w), tuple(pvpath[:i]), tuple(pvpath[i + 1:])]
    new_paths.sort(key=lambda p: p[0])
    out = PathCover(tuple(new_paths))
    validate_cover(g, out)
    return out


def tfset_from_leaf_cover(t: TreeCert, cover: PathCover) -> VertexSet:
    """First endpoint plus its path neighbor from each path of the unique
    leaf-to-leaf minimum cover; the result has size 2 pc(t)."""
    g = t.graph
    validate_cover(g, cover)
    profile = pc_tree(t)
    if len(cover.paths) != profile.pc:
        raise InputError("cover is not minimum")
    if not profile.unique:
        raise InputError("minimum path cover is not unique")
    leaf_bits = leaves(g).bits
    picks: list[int] = []
    for p in cover.paths:
        if len(p) < 2 or not leaf_bits >> p[0] & 1 or not leaf_bits >> p[-1] & 1:
            raise InputError("cover path does not run between two distinct leaves")
        picks.extend(p[:2])
    return VertexSet.from_vertices(picks, g.n)


def subdivision_invariance_check(t: TreeCert, e: tuple[int, int]) -> bool:
    """Contract an edge with one endpoint of degree exactly 2 and the other of
    degree <= 2; True iff the path cover number is unchanged."""
    x, y = e
    g = t.graph
    if not g.has_edge(x, y):
        raise InputError(f"({x},{y}) is not an edge")
    dx, dy = g.degree(x), g.degree(y)
    if not ((dx == 2 and dy <= 2) or (dy == 2 and dx <= 2)):
        raise InputError(f"edge ({x},{y}) has no degree-2 endpoint with the other <= 2")
    before = pc_tree(t).pc
    after = pc_tree(TreeCert(contract_edge(g, e))).pc
    return before == after
