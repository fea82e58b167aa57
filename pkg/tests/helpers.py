"""Independent brute-force oracles used to cross-check the exact modules.

Everything here enumerates plainly (itertools over subsets, permutations for
isomorphism, all Prufer sequences) and deliberately avoids the pruned search
paths, the counting DP, and the level-sequence enumerator it is checking.
"""

from itertools import combinations, permutations

from forcing_lab.graph_core import Graph, TreeCert, VertexSet, canonical_form
from forcing_lab.forcing import is_forcing_set, is_total_forcing_set
from forcing_lab.generate import named, prufer_to_edges


def brute_zero_forcing(g: Graph) -> int:
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            if is_forcing_set(g, VertexSet.from_vertices(combo, g.n)):
                return k
    raise AssertionError("V(G) always forces")


def brute_total_forcing(g: Graph) -> int:
    for k in range(2, g.n + 1):
        for combo in combinations(range(g.n), k):
            if is_total_forcing_set(g, VertexSet.from_vertices(combo, g.n)):
                return k
    raise AssertionError("no total forcing set found")


def brute_max_matching(g: Graph) -> int:
    edges = g.edges()
    best = 0
    for k in range(len(edges), 0, -1):
        if k <= best:
            break
        for combo in combinations(edges, k):
            touched = set()
            ok = True
            for u, v in combo:
                if u in touched or v in touched:
                    ok = False
                    break
                touched.update((u, v))
            if ok:
                best = k
                break
    return best


def _forest_degree_ok(n: int, subset) -> bool:
    deg = [0] * n
    for u, v in subset:
        deg[u] += 1
        deg[v] += 1
        if deg[u] > 2 or deg[v] > 2:
            return False
    return True


def _acyclic(n: int, subset) -> bool:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in subset:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def brute_pc(g: Graph) -> int:
    """Minimum path cover of any small graph: n minus the largest linear
    forest (degree <= 2 and acyclic edge subset)."""
    edges = g.edges()
    best = 0
    for k in range(len(edges), 0, -1):
        if k <= best:
            break
        for combo in combinations(edges, k):
            if _forest_degree_ok(g.n, combo) and _acyclic(g.n, combo):
                best = k
                break
    return g.n - best


def brute_min_cover_edge_sets(t: TreeCert) -> list[tuple]:
    """All optimal degree-<=2 edge subsets of a tree (tree edges are always
    acyclic), each corresponding to one minimum path cover."""
    edges = t.graph.edges()
    best = t.n - brute_pc(t.graph)
    return [
        combo
        for combo in combinations(edges, best)
        if _forest_degree_ok(t.n, combo)
    ]


def brute_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    e2 = set(map(frozenset, g2.edges()))
    for perm in permutations(range(g1.n)):
        if all(frozenset((perm[u], perm[v])) in e2 for u, v in g1.edges()):
            return True
    return False


def prufer_tree_classes(n: int) -> dict:
    """canonical form -> one representative, over every labeled tree on n
    vertices (n >= 2), produced by exhausting all Prufer sequences."""
    classes = {}
    if n == 2:
        t = TreeCert(Graph.from_edges(2, [(0, 1)]))
        return {canonical_form(t): t}
    seqs = [[]]
    for _ in range(n - 2):
        seqs = [s + [a] for s in seqs for a in range(n)]
    for seq in seqs:
        t = TreeCert(Graph.from_edges(n, prufer_to_edges(seq, n)))
        classes.setdefault(canonical_form(t), t)
    return classes


def mixed_corpus(max_n: int = 6) -> list[Graph]:
    """Trees, cycles, completes, stars, double stars, complete bipartite
    graphs up to max_n vertices."""
    from forcing_lab.generate import all_trees

    out: list[Graph] = []
    for n in range(1, max_n + 1):
        out.extend(cert.graph for cert in all_trees(n))
    for n in range(3, max_n + 1):
        out.append(named("cycle", [n]))
        out.append(named("complete", [n]))
    for a in range(1, max_n):
        for b in range(a, max_n):
            if a + b <= max_n and a >= 2:
                out.append(named("complete_bipartite", [a, b]))
    for r in range(1, max_n):
        for s in range(r, max_n):
            if r + s + 2 <= max_n:
                out.append(named("double_star", [r, s]))
    return out


def tree(n: int, edges) -> TreeCert:
    return TreeCert(Graph.from_edges(n, list(edges)))
