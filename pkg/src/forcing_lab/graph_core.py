"""Core graph representation and structural queries.

Simple undirected graphs on dense integer vertex ids 0..n-1, stored both as
sorted adjacency lists and as per-vertex neighbor bitsets.  Python ints are
arbitrary precision, so one bitset code path serves every order.  The module
also provides tree certification, leaf/support/diameter queries, AHU canonical
forms for free trees, and the two on-disk formats (edge-list text, graph6).

All types here are immutable after construction and safe to share across
workers; all operations are pure.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator


class InputError(ValueError):
    """Malformed input or violated operation precondition."""


class CapacityError(RuntimeError):
    """Instance exceeds the documented threshold of an exact search."""


@dataclass(frozen=True)
class VertexSet:
    """Subset of the vertices 0..n-1 of a graph of order n, as a bitset."""

    bits: int
    n: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.n:
            raise InputError(f"vertex set has bits outside 0..{self.n - 1}")

    @classmethod
    def from_vertices(cls, vertices: Iterable[int], n: int) -> "VertexSet":
        bits = 0
        for v in vertices:
            if not 0 <= v < n:
                raise InputError(f"vertex {v} out of range 0..{n - 1}")
            bits |= 1 << v
        return cls(bits, n)

    def members(self) -> tuple[int, ...]:
        return tuple(self)

    def __iter__(self) -> Iterator[int]:
        b = self.bits
        while b:
            low = b & -b
            yield low.bit_length() - 1
            b ^= low

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and self.bits >> v & 1 == 1

    def __len__(self) -> int:
        return self.bits.bit_count()


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: sorted adjacency lists plus neighbor bitsets."""

    n: int
    adj: tuple[tuple[int, ...], ...]
    bits: tuple[int, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build and validate a graph on vertices 0..n-1."""
        if n < 0:
            raise InputError("order must be nonnegative")
        bits = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u},{v}) out of range 0..{n - 1}")
            if u == v:
                raise InputError(f"self-loop at {u}")
            if bits[u] >> v & 1:
                raise InputError(f"duplicate edge ({u},{v})")
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        adj = tuple(tuple(_bit_indices(b)) for b in bits)
        return cls(n, adj, tuple(bits))

    @classmethod
    def from_labeled_edges(cls, edges: Iterable[tuple[object, object]]) -> "Graph":
        """Compact arbitrary hashable labels to 0..n-1 in first-appearance order."""
        ids: dict[object, int] = {}
        compact = []
        for a, b in edges:
            for x in (a, b):
                if x not in ids:
                    ids[x] = len(ids)
            compact.append((ids[a], ids[b]))
        return cls.from_edges(len(ids), compact)

    @property
    def m(self) -> int:
        return sum(b.bit_count() for b in self.bits) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise InputError(f"vertex {v} out of range 0..{self.n - 1}")
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and self.bits[u] >> v & 1 == 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def vertex_set(self, vertices: Iterable[int]) -> VertexSet:
        return VertexSet.from_vertices(vertices, self.n)


def _bit_indices(b: int) -> Iterator[int]:
    while b:
        low = b & -b
        yield low.bit_length() - 1
        b ^= low


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    seen = 1
    queue = deque([0])
    while queue:
        v = queue.popleft()
        fresh = g.bits[v] & ~seen
        seen |= fresh
        for u in _bit_indices(fresh):
            queue.append(u)
    return seen == g.full_mask


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


@dataclass(frozen=True)
class TreeCert:
    """Certified tree: the constructor proves connectivity and m = n-1."""

    graph: Graph

    def __post_init__(self) -> None:
        if not is_tree(self.graph):
            raise InputError("graph is not a tree (needs connectivity and m = n-1)")

    @property
    def n(self) -> int:
        return self.graph.n


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """AHU encoding of a free tree; two trees get equal codes iff isomorphic."""

    code: bytes

    def hex(self) -> str:
        return self.code.hex()


def leaves(g: Graph) -> VertexSet:
    """Vertices of degree exactly 1."""
    return VertexSet.from_vertices(
        (v for v in range(g.n) if len(g.adj[v]) == 1), g.n
    )


def support_vertices(g: Graph) -> tuple[VertexSet, VertexSet]:
    """(support vertices, strong supports with >= 2 leaf neighbors)."""
    leaf_bits = leaves(g).bits
    supports = 0
    strong = 0
    for v in range(g.n):
        k = (g.bits[v] & leaf_bits).bit_count()
        if k >= 1:
            supports |= 1 << v
        if k >= 2:
            strong |= 1 << v
    return VertexSet(supports, g.n), VertexSet(strong, g.n)


def _bfs(g: Graph, start: int) -> tuple[list[int], list[int]]:
    """(visit order, parent array) of a BFS from start."""
    parent = [-1] * g.n
    parent[start] = start
    order = [start]
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if parent[u] == -1:
                parent[u] = v
                order.append(u)
                queue.append(u)
    return order, parent


def _eccentricity_end(g: Graph, start: int) -> tuple[int, int]:
    """(farthest vertex, distance) from start; assumes connectivity."""
    dist = [-1] * g.n
    dist[start] = 0
    queue = deque([start])
    far, fard = start, 0
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if dist[u] == -1:
                dist[u] = dist[v] + 1
                if dist[u] > fard:
                    far, fard = u, dist[u]
                queue.append(u)
    return far, fard


def diameter(t: TreeCert) -> int:
    """Max pairwise distance, via the double breadth-first sweep."""
    g = t.graph
    a, _ = _eccentricity_end(g, 0)
    _, d = _eccentricity_end(g, a)
    return d


def tree_centers(t: TreeCert) -> tuple[int, ...]:
    """The one or two middle vertices left after repeatedly peeling leaves."""
    g = t.graph
    if g.n <= 2:
        return tuple(range(g.n))
    deg = [len(g.adj[v]) for v in range(g.n)]
    layer = [v for v in range(g.n) if deg[v] == 1]
    remaining = g.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            deg[v] = 0
            for u in g.adj[v]:
                if deg[u] > 1:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        layer = nxt
    return tuple(sorted(layer))


def _rooted_code(g: Graph, root: int) -> bytes:
    order, parent = _bfs(g, root)
    codes: list[bytes] = [b""] * g.n
    for v in reversed(order):
        children = sorted(codes[u] for u in g.adj[v] if parent[u] == v)
        codes[v] = b"(" + b"".join(children) + b")"
    return codes[root]


def canonical_form(t: TreeCert) -> CanonicalForm:
    """Root at the tree center; a bicentered tree takes the smaller of the
    two center-rooted codes."""
    g = t.graph
    return CanonicalForm(min(_rooted_code(g, c) for c in tree_centers(t)))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on the given vertices, compacted to 0..k-1 in
    ascending original-id order.  Returns (subgraph, new-id -> old-id map)."""
    old = tuple(sorted(set(vertices)))
    pos = {v: i for i, v in enumerate(old)}
    edges = [
        (pos[u], pos[v]) for u, v in g.edges() if u in pos and v in pos
    ]
    return Graph.from_edges(len(old), edges), old


# --- edge-list text format -------------------------------------------------
# First line "n m", then m lines "u v" with 0 <= u < v < n.


def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InputError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise InputError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise InputError(f"header must be 'n m', got {lines[0]!r}") from exc
    if n < 0 or m < 0:
        raise InputError("n and m must be nonnegative")
    if len(lines) - 1 != m:
        raise InputError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise InputError(f"edge line must be 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise InputError(f"edge line must be 'u v', got {ln!r}") from exc
        if not 0 <= u < v < n:
            raise InputError(f"edge ({u},{v}) violates 0 <= u < v < n")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# --- graph6 ----------------------------------------------------------------
# McKay's ASCII encoding: a size header, then the upper triangle of the
# adjacency matrix in column-major order, packed 6 bits per printable byte.

_G6_HEADER = ">>graph6<<"


def _g6_encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr((n >> s & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise InputError("graph6 supports n <= 68719476735")


def to_graph6(g: Graph) -> str:
    out = [_g6_encode_n(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.bits[j]
        for i in range(j):
            acc = acc << 1 | col >> i & 1
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc, nbits = 0, 0
    if nbits:
        out.append(chr((acc << 6 - nbits) + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise InputError("empty graph6 line")
    vals = []
    for ch in s:
        o = ord(ch)
        if not 63 <= o <= 126:
            raise InputError(f"invalid graph6 byte {ch!r}")
        vals.append(o - 63)
    if vals[0] != 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 2 and vals[1] != 63:
        if len(vals) < 4:
            raise InputError("truncated graph6 size header")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    else:
        if len(vals) < 8:
            raise InputError("truncated graph6 size header")
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        body = vals[8:]
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise InputError(f"graph6 body length {len(body)} wrong for n={n}")
    stream = 0
    for v in body:
        stream = stream << 6 | v
    total = 6 * len(body)
    if need and stream & (1 << total - need) - 1:
        raise InputError("nonzero padding bits in graph6 body")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if stream >> total - 1 - k & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)
