"""Simple undirected graphs on at most 64 labeled vertices.

Adjacency is stored as one Python-int bitset per vertex, which keeps every
subset operation (cuts, induced subgraphs, BFS) branch-free and cheap at the
scales this package targets.  Vertex subsets are plain ints interpreted as
bitmasks over ``range(n)``.

Graphs are immutable after construction and hashable, so they can be shared
freely and used as dict keys.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator

MAX_VERTICES = 64

_G6_BIAS = 63


class GraphError(ValueError):
    """Raised for malformed graph input or unsupported sizes."""


class Graph:
    """Immutable simple graph with bitset adjacency."""

    __slots__ = ("n", "adj", "m")

    def __init__(self, n: int, adj: tuple[int, ...]):
        if not 1 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        if len(adj) != n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << n) - 1
        deg_total = 0
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError("adjacency bit outside vertex range")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            deg_total += row.bit_count()
        if deg_total % 2:
            raise GraphError("adjacency is not symmetric")
        for v, row in enumerate(adj):
            r = row
            while r:
                b = r & -r
                u = b.bit_length() - 1
                if not adj[u] >> v & 1:
                    raise GraphError("adjacency is not symmetric")
                r ^= b
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "m", deg_total // 2)

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop {u}-{v}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} outside vertex range")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> Iterator[int]:
        r = self.adj[v]
        while r:
            b = r & -r
            yield b.bit_length() - 1
            r ^= b

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            r = self.adj[u] >> (u + 1) << (u + 1)
            while r:
                b = r & -r
                yield u, b.bit_length() - 1
                r ^= b

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def parse_edge_list(text: str) -> Graph:
    """Parse an edge-list document: lines of ``u v``, optional ``n <count>`` header."""
    n_header = None
    edges = []
    max_seen = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if lineno == 1 or (n_header is None and not edges and max_seen < 0):
            if parts[0] == "n":
                if len(parts) != 2:
                    raise GraphError(f"line {lineno}: malformed header {raw!r}")
                try:
                    n_header = int(parts[1])
                except ValueError:
                    raise GraphError(f"line {lineno}: non-integer vertex count") from None
                if not 1 <= n_header <= MAX_VERTICES:
                    raise GraphError(f"line {lineno}: vertex count {n_header} out of range")
                continue
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer vertex token in {raw!r}") from None
        if u == v:
            raise GraphError(f"line {lineno}: self-loop {u}-{v}")
        if u < 0 or v < 0 or u >= MAX_VERTICES or v >= MAX_VERTICES:
            raise GraphError(f"line {lineno}: vertex index outside 0..{MAX_VERTICES - 1}")
        edges.append((u, v))
        max_seen = max(max_seen, u, v)
    if n_header is None:
        if max_seen < 0:
            raise GraphError("edge list contains no edges and no 'n' header")
        n = max_seen + 1
    else:
        if max_seen >= n_header:
            raise GraphError(f"vertex index {max_seen} exceeds declared count {n_header}")
        n = n_header
    return Graph.from_edges(n, edges)


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (standard printable encoding, n <= 64)."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphError("empty graph6 string")
    data = [ord(c) - _G6_BIAS for c in s]
    if any(d < 0 or d > 63 for d in data):
        raise GraphError("graph6 byte outside printable range 63..126")
    if data[0] <= 62:
        n = data[0]
        body = data[1:]
    elif data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise GraphError("unsupported or truncated graph6 size field")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:  # pragma: no cover - excluded by byte range check
        raise GraphError("bad graph6 size byte")
    if n < 1 or n > MAX_VERTICES:
        raise GraphError(f"graph6 vertex count {n} outside 1..{MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    expect = (nbits + 5) // 6
    if len(body) != expect:
        raise GraphError(f"graph6 body length {len(body)} != expected {expect}")
    adj = [0] * n
    idx = 0
    for v in range(1, n):
        for u in range(v):
            bit = (body[idx // 6] >> (5 - idx % 6)) & 1
            if bit:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            idx += 1
    # padding bits must be zero
    if expect and (body[-1] & ((1 << (expect * 6 - nbits)) - 1)):
        raise GraphError("nonzero padding bits in graph6 body")
    return Graph(n, tuple(adj))


def to_graph6(g: Graph) -> str:
    """Encode a graph as a single-byte-size graph6 string (n <= 62)."""
    if g.n > 62:
        raise GraphError(f"graph6 single-byte encoding supports n <= 62, got {g.n}")
    out = [g.n + _G6_BIAS]
    acc = 0
    nacc = 0
    for v in range(1, g.n):
        for u in range(v):
            acc = (acc << 1) | (g.adj[u] >> v & 1)
            nacc += 1
            if nacc == 6:
                out.append(acc + _G6_BIAS)
                acc = 0
                nacc = 0
    if nacc:
        out.append((acc << (6 - nacc)) + _G6_BIAS)
    return "".join(chr(c) for c in out)


def complement(g: Graph) -> Graph:
    full = g.full_mask()
    adj = tuple((full & ~g.adj[v]) & ~(1 << v) for v in range(g.n))
    return Graph(g.n, adj)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h plus all edges between the two parts."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise GraphError(f"join has {n} > {MAX_VERTICES} vertices")
    hi = ((1 << h.n) - 1) << g.n
    lo = (1 << g.n) - 1
    adj = [g.adj[v] | hi for v in range(g.n)]
    adj += [(h.adj[v] << g.n) | lo for v in range(h.n)]
    return Graph(n, tuple(adj))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise GraphError(f"union has {n} > {MAX_VERTICES} vertices")
    adj = list(g.adj) + [h.adj[v] << g.n for v in range(h.n)]
    return Graph(n, tuple(adj))


def attach_pendants(g: Graph, host: int, k: int) -> Graph:
    """Attach k new degree-1 vertices to ``host``."""
    if not 0 <= host < g.n:
        raise GraphError(f"host vertex {host} out of range")
    if k < 0 or g.n + k > MAX_VERTICES:
        raise GraphError(f"cannot attach {k} pendants to a {g.n}-vertex graph")
    adj = list(g.adj) + [1 << host] * k
    for i in range(k):
        adj[host] |= 1 << (g.n + i)
    return Graph(g.n + k, tuple(adj))


def named_graph(family: str, size: int = 0) -> Graph:
    """Build a standard graph: complete, cycle, path, star, hypercube, petersen.

    ``size`` is the vertex count, except for hypercube (dimension) and
    petersen (ignored).
    """
    if family == "complete":
        if size < 1:
            raise GraphError("complete graph needs size >= 1")
        return Graph.from_edges(size, [(u, v) for u in range(size) for v in range(u + 1, size)])
    if family == "cycle":
        if size < 3:
            raise GraphError("cycle needs size >= 3")
        return Graph.from_edges(size, [(v, (v + 1) % size) for v in range(size)])
    if family == "path":
        if size < 1:
            raise GraphError("path needs size >= 1")
        return Graph.from_edges(size, [(v, v + 1) for v in range(size - 1)])
    if family == "star":
        if size < 2:
            raise GraphError("star needs size >= 2")
        return Graph.from_edges(size, [(0, v) for v in range(1, size)])
    if family == "hypercube":
        if size < 1 or 2 ** size > MAX_VERTICES:
            raise GraphError("hypercube dimension d needs 1 <= d <= 6")
        n = 2 ** size
        edges = [(v, v ^ (1 << b)) for v in range(n) for b in range(size) if v < v ^ (1 << b)]
        return Graph.from_edges(n, edges)
    if family == "petersen":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return Graph.from_edges(10, outer + spokes + inner)
    raise GraphError(f"unknown graph family {family!r}")


def prufer_decode(seq: tuple[int, ...], n: int) -> Graph:
    """Decode a Prüfer sequence of length n-2 into the labeled tree it encodes."""
    if n == 1:
        return Graph(1, (0,))
    if len(seq) != n - 2:
        raise GraphError("Prüfer sequence must have length n-2")
    deg = [1] * n
    for s in seq:
        deg[s] += 1
    edges = []
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for s in seq:
        edges.append((leaf, s))
        deg[s] -= 1
        if deg[s] == 1 and s < ptr:
            leaf = s
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return Graph.from_edges(n, edges)


def all_trees(n: int) -> Iterator[Graph]:
    """Yield every labeled tree on n vertices exactly once (Prüfer decoding).

    Cayley's formula gives n**(n-2) trees for n >= 2.  Bounded to n <= 10;
    beyond that the stream is unreasonably long for any caller here.
    """
    if not 1 <= n <= 10:
        raise GraphError("all_trees supports 1 <= n <= 10")
    if n == 1:
        yield Graph(1, (0,))
        return
    if n == 2:
        yield Graph.from_edges(2, [(0, 1)])
        return
    seq = [0] * (n - 2)
    while True:
        yield prufer_decode(tuple(seq), n)
        i = n - 3
        while i >= 0 and seq[i] == n - 1:
            seq[i] = 0
            i -= 1
        if i < 0:
            return
        seq[i] += 1


_SPLITMIX_GAMMA = 0x9E3779B97F4A7C15
_M64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64 PRNG (Steele, Lea & Flood); the one fixed generator here.

    Chosen because it is trivially portable and its output for a given seed
    is documented and reproducible across implementations.
    """

    def __init__(self, seed: int):
        self.state = seed & _M64

    def next_u64(self) -> int:
        self.state = (self.state + _SPLITMIX_GAMMA) & _M64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
        return z ^ (z >> 31)


def is_connected(g: Graph, within: int | None = None) -> bool:
    """Connectivity of the subgraph induced by the ``within`` mask (default: all)."""
    mask = g.full_mask() if within is None else within
    if mask == 0:
        raise GraphError("connectivity of the empty vertex set is undefined")
    if mask & ~g.full_mask():
        raise GraphError("vertex mask outside graph")
    comp = mask & -mask
    frontier = comp
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            nxt |= g.adj[b.bit_length() - 1]
            f ^= b
        frontier = nxt & mask & ~comp
        comp |= frontier
    return comp == mask


def random_connected_graph(n: int, edge_prob: Fraction, seed: int) -> Graph:
    """Erdős–Rényi G(n, p) sample, rejected until connected.

    Deterministic for a fixed seed (splitmix64 stream; one draw per vertex
    pair in lexicographic order per attempt).
    """
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"n={n} out of range")
    p = Fraction(edge_prob)
    if not 0 < p <= 1:
        raise GraphError("edge probability must be in (0, 1]")
    threshold = (p.numerator << 64) // p.denominator
    rng = SplitMix64(seed)
    for _ in range(100_000):
        adj = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.next_u64() < threshold:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
        g = Graph(n, tuple(adj))
        if is_connected(g):
            return g
    raise GraphError("gave up after 100000 disconnected samples")


def degree_stats(g: Graph) -> tuple[int, int, Fraction]:
    """(d_min, d_max, exact average degree 2m/n)."""
    degs = [g.degree(v) for v in range(g.n)]
    return min(degs), max(degs), Fraction(2 * g.m, g.n)


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)
