"""Shared pure-Python reference implementations.

Everything here is deliberately independent of the package internals: plain
dict/set adjacency, itertools subset enumeration and Fraction arithmetic.
The kernels and fast paths are tested against these oracles.
"""

from fractions import Fraction
from itertools import combinations

import pytest

from l1fiedler.graphs import Graph


def edge_set(g: Graph) -> set[tuple[int, int]]:
    return set(g.edges())


def adjacency(g: Graph) -> dict[int, set[int]]:
    adj = {v: set() for v in range(g.n)}
    for u, v in g.edges():
        adj[u].add(v)
        adj[v].add(u)
    return adj


def is_connected_subset(adj: dict[int, set[int]], verts: set[int]) -> bool:
    if not verts:
        return False
    start = next(iter(verts))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v] & verts:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == verts


def cut_size(g: Graph, subset: set[int]) -> int:
    return sum(1 for u, v in g.edges() if (u in subset) != (v in subset))


def proper_subsets(n: int):
    verts = list(range(n))
    for k in range(1, n):
        for combo in combinations(verts, k):
            yield set(combo)


def brute_b(g: Graph) -> Fraction:
    """(n/2) * min rho over bipartitions with both sides connected."""
    adj = adjacency(g)
    n = g.n
    allv = set(range(n))
    best = None
    for S in proper_subsets(n):
        if not is_connected_subset(adj, S) or not is_connected_subset(adj, allv - S):
            continue
        rho = Fraction(cut_size(g, S), len(S) * (n - len(S)))
        if best is None or rho < best:
            best = rho
    assert best is not None, "graph is disconnected"
    return Fraction(n, 2) * best


def brute_min_rho(g: Graph) -> Fraction:
    n = g.n
    return min(Fraction(cut_size(g, S), len(S) * (n - len(S)))
               for S in proper_subsets(n))


def brute_iso(g: Graph) -> Fraction:
    n = g.n
    return min(Fraction(cut_size(g, S), len(S))
               for S in proper_subsets(n) if len(S) <= n // 2)


def brute_min_xi(g: Graph) -> Fraction:
    return min(Fraction(cut_size(g, S), len(S)) for S in proper_subsets(g.n))


def brute_cheeger(g: Graph) -> Fraction:
    deg = {v: len(a) for v, a in adjacency(g).items()}
    total = sum(deg.values())
    best = None
    for S in proper_subsets(g.n):
        vol = sum(deg[v] for v in S)
        small = min(vol, total - vol)
        if small == 0:
            continue
        h = Fraction(cut_size(g, S), small)
        if best is None or h < best:
            best = h
    assert best is not None
    return best


def brute_mincut(g: Graph) -> int:
    return min(cut_size(g, S) for S in proper_subsets(g.n))


def connected_edge_masks(n: int):
    """All labeled connected graphs on n vertices as Graph objects."""
    pairs = list(combinations(range(n), 2))
    adj_template = None
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (bits >> i) & 1]
        g = Graph.from_edges(n, edges)
        if is_connected_subset(adjacency(g), set(range(n))):
            yield g
    del adj_template


@pytest.fixture(scope="session")
def small_connected_graphs():
    """All connected labeled graphs with 2..5 vertices."""
    out = []
    for n in range(2, 6):
        out.extend(connected_edge_masks(n))
    return out


def pytest_terminal_summary(terminalreporter):
    """Echo the one-line-per-criterion acceptance results after capture."""
    try:
        from test_acceptance import RESULT_LINES
    except ImportError:
        return
    if RESULT_LINES:
        terminalreporter.section("acceptance criteria")
        for line in RESULT_LINES:
            terminalreporter.write_line(line)
