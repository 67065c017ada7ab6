"""Exact cut invariants: the l1-Fiedler value b(G), isoperimetric number,
Cheeger constant and edge connectivity.

For a nonempty proper vertex set S with boundary ``c = |bd S|``:

    rho(S) = c / (|S| |S^c|)      b(G) = (n/2) * min rho  (connected G)
    xi(S)  = c / |S|              iso(G) = min xi over |S| <= n/2
    h(S)   = c / min(vol S, vol S^c)

``b_exact`` minimizes rho over bipartitions whose two sides both induce
connected subgraphs; ``b_oracle_all_subsets`` minimizes over every subset.
The two agree on connected graphs, which the verification harness exploits
as a dual-route check.  All enumeration runs in the compiled kernels of
``fastscan``; values come back as exact ``Fraction``s.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import fastscan
from .graphs import Graph, GraphError, is_connected


@dataclass(frozen=True)
class InvariantResult:
    value: Fraction
    witness: frozenset[int] | None
    subsets_scanned: int
    connected: bool


def _adj_array(g: Graph) -> np.ndarray:
    if g.n > 62:
        raise GraphError("subset enumeration supports at most 62 vertices")
    return np.array(g.adj, dtype=np.int64)


def _mask_to_set(mask: int) -> frozenset[int]:
    out = set()
    while mask:
        b = mask & -mask
        out.add(b.bit_length() - 1)
        mask ^= b
    return frozenset(out)


def boundary_size(g: Graph, subset) -> int:
    mask = 0
    for v in subset:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
        mask |= 1 << v
    c = 0
    f = mask
    while f:
        b = f & -f
        c += bin(g.adj[b.bit_length() - 1] & ~mask).count("1")
        f ^= b
    return c


def b_exact(g: Graph) -> InvariantResult:
    """b(G) = (n/2) * min rho(S) over S with both sides inducing connected
    subgraphs.  Disconnected input yields value 0 with no witness."""
    if g.n < 2:
        raise GraphError("b(G) needs at least 2 vertices")
    if not is_connected(g):
        return InvariantResult(Fraction(0), None, 0, False)
    c, ss, mask, scanned = fastscan.b_restricted_core(_adj_array(g), g.n, -1, 1, 0)
    return InvariantResult(Fraction(g.n * int(c), 2 * int(ss)),
                           _mask_to_set(int(mask)), int(scanned), True)


def b_oracle_all_subsets(g: Graph) -> InvariantResult:
    """(n/2) * min rho(S) over ALL nonempty proper subsets — the independent
    route used to cross-check ``b_exact`` on connected graphs."""
    if g.n < 2:
        raise GraphError("b(G) needs at least 2 vertices")
    connected = is_connected(g)
    c, ss, mask, scanned = fastscan.min_rho_core(_adj_array(g), g.n)
    return InvariantResult(Fraction(g.n * int(c), 2 * int(ss)),
                           _mask_to_set(int(mask)), int(scanned), connected)


def _stats(g: Graph):
    return fastscan.subset_stats_core(_adj_array(g), g.n)


def iso_exact(g: Graph) -> InvariantResult:
    """Isoperimetric number: min |bd S| / |S| over 0 < |S| <= n/2."""
    if g.n < 2:
        raise GraphError("iso(G) needs at least 2 vertices")
    r = _stats(g)
    return InvariantResult(Fraction(int(r[0]), int(r[1])), _mask_to_set(int(r[2])),
                           (1 << g.n) - 2, is_connected(g))


def min_xi_exact(g: Graph) -> InvariantResult:
    """min |bd S| / |S| over every nonempty proper subset."""
    if g.n < 2:
        raise GraphError("min xi needs at least 2 vertices")
    r = _stats(g)
    return InvariantResult(Fraction(int(r[3]), int(r[4])), _mask_to_set(int(r[5])),
                           (1 << g.n) - 2, is_connected(g))


def cheeger_exact(g: Graph) -> InvariantResult:
    """Cheeger constant: min |bd S| / min(vol S, vol S^c).  Graphs with an
    isolated side of volume 0 only contribute subsets of positive volume."""
    if g.n < 2 or g.m == 0:
        raise GraphError("Cheeger constant needs at least one edge")
    r = _stats(g)
    return InvariantResult(Fraction(int(r[6]), int(r[7])), _mask_to_set(int(r[8])),
                           (1 << g.n) - 2, is_connected(g))


def edge_connectivity_subsets(g: Graph) -> int:
    """lambda(G) as the minimum boundary size over all subsets (0 when
    disconnected)."""
    if g.n < 2:
        raise GraphError("edge connectivity needs at least 2 vertices")
    return int(_stats(g)[9])


def edge_connectivity(g: Graph) -> int:
    """lambda(G) via unit-capacity max-flow (shortest augmenting paths) from
    vertex 0 to every other vertex.  Independent of the subset route."""
    if g.n < 2:
        raise GraphError("edge connectivity needs at least 2 vertices")
    n = g.n
    best = g.m  # flow can never exceed the edge count
    for t in range(1, n):
        cap = [[0] * n for _ in range(n)]
        for u, v in g.edges():
            cap[u][v] = 1
            cap[v][u] = 1
        flow = 0
        while True:
            prev = [-1] * n
            prev[0] = 0
            queue = [0]
            for u in queue:
                if u == t:
                    break
                for w in range(n):
                    if cap[u][w] > 0 and prev[w] < 0:
                        prev[w] = u
                        queue.append(w)
            if prev[t] < 0:
                break
            v = t
            while v != 0:
                u = prev[v]
                cap[u][v] -= 1
                cap[v][u] += 1
                v = u
            flow += 1
            if flow >= best:
                break
        best = min(best, flow)
        if best == 0:
            break
    return best


def growth_certificate(g: Graph) -> tuple[int, list[tuple[int, int]]] | None:
    """Search for a vertex v of degree lambda(G) and an ordering of its
    incident edges such that, adding them one at a time to the graph with v
    isolated, {v} is a sparsest subset (minimal rho) at every step.

    Such a certificate exists exactly when b(G) = n*lambda/(2(n-1)).
    Returns (v, edge order) or None.
    """
    if not is_connected(g):
        raise GraphError("equality analysis needs a connected graph")
    n = g.n
    lam = edge_connectivity_subsets(g)

    base = list(g.adj)
    for v in range(n):
        inc = [u for u in range(n) if (g.adj[v] >> u) & 1]
        if len(inc) != lam:
            continue

        def singleton_sparsest(added: tuple[int, ...]) -> bool:
            adj = base.copy()
            adj[v] = 0
            for u in inc:
                adj[u] &= ~(1 << v)
            for u in added:
                adj[v] |= 1 << u
                adj[u] |= 1 << v
            c, ss, _, _ = fastscan.min_rho_core(np.array(adj, dtype=np.int64), n)
            # rho({v}) = |added| / (n-1); must equal the global minimum
            return len(added) * int(ss) == int(c) * (n - 1)

        # feasibility depends only on the set of added edges, so search
        # subsets depth-first and read the order off the path
        def extend(order: list[int]) -> list[int] | None:
            if len(order) == lam:
                return order
            for u in inc:
                if u in order:
                    continue
                trial = order + [u]
                if singleton_sparsest(tuple(trial)):
                    got = extend(trial)
                    if got is not None:
                        return got
            return None

        found = extend([])
        if found is not None:
            return v, [(v, u) for u in found]
    return None


def equality_structure_check(g: Graph) -> tuple[int, list[tuple[int, int]]]:
    """Certificate for equality in b <= n*lambda/(2(n-1)); raises when the
    bound is not tight on g."""
    n = g.n
    lam = edge_connectivity_subsets(g)
    if b_exact(g).value != Fraction(n * lam, 2 * (n - 1)):
        raise GraphError("bound is not tight on this graph")
    cert = growth_certificate(g)
    if cert is None:  # pragma: no cover - contradicts the characterization
        raise GraphError("tight bound without a growth certificate")
    return cert
