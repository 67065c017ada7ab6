"""Linear-time tree algorithms: centre edges, the closed-form cut value,
substar structure and star-root vertices.

Deleting an edge uv of a tree leaves two components V_u (containing u) and
V_v.  An edge is a *centre edge* when the imbalance ``||V_u| - |V_v||`` is
minimal; for any centre edge the l1-Fiedler value of the tree equals
``(1/|V_u| + 1/|V_v|) / 2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, GraphError, is_tree


@dataclass(frozen=True)
class CentreEdgeReport:
    centre_edges: tuple[tuple[int, int], ...]
    split_sizes: tuple[tuple[int, int], ...]  # (|V_u|, |V_v|) per centre edge
    b_value: Fraction


def _require_tree(t: Graph) -> None:
    if not is_tree(t):
        raise GraphError("input is not a tree")


def _parents_and_order(t: Graph, root: int) -> tuple[list[int], list[int]]:
    parent = [-1] * t.n
    order = [root]
    seen = 1 << root
    for v in order:
        r = t.adj[v] & ~seen
        while r:
            b = r & -r
            u = b.bit_length() - 1
            parent[u] = v
            seen |= b
            order.append(u)
            r ^= b
    return parent, order


def subtree_sizes(t: Graph, root: int) -> list[int]:
    """size[v] = vertices in v's subtree when t is rooted at ``root``."""
    _require_tree(t)
    if not 0 <= root < t.n:
        raise GraphError(f"root {root} out of range")
    parent, order = _parents_and_order(t, root)
    size = [1] * t.n
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
    return size


def centre_edges(t: Graph) -> CentreEdgeReport:
    """All edges of minimal split imbalance, with splits and the exact b value.

    For edge (parent p, child c) under a rooting at vertex 0 the split is
    (size[c], n - size[c]); one traversal covers every edge.
    """
    _require_tree(t)
    if t.n < 2:
        raise GraphError("centre edges need n >= 2")
    n = t.n
    parent, order = _parents_and_order(t, 0)
    size = subtree_sizes(t, 0)
    best_imb = n  # any edge beats this
    edges: list[tuple[int, int]] = []
    splits: list[tuple[int, int]] = []
    for c in order[1:]:
        sc = size[c]
        imb = abs(n - 2 * sc)
        if imb < best_imb:
            best_imb = imb
            edges = [(c, parent[c])]
            splits = [(sc, n - sc)]
        elif imb == best_imb:
            edges.append((c, parent[c]))
            splits.append((sc, n - sc))
    su, sv = splits[0]
    b = Fraction(1, 2) * (Fraction(1, su) + Fraction(1, sv))
    return CentreEdgeReport(tuple(edges), tuple(splits), b)


def substar_check(t: Graph) -> tuple[bool, int | None]:
    """Do all centre edges share a vertex?  Returns (flag, shared vertex).

    A single centre edge passes vacuously; the reported vertex is then the
    lower-numbered endpoint.
    """
    report = centre_edges(t)
    u0, v0 = report.centre_edges[0]
    common = (1 << u0) | (1 << v0)
    for u, v in report.centre_edges[1:]:
        common &= (1 << u) | (1 << v)
    if common == 0:
        return False, None
    return True, (common & -common).bit_length() - 1


def star_root_vertices(t: Graph) -> set[int]:
    """Common vertex of all centre edges, or for a unique centre edge the
    endpoint(s) on the weakly larger side."""
    report = centre_edges(t)
    if len(report.centre_edges) >= 2:
        ok, centre = substar_check(t)
        if not ok:  # pragma: no cover - contradicts the substar theorem
            raise GraphError("centre edges of a tree must share a vertex")
        return {centre}
    (u, v), (su, sv) = report.centre_edges[0], report.split_sizes[0]
    if su > sv:
        return {u}
    if sv > su:
        return {v}
    return {u, v}
