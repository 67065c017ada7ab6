"""The max-edge-difference invariant

    gamma(G) = min { max_{uv in E} |x_u - x_v| : sum x = 0, ||x||_inf = 1 }

computed exactly.  The unit-sup-norm constraint is split into n anchored
linear programs (fix x_i = 1; the -1 anchor follows by symmetry), each solved
with a dense two-phase simplex over ``Fraction`` using Bland's rule, so the
result is an exact rational number.  Ties between anchors resolve toward the
smallest anchor index.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graphs import Graph, GraphError

_Q = Fraction


@dataclass
class LinearProgram:
    """minimize c.x  subject to rows (a, sense, rhs) with sense in
    {'<=', '>=', '=='} and finite box bounds lo <= x <= hi per variable."""
    objective: list[Fraction]
    bounds: list[tuple[Fraction, Fraction]]
    rows: list[tuple[list[Fraction], str, Fraction]] = field(default_factory=list)

    def add(self, coeffs: dict[int, Fraction], sense: str, rhs: Fraction) -> None:
        a = [_Q(0)] * len(self.objective)
        for j, c in coeffs.items():
            a[j] = _Q(c)
        self.rows.append((a, sense, _Q(rhs)))


def _pivot(T: list[list[Fraction]], basis: list[int], r: int, c: int) -> None:
    piv = T[r][c]
    T[r] = [v / piv for v in T[r]]
    for i, row in enumerate(T):
        if i != r and row[c] != 0:
            f = row[c]
            T[i] = [a - f * b for a, b in zip(row, T[r])]
    basis[r] = c


def _optimize(T: list[list[Fraction]], basis: list[int], ncols: int) -> None:
    """Run simplex on tableau T (last row = reduced costs, last col = rhs),
    minimizing, with Bland's rule."""
    m = len(T) - 1
    while True:
        c = -1
        for j in range(ncols):
            if T[m][j] < 0:
                c = j
                break
        if c < 0:
            return
        r = -1
        for i in range(m):
            if T[i][c] > 0:
                if r < 0:
                    r = i
                else:
                    cur = T[i][ncols] / T[i][c]
                    best = T[r][ncols] / T[r][c]
                    if cur < best or (cur == best and basis[i] < basis[r]):
                        r = i
        if r < 0:
            raise ArithmeticError("linear program is unbounded")
        _pivot(T, basis, r, c)


def solve_lp(lp: LinearProgram) -> tuple[Fraction, list[Fraction]]:
    """Exact optimum (value, x) of a bounded-feasible LP; raises on
    infeasibility."""
    nv = len(lp.objective)
    lo = [b[0] for b in lp.bounds]
    hi = [b[1] for b in lp.bounds]
    # shift x = lo + y, y >= 0; fixed variables (lo == hi) disappear
    free = [j for j in range(nv) if lo[j] != hi[j]]
    col = {j: k for k, j in enumerate(free)}
    rows: list[tuple[list[Fraction], str, Fraction]] = []
    for a, sense, rhs in lp.rows:
        r = rhs - sum(a[j] * lo[j] for j in range(nv))
        rows.append(([a[j] for j in free], sense, r))
    for j in free:  # y_j <= hi_j - lo_j
        a = [_Q(0)] * len(free)
        a[col[j]] = _Q(1)
        rows.append((a, "<=", hi[j] - lo[j]))
    for i, (a, sense, rhs) in enumerate(rows):
        if rhs < 0:
            flip = {"<=": ">=", ">=": "<=", "==": "=="}[sense]
            rows[i] = ([-v for v in a], flip, -rhs)

    nf = len(free)
    slack_rows = [i for i, r in enumerate(rows) if r[1] in ("<=", ">=")]
    art_rows = [i for i, r in enumerate(rows) if r[1] in (">=", "==")]
    ns, na = len(slack_rows), len(art_rows)
    ncols = nf + ns + na
    m = len(rows)
    T = [[_Q(0)] * (ncols + 1) for _ in range(m + 1)]
    basis = [-1] * m
    scol = {i: nf + k for k, i in enumerate(slack_rows)}
    acol = {i: nf + ns + k for k, i in enumerate(art_rows)}
    for i, (a, sense, rhs) in enumerate(rows):
        for j in range(nf):
            T[i][j] = a[j]
        T[i][ncols] = rhs
        if sense == "<=":
            T[i][scol[i]] = _Q(1)
            basis[i] = scol[i]
        elif sense == ">=":
            T[i][scol[i]] = _Q(-1)
        if i in acol:
            T[i][acol[i]] = _Q(1)
            basis[i] = acol[i]
    # phase 1: minimize the artificial sum (cost 1 per artificial, then zero
    # the reduced costs of the basic artificials)
    for i in art_rows:
        T[m][acol[i]] = _Q(1)
    for i in art_rows:
        for j in range(ncols + 1):
            T[m][j] -= T[i][j]
    _optimize(T, basis, ncols)
    if -T[m][ncols] != 0:
        raise ArithmeticError("linear program is infeasible")
    for i in range(m):  # drive leftover artificials out of the basis
        if basis[i] >= nf + ns:
            for j in range(nf + ns):
                if T[i][j] != 0:
                    _pivot(T, basis, i, j)
                    break
    # phase 2
    ncols2 = nf + ns
    for i in range(m + 1):
        del T[i][ncols2:ncols]
    for j in range(ncols2 + 1):
        T[m][j] = _Q(0)
    for k, j in enumerate(free):
        T[m][k] = lp.objective[j]
    for i in range(m):
        if basis[i] < ncols2 and T[m][basis[i]] != 0:
            f = T[m][basis[i]]
            T[m] = [a - f * b for a, b in zip(T[m], T[i])]
    _optimize(T, basis, ncols2)
    y = [_Q(0)] * nf
    for i in range(m):
        if basis[i] < nf:
            y[basis[i]] = T[i][ncols2]
    x = list(lo)
    for j in free:
        x[j] = lo[j] + y[col[j]]
    return -T[m][ncols2] + sum(lp.objective[j] * lo[j] for j in range(nv)), x


@dataclass(frozen=True)
class GammaResult:
    value: Fraction
    vector: tuple[Fraction, ...]
    anchor: int
    degenerate: bool  # no edge constrains the objective (edgeless graph)


def gamma_exact(g: Graph) -> GammaResult:
    """gamma(G) over all zero-sum vectors of unit sup norm.

    By symmetry (x -> -x) some coordinate may be anchored at +1; one LP per
    anchor, variables x_0..x_{n-1} and the objective t with
    |x_u - x_v| <= t on every edge.
    """
    n = g.n
    if n < 2:
        raise GraphError("gamma needs at least 2 vertices")
    edges = list(g.edges())
    best: tuple[Fraction, list[Fraction], int] | None = None
    one = _Q(1)
    for anchor in range(n):
        lp = LinearProgram(
            objective=[_Q(0)] * n + [one],
            bounds=[(one, one) if j == anchor else (-one, one) for j in range(n)]
                   + [(_Q(0), _Q(2))],
        )
        lp.add({j: one for j in range(n)}, "==", _Q(0))
        for u, v in edges:
            lp.add({u: one, v: -one, n: -one}, "<=", _Q(0))
            lp.add({u: -one, v: one, n: -one}, "<=", _Q(0))
        val, x = solve_lp(lp)
        if best is None or val < best[0]:
            best = (val, x[:n], anchor)
    assert best is not None
    return GammaResult(best[0], tuple(best[1]), best[2], degenerate=not edges)


def gamma_grid(g: Graph, steps: int = 50, cap_units: int | None = None) -> Fraction:
    """Independent grid-search oracle: minimize the maximum edge difference
    over vectors with coordinates in (1/steps)*{-steps..steps}, zero sum and
    some coordinate of modulus 1.

    The search is exhaustive up to branch-and-bound pruning; with
    ``cap_units`` set, grid points that provably cannot beat cap_units/steps
    are skipped and ``cap_units/steps`` is returned when nothing beats it.
    Vertices are visited in breadth-first order from a maximum-degree vertex
    so edge constraints prune early.
    """
    import numpy as np
    from . import fastscan

    n = g.n
    if n < 2:
        raise GraphError("gamma needs at least 2 vertices")
    start = max(range(n), key=g.degree)
    order = [start]
    seen = 1 << start
    for v in order:
        r = g.adj[v] & ~seen
        while r:
            b = r & -r
            u = b.bit_length() - 1
            order.append(u)
            seen |= b
            r ^= b
    for v in range(n):  # isolated vertices come last
        if not (seen >> v) & 1:
            order.append(v)
    pos = {v: i for i, v in enumerate(order)}
    lower: list[list[int]] = [[] for _ in range(n)]
    for u, v in g.edges():
        a, b = pos[u], pos[v]
        lower[max(a, b)].append(min(a, b))
    loff = np.zeros(n + 1, np.int64)
    for i in range(n):
        loff[i + 1] = loff[i] + len(lower[i])
    lflat = np.array([w for row in lower for w in row] or [0], np.int64)
    cap = 2 * steps + 1 if cap_units is None else cap_units
    return _Q(int(fastscan.gamma_grid_min(n, steps, loff, lflat, cap)), steps)
