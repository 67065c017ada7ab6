"""Laplacian spectra (cyclic Jacobi) and the exact two-valued eigen-identity
satisfied by sparsest-cut indicator vectors.

Given a subset S attaining the minimum of rho, the vector

    x_v = 1/(2|S|)  (v in S),      x_v = -1/(2|S^c|)  (v not in S)

has sum 0 and l1-norm 1, and the Laplacian row sums satisfy, vertexwise,

    (Lx)_u =  b * |N(u) \\cap S^c| / |bd S|   (u in S)
    (Lx)_u = -b * |N(u) \\cap S|  / |bd S|    (u in S^c)

so the sums over S and S^c are +b and -b.  ``laplacian_identity_check``
verifies all of this in exact rational arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .graphs import Graph, GraphError


def laplacian(g: Graph) -> np.ndarray:
    L = np.zeros((g.n, g.n))
    for u, v in g.edges():
        L[u, u] += 1.0
        L[v, v] += 1.0
        L[u, v] -= 1.0
        L[v, u] -= 1.0
    return L


def eigen_sym(a: np.ndarray, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations,
    ascending.  Raises if the off-diagonal mass fails to vanish."""
    A = np.array(a, dtype=float)
    n = A.shape[0]
    if A.shape != (n, n) or not np.allclose(A, A.T, atol=1e-12):
        raise ValueError("matrix must be symmetric")
    if n == 1:
        return np.array([A[0, 0]])
    scale = max(1.0, float(np.abs(A).max()))
    for _ in range(max_sweeps):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off += A[p, q] * A[p, q]
        if off <= (tol * scale) ** 2:
            return np.sort(np.diag(A))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= tol * scale * 1e-4:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0)) \
                    if theta != 0.0 else 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rot = np.eye(n)
                rot[p, p] = c
                rot[q, q] = c
                rot[p, q] = s
                rot[q, p] = -s
                A = rot.T @ A @ rot
                A = (A + A.T) / 2.0
    raise ArithmeticError("Jacobi iteration did not converge")


def laplacian_spectrum(g: Graph) -> np.ndarray:
    return eigen_sym(laplacian(g))


def algebraic_connectivity(g: Graph) -> float:
    """Second-smallest Laplacian eigenvalue a(G)."""
    if g.n < 2:
        raise GraphError("a(G) needs at least 2 vertices")
    return float(laplacian_spectrum(g)[1])


def lambda_max(g: Graph) -> float:
    """Largest Laplacian eigenvalue."""
    if g.n < 1:
        raise GraphError("empty graph")
    return float(laplacian_spectrum(g)[-1])


def l1_fiedler_vector(g: Graph, subset) -> list[Fraction]:
    """The two-valued unit-l1 zero-sum vector supported on a bipartition."""
    mask = 0
    for v in subset:
        mask |= 1 << v
    s = bin(mask).count("1")
    if s == 0 or s == g.n:
        raise GraphError("subset must be nonempty and proper")
    hi = Fraction(1, 2 * s)
    lo = Fraction(-1, 2 * (g.n - s))
    return [hi if (mask >> v) & 1 else lo for v in range(g.n)]


def laplacian_identity_check(g: Graph, subset, b: Fraction) -> bool:
    """Exact verification of the row-sum identity for a sparsest cut S."""
    mask = 0
    for v in subset:
        mask |= 1 << v
    x = l1_fiedler_vector(g, subset)
    cut = 0
    f = mask
    while f:
        bb = f & -f
        cut += bin(g.adj[bb.bit_length() - 1] & ~mask).count("1")
        f ^= bb
    if cut == 0:
        return False
    sum_in = Fraction(0)
    sum_out = Fraction(0)
    for u in range(g.n):
        row = g.degree(u) * x[u]
        nb = g.adj[u]
        while nb:
            bb = nb & -nb
            row -= x[bb.bit_length() - 1]
            nb ^= bb
        if (mask >> u) & 1:
            if row != b * bin(g.adj[u] & ~mask).count("1") / cut:
                return False
            sum_in += row
        else:
            if row != -b * bin(g.adj[u] & mask).count("1") / cut:
                return False
            sum_out += row
    return sum_in == b and sum_out == -b
