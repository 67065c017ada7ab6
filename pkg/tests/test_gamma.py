from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from l1fiedler.gamma import (GammaResult, LinearProgram, gamma_exact,
                             gamma_grid, solve_lp)
from l1fiedler.graphs import Graph, GraphError, named_graph


def lp(obj, bounds):
    return LinearProgram([Q(c) for c in obj], [(Q(a), Q(b)) for a, b in bounds])


class TestSimplex:
    def test_trivial_box(self):
        p = lp([1, 1], [(0, 1), (0, 1)])
        val, x = solve_lp(p)
        assert val == 0 and x == [0, 0]

    def test_equality_row(self):
        p = lp([1, 0], [(0, 5), (0, 5)])
        p.add({0: Q(1), 1: Q(1)}, "==", Q(4))
        val, x = solve_lp(p)
        assert val == 0 and x[0] == 0 and x[1] == 4

    def test_ge_row(self):
        p = lp([2, 3], [(0, 10), (0, 10)])
        p.add({0: Q(1), 1: Q(1)}, ">=", Q(4))
        val, _ = solve_lp(p)
        assert val == 8  # all weight on the cheaper variable

    def test_fractional_optimum_is_exact(self):
        p = lp([-1, -1], [(0, 2), (0, 2)])
        p.add({0: Q(2), 1: Q(1)}, "<=", Q(3))
        p.add({0: Q(1), 1: Q(3)}, "<=", Q(5))
        val, x = solve_lp(p)
        # vertex of the two constraints: x = (4/5, 7/5)
        assert x == [Q(4, 5), Q(7, 5)] and val == Q(-11, 5)

    def test_infeasible(self):
        p = lp([1], [(0, 1)])
        p.add({0: Q(1)}, ">=", Q(2))
        with pytest.raises(ArithmeticError):
            solve_lp(p)

    def test_negative_lower_bounds(self):
        p = lp([1], [(-3, 3)])
        p.add({0: Q(1)}, ">=", Q(-2))
        val, x = solve_lp(p)
        assert val == -2 and x == [Q(-2)]

    @given(st.integers(0, 10 ** 6))
    @settings(max_examples=40, deadline=None)
    def test_solution_is_feasible_and_tight(self, seed):
        import random
        rng = random.Random(seed)
        nv = rng.randint(1, 4)
        p = lp([rng.randint(-3, 3) for _ in range(nv)],
               [(-2, 2) for _ in range(nv)])
        for _ in range(rng.randint(0, 4)):
            coeffs = {j: Q(rng.randint(-2, 2)) for j in range(nv)}
            p.add(coeffs, rng.choice(["<=", ">="]),
                  Q(rng.randint(2, 6)) * (1 if rng.random() < 0.5 else -1))
        try:
            val, x = solve_lp(p)
        except ArithmeticError:
            return  # infeasible instances are fine
        assert val == sum(c * xi for c, xi in zip(p.objective, x))
        for a, sense, rhs in p.rows:
            lhs = sum(ai * xi for ai, xi in zip(a, x))
            if sense == "<=":
                assert lhs <= rhs
            elif sense == ">=":
                assert lhs >= rhs
            else:
                assert lhs == rhs
        for (lo, hi), xi in zip(p.bounds, x):
            assert lo <= xi <= hi


class TestGammaExact:
    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_complete(self, n):
        assert gamma_exact(named_graph("complete", n)).value == Q(n, n - 1)

    def test_path3(self):
        assert gamma_exact(named_graph("path", 3)).value == 1

    def test_vector_is_feasible_and_attains(self):
        for fam, size in [("cycle", 5), ("star", 6), ("path", 6), ("complete", 4)]:
            g = named_graph(fam, size)
            r = gamma_exact(g)
            assert sum(r.vector) == 0
            assert max(abs(x) for x in r.vector) == 1
            assert r.vector[r.anchor] == 1
            assert max(abs(r.vector[u] - r.vector[v]) for u, v in g.edges()) == r.value

    def test_edgeless_degenerate(self):
        r = gamma_exact(Graph.from_edges(3, []))
        assert r.value == 0 and r.degenerate

    def test_single_vertex_rejected(self):
        with pytest.raises(GraphError):
            gamma_exact(Graph.from_edges(1, []))


def brute_grid(g, steps):
    """Plain nested-loop grid minimum, for cross-checking the kernel."""
    from itertools import product
    best = None
    rng = range(-steps, steps + 1)
    for xs in product(rng, repeat=g.n - 1):
        last = -sum(xs)
        if abs(last) > steps:
            continue
        vec = list(xs) + [last]
        if max(abs(v) for v in vec) != steps:
            continue
        obj = max(abs(vec[u] - vec[v]) for u, v in g.edges()) if g.m else 0
        if best is None or obj < best:
            best = obj
    return Q(best, steps)


class TestGammaGrid:
    @pytest.mark.parametrize("fam,size,steps", [
        ("complete", 3, 4), ("path", 3, 6), ("cycle", 4, 4), ("star", 4, 6),
    ])
    def test_kernel_matches_brute_grid(self, fam, size, steps):
        g = named_graph(fam, size)
        assert gamma_grid(g, steps) == brute_grid(g, steps)

    def test_exact_when_denominator_divides(self):
        # gamma(K_3) = 3/2; a grid with even step count represents it
        assert gamma_grid(named_graph("complete", 3), 4) == Q(3, 2)

    def test_grid_never_beats_lp(self):
        for fam, size in [("cycle", 5), ("path", 5), ("complete", 5)]:
            g = named_graph(fam, size)
            lpv = gamma_exact(g).value
            gv = gamma_grid(g, 20)
            assert lpv <= gv <= lpv + Q(2, 20)

    def test_cap_short_circuits(self):
        g = named_graph("complete", 3)
        # nothing on the grid beats 1/4, so the cap comes back unchanged
        assert gamma_grid(g, 4, cap_units=1) == Q(1, 4)
