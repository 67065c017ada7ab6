from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from l1fiedler.graphs import Graph, GraphError, all_trees, named_graph, prufer_decode
from l1fiedler.trees import (centre_edges, star_root_vertices, substar_check,
                             subtree_sizes)

from conftest import brute_b, cut_size


def tree_splits(t: Graph):
    """(edge, |V_u|, |V_v|) for every edge, by brute component counting."""
    out = []
    for u, v in t.edges():
        adj = {x: set() for x in range(t.n)}
        for a, b in t.edges():
            if {a, b} != {u, v}:
                adj[a].add(b)
                adj[b].add(a)
        seen = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            for y in adj[x] - seen:
                seen.add(y)
                stack.append(y)
        out.append(((u, v), len(seen), t.n - len(seen)))
    return out


class TestSubtreeSizes:
    def test_path(self):
        t = named_graph("path", 5)
        assert subtree_sizes(t, 0) == [5, 4, 3, 2, 1]

    def test_star_rooted_at_center(self):
        t = named_graph("star", 6)
        sizes = subtree_sizes(t, 0)
        assert sizes[0] == 6 and sizes[1:] == [1] * 5

    def test_rejects_non_tree(self):
        with pytest.raises(GraphError):
            subtree_sizes(named_graph("cycle", 4), 0)


class TestCentreEdges:
    def test_even_path_unique(self):
        rep = centre_edges(named_graph("path", 6))
        assert len(rep.centre_edges) == 1
        assert rep.split_sizes[0] in ((3, 3),)
        assert rep.b_value == Fraction(1, 3)

    def test_odd_path_two_centre_edges(self):
        rep = centre_edges(named_graph("path", 5))
        assert len(rep.centre_edges) == 2
        assert rep.b_value == Fraction(5, 12)

    def test_star(self):
        rep = centre_edges(named_graph("star", 7))
        assert len(rep.centre_edges) == 6
        assert rep.b_value == Fraction(7, 12)

    def test_double_star_six(self):
        # the 6-vertex double star also attains the path minimum 1/3
        t = Graph.from_edges(6, [(1, 0), (1, 2), (1, 3), (3, 4), (3, 5)])
        rep = centre_edges(t)
        assert rep.b_value == Fraction(1, 3)
        assert rep.split_sizes[0] == (3, 3)

    def test_value_matches_brute_force(self):
        for n in range(2, 8):
            for t in all_trees(n):
                assert centre_edges(t).b_value == brute_b(t)

    def test_centre_edge_really_minimizes_imbalance(self):
        for t in all_trees(6):
            rep = centre_edges(t)
            splits = tree_splits(t)
            best = min(abs(a - b) for _, a, b in splits)
            got = {frozenset(e) for e in rep.centre_edges}
            want = {frozenset(e) for e, a, b in splits if abs(a - b) == best}
            assert got == want

    @given(st.lists(st.integers(0, 8), min_size=7, max_size=7))
    @settings(max_examples=60, deadline=None)
    def test_random_tree_formula(self, seq):
        t = prufer_decode(seq, 9)
        rep = centre_edges(t)
        (u, v), (su, sv) = rep.centre_edges[0], rep.split_sizes[0]
        assert su + sv == 9
        assert rep.b_value == Fraction(1, 2) * (Fraction(1, su) + Fraction(1, sv))
        # removing the centre edge leaves a component of the recorded size
        adj = {x: set() for x in range(9)}
        for a, b in t.edges():
            if {a, b} != {u, v}:
                adj[a].add(b)
                adj[b].add(a)
        comp = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            for y in adj[x] - comp:
                comp.add(y)
                stack.append(y)
        assert len(comp) == su


class TestSubstar:
    def test_all_small_trees_share_a_vertex(self):
        for n in range(2, 8):
            for t in all_trees(n):
                ok, v = substar_check(t)
                assert ok
                assert any(v in e for e in centre_edges(t).centre_edges)

    def test_star_common_vertex_is_center(self):
        ok, v = substar_check(named_graph("star", 8))
        assert ok and v == 0


class TestStarRoot:
    def test_unique_balanced_edge_gives_both_endpoints(self):
        roots = star_root_vertices(named_graph("path", 6))
        assert roots == {2, 3}

    def test_multiple_centre_edges_give_shared_vertex(self):
        assert star_root_vertices(named_graph("star", 5)) == {0}

    def test_root_side_never_smaller(self):
        for t in all_trees(7):
            for r in star_root_vertices(t):
                for (u, v), su, sv in tree_splits(t):
                    if r == u:
                        assert su >= sv
                    elif r == v:
                        assert sv >= su
