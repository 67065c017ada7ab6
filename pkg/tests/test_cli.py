import json
from fractions import Fraction as Q

import pytest

from l1fiedler.cli import main
from l1fiedler.graphs import parse_graph6, to_graph6, named_graph


def run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        import sys
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr().out
    lines = [json.loads(x) for x in out.splitlines() if x.startswith(("{", "["))]
    return code, lines


class TestCompute:
    def test_named_petersen(self, capsys):
        code, recs = run(capsys, ["compute", "--named", "petersen:10"])
        assert code == 0
        r = recs[0]
        assert r["n"] == 10 and r["m"] == 15
        assert r["b"] == "1/1"
        assert r["iso"] == "1/1"
        assert r["edge_connectivity"] == 3
        assert abs(r["a"] - 2) < 1e-8
        assert r["route"] == "enumeration"
        assert "timings_ms" in r

    def test_named_with_gamma(self, capsys):
        code, recs = run(capsys, ["compute", "--named", "complete:4", "--gamma"])
        assert code == 0
        assert recs[0]["gamma"] == "4/3"

    def test_no_spectral_drops_fields(self, capsys):
        code, recs = run(capsys, ["compute", "--named", "cycle:5",
                                  "--no-spectral"])
        assert code == 0
        assert "a" not in recs[0] and "lambda_max" not in recs[0]

    def test_tree_route_matches_enumeration(self, capsys):
        g6 = to_graph6(named_graph("star", 7))
        args = ["compute", "-", "--format", "graph6"]
        code, recs = run(capsys, args, stdin=g6 + "\n",
                         monkeypatch=pytest.MonkeyPatch())
        code2, recs2 = run(capsys, args + ["--force-enumeration"],
                           stdin=g6 + "\n", monkeypatch=pytest.MonkeyPatch())
        assert code == code2 == 0
        assert recs[0]["route"] == "tree" and recs2[0]["route"] == "enumeration"
        assert recs[0]["b"] == recs2[0]["b"] == "7/12"

    def test_edgelist_stdin(self, capsys, monkeypatch):
        text = "n 4\n0 1\n1 2\n2 3\n3 0\n"
        code, recs = run(capsys, ["compute"], stdin=text, monkeypatch=monkeypatch)
        assert code == 0
        assert recs[0]["b"] == "1/1"  # C_4

    def test_malformed_input_is_exit_1(self, capsys, monkeypatch):
        code, recs = run(capsys, ["compute"], stdin="garbage\n",
                         monkeypatch=monkeypatch)
        assert code == 1
        assert "error" in recs[0]

    def test_bad_graph6_line_is_exit_1(self, capsys, monkeypatch):
        code, recs = run(capsys, ["compute", "-", "--format", "graph6"],
                         stdin="\x01\x02\n", monkeypatch=monkeypatch)
        assert code == 1

    def test_sparsest_cut_mask_is_a_real_cut(self, capsys):
        code, recs = run(capsys, ["compute", "--named", "cycle:6"])
        mask = recs[0]["sparsest_cut_mask"]
        g = named_graph("cycle", 6)
        S = [v for v in range(6) if (mask >> v) & 1]
        cut = sum(1 for u, v in g.edges() if ((mask >> u) & 1) != ((mask >> v) & 1))
        assert Q(6 * cut, 2 * len(S) * (6 - len(S))) == Q(recs[0]["b"])


class TestVerify:
    def test_exhaustive_small_clean(self, capsys):
        code, recs = run(capsys, ["verify", "exhaustive-n=4"])
        assert code == 0
        assert recs[-1]["summary"]["failures"] == 0

    def test_trees_small_clean(self, capsys):
        code, recs = run(capsys, ["verify", "trees-n=5"])
        assert code == 0
        assert recs[-1]["summary"]["failures"] == 0

    def test_random_scope(self, capsys):
        code, recs = run(capsys, ["verify", "random", "--count", "3",
                                  "--seed", "11"])
        assert code == 0
        assert recs[-1]["summary"]["failures"] == 0
        assert all(r["holds"] for r in recs[:-1] if "holds" in r)

    def test_file_scope(self, capsys, monkeypatch):
        g6 = to_graph6(named_graph("cycle", 6))
        code, recs = run(capsys, ["verify", "file", "-"], stdin=g6 + "\n",
                         monkeypatch=monkeypatch)
        assert code == 0

    def test_unknown_scope(self, capsys):
        assert main(["verify", "everything"]) == 1
        capsys.readouterr()


class TestExtremal:
    def test_emits_valid_tree(self, capsys):
        code, recs = run(capsys, ["extremal", "diameter", "8", "4", "min"])
        assert code == 0
        t = parse_graph6(recs[0]["graph6"])
        assert t.n == 8 and t.m == 7
        assert recs[0]["b"] == "1/4"

    def test_dot_output(self, capsys):
        code = main(["extremal", "maxdeg", "6", "3", "max", "--dot"])
        out = capsys.readouterr().out
        assert code == 0
        assert "graph G {" in out and "--" in out

    def test_infeasible_is_exit_1(self, capsys):
        assert main(["extremal", "pendants", "6", "5", "min"]) == 1
        assert "infeasible" in capsys.readouterr().err
