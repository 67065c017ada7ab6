"""Command-line surface.

Subcommands:

    l1f compute   read graphs (edge list or graph6) and print one JSON
                  object per graph with the exact invariants
    l1f verify    run the verification harness over exhaustive, tree,
                  random or file-based graph sets
    l1f extremal  print an extremal tree for a fixed diameter, maximum
                  degree or pendant count

Exact rationals are serialized as "p/q" strings.  Exit codes: 0 ok,
1 input error, 2 verification failure.  The env var L1F_TOL overrides the
spectral comparison tolerance (default 1e-9).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import bounds, cuts, gamma as gamma_mod, spectral
from .graphs import (Graph, GraphError, is_connected, is_tree, named_graph,
                     parse_edge_list, parse_graph6, to_graph6)
from .trees import centre_edges


def _tol() -> float:
    try:
        return float(os.environ.get("L1F_TOL", "1e-9"))
    except ValueError:
        return 1e-9


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _read_graphs(args) -> list[tuple[str, Graph | str]]:
    """Returns (label, Graph) pairs, or (label, error message) on bad input."""
    out: list[tuple[str, Graph | str]] = []
    if args.named:
        try:
            fam, _, size = args.named.partition(":")
            g = named_graph(fam, int(size) if size else 0)
            out.append((args.named, g))
        except (GraphError, ValueError) as e:
            out.append((args.named, f"bad named graph: {e}"))
        return out
    stream = sys.stdin if args.input in (None, "-") else open(args.input)
    with stream if stream is not sys.stdin else stream:
        if args.format == "graph6":
            for i, line in enumerate(stream):
                line = line.strip()
                if not line:
                    continue
                try:
                    out.append((f"line-{i + 1}", parse_graph6(line)))
                except GraphError as e:
                    out.append((f"line-{i + 1}", str(e)))
        else:
            text = stream.read()
            try:
                out.append(("edgelist", parse_edge_list(text)))
            except GraphError as e:
                out.append(("edgelist", str(e)))
    return out


def _compute_one(label: str, g: Graph, args) -> dict:
    tol = _tol()
    rec: dict = {"id": label, "n": g.n, "m": g.m}
    try:
        rec["graph6"] = to_graph6(g)
    except GraphError:
        rec["graph6"] = None
    timings = {}
    t0 = time.perf_counter()
    if is_tree(g) and g.n >= 2 and not args.force_enumeration:
        rep = centre_edges(g)
        b = rep.b_value
        u, v = rep.centre_edges[0]
        # either centre-edge side is a sparsest-cut witness
        witness_mask = 0
        stackv = [u]
        seen = 1 << v
        for w in stackv:
            witness_mask |= 1 << w
            r = g.adj[w] & ~seen
            while r:
                bb = r & -r
                stackv.append(bb.bit_length() - 1)
                seen |= bb
                r ^= bb
        rec["route"] = "tree"
    else:
        res = cuts.b_exact(g)
        b = res.value
        witness_mask = 0
        for w in res.witness or ():
            witness_mask |= 1 << w
        rec["route"] = "enumeration"
    timings["b"] = (time.perf_counter() - t0) * 1000
    rec["b"] = _frac(b)
    rec["sparsest_cut_mask"] = witness_mask
    rec["connected"] = is_connected(g)

    t0 = time.perf_counter()
    rec["iso"] = _frac(cuts.iso_exact(g).value)
    rec["min_xi"] = _frac(cuts.min_xi_exact(g).value)
    rec["cheeger"] = _frac(cuts.cheeger_exact(g).value) if g.m else None
    rec["edge_connectivity"] = cuts.edge_connectivity_subsets(g)
    timings["cuts"] = (time.perf_counter() - t0) * 1000

    if not args.no_spectral:
        t0 = time.perf_counter()
        rec["a"] = spectral.algebraic_connectivity(g)
        rec["lambda_max"] = spectral.lambda_max(g)
        timings["spectral"] = (time.perf_counter() - t0) * 1000
    if args.gamma:
        t0 = time.perf_counter()
        rec["gamma"] = _frac(gamma_mod.gamma_exact(g).value)
        timings["gamma"] = (time.perf_counter() - t0) * 1000
    rec["timings_ms"] = {k: round(v, 3) for k, v in timings.items()}
    del tol  # spectral values are reported, not compared, here
    return rec


def cmd_compute(args) -> int:
    status = 0
    for label, g in _read_graphs(args):
        if isinstance(g, str):
            print(json.dumps({"id": label, "error": g}))
            status = 1
            continue
        if g.n < 2:
            print(json.dumps({"id": label, "error": "need at least 2 vertices"}))
            status = 1
            continue
        print(json.dumps(_compute_one(label, g, args)))
    return status


def cmd_verify(args) -> int:
    tol = _tol()
    failures = 0
    per_theorem: dict[str, int] = {}
    if args.scope.startswith("exhaustive-n="):
        n = int(args.scope.split("=", 1)[1])
        if not 2 <= n <= 7:
            print("exhaustive scope supports n <= 7", file=sys.stderr)
            return 1
        summary = bounds.verify_exhaustive_graphs(n, tol)
        for name, v in summary["violations"].items():
            per_theorem[name] = per_theorem.get(name, 0) + summary["connected_graphs"]
            failures += v
        for g6 in summary["offenders"]:
            print(json.dumps({"failed_graph": g6}))
        print(json.dumps(summary))
    elif args.scope.startswith("trees-n="):
        n = int(args.scope.split("=", 1)[1])
        if not 2 <= n <= 10:
            print("tree scope supports n <= 10", file=sys.stderr)
            return 1
        summary = bounds.verify_all_trees(n)
        extremals = bounds.verify_tree_extremals(min(n, 10))
        failures += sum(summary["violations"].values())
        failures += len(extremals.class_failures)
        if not extremals.ok:
            failures += 1
        for name, v in summary["violations"].items():
            per_theorem[name] = per_theorem.get(name, 0) + summary["trees"]
        print(json.dumps(summary))
        print(json.dumps({"tree_extremals_ok": extremals.ok,
                          "class_failures": extremals.class_failures}))
    elif args.scope == "random":
        for label, g in bounds.random_suite_graphs(args.count, args.seed):
            for r in bounds.verify_suite(g, tol):
                per_theorem[r.theorem_id] = per_theorem.get(r.theorem_id, 0) + 1
                print(bounds.report_json(r))
                if not r.holds:
                    failures += 1
                    print(json.dumps({"failed_graph": r.graph_id,
                                      "theorem_id": r.theorem_id}))
    elif args.scope == "file":
        for label, g in _read_graphs(args):
            if isinstance(g, str):
                print(json.dumps({"id": label, "error": g}))
                return 1
            if not is_connected(g):
                print(json.dumps({"id": label, "error": "graph is disconnected"}))
                return 1
            for r in bounds.verify_suite(g, tol):
                per_theorem[r.theorem_id] = per_theorem.get(r.theorem_id, 0) + 1
                print(bounds.report_json(r))
                if not r.holds:
                    failures += 1
                    print(json.dumps({"failed_graph": r.graph_id,
                                      "theorem_id": r.theorem_id}))
    else:
        print(f"unknown scope {args.scope!r}", file=sys.stderr)
        return 1
    print(json.dumps({"summary": {"failures": failures,
                                  "reports_per_theorem": per_theorem}}))
    return 2 if failures else 0


def _dot(g: Graph) -> str:
    lines = ["graph G {"]
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines)


def cmd_extremal(args) -> int:
    try:
        if args.cls == "diameter":
            t = bounds.extremal_tree_diameter(args.n, args.parameter, args.which)
        elif args.cls == "maxdeg":
            t = bounds.extremal_tree_maxdeg(args.n, args.parameter, args.which)
        elif args.cls == "pendants":
            t = bounds.extremal_tree_pendants(args.n, args.parameter, args.which)
        else:
            print(f"unknown class {args.cls!r}", file=sys.stderr)
            return 1
    except GraphError as e:
        print(f"infeasible parameters: {e}", file=sys.stderr)
        return 1
    b = centre_edges(t).b_value
    print(json.dumps({"graph6": to_graph6(t), "b": _frac(b)}))
    if args.dot:
        print(_dot(t))
    return 0


def main(argv=None) -> int:
    p = argparse.ArgumentParser(prog="l1f", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="cmd", required=True)

    pc = sub.add_parser("compute", help="compute invariants for input graphs")
    pc.add_argument("input", nargs="?", help="input file ('-' or omit for stdin)")
    pc.add_argument("--format", choices=["edgelist", "graph6"], default="edgelist")
    pc.add_argument("--named", help="built-in family, e.g. petersen or cycle:6")
    pc.add_argument("--gamma", action="store_true", help="also compute gamma")
    pc.add_argument("--no-spectral", action="store_true")
    pc.add_argument("--jobs", type=int, default=1, help="worker processes")
    pc.add_argument("--force-enumeration", action="store_true",
                    help=argparse.SUPPRESS)
    pc.set_defaults(func=cmd_compute)

    pv = sub.add_parser("verify", help="run the verification harness")
    pv.add_argument("scope", help="exhaustive-n=K | trees-n=K | random | file")
    pv.add_argument("input", nargs="?", help="input file for scope 'file'")
    pv.add_argument("--format", choices=["edgelist", "graph6"], default="graph6")
    pv.add_argument("--named", help=argparse.SUPPRESS)
    pv.add_argument("--count", type=int, default=100)
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--jobs", type=int, default=1)
    pv.set_defaults(func=cmd_verify)

    pe = sub.add_parser("extremal", help="emit an extremal tree")
    pe.add_argument("cls", choices=["diameter", "maxdeg", "pendants"])
    pe.add_argument("n", type=int)
    pe.add_argument("parameter", type=int)
    pe.add_argument("which", choices=["min", "max"])
    pe.add_argument("--dot", action="store_true")
    pe.set_defaults(func=cmd_extremal)

    args = p.parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
