"""Command-line front end.

Exit codes: 0 = checks passed / work completed, 1 = a claim check failed
(counterexample certificate written), 2 = usage or budget error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import digraph as dg
from .colorings import Coloring, block_coloring_johnson, clamped_min_coloring, verify_acyclic_coloring
from .families import gen_generalized_kneser, gen_johnson, orient_min_rule, orient_sum_rule
from .harness import parse_config, rows_have_failure, run_sweep, check_product, SweepConfig
from .solvers import (
    SolveBudget,
    chromatic_number,
    dichromatic_number,
    dichromatic_number_graph,
    list_dichromatic_at_most,
)


def _budget(args) -> SolveBudget:
    return SolveBudget(node_limit=args.budget_nodes, time_limit=args.budget_seconds,
                       orientation_cap=args.orientation_cap,
                       sample_count=args.sample_count, seed=args.seed)


def _add_budget_flags(p) -> None:
    p.add_argument("--budget-nodes", type=int, default=50_000_000)
    p.add_argument("--budget-seconds", type=float, default=600.0)
    p.add_argument("--orientation-cap", type=int, default=24)
    p.add_argument("--sample-count", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)


def _gen_family(args):
    if args.family in ("kneser", "generalized_kneser"):
        return gen_generalized_kneser(args.n, args.k, args.s)
    if args.family == "johnson":
        return gen_johnson(args.n, args.k)
    raise ValueError(f"unknown family {args.family!r}")


def _load_graph(args):
    labels = None
    if args.labels:
        with open(args.labels) as fh:
            data = json.load(fh)
        n_ground = max(max(e) for e in data)
        labels = dg.read_labels(args.labels, n_ground)
    return dg.read_graph(args.graph, labels)


def cmd_gen(args) -> int:
    G = _gen_family(args)
    dg.write_graph(G, args.out + ".graph")
    dg.write_labels(G.labels, args.out + ".labels.json")
    print(f"wrote {args.out}.graph ({G.n_vertices} vertices, {G.n_edges} edges)")
    return 0


def cmd_orient(args) -> int:
    G = _load_graph(args)
    if args.rule == "min":
        D = orient_min_rule(G)
    elif args.rule == "sum":
        D = orient_sum_rule(G)
    elif args.rule == "random":
        D = dg.random_orientation(G, args.seed)
    elif args.rule == "mask":
        D = dg.orientation_from_mask(G, args.mask)
    else:
        raise ValueError(f"unknown rule {args.rule!r}")
    dg.write_digraph(D, args.out)
    print(f"wrote {args.out} ({D.n_arcs} arcs)")
    return 0


def cmd_color(args) -> int:
    if args.rule == "clamped-min":
        c = clamped_min_coloring(args.n, args.k, args.s)
    elif args.rule == "block":
        c = block_coloring_johnson(args.n, args.k)
    else:
        raise ValueError(f"unknown coloring rule {args.rule!r}")
    c.to_json(args.out)
    print(f"wrote {args.out} (palette {c.palette_size}, {c.colors_used()} colors used)")
    return 0


def cmd_verify(args) -> int:
    D = dg.read_digraph(args.digraph)
    c = Coloring.from_json(args.coloring)
    report = verify_acyclic_coloring(D, c)
    if report.proper:
        print("proper: every class acyclic")
        return 0
    cert_path = args.out or "violation.json"
    with open(cert_path, "w", newline="\n") as fh:
        json.dump({"class": report.violating_class, "cycle": report.violating_cycle}, fh)
        fh.write("\n")
    print(f"IMPROPER: class {report.violating_class} has a directed cycle; "
          f"certificate at {cert_path}")
    return 1


def cmd_exact(args) -> int:
    budget = _budget(args)
    if args.quantity == "chromatic":
        G = _load_graph(args) if args.graph else _gen_family(args)
        res = chromatic_number(G, budget)
    elif args.quantity == "dichromatic":
        D = dg.read_digraph(args.digraph)
        res = dichromatic_number(D, budget)
    elif args.quantity == "dichromatic-graph":
        G = _load_graph(args) if args.graph else _gen_family(args)
        res = dichromatic_number_graph(G, args.mode, budget)
    elif args.quantity == "list":
        D = dg.read_digraph(args.digraph)
        ok, bad = list_dichromatic_at_most(D, args.t)
        print(json.dumps({"at_most": args.t, "holds": ok,
                          "violating_lists": bad}))
        return 0
    else:
        raise ValueError(f"unknown quantity {args.quantity!r}")
    coloring_file = None
    if args.out and res.coloring is not None:
        coloring_file = args.out + ".coloring.json"
        res.coloring.to_json(coloring_file)
    if args.out:
        res.to_json(args.out + ".result.json", coloring_file)
    status = f"[{res.lower},{res.upper}]" if not res.exact else str(res.value)
    print(f"{args.quantity}: {status} (exact={res.exact}, nodes={res.nodes})")
    return 0 if res.exact else 2


def cmd_sweep(args) -> int:
    cfg = parse_config(args.config)
    rows = run_sweep(cfg)
    n_fail = sum(r["verdict"] == "FAIL" for r in rows)
    print(f"{len(rows)} rows, {n_fail} FAIL, output in {cfg.out_dir}")
    return 1 if rows_have_failure(rows) else 0


def cmd_product(args) -> int:
    cfg = SweepConfig(budget=_budget(args))
    D1 = dg.read_digraph(args.digraph1)
    D2 = dg.read_digraph(args.digraph2)
    report = check_product(cfg, D1, D2)
    print(json.dumps(report))
    return 0 if report["lifting_bound_holds"] else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dichrolab",
                                 description="Kneser/Johnson dichromatic-number workbench")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a family graph plus label sidecar")
    p.add_argument("--family", default="kneser")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("orient", help="orient a graph file")
    p.add_argument("--graph", required=True)
    p.add_argument("--labels")
    p.add_argument("--rule", default="min", choices=["min", "sum", "random", "mask"])
    p.add_argument("--mask", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_orient)

    p = sub.add_parser("color", help="emit a constructive coloring")
    p.add_argument("--rule", default="clamped-min", choices=["clamped-min", "block"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_color)

    p = sub.add_parser("verify", help="check a coloring file against a digraph file")
    p.add_argument("--digraph", required=True)
    p.add_argument("--coloring", required=True)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("exact", help="exact solves")
    p.add_argument("quantity",
                   choices=["chromatic", "dichromatic", "dichromatic-graph", "list"])
    p.add_argument("--graph")
    p.add_argument("--labels")
    p.add_argument("--digraph")
    p.add_argument("--family", default="kneser")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--mode", default="exhaustive", choices=["exhaustive", "sample"])
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--out")
    _add_budget_flags(p)
    p.set_defaults(fn=cmd_exact)

    p = sub.add_parser("sweep", help="run a sweep config file")
    p.add_argument("--config", required=True)
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("product", help="tensor-product lifting-bound check")
    p.add_argument("--digraph1", required=True)
    p.add_argument("--digraph2", required=True)
    _add_budget_flags(p)
    p.set_defaults(fn=cmd_product)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
