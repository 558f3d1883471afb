"""Command-line front end: run bound suites, exact oracles, soundness
sweeps, generators, and the conjecture lab.

Exit codes: 0 success, 1 verification failure, 2 bad input, 3 internal
assertion failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Optional

from . import bounds as bnd
from . import generators, oracle, subcubic
from .bounds import BoundPreconditionError, BoundReport, per_component
from .coloring import matching_vizing_bound, vizing_classes_bound
from .graph import (DisconnectedGraphError, GraphError, TriangleFoundError,
                    WeightedGraph, load_graph, save_graph)
from .spanning import OddCycleError
from .subcubic import ClaimViolationError

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3

_SKIPPABLE = (BoundPreconditionError, TriangleFoundError, DisconnectedGraphError,
              OddCycleError, ValueError)


def _bound_suite(g: WeightedGraph, seed: int, trials: int,
                 root: Optional[int], sweep: Optional[bool]):
    """Ordered (name, runner) pairs; connectivity-requiring bounds are
    lifted per component."""
    def pc(fn: Callable[[WeightedGraph], BoundReport], name: str):
        return lambda: per_component(g, fn, name)

    return [
        ("poljak_turzik", pc(lambda h: bnd.poljak_turzik(h, root, sweep), "poljak_turzik")),
        ("dfs_tree", pc(lambda h: bnd.dfs_bound(h, root, sweep), "dfs_tree")),
        ("matching", lambda: bnd.matching_bound(g)),
        ("girth_layers", pc(lambda h: bnd.girth_bound(h, None, root, sweep), "girth_layers")),
        ("triangle_free_tree", pc(bnd.triangle_free_tree_bound, "triangle_free_tree")),
        ("edge_rooted_tree", pc(bnd.edge_rooted_tree_bound, "edge_rooted_tree")),
        ("matching_vizing", lambda: matching_vizing_bound(g, bnd.best_matching(g))),
        ("vizing_classes", lambda: vizing_classes_bound(g)),
        ("two_thirds", lambda: subcubic.two_thirds_bound(g)),
        ("eight_elevenths", lambda: subcubic.eight_elevenths_bound(g)),
        ("tree_percolation",
         pc(lambda h: subcubic.tree_percolation_bound(h, trials=trials, seed=seed),
            "tree_percolation")),
        ("combined_tree",
         pc(lambda h: subcubic.combined_tree_bound(h, trials=trials, seed=seed),
            "combined_tree")),
        ("shearer", lambda: subcubic.shearer_bound(g, trials=trials, seed=seed)),
    ]


def _load_input(args) -> WeightedGraph:
    if getattr(args, "generate", None):
        return generators.build(args.generate[0], args.generate[1:])
    if getattr(args, "input", None):
        with open(args.input, "r", encoding="utf-8") as fh:
            return load_graph(fh.read())
    raise ValueError("no input: pass --input FILE or --generate KIND PARAMS...")


def _render_reports(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json-lines":
        for row in rows:
            print(json.dumps(row, sort_keys=True), file=out)
        return
    header = f"{'bound':<20} {'value':>14} {'cut_weight':>14} {'mode':<14} note"
    print(header, file=out)
    print("-" * len(header), file=out)
    for row in rows:
        if row.get("skipped"):
            print(f"{row['name']:<20} {'-':>14} {'-':>14} {'-':<14} "
                  f"inapplicable: {row['reason']}", file=out)
        else:
            print(f"{row['name']:<20} {row['bound_value']:>14.6f} "
                  f"{row['cut_weight']:>14.6f} {row['mode']:<14}", file=out)


def _report_row(rep: BoundReport) -> dict:
    details = {k: v for k, v in rep.details.items()}
    return {
        "name": rep.name,
        "bound_value": rep.bound_value,
        "cut_weight": rep.cut.weight,
        "mode": rep.mode,
        "cut": rep.cut.bitstring(),
        "details": _json_safe(details),
    }


def _json_safe(value):
    if isinstance(value, dict):
        return {str(k): _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    if isinstance(value, (int, float, str, bool)) or value is None:
        return value
    return str(value)


def cmd_bounds(args, out) -> int:
    g = _load_input(args)
    rows = []
    for name, runner in _bound_suite(g, args.seed, args.trials, args.root,
                                     True if args.best_roots else None):
        try:
            rep = runner()
            rows.append(_report_row(rep))
        except _SKIPPABLE as exc:
            rows.append({"name": name, "skipped": True, "reason": str(exc)})
    _render_reports(rows, args.format, out)
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    g = _load_input(args)
    max_n = args.max_n_override
    if args.quantity == "max-cut":
        res = oracle.exact_max_cut(g, max_n or oracle.MAX_CUT_GUARD)
        witness = res.witness.bitstring()
    elif args.quantity == "max-induced-bipartite":
        res = oracle.max_induced_bipartite(g, max_n or oracle.BIPARTITE_FAMILY_GUARD)
        witness = list(res.witness)
    elif args.quantity == "max-dfs-tree":
        res = oracle.max_dfs_tree_weight(g, max_n or oracle.DFS_WEIGHT_GUARD)
        witness = list(res.witness)
    elif args.quantity == "five-cycle-cover":
        res = oracle.five_cycle_cover(g, max_n or oracle.FIVE_CYCLE_GUARD)
        witness = (None if res.witness is None
                   else [list(g.edges[e][:2]) for e in res.witness])
    else:
        raise ValueError(f"unknown quantity {args.quantity!r}")
    row = {"quantity": res.quantity, "value": res.value, "exact": res.exact,
           "witness": _json_safe(witness)}
    if args.format == "json-lines":
        print(json.dumps(row, sort_keys=True), file=out)
    else:
        print(f"{res.quantity} = {res.value}", file=out)
        print(f"witness: {witness}", file=out)
    return EXIT_OK


def _verify_one(g: WeightedGraph, seed: int, max_n: int, out) -> tuple[int, int, list[str]]:
    """Run every deterministic bound; check cut >= bound and bound <= mac."""
    failures: list[str] = []
    checked = 0
    mac = None
    if g.n <= max_n:
        mac = float(oracle.exact_max_cut(g, max_n).value)
    eps = bnd.slack(g)
    for name, runner in _bound_suite(g, seed, trials=16, root=None, sweep=None):
        try:
            rep = runner()
        except _SKIPPABLE:
            continue
        checked += 1
        if rep.mode == bnd.DETERMINISTIC and not rep.certified(g):
            failures.append(f"{name}: cut {rep.cut.weight} below bound {rep.bound_value}")
        if mac is not None:
            if rep.mode == bnd.DETERMINISTIC and rep.bound_value > mac + eps:
                failures.append(f"{name}: bound {rep.bound_value} exceeds max cut {mac}")
            if rep.cut.weight > mac + eps:
                failures.append(f"{name}: cut {rep.cut.weight} exceeds max cut {mac}")
    return checked, 0 if not failures else 1, failures


def _random_verify_instance(index: int, seed: int, max_n: int) -> WeightedGraph:
    import random as _random
    rng = _random.Random(seed * 1_000_003 + index)
    kinds = ["cycle", "complete", "petersen", "petersen_c3", "star_counterexample",
             "gadget_k33_subdivided", "random_triangle_free_subcubic"]
    kind = kinds[index % len(kinds)]
    if kind == "cycle":
        return generators.cycle(rng.randint(3, max_n), float(rng.randint(1, 9)))
    if kind == "complete":
        return generators.complete(rng.randint(2, min(8, max_n)), float(rng.randint(1, 5)))
    if kind == "petersen":
        return generators.petersen(float(rng.randint(1, 9)))
    if kind == "petersen_c3":
        return generators.petersen_c3(float(rng.randint(2, 12)), float(rng.randint(1, 3)))
    if kind == "star_counterexample":
        return generators.star_counterexample(float(rng.randint(1, 4)),
                                              rng.randint(3, min(9, max_n) - 1))
    if kind == "gadget_k33_subdivided":
        return generators.gadget_k33_subdivided(float(rng.randint(1, 9)))
    return generators.random_triangle_free_subcubic(
        rng.randint(4, max_n), seed=rng.randint(0, 10 ** 6), weight_dist="int")


def cmd_verify(args, out) -> int:
    instances: list[tuple[str, WeightedGraph]] = []
    if args.random:
        for i in range(args.random):
            g = _random_verify_instance(i, args.seed, args.max_n)
            instances.append((f"random[{i}]", g))
    else:
        instances.append(("input", _load_input(args)))
    total_failures: list[str] = []
    for label, g in instances:
        checked, status, failures = _verify_one(g, args.seed, args.max_n, out)
        marker = "ok" if status == 0 else "FAIL"
        print(f"{label}: n={g.n} m={g.m} checked={checked} {marker}", file=out)
        for f in failures:
            print(f"  {f}", file=out)
        total_failures.extend(failures)
    print(f"verify: {len(instances)} instance(s), "
          f"{'all sound' if not total_failures else f'{len(total_failures)} failure(s)'}",
          file=out)
    return EXIT_OK if not total_failures else EXIT_VERIFY_FAIL


def cmd_generate(args, out) -> int:
    g = generators.build(args.kind, args.params)
    text = save_graph(g)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_conjecture(args, out) -> int:
    g = _load_input(args)
    rep = oracle.conjecture_report(g, seed=args.seed,
                                   max_n=args.max_n_override or 20)
    row = {
        "n": rep.n, "m": rep.m, "total_weight": rep.total_weight,
        "max_cut": rep.max_cut, "cut_ratio": rep.cut_ratio,
        "theta_ratio": rep.theta_ratio,
        "theta_tree_weight": rep.theta_tree_weight,
        "matching_ratio": rep.matching_ratio,
        "matching_weight": rep.matching_weight,
        "five_cycle_cover_size": rep.five_cycle_cover_size,
        "five_cycle_applicable": rep.five_cycle_applicable,
        "flags": rep.flags,
    }
    if args.format == "json-lines":
        print(json.dumps(row, sort_keys=True), file=out)
    else:
        for key, value in row.items():
            print(f"{key}: {value}", file=out)
    if rep.flags:
        print("WARNING: conjecture violations flagged (potential counterexample)",
              file=out)
    return EXIT_OK


def _add_common(parser: argparse.ArgumentParser, with_input: bool = True) -> None:
    if with_input:
        parser.add_argument("--input", help="graph file to load")
        parser.add_argument("--generate", nargs="+", metavar="ARG",
                            help="generator kind followed by its parameters")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--trials", type=int, default=256)
    parser.add_argument("--format", choices=("table", "json-lines"), default="table")
    parser.add_argument("--max-n-override", type=int, default=None,
                        help="override oracle size guards")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cutbounds",
        description="Certified lower bounds and explicit cuts for maximum weighted cut")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="run every applicable bound")
    _add_common(p)
    p.add_argument("--root", type=int, default=None, help="DFS root")
    p.add_argument("--best-roots", action="store_true",
                   help="sweep all DFS roots (default for small graphs)")
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("oracle", help="exact desk-scale quantities")
    p.add_argument("quantity", choices=("max-cut", "max-induced-bipartite",
                                        "max-dfs-tree", "five-cycle-cover"))
    _add_common(p)
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("verify", help="soundness sweep: cut >= bound <= max cut")
    _add_common(p)
    p.add_argument("--random", type=int, default=0,
                   help="verify this many seeded random instances")
    p.add_argument("--max-n", type=int, default=14,
                   help="max vertices for random instances / exact cross-check")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("generate", help="write a fixture graph file")
    p.add_argument("kind", choices=generators.GENERATOR_KINDS)
    p.add_argument("params", nargs="*", help="generator parameters")
    p.add_argument("--output", help="output path (default stdout)")
    p.set_defaults(fn=cmd_generate)

    p = sub.add_parser("conjecture", help="per-instance conjecture evidence ratios")
    _add_common(p)
    p.set_defaults(fn=cmd_conjecture)

    return parser


def main(argv: Optional[list[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args, out)
    except (GraphError, OSError, ValueError, oracle.SizeGuardError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ClaimViolationError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
