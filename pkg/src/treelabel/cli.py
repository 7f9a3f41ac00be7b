"""Command line interface.

One binary, subcommand style; every command reads/writes the plain text
tree format and JSON documents tagged "schema": "treelabel/1".  Trees and
labellings are read from files or from stdin when the argument is "-",
which makes gen | label | validate pipelines work.

Exit codes: 0 ok, 1 validation/verification failure, 2 usage error,
3 solver budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds as bounds_mod
from .cyclic import label_cyclic_auto, label_cyclic_depth2, label_cyclic_h11, label_cyclic_large, match_depth2_family
from .labelling import (
    CYCLIC,
    LINEAR,
    Labelling,
    SeparationParams,
    check_elegance,
    is_super_elegant,
    validate,
)
from .linear import ConstructionResult, label_linear, label_linear_depth2, label_linear_depth3
from .solver import BudgetExceeded, SolverConfig, exact_lambda, exact_sigma, feasibility
from .trees import (
    COMPLETE_MARY,
    REGULAR_SUBTREE,
    FamilySpec,
    RootedTree,
    TreeFormatError,
    build_family,
    dist3_neighborhood,
    parse_tree,
    random_tree,
    serialize_tree,
    tree_stats,
)
from .verify import VerifyGrid, run_verify

SCHEMA = "treelabel/1"

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_tree(path: str) -> RootedTree:
    return parse_tree(_read_text(path))


def _print_json(obj: dict) -> None:
    print(json.dumps({"schema": SCHEMA, **obj}))


def _dot(tree: RootedTree, labelling: Labelling | None = None) -> str:
    lines = ["graph tree {"]
    for v in range(tree.n):
        note = f"{v}" if labelling is None else f"{v}: f={labelling.labels[v]}"
        lines.append(f'  v{v} [label="{note}"];')
    for v in range(1, tree.n):
        lines.append(f"  v{tree.parent[v]} -- v{v};")
    lines.append("}")
    return "\n".join(lines)


def cmd_gen(args) -> int:
    family = COMPLETE_MARY if args.family == "mary" else REGULAR_SUBTREE
    tree = build_family(FamilySpec(family, args.m, args.k))
    sys.stdout.write(serialize_tree(tree))
    return EXIT_OK


def cmd_stats(args) -> int:
    stats = tree_stats(_load_tree(args.tree))
    _print_json({"n": stats.n, "delta": stats.delta, "delta2": stats.delta2,
                 "diam": stats.diam})
    return EXIT_OK


def cmd_random(args) -> int:
    tree = random_tree(args.n, args.max_degree, args.seed)
    sys.stdout.write(serialize_tree(tree))
    return EXIT_OK


def _construct(tree: RootedTree, args) -> ConstructionResult:
    if args.mode == LINEAR:
        if args.algorithm in ("auto", "general"):
            return label_linear(tree, args.h, args.p, delta=args.delta)
        if args.algorithm == "depth2":
            spec = match_depth2_family(tree)
            if spec is None or spec.family != COMPLETE_MARY:
                raise ValueError("depth2 needs a canonical complete m-ary tree of height 2")
            return label_linear_depth2(spec.m, args.h, args.p)
        if args.algorithm == "depth3":
            kids = len(tree.children[0])
            expected = build_family(FamilySpec(COMPLETE_MARY, kids, 3)) if kids >= 2 else None
            if expected != tree:
                raise ValueError("depth3 needs a canonical complete m-ary tree of height 3")
            return label_linear_depth3(kids, args.h, args.p)
        raise ValueError(f"algorithm {args.algorithm} is not a linear construction")
    if args.algorithm == "auto":
        return label_cyclic_auto(tree, args.h, args.p)
    if args.algorithm == "large":
        return label_cyclic_large(tree, args.h, args.p)
    if args.algorithm == "h11":
        if args.p != 1:
            raise ValueError("h11 requires p = 1")
        return label_cyclic_h11(tree, args.h)
    if args.algorithm == "depth2":
        spec = match_depth2_family(tree)
        if spec is None:
            raise ValueError("depth2 needs a canonical depth-2 family tree")
        return label_cyclic_depth2(spec, args.h, args.p)
    raise ValueError(f"algorithm {args.algorithm} is not a cyclic construction")


def cmd_label(args) -> int:
    tree = _load_tree(args.tree)
    result = _construct(tree, args)
    if args.dot:
        print(_dot(tree, result.labelling))
        return EXIT_OK
    _print_json({"mode": result.labelling.mode, "ell": result.labelling.ell,
                 "labels": list(result.labelling.labels),
                 "span": result.labelling.span(),
                 "certificate": result.certificate.to_dict(),
                 "source": result.source})
    return EXIT_OK


def cmd_validate(args) -> int:
    tree = _load_tree(args.tree)
    labelling = Labelling.from_json(_read_text(args.labels))
    h2 = args.h2 if args.h2 is not None else args.p
    h3 = args.h3 if args.h3 is not None else args.p
    params = SeparationParams(args.h, h2, h3)
    violations = validate(tree, labelling, params)
    failed = bool(violations)
    for v in violations:
        print(json.dumps(v.to_dict()))
    if args.check_elegant:
        certificate = check_elegance(tree, labelling)
        print(json.dumps({"check": "elegant", "ok": certificate is not None}))
        failed = failed or certificate is None
    if args.check_super:
        ok = is_super_elegant(tree, labelling)
        print(json.dumps({"check": "super-elegant", "ok": ok}))
        failed = failed or not ok
    return EXIT_FAIL if failed else EXIT_OK


def cmd_bounds(args) -> int:
    if args.family is not None:
        if args.m is None or args.k is None:
            raise ValueError("--family needs -m and -k")
        family = COMPLETE_MARY if args.family == "mary" else REGULAR_SUBTREE
        spec = FamilySpec(family, args.m, args.k)
        if args.quantity == "lambda":
            report = bounds_mod.lambda_family_exact(spec, args.h, args.p)
        else:
            report = bounds_mod.sigma_family_exact(spec, args.h, args.p)
    else:
        if args.tree is None:
            raise ValueError("give a TREE or --family")
        tree = _load_tree(args.tree)
        if args.quantity == "lambda":
            report = bounds_mod.lambda_bounds(tree, args.h, args.p)
        else:
            report = bounds_mod.sigma_bounds(tree, args.h, args.p)
    _print_json(report.to_dict())
    return EXIT_OK


def cmd_oracle(args) -> int:
    tree = _load_tree(args.tree)
    cfg = SolverConfig(node_budget=args.budget)
    fn = exact_lambda if args.quantity == "lambda" else exact_sigma
    result = fn(tree, args.h, args.h2, args.h3, cfg)
    _print_json(result.to_dict())
    return EXIT_BUDGET if result.budget_hit else EXIT_OK


def cmd_feasible(args) -> int:
    tree = _load_tree(args.tree)
    cfg = SolverConfig(node_budget=args.budget)
    params = SeparationParams(args.h, args.h2, args.h3)
    try:
        witness = feasibility(tree, params, args.mode, args.ell, cfg)
    except BudgetExceeded:
        _print_json({"feasible": None, "reason": "budget exhausted"})
        return EXIT_BUDGET
    if witness is None:
        _print_json({"feasible": False, "witness": None})
        return EXIT_FAIL
    _print_json({"feasible": True,
                 "witness": {"mode": witness.mode, "ell": witness.ell,
                             "labels": list(witness.labels)}})
    return EXIT_OK


def cmd_neighborhood(args) -> int:
    tree = _load_tree(args.tree)
    _print_json({"vertex": args.vertex,
                 "neighborhood": [[v, d] for v, d in dist3_neighborhood(tree, args.vertex)]})
    return EXIT_OK


def cmd_verify(args) -> int:
    m_values = tuple(int(x) for x in args.m_values.split(",") if x.strip())
    grid = VerifyGrid(
        m_values=m_values,
        h_max=args.h_max,
        random_trees=args.trees,
        corpus_size=args.corpus,
        seed=args.seed,
        node_budget=args.budget,
    )
    report = run_verify(grid)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump({"schema": SCHEMA, **report.to_dict()}, fh, indent=2)
    if args.json:
        _print_json(report.to_dict())
    else:
        print(report.table())
    return EXIT_OK if report.passed() else EXIT_FAIL


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treelabel",
        description="Construct, validate and exactly verify distance-three "
                    "linear and cyclic labellings of finite trees.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a family tree")
    g.add_argument("--family", choices=["mary", "regular"], required=True)
    g.add_argument("-m", type=int, required=True)
    g.add_argument("-k", type=int, required=True)
    g.set_defaults(fn=cmd_gen)

    s = sub.add_parser("stats", help="structural statistics of a tree")
    s.add_argument("tree")
    s.set_defaults(fn=cmd_stats)

    r = sub.add_parser("random", help="seeded random tree")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--max-degree", type=int, required=True)
    r.add_argument("--seed", type=int, required=True)
    r.set_defaults(fn=cmd_random)

    lab = sub.add_parser("label", help="construct a labelling")
    lab.add_argument("tree")
    lab.add_argument("--mode", choices=[LINEAR, CYCLIC], required=True)
    lab.add_argument("--h", type=int, required=True)
    lab.add_argument("--p", type=int, default=1)
    lab.add_argument("--algorithm", default="auto",
                     choices=["auto", "general", "depth2", "depth3", "large", "h11"])
    lab.add_argument("--delta", type=int, default=None,
                     help="widen palettes to this max degree (linear general only)")
    lab.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    lab.set_defaults(fn=cmd_label)

    v = sub.add_parser("validate", help="check a labelling against a tree")
    v.add_argument("tree")
    v.add_argument("labels")
    v.add_argument("--h", type=int, required=True)
    v.add_argument("--p", type=int, default=1)
    v.add_argument("--h2", type=int, default=None)
    v.add_argument("--h3", type=int, default=None)
    v.add_argument("--check-elegant", action="store_true")
    v.add_argument("--check-super", action="store_true")
    v.set_defaults(fn=cmd_validate)

    b = sub.add_parser("bounds", help="closed-form bounds / exact values")
    b.add_argument("tree", nargs="?", default=None)
    b.add_argument("--h", type=int, required=True)
    b.add_argument("--p", type=int, default=1)
    b.add_argument("--quantity", choices=["lambda", "sigma"], default="lambda")
    b.add_argument("--family", choices=["mary", "regular"], default=None)
    b.add_argument("-m", type=int, default=None)
    b.add_argument("-k", type=int, default=None)
    b.set_defaults(fn=cmd_bounds)

    o = sub.add_parser("oracle", help="exact optimum by branch and bound")
    o.add_argument("tree")
    o.add_argument("--h", type=int, required=True)
    o.add_argument("--h2", type=int, default=1)
    o.add_argument("--h3", type=int, default=1)
    o.add_argument("--quantity", choices=["lambda", "sigma"], required=True)
    o.add_argument("--budget", type=int, default=100_000_000)
    o.set_defaults(fn=cmd_oracle)

    f = sub.add_parser("feasible", help="decide feasibility at a fixed span/modulus")
    f.add_argument("tree")
    f.add_argument("--mode", choices=[LINEAR, CYCLIC], required=True)
    f.add_argument("--ell", type=int, required=True)
    f.add_argument("--h", type=int, required=True)
    f.add_argument("--h2", type=int, default=1)
    f.add_argument("--h3", type=int, default=1)
    f.add_argument("--budget", type=int, default=100_000_000)
    f.set_defaults(fn=cmd_feasible)

    nb = sub.add_parser("neighborhood", help="vertices within distance 3")
    nb.add_argument("tree")
    nb.add_argument("vertex", type=int)
    nb.set_defaults(fn=cmd_neighborhood)

    ver = sub.add_parser("verify", help="run the theorem-check matrix")
    ver.add_argument("--m-values", default="2,3")
    ver.add_argument("--h-max", type=int, default=4)
    ver.add_argument("--trees", type=int, default=25)
    ver.add_argument("--corpus", type=int, default=10)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--budget", type=int, default=20_000_000)
    ver.add_argument("--json", action="store_true", help="JSON report to stdout instead of the table")
    ver.add_argument("--report", default=None, metavar="FILE",
                     help="also write the JSON report to FILE")
    ver.set_defaults(fn=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (TreeFormatError, ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
