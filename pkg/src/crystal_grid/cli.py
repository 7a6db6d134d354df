"""Command-line interface.

Every command prints a single JSON report whose "config" header holds the
full effective configuration, including the seed, so any run can be
reproduced byte for byte.  Exit codes: 0 clean, 1 a mathematical check
failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import an, binfty, cartan, g22, oracle, suites
from .oracle import DEFAULT_PRIME, SampleConfig


def _dims_arg(text: str):
    try:
        dims = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad dimension vector {text!r}")
    if any(d < 0 for d in dims):
        raise argparse.ArgumentTypeError("dimensions must be nonnegative")
    return dims


def _component_arg(text: str):
    try:
        return g22.parse_component(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _word_arg(text: str):
    try:
        return g22.parse_word(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _pattern_arg(text: str):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad color pattern {text!r}")


def _pick_seed(args) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get("CRYSTAL_GRID_SEED")
    if env is not None:
        return int(env)
    return random.SystemRandom().randrange(2**31)


def _emit(payload: dict, out_path=None) -> None:
    text = json.dumps(payload, separators=(",", ":")) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _config(args, **extra) -> dict:
    cfg = {"command": args.command}
    if getattr(args, "subcommand", None):
        cfg["command"] = f"{args.command} {args.subcommand}"
    cfg.update(extra)
    return cfg


def cmd_components(args) -> int:
    comps = g22.enumerate_components(args.dims)
    payload = {
        "config": _config(args, dims=list(args.dims)),
        "count": len(comps),
        "components": [g22.format_component(c) for c in comps],
    }
    _emit(payload)
    return 0


def cmd_graph(args) -> int:
    seeds = [args.seed_component]
    if args.bound < max(c.total for c in seeds):
        print("error: bound is below the seed's total dimension", file=sys.stderr)
        return 2
    graph = cartan.build_crystal_graph(seeds, g22.COLORS, g22.apply_f, g22.describe, args.bound)
    if args.format == "dot":
        text = cartan.export_dot(graph)
    else:
        text = cartan.export_json(graph)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_grid_info(args) -> int:
    from . import grid as grid_mod

    try:
        q = grid_mod.build_grid(args.grid)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    a = cartan.cartan_from_quiver(q)
    payload = {
        "config": _config(args, grid=list(args.grid)),
        "vertices": len(q.vertices),
        "arrows": len(q.arrows),
        "relations": len(q.relations),
        "cartan": [list(row) for row in a.entries],
    }
    _emit(payload)
    return 0


def cmd_an(args) -> int:
    if len(args.start) != args.n:
        print("error: start vector length differs from --n", file=sys.stderr)
        return 2
    ops = {
        "e": an.apply_e,
        "f": an.apply_f,
        "e*": an.apply_e_star,
        "f*": an.apply_f_star,
    }
    state = args.start
    trace = [list(state)]
    for kind, color in reversed(args.apply):
        if color > args.n:
            print(f"error: color {color} out of range for n={args.n}", file=sys.stderr)
            return 2
        state = ops[kind](state, color) if state is not None else None
        trace.append(list(state) if state is not None else None)
        if state is None:
            break
    payload = {
        "config": _config(args, n=args.n, start=list(args.start),
                          apply=g22.format_word(args.apply)),
        "result": list(state) if state is not None else None,
        "trace": trace,
    }
    _emit(payload)
    return 0


def cmd_g22_apply(args) -> int:
    if any(color not in g22.COLORS for _, color in args.word):
        print("error: word uses a color outside 1..4", file=sys.stderr)
        return 2
    result, trace = g22.apply_word(args.word, args.start)
    payload = {
        "config": _config(args, start=g22.format_component(args.start),
                          word=g22.format_word(args.word)),
        "result": g22.format_component(result) if result is not None else None,
        "trace": [g22.format_component(c) if c is not None else None for c in trace],
    }
    _emit(payload)
    return 0


def cmd_g22_components(args) -> int:
    return cmd_components(args)


def cmd_g22_decomp(args) -> int:
    from . import modules22

    ms = modules22.generic_decomposition(args.component)
    payload = {
        "config": _config(args, component=g22.format_component(args.component)),
        "summands": {f"M{k}": m for k, m in sorted(ms.items())},
        "cbs": modules22.cbs_check(ms),
    }
    _emit(payload)
    return 0


def cmd_oracle_epsilon(args) -> int:
    seed = _pick_seed(args)
    cfg = SampleConfig(prime=args.prime, count=args.samples, seed=seed)
    value = oracle.estimate_component_invariant(args.component, args.i, args.kind, cfg)
    payload = {
        "config": _config(args, component=g22.format_component(args.component),
                          i=args.i, kind=args.kind, samples=args.samples,
                          prime=args.prime, seed=seed),
        "value": value,
        "samples": args.samples,
        "seed": seed,
    }
    _emit(payload)
    return 0


def cmd_binfty_compare(args) -> int:
    for word in (args.word_a, args.word_b):
        if any(kind != "f" for kind, _ in word):
            print("error: comparison words must use lowering steps only", file=sys.stderr)
            return 2
        if any(color not in args.pattern for _, color in word):
            print("error: word uses a color missing from the pattern", file=sys.stderr)
            return 2
    pattern = binfty.IotaPattern(args.pattern, args.length)
    distinct, xa, xb = binfty.words_distinct(args.word_a, args.word_b, pattern=pattern)
    payload = {
        "config": _config(args, wordA=g22.format_word(args.word_a),
                          wordB=g22.format_word(args.word_b),
                          pattern=list(args.pattern), length=args.length),
        "distinct": distinct,
        "xA": list(xa.values[:xa.support_end()]),
        "xB": list(xb.values[:xb.support_end()]),
    }
    _emit(payload)
    return 0


def cmd_verify(args) -> int:
    seed = _pick_seed(args)
    suite = suites.SUITES[args.suite]
    kwargs = {}
    if args.suite in ("axioms2x2", "star", "duality", "connectivity", "seminormal"):
        kwargs["bound"] = args.bound
    if args.suite == "axiomsAn":
        kwargs["max_n"] = args.max_n
        kwargs["bound"] = args.bound
    if args.suite == "oracle":
        kwargs.update(max_dim=args.max_dim, samples=args.samples, prime=args.prime, seed=seed)
    if args.suite == "decomp":
        kwargs.update(max_dim=args.max_dim, prime=args.prime, seed=seed)
    report = suite(**kwargs)
    header = dict(kwargs)
    header.setdefault("seed", seed)
    payload = {"config": _config(args, suite=args.suite, **header)}
    payload.update(report)
    _emit(payload)
    return 0 if report["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crystal-grid",
        description="Crystal operators on components of grid representation varieties.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("components", help="list the components of a dimension vector")
    p.add_argument("--dims", type=_dims_arg, required=True)
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("graph", help="breadth-first crystal graph from a seed component")
    p.add_argument("--seed", dest="seed_component", type=_component_arg,
                   default=g22.ZERO_COMPONENT)
    p.add_argument("--bound", type=int, default=4)
    p.add_argument("--format", choices=("dot", "json"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("grid-info", help="vertex/arrow/relation counts and Cartan matrix of a grid")
    p.add_argument("--grid", type=_dims_arg, required=True)
    p.set_defaults(func=cmd_grid_info)

    p = sub.add_parser("an", help="apply an operator word on the chain crystal")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--start", type=_dims_arg, required=True)
    p.add_argument("--apply", type=_word_arg, required=True)
    p.set_defaults(func=cmd_an)

    g22_parser = sub.add_parser("g22", help="the 2x2 grid crystal")
    g22_sub = g22_parser.add_subparsers(dest="subcommand", required=True)

    p = g22_sub.add_parser("apply", help="apply an operator word to a component")
    p.add_argument("--start", type=_component_arg, required=True)
    p.add_argument("--word", type=_word_arg, required=True)
    p.set_defaults(func=cmd_g22_apply)

    p = g22_sub.add_parser("components", help="list the components of a dimension vector")
    p.add_argument("--dims", type=_dims_arg, required=True)
    p.set_defaults(func=cmd_g22_components)

    p = g22_sub.add_parser("decomp", help="generic decomposition of a component")
    p.add_argument("--component", type=_component_arg, required=True)
    p.set_defaults(func=cmd_g22_decomp)

    oracle_parser = sub.add_parser("oracle", help="sampling oracle over a prime field")
    oracle_sub = oracle_parser.add_subparsers(dest="subcommand", required=True)

    p = oracle_sub.add_parser("epsilon", help="sampled minimum of a vertex statistic")
    p.add_argument("--component", type=_component_arg, required=True)
    p.add_argument("--i", type=int, choices=(1, 2, 3, 4), required=True)
    p.add_argument("--kind", choices=("eps", "eps_star"), default="eps")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_oracle_epsilon)

    binfty_parser = sub.add_parser("binfty", help="ambient sequence model comparisons")
    binfty_sub = binfty_parser.add_subparsers(dest="subcommand", required=True)

    p = binfty_sub.add_parser("compare", help="compare two lowering words from zero")
    p.add_argument("--wordA", dest="word_a", type=_word_arg, required=True)
    p.add_argument("--wordB", dest="word_b", type=_word_arg, required=True)
    p.add_argument("--pattern", type=_pattern_arg, default=binfty.DEFAULT_PATTERN)
    p.add_argument("--length", type=int, default=binfty.DEFAULT_LENGTH)
    p.set_defaults(func=cmd_binfty_compare)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", choices=sorted(suites.SUITES))
    p.add_argument("--bound", type=int, default=8)
    p.add_argument("--max-n", dest="max_n", type=int, default=5)
    p.add_argument("--max-dim", dest="max_dim", type=int, default=4)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
