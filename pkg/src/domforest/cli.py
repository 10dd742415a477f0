"""Command-line front end.

Exit codes: 0 success, 1 validation or check failure, 2 usage or parse error.
Data goes to the output stream, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time

from .acyclic import CyclicGraphError, compute_ad
from .dfs import run_dfs
from .gen import KINDS, GenSpec, InfeasibleSpecError, enumerate_small, generate
from .general import compute_gd
from .graph import (
    DegenerateGraphError,
    FlowGraph,
    GraphFormatError,
    format_idom,
    normalize,
    parse,
    serialize,
    validate,
)
from .loops import build_loop_forest, classify_loops, compute_hd
from .oracle import brute_idom, trees_equal
from .reduce import dominators_via_reduction, reduce

ALGOS = ("ad", "gd", "hd", "oracle", "reduction")


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def dominators(g: FlowGraph, algo: str) -> dict[int, int]:
    if algo == "ad":
        return compute_ad(g)
    if algo == "gd":
        return compute_gd(g)[0]
    if algo == "hd":
        return compute_hd(g)[0]
    if algo == "oracle":
        return brute_idom(g)
    if algo == "reduction":
        return dominators_via_reduction(g)
    raise ValueError(f"unknown algorithm {algo!r}")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise CliError(f"cannot read {path}: {e.strerror}", 2) from e


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def _load(args) -> FlowGraph:
    try:
        g = parse(_read(args.input))
    except GraphFormatError as e:
        raise CliError(f"parse error: {e}", 2) from e
    if args.normalize:
        try:
            g, _ = normalize(g)
        except DegenerateGraphError as e:
            raise CliError(str(e), 1) from e
    problems = validate(g)
    if problems:
        raise CliError("invalid flow graph: " + problems[0], 1)
    return g


def _check(g: FlowGraph, idom: dict[int, int]) -> None:
    ok, where = trees_equal(idom, brute_idom(g))
    if not ok:
        raise CliError(f"check failed: dominator trees differ at vertex {where}", 1)
    print("check passed", file=sys.stderr)


def cmd_compute(args) -> int:
    g = _load(args)
    try:
        idom = dominators(g, args.algo)
    except CyclicGraphError as e:
        raise CliError(str(e), 1) from e
    if args.check:
        _check(g, idom)
    _write(args.output, format_idom(idom, g.n, g.s))
    return 0


def cmd_loops(args) -> int:
    g = _load(args)
    info = run_dfs(g)
    forest = build_loop_forest(g, info, check=args.check)
    cls = classify_loops(g, info, forest)
    lines = [f"{v} {forest.h.get(v, 0)}" for v in range(1, g.n + 1)]
    lines.append(" ".join(["heads:", *map(str, sorted(forest.heads))]))
    lines.append(" ".join(["irreducible:", *map(str, sorted(cls.irreducible_heads))]))
    for v in sorted(forest.exit):
        x, y = forest.exit[v]
        lines.append(f"exit {v} {x} {y}")
    _write(args.output, "\n".join(lines) + "\n")
    return 0


def cmd_reduce(args) -> int:
    g = _load(args)
    info = run_dfs(g)
    forest = build_loop_forest(g, info)
    red = reduce(g, info, forest, classify_loops(g, info, forest))
    if args.check:
        _check(g, compute_ad(red.graph))
    # provenance follows the arcs, in the order the added arcs appear
    trailer = [f"# dropped {red.dropped_back_arcs} back arcs"]
    trailer += [f"# {p.comment()}" for p in red.provenance if p.rule != "original"]
    _write(args.output, serialize(red.graph) + "\n".join(trailer) + "\n")
    return 0


def cmd_gen(args) -> int:
    spec = GenSpec(args.kind, args.n, args.m, args.seed, args.depth)
    try:
        g = generate(spec)
    except InfeasibleSpecError as e:
        raise CliError(str(e), 2) from e
    _write(args.output, serialize(g, spec.header()))
    return 0


def cmd_bench(args) -> int:
    algos = args.algo_list or ["gd", "hd"]
    sizes = args.sizes or [100_000, 200_000, 400_000, 800_000]
    lines = ["algo m n median_s us_per_arc"]
    for m in sizes:
        n = max(2, m // 4)
        g = generate(GenSpec(args.kind, n, m, args.seed))
        for algo in algos:
            times = []
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                idom = dominators(g, algo)
                times.append(time.perf_counter() - t0)
            if args.check:
                _check(g, idom)
            med = statistics.median(times)
            lines.append(f"{algo} {g.m} {g.n} {med:.4f} {med / g.m * 1e6:.3f}")
    _write(args.output, "\n".join(lines) + "\n")
    return 0


def cmd_selftest(args) -> int:
    checked = 0
    for n in (2, 3, 4):
        for g in enumerate_small(n):
            expected = brute_idom(g)
            for algo in ("gd", "hd", "reduction"):
                ok, where = trees_equal(dominators(g, algo), expected)
                if not ok:
                    arcs = " ".join(f"{x}>{y}" for x, y in g.arcs)
                    raise CliError(f"selftest: {algo} differs at vertex {where} on n={n} arcs {arcs}", 1)
            checked += 1
    print(f"selftest: {checked} graphs agree with the brute-force oracle", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="domforest", description="Dominators by vertex contraction.")
    sub = parser.add_subparsers(dest="command", required=True)

    def io(p, with_input=True):
        if with_input:
            p.add_argument("--input", "-i", default="-", help="graph file, - for stdin")
            p.add_argument("--normalize", action="store_true", help="clean the graph before use")
        p.add_argument("--output", "-o", default="-", help="output file, - for stdout")

    p = sub.add_parser("compute", help="immediate dominators")
    io(p)
    p.add_argument("--algo", choices=ALGOS, default="hd")
    p.add_argument("--check", action="store_true", help="compare with the brute-force oracle")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("loops", help="loop nesting forest and irreducible heads")
    io(p)
    p.add_argument("--check", action="store_true", help="assert internal invariants")
    p.set_defaults(func=cmd_loops)

    p = sub.add_parser("reduce", help="equivalent acyclic graph")
    io(p)
    p.add_argument("--check", action="store_true", help="compare its dominators with the oracle")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gen", help="generate a graph")
    io(p, with_input=False)
    p.add_argument("--kind", choices=KINDS, default="random")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--depth", type=int, default=1)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time algorithms on doubling sizes")
    io(p, with_input=False)
    p.add_argument("--algo", dest="algo_list", action="append", choices=ALGOS)
    p.add_argument("--kind", choices=("random", "dag"), default="random")
    p.add_argument("--sizes", type=int, nargs="+", help="arc counts; n is m/4")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("selftest", help="exhaustive oracle sweep over graphs with n <= 4")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except CliError as e:
        print(f"domforest: {e}", file=sys.stderr)
        return e.code
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
