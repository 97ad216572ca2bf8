"""Command-line surface: kernelize, solve, verify, gen, inspect.

Exit codes: 0 for a written kernel or a YES answer, 1 for a decided NO, 2 for
any error.  All output is deterministic for fixed inputs and seeds.
"""

from __future__ import annotations

import argparse
import sys

from .degenerate import kernelize_degenerate
from .generators import build
from .graph import ColoredGraph, GraphError, contains_kij, degeneracy_ordering
from .graphio import ParseError, parse_graph, relabel_contiguous, serialize_graph
from .harness import PIPELINES, run_equivalence_trials
from .ids import kernelize_ids
from .oracles import (
    find_dominating_set,
    find_independent_dominating_set,
    find_rwb_dominating_set,
)
from .rules import DecidedNo, KernelParams, kernelize_i1, kernelize_rwb
from .transform import uncolor


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_output(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_kernelize(args: argparse.Namespace) -> int:
    g, _file_k = parse_graph(_read_input(args.input))
    if args.ids and args.degenerate is not None:
        raise GraphError("--ids and --degenerate cannot be combined")
    if args.ids:
        params = KernelParams(i=args.i, j=args.j, k=args.k)
        outcome = kernelize_ids(g, params, check_kij=args.check_kij)
        kernel_budget = params.k
    elif args.i == 1:
        outcome = kernelize_i1(g, args.j, args.k)
        kernel_budget = args.k
    else:
        if args.degenerate is not None:
            params = KernelParams(i=args.i, j=args.j, k=args.k, d=args.degenerate)
            if args.check_kij and contains_kij(g, params.i, params.j) is not None:
                raise GraphError(f"input contains a K_{{{params.i},{params.j}}} subgraph")
            outcome = kernelize_degenerate(g, args.degenerate, args.k)
        else:
            params = KernelParams(i=args.i, j=args.j, k=args.k)
            outcome = kernelize_rwb(g, params, check_kij=args.check_kij)
    if args.trace:
        _write_output(args.trace, "\n".join(outcome.trace.format_lines()) + "\n")
    if isinstance(outcome, DecidedNo):
        print("NO")
        return 1
    if args.ids or args.i == 1:
        kernel = outcome.graph
    else:
        kernel, kernel_budget = uncolor(outcome.graph, args.k)
    relabeled, _mapping = relabel_contiguous(kernel)
    _write_output(args.output, serialize_graph(relabeled, kernel_budget))
    return 0


def _cmd_solve(args: argparse.Namespace) -> int:
    g, file_k = parse_graph(_read_input(args.input))
    k = args.k if args.k is not None else file_k
    if k is None:
        raise GraphError("no budget: pass -k or use an input file with a 'k' line")
    if args.ids:
        witness = find_independent_dominating_set(g, k)
    elif args.rwb:
        witness = find_rwb_dominating_set(g, k)
    else:
        witness = find_dominating_set(g, k)
    if witness is None:
        print("NO")
        return 1
    print("YES")
    if args.witness:
        print(" ".join(map(str, sorted(witness))))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    result = run_equivalence_trials(
        args.pipeline, args.i, args.j, args.kmax, args.count, args.seed, n_max=args.n
    )
    print(f"{result.agreed}/{result.count} agree")
    if result.failures:
        first = result.failures[0]
        print(f"first failure at instance {first.index}: {first.description}")
        sys.stdout.write(first.graph_text)
        return 1
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    g = build(args.model, args.args)
    _write_output(args.output, serialize_graph(g))
    return 0


def _cmd_inspect(args: argparse.Namespace) -> int:
    g, file_k = parse_graph(_read_input(args.input))
    print(f"n={g.vertex_count} m={g.edge_count}")
    print(
        f"colors: R={len(g.red_vertices())} W={len(g.white_vertices())} "
        f"B={len(g.black_vertices())}"
    )
    if file_k is not None:
        print(f"k={file_k}")
    print(f"degeneracy={degeneracy_ordering(g).degeneracy}")
    if args.i is not None and args.j is not None:
        witness = contains_kij(g, args.i, args.j)
        label = f"K_{{{args.i},{args.j}}}"
        if witness is None:
            print(f"{label}: none")
        else:
            a_side, b_side = witness
            print(f"{label}: A={','.join(map(str, a_side))} B={','.join(map(str, b_side))}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dskernel",
        description="Kernelization for dominating set on biclique-free graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    kern = sub.add_parser("kernelize", help="reduce an instance or decide NO")
    kern.add_argument("--i", type=int, required=True)
    kern.add_argument("--j", type=int, required=True)
    kern.add_argument("-k", type=int, required=True)
    kern.add_argument("--degenerate", type=int, default=None, metavar="D",
                      help="use the fast search for D-degenerate inputs (i=j=D+1)")
    kern.add_argument("--ids", action="store_true",
                      help="independent dominating set variant")
    kern.add_argument("--check-kij", action="store_true",
                      help="verify the input is biclique-free before reducing")
    kern.add_argument("--trace", default=None, metavar="FILE",
                      help="write the rule-firing trace to FILE")
    kern.add_argument("-o", "--output", default=None, metavar="OUT")
    kern.add_argument("input", nargs="?", default="-", metavar="IN")
    kern.set_defaults(func=_cmd_kernelize)

    solve = sub.add_parser("solve", help="answer an instance by brute force")
    mode = solve.add_mutually_exclusive_group()
    mode.add_argument("--ids", action="store_true")
    mode.add_argument("--rwb", action="store_true")
    solve.add_argument("-k", type=int, default=None,
                       help="budget; defaults to the input file's k line")
    solve.add_argument("--witness", action="store_true")
    solve.add_argument("input", nargs="?", default="-", metavar="IN")
    solve.set_defaults(func=_cmd_solve)

    verify = sub.add_parser("verify", help="randomized oracle-equivalence testing")
    verify.add_argument("--i", type=int, required=True)
    verify.add_argument("--j", type=int, required=True)
    verify.add_argument("--kmax", type=int, required=True)
    verify.add_argument("--count", type=int, required=True)
    verify.add_argument("--seed", type=int, required=True)
    verify.add_argument("--pipeline", choices=PIPELINES, default="plain")
    verify.add_argument("--n", type=int, default=14, help="largest instance size")
    verify.set_defaults(func=_cmd_verify)

    gen = sub.add_parser("gen", help="emit a generated graph")
    gen.add_argument("model")
    gen.add_argument("args", nargs="*")
    gen.add_argument("-o", "--output", default=None, metavar="OUT")
    gen.set_defaults(func=_cmd_gen)

    inspect = sub.add_parser("inspect", help="print instance statistics")
    inspect.add_argument("--i", type=int, default=None)
    inspect.add_argument("--j", type=int, default=None)
    inspect.add_argument("input", nargs="?", default="-", metavar="IN")
    inspect.set_defaults(func=_cmd_inspect)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_entry() -> None:
    raise SystemExit(main())
