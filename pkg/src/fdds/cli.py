"""Command-line interface.

Exit codes: 0 found / success, 1 not divisible, 2 input error, 3 not supported.
Solver commands print ``#`` comment lines with the status and the
verification verdict, so their standard output is still a valid transition
file.
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import Optional, Sequence, TextIO

from .core import Fdds, FddsError, fdds_product, fdds_sum
from .fileformat import format_fdds, read_fdds, to_dot
from .oracle import MAX_ORACLE_NODES, BudgetExceeded, brute_divide, brute_root
from .sampling import random_fdds
from .solvers import (
    SolveOutcome,
    Status,
    divide_connected,
    root_connected,
    solve_axk,
    solve_component_extremal,
    unroll_divide,
)
from .trees import bracket, sorted_forest
from .unroll import cut_unroll

__all__ = ["main", "build_parser", "EXIT_FOUND", "EXIT_NOT_DIVISIBLE", "EXIT_INPUT", "EXIT_NOT_SUPPORTED"]

EXIT_FOUND = 0
EXIT_NOT_DIVISIBLE = 1
EXIT_INPUT = 2
EXIT_NOT_SUPPORTED = 3

_EXIT = {Status.FOUND: EXIT_FOUND, Status.NOT_DIVISIBLE: EXIT_NOT_DIVISIBLE, Status.NOT_SUPPORTED: EXIT_NOT_SUPPORTED}


class InputError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _natural(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fdds", description="Arithmetic and division of finite dynamical systems.")
    sub = p.add_subparsers(dest="command", required=True)

    op = sub.add_parser("op", help="sum or product of two systems")
    op.add_argument("operation", choices=["sum", "product"])
    op.add_argument("a")
    op.add_argument("b")
    op.add_argument("--out")

    solve = sub.add_parser("solve", help="division, roots and A*X^k = B")
    ssub = solve.add_subparsers(dest="mode", required=True)
    s = ssub.add_parser("divide-connected", help="connected X with A*X = B")
    s.add_argument("a")
    s.add_argument("b")
    s = ssub.add_parser("root", help="connected X with X^k = A")
    s.add_argument("a")
    s.add_argument("k", type=_positive)
    s = ssub.add_parser("axk", help="connected X with A*X^k = B")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("k", type=_positive)
    s = ssub.add_parser("unroll-divide", help="X with Unr(A)*Unr(X) = Unr(B)")
    s.add_argument("a")
    s.add_argument("b")
    s = ssub.add_parser("divide-extremal", help="component-minimal or -maximal X with A*X = B")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--mode", dest="extremal", choices=["minimal", "maximal"], default="maximal")
    for s in ssub.choices.values():
        s.add_argument("--out")

    ins = sub.add_parser("inspect", help="canonical form, DOT export or cut unroll")
    ins.add_argument("file")
    what = ins.add_mutually_exclusive_group(required=True)
    what.add_argument("--canon", action="store_true")
    what.add_argument("--dot", action="store_true")
    what.add_argument("--unroll-cut", type=_natural, metavar="N")

    gen = sub.add_parser("generate", help="random system")
    gen.add_argument("--nodes", type=_positive, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--connected", action="store_true")
    gen.add_argument("--out")

    orc = sub.add_parser("oracle", help="brute-force solving of small instances")
    osub = orc.add_subparsers(dest="mode", required=True)
    o = osub.add_parser("divide", help="all X with A*X = B")
    o.add_argument("a")
    o.add_argument("b")
    o.add_argument("--connected", action="store_true")
    o = osub.add_parser("root", help="all X with X^k = A")
    o.add_argument("a")
    o.add_argument("k", type=_positive)
    o.add_argument("--connected", action="store_true")
    for o in osub.choices.values():
        o.add_argument("--max-nodes", type=_positive, default=8, help=f"refuse candidates above this size (at most {MAX_ORACLE_NODES})")
    return p


def _load(path: str) -> Fdds:
    try:
        return read_fdds(path)
    except FddsError as exc:
        raise InputError(str(exc)) from None


def _emit(a: Fdds, out: Optional[str], stdout: TextIO) -> None:
    text = format_fdds(a)
    if out:
        try:
            with open(out, "w", encoding="ascii", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            raise InputError(f"{out}: {exc.strerror}") from None
    else:
        stdout.write(text)


def _report(outcome: SolveOutcome, claim: str, out: Optional[str], stdout: TextIO) -> int:
    stdout.write(f"# status: {outcome.status.value}\n")
    if outcome.found:
        stdout.write(f"# verified: {claim}\n")
        assert outcome.result is not None
        _emit(outcome.result, out, stdout)
    else:
        reason = outcome.info.get("reason", "")
        stdout.write(f"# no verified solution{': ' + str(reason) if reason else ''}\n")
    return _EXIT[outcome.status]


def _cmd_op(args, stdout: TextIO) -> int:
    a, b = _load(args.a), _load(args.b)
    result = fdds_sum(a, b) if args.operation == "sum" else fdds_product(a, b)
    _emit(result, args.out, stdout)
    return EXIT_FOUND


def _cmd_solve(args, stdout: TextIO) -> int:
    a = _load(args.a)
    mode = args.mode
    if mode == "divide-connected":
        return _report(divide_connected(a, _load(args.b)), "A * X is isomorphic to B", args.out, stdout)
    if mode == "root":
        return _report(root_connected(a, args.k), f"X^{args.k} is isomorphic to A", args.out, stdout)
    if mode == "axk":
        return _report(solve_axk(a, _load(args.b), args.k), f"A * X^{args.k} is isomorphic to B", args.out, stdout)
    if mode == "unroll-divide":
        outcome = unroll_divide(a, _load(args.b))
        n = outcome.info.get("n")
        return _report(outcome, f"cut unrolls at depth {n} satisfy A * X = B", args.out, stdout)
    outcome = solve_component_extremal(a, _load(args.b), args.extremal)
    return _report(outcome, "A * X is isomorphic to B", args.out, stdout)


def _cmd_inspect(args, stdout: TextIO) -> int:
    a = _load(args.file)
    if args.canon:
        stdout.write(a.canonical.decode("ascii") + "\n")
    elif args.dot:
        stdout.write(to_dot(a))
    else:
        cu = cut_unroll(a, args.unroll_cut)
        for t in sorted_forest(cu.forest):
            for _ in range(cu.forest[t]):
                stdout.write(bracket(t) + "\n")
    return EXIT_FOUND


def _cmd_generate(args, stdout: TextIO) -> int:
    a = random_fdds(args.nodes, random.Random(args.seed), connected=args.connected)
    _emit(a, args.out, stdout)
    return EXIT_FOUND


def _cmd_oracle(args, stdout: TextIO) -> int:
    if args.max_nodes > MAX_ORACLE_NODES:
        raise InputError(f"--max-nodes is capped at {MAX_ORACLE_NODES}")
    a = _load(args.a)
    if args.mode == "divide":
        b = _load(args.b)
        size = len(b) // len(a) if len(a) else 0
        if size > args.max_nodes:
            raise InputError(f"candidates would have {size} nodes, above --max-nodes {args.max_nodes}")
        sols = brute_divide(a, b, connected=args.connected)
    else:
        size = round(len(a) ** (1 / args.k))
        if size > args.max_nodes:
            raise InputError(f"candidates would have {size} nodes, above --max-nodes {args.max_nodes}")
        sols = brute_root(a, args.k, connected=args.connected)
    stdout.write(f"# solutions: {len(sols)}\n")
    for i, x in enumerate(sols, 1):
        stdout.write(f"# solution {i}\n")
        stdout.write(format_fdds(x))
    return EXIT_FOUND if sols else EXIT_NOT_DIVISIBLE


_COMMANDS = {
    "op": _cmd_op,
    "solve": _cmd_solve,
    "inspect": _cmd_inspect,
    "generate": _cmd_generate,
    "oracle": _cmd_oracle,
}


def main(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args, stdout)
    except (InputError, BudgetExceeded) as exc:
        stderr.write(f"fdds: error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
