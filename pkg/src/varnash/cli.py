"""Command-line front end.

Exit codes: 0 success or accepted, 1 check rejected or infeasible,
2 solver did not converge, 3 bad input.
"""
from __future__ import annotations

import argparse
import sys

import numpy as np

from .errors import GameError, NonConvergence
from .game import CHECK_TOL, JointStrategy, Method, ZeroSumGame, check_nash, check_saddle
from .gamefile import fmt, parse_game, serialize_result
from .geometry import Ball, Box, Simplex, as_vec, distance
from .minimax import GridFunction, Infeasible, dual_witness, weak_duality_gap
from .oracle import enumerate_equilibria, zero_sum_value
from .solvers import SolverConfig, nash_residual, solve_bimatrix_heuristic, solve_zero_sum

EXIT_OK, EXIT_REJECTED, EXIT_NONCONVERGENCE, EXIT_INPUT = 0, 1, 2, 3
SOLVER_TOL = 1e-6

METHODS = {
    "extragradient": Method.EXTRAGRADIENT,
    "km": Method.KRASNOSELSKII_MANN,
    "krasnoselskii-mann": Method.KRASNOSELSKII_MANN,
    "fixed-point": Method.FIXED_POINT,
}


class InputError(Exception):
    pass


def _csv(text):
    try:
        return as_vec([float(t) for t in text.split(",")])
    except ValueError as exc:
        raise InputError(f"bad vector {text!r}: {exc}") from None


def _load(path):
    try:
        with open(path, "rb") as fh:
            return parse_game(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, help="default 1e-6 for solvers, 1e-8 for checks")
    common.add_argument("--max-iters", type=int, default=100_000)
    common.add_argument("--step", type=float)
    common.add_argument("--method", choices=sorted(METHODS))
    common.add_argument("--seed", type=int, help="random feasible start for iterative solvers")
    common.add_argument("--grid", type=int, help="points per simplex edge for grid commands")
    common.add_argument("--trace", action="store_true", help="print the iterate trace to stderr")

    parser = argparse.ArgumentParser(prog="varnash", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("solve", parents=[common], help="iterative solver").add_argument("file")
    sub.add_parser("enumerate", parents=[common], help="support enumeration").add_argument("file")
    verify = sub.add_parser("verify", parents=[common], help="check a joint strategy")
    verify.add_argument("file")
    verify.add_argument("--p", required=True)
    verify.add_argument("--q", required=True)
    sub.add_parser("value", parents=[common], help="exact zero-sum value").add_argument("file")
    proj = sub.add_parser("project", parents=[common], help="project a point onto a set")
    proj.add_argument("--set", required=True, choices=["simplex", "box", "ball"])
    proj.add_argument("--point", required=True)
    proj.add_argument("--lower")
    proj.add_argument("--upper")
    proj.add_argument("--center")
    proj.add_argument("--radius", type=float)
    sub.add_parser("gap", parents=[common], help="weak duality gap of the payoff table").add_argument("file")
    wit = sub.add_parser("witness", parents=[common], help="dual witness at level alpha")
    wit.add_argument("file")
    wit.add_argument("--alpha", type=float, required=True)
    return parser


def _config(args, default_method, game=None):
    start = None
    if args.seed is not None and game is not None:
        rng = np.random.default_rng(args.seed)
        start = JointStrategy(rng.dirichlet(np.ones(game.m)), rng.dirichlet(np.ones(game.n)))
    return SolverConfig(
        method=METHODS[args.method] if args.method else default_method,
        step=args.step,
        max_iters=args.max_iters,
        tol=args.tol if args.tol is not None else SOLVER_TOL,
        record_trace=args.trace,
        start=start,
    )


def _print_trace(result, err):
    for k, res, gap in result.trace or ():
        print(f"trace {k} {fmt(res)} {fmt(gap)}", file=err)


def _cmd_solve(args, out, err):
    game = _load(args.file)
    zero_sum = isinstance(game, ZeroSumGame)
    default = Method.EXTRAGRADIENT if zero_sum else Method.KRASNOSELSKII_MANN
    config = _config(args, default, game)
    use_eg = zero_sum and config.method is not Method.FIXED_POINT
    try:
        result = solve_zero_sum(game, config=config) if use_eg else solve_bimatrix_heuristic(game, config=config)
    except NonConvergence as exc:
        print(serialize_result(exc.result), end="", file=out)
        _print_trace(exc.result, err)
        print(f"no convergence: {exc}", file=err)
        return EXIT_NONCONVERGENCE
    print(serialize_result(result), end="", file=out)
    _print_trace(result, err)
    return EXIT_OK


def _cmd_enumerate(args, out, err):
    game = _load(args.file)
    eqs = enumerate_equilibria(game)
    print(serialize_result(eqs), end="", file=out)
    if eqs.degenerate:
        print(f"degenerate: skipped {len(eqs.degenerate_skips)} singular supports", file=err)
    return EXIT_OK


def _cmd_verify(args, out, err):
    game = _load(args.file)
    z = JointStrategy(_csv(args.p), _csv(args.q))
    tol = args.tol if args.tol is not None else CHECK_TOL
    check = check_saddle if isinstance(game, ZeroSumGame) else check_nash
    ok, worst = check(game, z, tol)
    print(f"accepted: {'true' if ok else 'false'}", file=out)
    print(f"violation: {fmt(worst)}", file=out)
    print(f"residual: {fmt(nash_residual(game, None, z))}", file=out)
    return EXIT_OK if ok else EXIT_REJECTED


def _cmd_value(args, out, err):
    game = _load(args.file)
    if not isinstance(game, ZeroSumGame):
        raise InputError("value needs a zerosum game file")
    print(f"value: {fmt(zero_sum_value(game))}", file=out)
    return EXIT_OK


def _cmd_project(args, out, err):
    x = _csv(args.point)
    if args.set == "simplex":
        S = Simplex(x.size)
    elif args.set == "box":
        if args.lower is None or args.upper is None:
            raise InputError("box needs --lower and --upper")
        S = Box(_csv(args.lower), _csv(args.upper))
    else:
        if args.center is None or args.radius is None:
            raise InputError("ball needs --center and --radius")
        S = Ball(_csv(args.center), args.radius)
    print(f"point: {' '.join(fmt(v) for v in S.project(x))}", file=out)
    print(f"distance: {fmt(distance(S, x))}", file=out)
    return EXIT_OK


def _grid(args, game):
    if args.grid is None:
        return GridFunction(game.A)
    if args.grid < 2:
        raise InputError("--grid needs at least 2 points per edge")
    return GridFunction.bilinear(game.A, args.grid)


def _cmd_gap(args, out, err):
    game = _load(args.file)
    maxmin, minmax, gap = weak_duality_gap(_grid(args, game))
    print(f"maxmin: {fmt(maxmin)}\nminmax: {fmt(minmax)}\ngap: {fmt(gap)}", file=out)
    return EXIT_OK


def _cmd_witness(args, out, err):
    game = _load(args.file)
    config = _config(args, Method.EXTRAGRADIENT)
    try:
        w = dual_witness(_grid(args, game), args.alpha, config)
    except NonConvergence as exc:
        print(f"witness search inconclusive: {exc}", file=err)
        return EXIT_NONCONVERGENCE
    if isinstance(w, Infeasible):
        print("infeasible", file=out)
        if w.row is not None:
            print(f"row: {w.row}", file=out)
        else:
            print(f"row_mix: {' '.join(fmt(v) for v in w.row_mix)}", file=out)
            print(f"lower_bound: {fmt(w.lower_bound)}", file=out)
        return EXIT_REJECTED
    print(f"beta: {' '.join(fmt(v) for v in w.beta)}", file=out)
    print(f"guarantee: {fmt(w.guarantee)}", file=out)
    return EXIT_OK


COMMANDS = {
    "solve": _cmd_solve,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
    "value": _cmd_value,
    "project": _cmd_project,
    "gap": _cmd_gap,
    "witness": _cmd_witness,
}


def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return COMMANDS[args.command](args, out, err)
    except (InputError, GameError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
