"""Command-line entry point: ``wincore solve | verify | wcore | generate | bench``.

Exit codes: 0 success, 1 usage, 2 unreadable or malformed input, 3 invalid
game (dangling successor, empty successor list), 4 verification mismatch,
5 product size guard exceeded.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import time

from .bench import ALGORITHMS, incomplete_rate, make_instances, median_times, run_bench
from .core import TraceEntry, compute_B, partial_solve, solve_via_core, winning_core_exact
from .core.product import ProductTooLarge
from .game.model import InvalidGameError, ParityGame, StateSet
from .game.pgsolver import PGSolverSyntaxError, parse_pgsolver, serialize_pgsolver
from .generators import FAMILIES
from .solvers import parse_regions, zielonka_solve

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_MISMATCH = 4
EXIT_SIZE = 5

SEED_ENV = "WINCORE_SEED"

# parameters each family takes, in call order
FAMILY_PARAMS = {
    "random": ("n", "d", "l", "u"),
    "clique": ("n",),
    "ladder": ("k",),
    "mc_ladder": ("k",),
    "recursive_ladder": ("k",),
    "jurdzinski": ("layers", "blocks"),
}


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1 instead of 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load_game(path: str, add_self_loops: bool = False) -> ParityGame:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"cannot read {path}: {exc.strerror}")
    try:
        return parse_pgsolver(text, add_self_loops=add_self_loops)
    except PGSolverSyntaxError as exc:
        raise CliError(EXIT_PARSE, f"{path}: {exc}")
    except InvalidGameError as exc:
        raise CliError(EXIT_INVALID, f"{path}: {exc}")


def format_set(states: StateSet) -> str:
    return "{" + ", ".join(map(str, states.ids())) + "}"


def format_trace(iterates) -> list[str]:
    return [f"B^{i} = {format_set(b)}" for i, b in enumerate(iterates)]


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw, 0)
    except ValueError:
        raise CliError(EXIT_USAGE, f"{SEED_ENV} must be an integer, got {raw!r}")


def cmd_solve(args) -> int:
    game = _load_game(args.file, args.add_self_loops)
    trace: list[TraceEntry] | None = [] if args.trace else None
    start = time.monotonic()
    try:
        if args.algo == "wc-partial":
            regions = partial_solve(game, trace=trace)
        elif args.algo == "wc-exact":
            regions = solve_via_core(game, limit=args.limit)
        else:
            regions = zielonka_solve(game)
    except ProductTooLarge as exc:
        raise CliError(EXIT_SIZE, str(exc))
    elapsed = (time.monotonic() - start) * 1000.0
    if trace is not None:
        for entry in trace:
            print(f"# round {entry.round} player {entry.player}")
            for line in format_trace(entry.iterates):
                print(line)
    elif args.trace:
        print(f"--trace has no effect with {args.algo}", file=sys.stderr)
    if args.emit == "summary":
        print(
            f"n={game.n} m={game.m} d={game.d} algo={args.algo} "
            f"w0={len(regions.win0)} w1={len(regions.win1)} unknown={len(regions.unknown)} "
            f"time_ms={elapsed:.3f}"
        )
    else:
        # the partial solver always reports U, even when empty
        sys.stdout.write(regions.to_text(with_unknown=args.algo == "wc-partial" or None))
    return EXIT_OK


def cmd_verify(args) -> int:
    game = _load_game(args.game, args.add_self_loops)
    try:
        with open(args.regions) as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"cannot read {args.regions}: {exc.strerror}")
    try:
        claimed, had_u = parse_regions(text, game.n)
    except ValueError as exc:
        raise CliError(EXIT_PARSE, f"{args.regions}: {exc}")
    truth = zielonka_solve(game)
    partial = had_u or bool(claimed.unknown)
    problems = []
    for j in (0, 1):
        got, want = claimed.win(j), truth.win(j)
        extra = got - want
        if extra:
            problems.append(f"W{j} claims states won by the opponent: {extra.ids()}")
        if not partial and want - got:
            problems.append(f"W{j} misses {(want - got).ids()}")
    if problems:
        for p in problems:
            print(p, file=sys.stderr)
        return EXIT_MISMATCH
    print("ok (containment)" if partial else "ok")
    return EXIT_OK


def cmd_wcore(args) -> int:
    game = _load_game(args.file, args.add_self_loops)
    j = args.player
    if args.mode == "exact":
        try:
            core = winning_core_exact(game, j, limit=args.limit)
        except ProductTooLarge as exc:
            raise CliError(EXIT_SIZE, str(exc))
        if args.trace:
            print("--trace has no effect with --mode exact", file=sys.stderr)
    else:
        trace: list[StateSet] | None = [] if args.trace else None
        try:
            core = compute_B(game, j, mode=args.mode, trace=trace)
        except ProductTooLarge as exc:
            raise CliError(EXIT_SIZE, str(exc))
        if trace is not None:
            for line in format_trace(trace):
                print(line)
    print(f"A{j}: " + " ".join(map(str, core.ids())))
    return EXIT_OK


def cmd_generate(args) -> int:
    wanted = FAMILY_PARAMS[args.family]
    kw = {}
    for name in wanted:
        value = getattr(args, name)
        if value is None:
            raise CliError(EXIT_USAGE, f"family {args.family} needs --{name}")
        kw[name] = value
    if args.family == "random":
        kw["seed"] = _seed(args)
    try:
        game = FAMILIES[args.family](**kw)
    except ValueError as exc:
        raise CliError(EXIT_USAGE, str(exc))
    text = serialize_pgsolver(game)
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)
    return EXIT_OK


def cmd_bench(args) -> int:
    grid = {}
    for name in FAMILY_PARAMS[args.family]:
        values = getattr(args, name)
        if not values:
            raise CliError(EXIT_USAGE, f"family {args.family} needs --{name}")
        grid[name] = values
    seeds = None
    if args.family == "random":
        base = _seed(args)
        seeds = range(base, base + args.count)
    instances = make_instances(args.family, grid, seeds)
    try:
        records = run_bench(instances, args.algo, args.timeout, args.reps, args.output, args.workers)
    except OSError as exc:
        raise CliError(EXIT_PARSE, str(exc))
    for (family, params, algo), t in sorted(median_times(records).items()):
        print(f"{family} {params} {algo}: median {t:.3f} ms")
    bad = [r for r in records if r.status != "ok"]
    if bad:
        print(f"{len(bad)} runs did not finish (timeout or error)")
    if "wc-partial" in args.algo:
        miss, total = incomplete_rate(records)
        if total:
            print(f"wc-partial incomplete: {miss}/{total} ({100.0 * miss / total:.2f}%)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wincore", description="Parity games via winning cores.")
    p.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = p.add_subparsers(dest="command", required=True)

    def game_input(sp):
        sp.add_argument("--add-self-loops", action="store_true",
                        help="repair states without successors instead of rejecting the game")

    s = sub.add_parser("solve", help="solve a game in PGSolver format")
    s.add_argument("file")
    s.add_argument("--algo", choices=sorted(ALGORITHMS), default="wc-partial")
    s.add_argument("--emit", choices=("regions", "summary"), default="regions")
    s.add_argument("--trace", action="store_true", help="print the B-iterates of every round")
    s.add_argument("--limit", type=int, default=5 * 10**7, help="product size guard for wc-exact")
    game_input(s)
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("verify", help="check claimed regions against Zielonka")
    s.add_argument("game")
    s.add_argument("regions")
    game_input(s)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("wcore", help="winning core approximation or exact core for one player")
    s.add_argument("file")
    s.add_argument("--player", type=int, choices=(0, 1), default=0)
    s.add_argument("--mode", choices=("thresholds", "naive", "exact"), default="thresholds")
    s.add_argument("--trace", action="store_true")
    s.add_argument("--limit", type=int, default=5 * 10**7)
    game_input(s)
    s.set_defaults(func=cmd_wcore)

    s = sub.add_parser("generate", help="write a generated game in PGSolver format")
    s.add_argument("family", choices=sorted(FAMILIES))
    for name in ("n", "d", "l", "u", "k", "layers", "blocks"):
        s.add_argument(f"--{name}", type=int)
    s.add_argument("--seed", type=int, help=f"random family seed (default ${SEED_ENV} or 0)")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("bench", help="benchmark sweep with CSV output")
    s.add_argument("family", choices=sorted(FAMILIES))
    for name in ("n", "d", "l", "u", "k", "layers", "blocks"):
        s.add_argument(f"--{name}", type=int, nargs="+")
    s.add_argument("--algo", nargs="+", choices=sorted(ALGORITHMS), default=["wc-partial", "zielonka"])
    s.add_argument("--seed", type=int, help=f"first seed (default ${SEED_ENV} or 0)")
    s.add_argument("--count", type=int, default=1, help="random games per parameter combination")
    s.add_argument("--timeout", type=float, default=None, help="seconds per run")
    s.add_argument("--reps", type=int, default=1)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("-o", "--output", help="CSV path")
    s.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"wincore: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
