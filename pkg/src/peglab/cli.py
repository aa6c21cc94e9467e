"""Command-line interface.

Exit codes: 0 success, 1 domain error (unsolvable board, P-position,
verification failure), 2 usage error.
"""
from __future__ import annotations

import argparse
import sys

from .board import BoardMode, GameVariant, Move, ParseError, parse_position
from .duotaire import NoWinningMoveError, best_moves
from .duotaire import grundy as grundy_value
from .probes import first_position_with_value
from .solver import NotSolvableError, is_solvable, min_pegs, solve_to_one
from .verify import SUITES, run_suite


def _format_move(move: Move) -> str:
    return " ".join(f"{h.from_}>{h.over}>{h.to}" for h in move.hops)


def _board_arg(text: str, mode: BoardMode):
    try:
        return parse_position(text, mode)
    except ParseError as exc:
        raise SystemExit(f"error: {exc}") from None


def _add_variant_mode(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--variant", choices=["single", "multi"], default="multi")
    sub.add_argument("--mode", choices=["fixed", "open"], default="open")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="peglab",
        description="1D peg solitaire solver and peg duotaire engine")
    commands = parser.add_subparsers(dest="command", required=True)

    p_solve = commands.add_parser("solve", help="reduce a board to one peg")
    p_solve.add_argument("board")

    p_min = commands.add_parser("minpegs", help="minimum reachable peg count")
    p_min.add_argument("board")

    p_grundy = commands.add_parser("grundy", help="nim-value of a board")
    p_grundy.add_argument("board")
    _add_variant_mode(p_grundy)

    p_best = commands.add_parser("best", help="winning moves from a board")
    p_best.add_argument("board")
    _add_variant_mode(p_best)

    p_search = commands.add_parser(
        "search-first", help="lexicographically first boards per nim-value")
    p_search.add_argument("--variant", choices=["single", "multi"], default="single")
    p_search.add_argument("--max-g", type=int, default=8)
    p_search.add_argument("--max-len", type=int, default=19)

    p_verify = commands.add_parser("verify", help="reproduce published results")
    p_verify.add_argument("suite", choices=sorted(SUITES) + ["all"])

    p_serve = commands.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--port", type=int, default=8080)
    p_serve.add_argument("--cache", default=None,
                         help="grundy cache file (env PEGLAB_CACHE overrides)")
    p_serve.add_argument("--ui", default=None, help="directory with the web UI")

    args = parser.parse_args(argv)

    if args.command == "solve":
        board = _board_arg(args.board, BoardMode.FIXED)
        if not is_solvable(board):
            print(f"{board.word} is not solvable to one peg", file=sys.stderr)
            return 1
        for move in solve_to_one(board):
            print(_format_move(move))
        return 0

    if args.command == "minpegs":
        board = _board_arg(args.board, BoardMode.FIXED)
        try:
            k, plan = min_pegs(board)
        except NotSolvableError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        print(f"minimum pegs: {k}")
        print("segments:", " ".join(f"[{a},{b})" for a, b in plan.segments))
        for move in plan.moves:
            print(_format_move(move))
        return 0

    if args.command == "grundy":
        board = _board_arg(args.board, BoardMode(args.mode))
        print(grundy_value(board, GameVariant(args.variant)))
        return 0

    if args.command == "best":
        board = _board_arg(args.board, BoardMode(args.mode))
        try:
            winning = best_moves(board, GameVariant(args.variant))
        except NoWinningMoveError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        for move in winning:
            print(_format_move(move))
        return 0

    if args.command == "search-first":
        variant = GameVariant(args.variant)
        for g in range(args.max_g + 1):
            word = first_position_with_value(g, variant, args.max_len)
            print(f"{g}\t{word if word else '<not found within bound>'}")
        return 0

    if args.command == "verify":
        return 0 if run_suite(args.suite, print) else 1

    if args.command == "serve":
        from .service import Service

        service = Service(port=args.port, cache_path=args.cache, ui_dir=args.ui)
        print(f"serving on port {service.port}", flush=True)
        try:
            service.serve_forever()
        except KeyboardInterrupt:
            service.shutdown()
        return 0

    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
