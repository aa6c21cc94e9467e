"""Boards, hops and move generation for 1D peg solitaire / duotaire.

Cells are written '1' (peg) and '0' (hole), leftmost cell first.  A board
is either Fixed, meaning the text is the entire board and nothing exists
past its ends, or Open, meaning the line continues with holes indefinitely
on both sides.  Open positions are stored canonically: trimmed to the peg
extent, with ``origin_offset`` recording where cell 0 of the trimmed board
sits on the original coordinate line.

Moves are hops: a peg jumps over an adjacent peg into the hole beyond and
the jumped peg is removed.  In the multihop variant one move is a chain of
hops by the same peg, which may turn around and may stop after any hop.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class BoardMode(Enum):
    FIXED = "fixed"
    OPEN = "open"


class GameVariant(Enum):
    SINGLE_HOP = "single"
    MULTI_HOP = "multi"


class ParseError(ValueError):
    pass


class IllegalMoveError(ValueError):
    pass


@dataclass(frozen=True)
class Hop:
    """One jump: peg at ``from_`` passes over ``over`` and lands on ``to``."""

    from_: int
    over: int
    to: int

    def __post_init__(self) -> None:
        if abs(self.to - self.from_) != 2 or self.over * 2 != self.from_ + self.to:
            raise IllegalMoveError(f"malformed hop {self.from_}>{self.over}>{self.to}")


@dataclass(frozen=True)
class Move:
    hops: tuple[Hop, ...]
    variant: GameVariant

    def __post_init__(self) -> None:
        if not self.hops:
            raise IllegalMoveError("a move needs at least one hop")
        if self.variant is GameVariant.SINGLE_HOP and len(self.hops) != 1:
            raise IllegalMoveError("single-hop moves have exactly one hop")
        for prev, nxt in zip(self.hops, self.hops[1:]):
            if prev.to != nxt.from_:
                raise IllegalMoveError(
                    f"broken chain: hop lands on {prev.to} but next starts at {nxt.from_}"
                )


def single_hop_move(from_: int, over: int, to: int) -> Move:
    return Move((Hop(from_, over, to),), GameVariant.SINGLE_HOP)


def chain_move(hops: list[tuple[int, int, int]]) -> Move:
    return Move(tuple(Hop(*h) for h in hops), GameVariant.MULTI_HOP)


@dataclass(frozen=True)
class Position:
    """An immutable board.  ``cells[i]`` is True for a peg.

    Open positions are canonical: cells start and end with a peg (or are
    empty for the terminal all-hole board).  Fixed positions keep their
    text verbatim and origin_offset is always 0.
    """

    cells: tuple[bool, ...]
    mode: BoardMode
    origin_offset: int = 0

    @property
    def word(self) -> str:
        return "".join("1" if c else "0" for c in self.cells)

    @property
    def peg_count(self) -> int:
        return sum(self.cells)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        tag = "F" if self.mode is BoardMode.FIXED else f"O@{self.origin_offset}"
        return f"Position({self.word!r}, {tag})"


def _canonical_open(cells: tuple[bool, ...], origin: int) -> Position:
    lo = 0
    hi = len(cells)
    while lo < hi and not cells[lo]:
        lo += 1
    while hi > lo and not cells[hi - 1]:
        hi -= 1
    if lo == hi:
        return Position((), BoardMode.OPEN, 0)
    return Position(cells[lo:hi], BoardMode.OPEN, origin + lo)


def parse_position(text: str, mode: BoardMode) -> Position:
    """Parse a '0'/'1' string; Open mode trims to the peg extent."""
    if not text:
        raise ParseError("empty board text")
    cells = []
    for ch in text:
        if ch not in "01":
            raise ParseError(f"invalid board character {ch!r}")
        cells.append(ch == "1")
    if mode is BoardMode.FIXED:
        return Position(tuple(cells), mode)
    return _canonical_open(tuple(cells), 0)


def render(p: Position) -> str:
    return p.word


def _padded(p: Position, pad: int) -> tuple[tuple[bool, ...], int]:
    """Open board with ``pad`` exterior holes made explicit on both sides.

    Returns (cells, shift) where index i of cells is coordinate i - shift
    in p's own frame.
    """
    return (False,) * pad + p.cells + (False,) * pad, pad


def _hop_targets(cells: tuple[bool, ...], f: int) -> list[tuple[int, int, int]]:
    out = []
    n = len(cells)
    for d in (1, -1):
        o, t = f + d, f + 2 * d
        if 0 <= t < n and cells[o] and not cells[t]:
            out.append((f, o, t))
    return out


def single_hops(p: Position) -> list[tuple[Move, Position]]:
    """All legal single hops, paired with the position they produce."""
    if p.mode is BoardMode.FIXED:
        cells, shift = p.cells, 0
    else:
        cells, shift = _padded(p, 2)
    out = []
    for f in range(len(cells)):
        if not cells[f]:
            continue
        for (ff, o, t) in _hop_targets(cells, f):
            nxt = list(cells)
            nxt[ff] = nxt[o] = False
            nxt[t] = True
            move = single_hop_move(ff - shift, o - shift, t - shift)
            if p.mode is BoardMode.FIXED:
                out.append((move, Position(tuple(nxt), BoardMode.FIXED)))
            else:
                out.append((move, _canonical_open(tuple(nxt), p.origin_offset - shift)))
    return out


def multihop_options(p: Position) -> list[tuple[Move, Position]]:
    """All distinct positions reachable by one chain of hops of one peg.

    The chain may change direction and may stop after any hop; every
    intermediate stop is an option.  Options are deduplicated by resulting
    position, keeping one witnessing move each.
    """
    if p.mode is BoardMode.FIXED:
        cells, shift = p.cells, 0
    else:
        # A hop lands at most one cell past the outermost static peg, so
        # two explicit exterior holes cover any chain.
        cells, shift = _padded(p, 2)
    seen: dict[Position, Move] = {}
    order: list[Position] = []

    def explore(board: list[bool], pos: int, hops: list[tuple[int, int, int]]) -> None:
        for d in (1, -1):
            o, t = pos + d, pos + 2 * d
            if not (0 <= t < len(board)) or not board[o] or board[t]:
                continue
            board[pos] = board[o] = False
            board[t] = True
            hops.append((pos - shift, o - shift, t - shift))
            if p.mode is BoardMode.FIXED:
                result = Position(tuple(board), BoardMode.FIXED)
            else:
                result = _canonical_open(tuple(board), p.origin_offset - shift)
            if result not in seen:
                seen[result] = chain_move(hops)
                order.append(result)
            explore(board, t, hops)
            hops.pop()
            board[t] = False
            board[pos] = board[o] = True

    for f in range(len(cells)):
        if cells[f]:
            explore(list(cells), f, [])
    return [(seen[r], r) for r in order]


def apply_move(p: Position, m: Move) -> Position:
    """Replay a move, validating every hop; raises IllegalMoveError."""
    if p.mode is BoardMode.FIXED:
        cells, shift = list(p.cells), 0
    else:
        lo = min(min(h.from_, h.to) for h in m.hops)
        hi = max(max(h.from_, h.to) for h in m.hops)
        pad = max(2, -lo, hi - len(p.cells) + 1)
        padded, shift = _padded(p, pad)
        cells = list(padded)
    n = len(cells)
    for hop in m.hops:
        f, o, t = hop.from_ + shift, hop.over + shift, hop.to + shift
        if not (0 <= f < n and 0 <= t < n):
            raise IllegalMoveError(f"hop {hop} leaves the board")
        if not cells[f]:
            raise IllegalMoveError(f"hop {hop}: no peg at {hop.from_}")
        if not cells[o]:
            raise IllegalMoveError(f"hop {hop}: no peg to jump at {hop.over}")
        if cells[t]:
            raise IllegalMoveError(f"hop {hop}: landing cell {hop.to} occupied")
        cells[f] = cells[o] = False
        cells[t] = True
    if p.mode is BoardMode.FIXED:
        return Position(tuple(cells), BoardMode.FIXED)
    return _canonical_open(tuple(cells), p.origin_offset - shift)


def unhops(p: Position) -> list[Position]:
    """All positions from which a single hop produces p (reverse play)."""
    if p.mode is BoardMode.FIXED:
        cells, shift = p.cells, 0
    else:
        cells, shift = _padded(p, 2)
    out = []
    n = len(cells)
    for t in range(n):
        if not cells[t]:
            continue
        for d in (1, -1):
            o, f = t + d, t + 2 * d
            if not (0 <= f < n) or cells[o] or cells[f]:
                continue
            prev = list(cells)
            prev[t] = False
            prev[o] = prev[f] = True
            if p.mode is BoardMode.FIXED:
                out.append(Position(tuple(prev), BoardMode.FIXED))
            else:
                out.append(_canonical_open(tuple(prev), p.origin_offset - shift))
    return out


def mirror(p: Position) -> Position:
    """Reverse the cell sequence (the mirror-image board)."""
    if p.mode is BoardMode.FIXED:
        return Position(p.cells[::-1], BoardMode.FIXED)
    return Position(p.cells[::-1], BoardMode.OPEN,
                    -(p.origin_offset + len(p.cells) - 1))


def mirror_move(m: Move, length: int) -> Move:
    """The move m as seen on the mirrored board of the given length."""
    hops = tuple(Hop(length - 1 - h.from_, length - 1 - h.over, length - 1 - h.to)
                 for h in m.hops)
    return Move(hops, m.variant)
