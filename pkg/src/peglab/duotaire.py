"""Sprague-Grundy engine for peg duotaire.

The grundy value of a position is the mex of the grundy values of its
options (single hops or multihop chains, per variant); terminal positions
have value 0.  Open-mode positions are evaluated on the unbounded line,
fixed-mode positions on the literal board.  Values are memoized per
(variant, mode, canonical word); the two modes never share entries.
"""
from __future__ import annotations

import re
from typing import Iterable

from .bits import mask_to_word, trim, word_to_mask
from .board import (
    BoardMode,
    GameVariant,
    Move,
    Position,
    multihop_options,
    parse_position,
    single_hops,
)

NimValue = int

_VARIANT_CHAR = {GameVariant.SINGLE_HOP: "s", GameVariant.MULTI_HOP: "m"}
_MODE_CHAR = {BoardMode.FIXED: "f", BoardMode.OPEN: "o"}


class NoWinningMoveError(ValueError):
    """Raised when a winning move is requested from a P-position."""


def nim_sum(a: NimValue, b: NimValue) -> NimValue:
    """Binary addition without carrying (bitwise xor)."""
    return a ^ b


class MemoStore:
    """Grundy memo keyed by (variant, mode, canonical board word).

    Values are pure functions of their key, so concurrent insert-if-absent
    of identical values is harmless; entries never change once written.
    """

    def __init__(self) -> None:
        self._tables: dict[tuple[str, str], dict[int, int]] = {
            (v, m): {} for v in "sm" for m in "fo"
        }

    def table(self, variant: GameVariant, mode: BoardMode) -> dict[int, int]:
        return self._tables[(_VARIANT_CHAR[variant], _MODE_CHAR[mode])]

    def __len__(self) -> int:
        return sum(len(t) for t in self._tables.values())

    def records(self) -> list[tuple[str, str, str, int]]:
        """All entries as (variant, mode, word, value), sorted by key."""
        out = []
        for (v, m), table in self._tables.items():
            for key, value in table.items():
                length = key & 0x3F
                out.append((v, m, mask_to_word(key >> 6, length), value))
        out.sort()
        return out

    def load_records(self, records: Iterable[tuple[str, str, str, int]]) -> None:
        for v, m, word, value in records:
            mask = word_to_mask(word)
            self._tables[(v, m)][(mask << 6) | len(word)] = value


_DEFAULT_STORE = MemoStore()


def default_store() -> MemoStore:
    return _DEFAULT_STORE


def _key(mask: int, length: int) -> int:
    return (mask << 6) | length


def _grundy_mask(mask: int, length: int, multihop: bool, fixed: bool,
                 memo: dict[int, int]) -> int:
    """Core recursion over bitboards.

    Open boards are canonical (trimmed); one move can land at most one
    cell past the outermost peg, so two explicit exterior holes suffice
    for move generation.
    """
    if mask == 0:
        return 0
    if length >= 64:
        raise ValueError("board too long for the engine memo (>= 64 cells)")
    key = _key(mask, length)
    val = memo.get(key)
    if val is not None:
        return val
    if fixed:
        board0, span = mask, length
    else:
        board0, span = mask << 2, length + 4
    seen = 0
    visited: set[int] = set()
    for start in range(span):
        if not (board0 >> start) & 1:
            continue
        stack = [(board0, start)]
        while stack:
            board, pos = stack.pop()
            for d in (1, -1):
                over, to = pos + d, pos + 2 * d
                if not (0 <= to < span):
                    continue
                if not (board >> over) & 1 or (board >> to) & 1:
                    continue
                nxt = (board ^ (1 << pos) ^ (1 << over)) | (1 << to)
                if fixed:
                    okey = _key(nxt, span)
                    if okey not in visited:
                        visited.add(okey)
                        seen |= 1 << _grundy_mask(nxt, span, multihop, True, memo)
                else:
                    tmask, tlen, _ = trim(nxt, span)
                    okey = _key(tmask, tlen)
                    if okey not in visited:
                        visited.add(okey)
                        seen |= 1 << _grundy_mask(tmask, tlen, multihop, False, memo)
                if multihop:
                    stack.append((nxt, to))
    val = 0
    while (seen >> val) & 1:
        val += 1
    memo[key] = val
    return val


def grundy(p: Position, variant: GameVariant,
           store: MemoStore | None = None) -> NimValue:
    """Grundy value of a position under the given variant."""
    memo = (_DEFAULT_STORE if store is None else store).table(variant, p.mode)
    mask = word_to_mask(p.word)
    return _grundy_mask(mask, len(p.cells), variant is GameVariant.MULTI_HOP,
                        p.mode is BoardMode.FIXED, memo)


def grundy_word(word: str, variant: GameVariant, mode: BoardMode,
                store: MemoStore | None = None) -> NimValue:
    return grundy(parse_position(word, mode) if word else
                  Position((), mode), variant, store)


def is_p_position(p: Position, variant: GameVariant,
                  store: MemoStore | None = None) -> bool:
    return grundy(p, variant, store) == 0


_SEPARATOR = re.compile(r"0(?:01)*00")


def _stabilized_fixed(p: Position) -> Position:
    """Fixed board whose value equals the open position's (peg-count padding)."""
    pad = "0" * max(1, p.peg_count)
    return parse_position(pad + p.word + pad, BoardMode.FIXED)


def decompose(p: Position) -> list[Position]:
    """Split at every non-interacting gap of the form 0(01)*00.

    Play cannot cross such a gap, so the position is the disjunctive sum
    of the fixed-board components x0 and 0y around each separator
    (scanned left to right, leftmost-longest).  Components with no pegs
    are dropped; a position with no separator is returned whole.
    """
    if p.mode is BoardMode.OPEN:
        if not _SEPARATOR.search(p.word):
            return [p]
        p = _stabilized_fixed(p)
    parts: list[Position] = []
    rest = p.word
    while True:
        m = _SEPARATOR.search(rest)
        if not m:
            if "1" in rest:
                parts.append(parse_position(rest, BoardMode.FIXED))
            break
        left = rest[: m.start()] + "0"
        if "1" in left:
            parts.append(parse_position(left, BoardMode.FIXED))
        rest = "0" + rest[m.end():]
    return parts


def grundy_decomposed(p: Position, variant: GameVariant,
                      store: MemoStore | None = None) -> NimValue:
    """Nim-sum of the components' grundy values; equals grundy(p, variant)."""
    total = 0
    for part in decompose(p):
        total ^= grundy(part, variant, store)
    return total


def options(p: Position, variant: GameVariant) -> list[tuple[Move, Position]]:
    if variant is GameVariant.SINGLE_HOP:
        return single_hops(p)
    return multihop_options(p)


def best_moves(p: Position, variant: GameVariant,
               store: MemoStore | None = None) -> list[Move]:
    """All moves that land on a position of grundy 0.

    Only meaningful from an N-position; raises NoWinningMoveError when the
    position already has grundy 0 (every move then loses).
    """
    if grundy(p, variant, store) == 0:
        raise NoWinningMoveError("position has grundy 0: no winning move")
    return [move for move, result in options(p, variant)
            if grundy(result, variant, store) == 0]
