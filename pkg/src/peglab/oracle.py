"""Exhaustive-search oracles used to check the clever algorithms.

Plain depth-first search over all hop sequences with a per-invocation
memo on positions.  Deliberately independent of the automaton, the stage
classifier and the batch kernels.
"""
from __future__ import annotations

from .bits import word_to_mask
from .board import BoardMode, Position

DEFAULT_MAX_LEN = 16


def _check(p: Position, max_len: int) -> tuple[int, int]:
    if p.mode is not BoardMode.FIXED:
        raise ValueError("oracles take fixed-mode boards")
    if len(p.cells) > max_len:
        raise ValueError(f"board longer than the oracle bound ({max_len})")
    return word_to_mask(p.word), len(p.cells)


def _successors(mask: int, length: int) -> list[int]:
    out = []
    for f in range(length):
        if not (mask >> f) & 1:
            continue
        for d in (1, -1):
            over, to = f + d, f + 2 * d
            if 0 <= to < length and (mask >> over) & 1 and not (mask >> to) & 1:
                out.append((mask ^ (1 << f) ^ (1 << over)) | (1 << to))
    return out


def brute_force_solvable(p: Position, max_len: int = DEFAULT_MAX_LEN) -> bool:
    """Can the board reach exactly one peg?  Exhaustive, memoized DFS."""
    mask, length = _check(p, max_len)
    memo: dict[int, bool] = {}

    def walk(m: int) -> bool:
        if m.bit_count() == 1:
            return True
        cached = memo.get(m)
        if cached is not None:
            return cached
        result = any(walk(s) for s in _successors(m, length))
        memo[m] = result
        return result

    return mask != 0 and walk(mask)


def brute_force_min_pegs(p: Position, max_len: int = DEFAULT_MAX_LEN) -> int:
    """Fewest pegs reachable by any hop sequence.  Exhaustive, memoized DFS."""
    mask, length = _check(p, max_len)
    if mask == 0:
        raise ValueError("no pegs on the board")
    memo: dict[int, int] = {}

    def walk(m: int) -> int:
        cached = memo.get(m)
        if cached is not None:
            return cached
        succ = _successors(m, length)
        best = m.bit_count() if not succ else min(walk(s) for s in succ)
        memo[m] = best
        return best

    return walk(mask)
