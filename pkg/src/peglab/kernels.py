"""Batch sweeps over every fixed board of a given length.

These are the hot loops behind the exhaustive acceptance checks, the
lexicographic nim-value searches and the equivalence-class census: for a
length L they fill a table indexed by board bitmask (bit i = cell i) in
one bottom-up pass over increasing peg count.

Two interchangeable backends: numba-jitted kernels and a vectorised
numpy fallback.  Selection: PEGLAB_KERNELS=numba|numpy, default numba
when importable.  Results are byte-identical either way; the benchmark
in benchmarks/bench_kernels.py compares their speed.

A board window of three cells hides both hop directions in one xor:
peg,peg,hole <-> hole,hole,peg and hole,peg,peg <-> peg,hole,hole are
each `window ^ 0b111`.
"""
from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised via PEGLAB_KERNELS=numpy
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn
        if args and callable(args[0]):
            return args[0]
        return wrap


MAX_TABLE_LEN = 24


def backend() -> str:
    choice = os.environ.get("PEGLAB_KERNELS", "").strip().lower()
    if choice in ("numba", "numpy"):
        if choice == "numba" and not HAS_NUMBA:
            raise RuntimeError("PEGLAB_KERNELS=numba but numba is not installed")
        return choice
    return "numba" if HAS_NUMBA else "numpy"


def _popcounts(length: int) -> np.ndarray:
    masks = np.arange(1 << length, dtype=np.int64)
    pc = np.zeros(1 << length, dtype=np.uint8)
    for i in range(length):
        pc += ((masks >> i) & 1).astype(np.uint8)
    return pc


def _sweep_order(length: int) -> np.ndarray:
    """Masks sorted by peg count, so successors are always settled first."""
    return np.argsort(_popcounts(length), kind="stable").astype(np.int64)


# --- numba kernels ----------------------------------------------------------

@njit(cache=True)
def _nb_solvable(length, order, out):
    for n in range(order.size):
        m = order[n]
        if m == 0:
            continue
        pegs = 0
        for i in range(length):
            pegs += (m >> i) & 1
        if pegs == 1:
            out[m] = 1
            continue
        ok = 0
        for f in range(length - 2):
            w = (m >> f) & 7
            if w == 3 or w == 6:
                if out[m ^ (7 << f)] == 1:
                    ok = 1
                    break
        out[m] = ok


@njit(cache=True)
def _nb_min_pegs(length, order, out):
    for n in range(order.size):
        m = order[n]
        if m == 0:
            continue
        pegs = 0
        for i in range(length):
            pegs += (m >> i) & 1
        best = pegs
        moved = False
        for f in range(length - 2):
            w = (m >> f) & 7
            if w == 3 or w == 6:
                moved = True
                s = out[m ^ (7 << f)]
                if s < best:
                    best = s
        out[m] = best if moved else pegs


@njit(cache=True)
def _nb_grundy_single(length, order, out):
    for n in range(order.size):
        m = order[n]
        seen = np.uint64(0)
        for f in range(length - 2):
            w = (m >> f) & 7
            if w == 3 or w == 6:
                seen |= np.uint64(1) << np.uint64(out[m ^ (7 << f)])
        g = np.uint64(0)
        while (seen >> g) & np.uint64(1):
            g += np.uint64(1)
        out[m] = g


@njit(cache=True)
def _nb_grundy_multi(length, order, out):
    stack_board = np.empty(4096, dtype=np.int64)
    stack_pos = np.empty(4096, dtype=np.int64)
    for n in range(order.size):
        m = order[n]
        seen = np.uint64(0)
        for start in range(length):
            if not (m >> start) & 1:
                continue
            sp = 0
            stack_board[0] = m
            stack_pos[0] = start
            sp = 1
            while sp > 0:
                sp -= 1
                board = stack_board[sp]
                pos = stack_pos[sp]
                for d in (1, -1):
                    over = pos + d
                    to = pos + 2 * d
                    if to < 0 or to >= length:
                        continue
                    if not (board >> over) & 1 or (board >> to) & 1:
                        continue
                    nxt = (board ^ (1 << pos) ^ (1 << over)) | (1 << to)
                    seen |= np.uint64(1) << np.uint64(out[nxt])
                    if sp >= stack_board.size:
                        raise RuntimeError("chain stack overflow")
                    stack_board[sp] = nxt
                    stack_pos[sp] = to
                    sp += 1
        g = np.uint64(0)
        while (seen >> g) & np.uint64(1):
            g += np.uint64(1)
        out[m] = g


# --- numpy fallback ---------------------------------------------------------


def _np_windows(masks: np.ndarray, length: int):
    """Yield (legal, successor) for every 3-cell window position."""
    for f in range(length - 2):
        w = (masks >> f) & 7
        legal = (w == 3) | (w == 6)
        yield legal, masks ^ (7 << f)


def _np_by_popcount(length: int):
    pc = _popcounts(length)
    masks = np.arange(1 << length, dtype=np.int64)
    for v in range(1, length + 1):
        group = masks[pc == v]
        if group.size:
            yield v, group


def _np_solvable(length: int, out: np.ndarray) -> None:
    for pegs, group in _np_by_popcount(length):
        if pegs == 1:
            out[group] = 1
            continue
        acc = np.zeros(group.size, dtype=bool)
        for legal, succ in _np_windows(group, length):
            acc |= legal & (out[succ] == 1)
        out[group] = acc.astype(np.uint8)


def _np_min_pegs(length: int, out: np.ndarray) -> None:
    for pegs, group in _np_by_popcount(length):
        best = np.full(group.size, pegs, dtype=np.uint8)
        moved = np.zeros(group.size, dtype=bool)
        for legal, succ in _np_windows(group, length):
            vals = out[succ]
            np.minimum(best, np.where(legal, vals, pegs), out=best)
            moved |= legal
        out[group] = np.where(moved, best, pegs)


def _np_mex(seen: np.ndarray) -> np.ndarray:
    lowest_zero = ~seen & (seen + np.uint64(1))
    return np.log2(lowest_zero.astype(np.float64)).astype(np.uint8)


def _np_grundy_single(length: int, out: np.ndarray) -> None:
    for _, group in _np_by_popcount(length):
        seen = np.zeros(group.size, dtype=np.uint64)
        for legal, succ in _np_windows(group, length):
            bits = np.uint64(1) << out[succ].astype(np.uint64)
            seen |= np.where(legal, bits, np.uint64(0))
        out[group] = _np_mex(seen)


def _np_grundy_multi(length: int, out: np.ndarray) -> None:
    for _, group in _np_by_popcount(length):
        seen = np.zeros(group.size, dtype=np.uint64)
        # chain frontier: (owning row in `group`, current board, peg cell)
        own = np.repeat(np.arange(group.size, dtype=np.int64), length)
        boards = np.repeat(group, length)
        pos = np.tile(np.arange(length, dtype=np.int64), group.size)
        keep = ((boards >> pos) & 1).astype(bool)
        own, boards, pos = own[keep], boards[keep], pos[keep]
        while own.size:
            next_parts = []
            for d in (1, -1):
                over = pos + d
                to = pos + 2 * d
                legal = (to >= 0) & (to < length)
                legal &= ((boards >> np.clip(over, 0, length - 1)) & 1).astype(bool)
                legal &= (((boards >> np.clip(to, 0, length - 1)) & 1) == 0)
                if not legal.any():
                    continue
                o, b, p, t = own[legal], boards[legal], pos[legal], to[legal]
                nxt = (b ^ (1 << p) ^ (1 << (p + d))) | (1 << t)
                np.bitwise_or.at(seen, o,
                                 np.uint64(1) << out[nxt].astype(np.uint64))
                next_parts.append((o, nxt, t))
            if not next_parts:
                break
            own = np.concatenate([q[0] for q in next_parts])
            boards = np.concatenate([q[1] for q in next_parts])
            pos = np.concatenate([q[2] for q in next_parts])
        out[group] = _np_mex(seen)


# --- public API -------------------------------------------------------------

_CACHE: dict[tuple[str, int, str], np.ndarray] = {}


def _table(kind: str, length: int, backend_name: str | None = None) -> np.ndarray:
    if not (1 <= length <= MAX_TABLE_LEN):
        raise ValueError(f"table length must be in 1..{MAX_TABLE_LEN}")
    which = backend_name or backend()
    key = (kind, length, which)
    cached = _CACHE.get(key)
    if cached is not None:
        return cached
    out = np.zeros(1 << length, dtype=np.uint8)
    if which == "numba":
        order = _sweep_order(length)
        {"solvable": _nb_solvable, "minpegs": _nb_min_pegs,
         "grundy_s": _nb_grundy_single, "grundy_m": _nb_grundy_multi,
         }[kind](length, order, out)
    else:
        {"solvable": _np_solvable, "minpegs": _np_min_pegs,
         "grundy_s": _np_grundy_single, "grundy_m": _np_grundy_multi,
         }[kind](length, out)
    _CACHE[key] = out
    return out


def solvable_table(length: int, backend_name: str | None = None) -> np.ndarray:
    """out[mask] == 1 iff the board reduces to a single peg."""
    return _table("solvable", length, backend_name)


def min_pegs_table(length: int, backend_name: str | None = None) -> np.ndarray:
    """out[mask] = fewest pegs reachable from the board (0 for the empty board)."""
    return _table("minpegs", length, backend_name)


def grundy_table(length: int, multihop: bool,
                 backend_name: str | None = None) -> np.ndarray:
    """out[mask] = fixed-board grundy value under the chosen variant."""
    return _table("grundy_m" if multihop else "grundy_s", length, backend_name)
