"""Solvability, constructive strategies, and minimum-peg reduction.

is_solvable recognises 0* L 0* with the automaton.  solve_to_one rebuilds
the reverse-play derivation by classifying the trimmed board into one of
the five derivation stages (or a mirror image) and emitting the hops in
forward order - linear work, no search.  min_pegs runs a shortest path
over the layered automaton graph: reading arcs advance one cell, restart
arcs close a segment, and a shortest (s,0)->(s,n) path of length n+k
partitions the board into k independently solvable segments.
"""
from __future__ import annotations

import bisect
import re
from dataclasses import dataclass

from .board import (
    BoardMode,
    GameVariant,
    Move,
    Position,
    apply_move,
    parse_position,
    single_hop_move,
)
from .nfa import Matcher, build_solvable_nfa


class NotSolvableError(ValueError):
    pass


@dataclass(frozen=True)
class ReductionPlan:
    """A segment partition plus the moves realising the minimum peg count.

    Most segments are words of 0*L0* reduced in place; a segment may also
    be a bare adjacent peg pair whose single hop lands on a cell the
    neighbouring segment vacated, which is why moves are emitted in
    dependency order rather than strictly left to right.
    """

    segments: tuple[tuple[int, int], ...]
    moves: tuple[Move, ...]
    final_peg_count: int


def _require_fixed(p: Position, who: str) -> None:
    if p.mode is not BoardMode.FIXED:
        raise ValueError(f"{who} works on fixed-mode boards")


_MATCHER: Matcher | None = None


def _matcher() -> Matcher:
    global _MATCHER
    if _MATCHER is None:
        _MATCHER = Matcher(build_solvable_nfa())
    return _MATCHER


def is_solvable(p: Position) -> bool:
    """True when the literal board can be reduced to a single peg."""
    _require_fixed(p, "is_solvable")
    return _matcher().accepts(p.word)


# --- constructive one-peg strategy ----------------------------------------

_STAGE1 = re.compile(r"10((?:10)*)11")          # rightward ladder
_STAGE2 = re.compile(r"11((?:01)*)00((?:10)*)11")
_STAGE3 = re.compile(r"11((?:01)*)((?:11)+)00((?:10)*)11")
_STAGE4 = re.compile(r"11((?:01)*)((?:11)*)01")
_STAGE5 = re.compile(r"11((?:01)*)((?:11)*)1011((?:10)*)11")
_MIRROR3 = re.compile(r"11((?:01)*)00((?:11)+)((?:10)*)11")
_MIRROR5 = re.compile(r"11((?:01)*)1101((?:11)*)((?:10)*)11")


def _stage1_hops(r: int) -> list[tuple[int, int, int]]:
    # 10(10)^r 11: collapse the trailing pair leftward, then the final hop
    hops = [(2 * k + 3, 2 * k + 2, 2 * k + 1) for k in range(r, 0, -1)]
    hops.append((3, 2, 1))
    hops.append((0, 1, 2))
    return hops


def _stage2_hops(b: int, a: int) -> list[tuple[int, int, int]]:
    # 11(01)^b 00 (10)^a 11: eat the leading alternation, then stage 1
    hops = [(2 * t, 2 * t + 1, 2 * t + 2) for t in range(b + 1)]
    off = 2 * (b + 1)
    hops += [(off + f, off + o, off + t) for f, o, t in _stage1_hops(a)]
    return hops


def _stage3_hops(b: int, c: int, a: int) -> list[tuple[int, int, int]]:
    # 11(01)^b (11)^c 00 (10)^a 11: walk the hole pair back left
    hops = [(2 * b + 2 * k, 2 * b + 2 * k + 1, 2 * b + 2 * k + 2)
            for k in range(c, 0, -1)]
    return hops + _stage2_hops(b, a + c)


def _stage4_hops(p: int, q: int) -> list[tuple[int, int, int]]:
    # 11(01)^p (11)^q 01
    if q > 0:
        h = 2 * p + 2 * q
        first = (h, h + 1, h + 2)
        return [first] + _stage3_hops(p, q - 1, 0) if q > 1 else \
            [first] + _stage2_hops(p, 0)
    # pure alternation 11(01)^{p+1}
    hops = [(2 * t, 2 * t + 1, 2 * t + 2) for t in range(p)]
    off = 2 * p
    hops += [(off, off + 1, off + 2), (off + 3, off + 2, off + 1)]
    return hops


def _stage5_hops(b: int, q: int, a: int) -> list[tuple[int, int, int]]:
    # 11(01)^b (11)^q 1011 (10)^a 11: refill the pair, then stage 3
    s = 2 * b + 2
    return [(s + 2 * q + 3, s + 2 * q + 2, s + 2 * q + 1)] + \
        _stage3_hops(b, q + 1, a)


def _classify_hops(u: str) -> list[tuple[int, int, int]] | None:
    m = _STAGE1.fullmatch(u)
    if m:
        return _stage1_hops(len(m.group(1)) // 2)
    m = _STAGE2.fullmatch(u)
    if m:
        return _stage2_hops(len(m.group(1)) // 2, len(m.group(2)) // 2)
    m = _STAGE3.fullmatch(u)
    if m:
        return _stage3_hops(len(m.group(1)) // 2, len(m.group(2)) // 2,
                            len(m.group(3)) // 2)
    m = _STAGE4.fullmatch(u)
    if m:
        return _stage4_hops(len(m.group(1)) // 2, len(m.group(2)) // 2)
    m = _STAGE5.fullmatch(u)
    if m:
        return _stage5_hops(len(m.group(1)) // 2, len(m.group(2)) // 2,
                            len(m.group(3)) // 2)
    if _MIRROR3.fullmatch(u) or _MIRROR5.fullmatch(u):
        flipped = _classify_hops(u[::-1])
        if flipped is not None:
            n = len(u)
            return [(n - 1 - f, n - 1 - o, n - 1 - t) for f, o, t in flipped]
    return None


def solve_to_one(p: Position) -> list[Move]:
    """A legal single-hop sequence reducing a solvable board to one peg."""
    _require_fixed(p, "solve_to_one")
    w = p.word
    first = w.find("1")
    if first < 0:
        raise NotSolvableError("no pegs on the board")
    last = w.rfind("1")
    u = w[first:last + 1]

    if u == "1":
        hops: list[tuple[int, int, int]] = []
    elif u == "11":
        if last + 1 < len(w):
            hops = [(0, 1, 2)]
        elif first > 0:
            hops = [(1, 0, -1)]
        else:
            raise NotSolvableError(f"{w!r} cannot be reduced to one peg")
    else:
        found = _classify_hops(u)
        if found is None:
            flipped = _classify_hops(u[::-1])
            if flipped is not None:
                n = len(u)
                found = [(n - 1 - f, n - 1 - o, n - 1 - t)
                         for f, o, t in flipped]
        if found is None:
            raise NotSolvableError(f"{w!r} cannot be reduced to one peg")
        hops = found

    moves = [single_hop_move(f + first, o + first, t + first)
             for f, o, t in hops]
    # replay guard: a classification bug must never escape as a bad plan
    current = p
    for move in moves:
        current = apply_move(current, move)
    assert current.peg_count == 1, f"stage plan for {w!r} broke"
    return moves


# --- minimum-peg reduction -------------------------------------------------

_INF = 1 << 30

# Boundary states of the segment DP.  After placing the segments covering
# [0, i): CLEAN - no interface obligations; CAP - the previous segment can
# finish with its last cell empty (so a bare peg pair may hop into it);
# DEMAND - the previous segment was a pair that hops rightward into cell i,
# so the segment placed next must finish with its own first cell empty and
# play out first.
_CLEAN, _CAP, _DEMAND = 0, 1, 2

# Segment kinds.  "big" (3+ pegs, word in 0*L0*), "one" (a lone peg),
# "pair_left"/"pair_right" (adjacent pair hopping into its own padding),
# "borrow_left"/"borrow_right" (bare adjacent pair hopping into a cell the
# neighbouring segment vacates - the interaction the plain string
# partition cannot express, e.g. 01111 reduces to two pegs, not three).


def _acceptance_table(word: str) -> list[list[bool]]:
    """accept[i][j] == True iff word[i:j] is in 0*L0* (j > i)."""
    automaton = build_solvable_nfa()
    masks = automaton.successor_masks()
    acc_mask = 0
    for q in automaton.accepting:
        acc_mask |= 1 << q
    n = len(word)
    accept = [[False] * (n + 1) for _ in range(n + 1)]
    for i in range(n):
        cur = 1 << automaton.start
        for j in range(i + 1, n + 1):
            per_state = masks[word[j - 1]]
            nxt = 0
            while cur:
                low = cur & -cur
                nxt |= per_state[low.bit_length() - 1]
                cur ^= low
            cur = nxt
            if not cur:
                break
            accept[i][j] = bool(cur & acc_mask)
    return accept


def min_pegs(p: Position) -> tuple[int, ReductionPlan]:
    """Minimum reachable peg count and a move plan realising it.

    Shortest segmentation of the board where every segment ends as one
    peg: segments are either words of 0*L0* or bare adjacent pairs that
    hop into a cell an adjacent segment vacates first.  Solvable words
    of three or more pegs can always park their final peg away from both
    segment ends (verified exhaustively), so only lone pegs and peg
    pairs carry interface constraints.
    """
    _require_fixed(p, "min_pegs")
    w = p.word
    n = len(w)
    if "1" not in w:
        raise NotSolvableError("no pegs on the board")

    accept = _acceptance_table(w)
    peg_prefix = [0] * (n + 1)
    for i, ch in enumerate(w):
        peg_prefix[i + 1] = peg_prefix[i] + (ch == "1")
    peg_positions = [i for i, ch in enumerate(w) if ch == "1"]

    # cost = (segment count, borrow count): ties prefer plain partitions
    infinity = (_INF, _INF)
    dist = [[infinity] * 3 for _ in range(n + 1)]
    parent: dict[tuple[int, int], tuple[int, int, str]] = {}
    dist[0][_CLEAN] = (0, 0)

    def relax(j: int, st_out: int, i: int, st_in: int, kind: str) -> None:
        k, borrows = dist[i][st_in]
        cost = (k + 1, borrows + (1 if kind.startswith("borrow") else 0))
        if cost < dist[j][st_out]:
            dist[j][st_out] = cost
            parent[(j, st_out)] = (i, st_in, kind)

    for i in range(n):
        for st_in in (_CLEAN, _CAP, _DEMAND):
            if dist[i][st_in] >= infinity:
                continue
            demanded = st_in == _DEMAND
            for j in range(i + 1, n + 1):
                pegs = peg_prefix[j] - peg_prefix[i]
                if pegs == 0:
                    continue
                if pegs >= 3:
                    if accept[i][j]:
                        relax(j, _CAP, i, st_in, "big")
                    continue
                idx = bisect.bisect_left(peg_positions, i)
                first = peg_positions[idx]
                if pegs == 1:
                    if demanded and first == i:
                        continue
                    st_out = _CAP if first < j - 1 else _CLEAN
                    relax(j, st_out, i, st_in, "one")
                    continue
                last = peg_positions[idx + 1]
                if last != first + 1:
                    continue  # two isolated pegs never merge
                if first > i and not (demanded and first - 1 == i):
                    relax(j, _CAP, i, st_in, "pair_left")
                if last < j - 1:
                    st_out = _CAP if last + 1 < j - 1 else _CLEAN
                    relax(j, st_out, i, st_in, "pair_right")
                if first == i and st_in == _CAP and i > 0:
                    relax(j, _CAP, i, st_in, "borrow_left")
                if last == j - 1 and j < n:
                    relax(j, _DEMAND, i, st_in, "borrow_right")

    best = min(dist[n][_CLEAN], dist[n][_CAP])
    if best >= infinity:
        raise NotSolvableError(f"{w!r} admits no segmentation")
    k = best[0]

    # reconstruct the segment list
    state = _CLEAN if dist[n][_CLEAN] <= dist[n][_CAP] else _CAP
    segments: list[tuple[int, int, str]] = []
    j = n
    while j > 0:
        i, st_in, kind = parent[(j, state)]
        segments.append((i, j, kind))
        j, state = i, st_in
    segments.reverse()

    # play order: borrow_left waits for its left neighbour, borrow_right
    # for its right neighbour; everything else is independent
    phases = [0] * len(segments)
    for idx, (_, _, kind) in enumerate(segments):
        if kind == "borrow_left":
            phases[idx] = phases[idx - 1] + 1
    for idx in range(len(segments) - 1, -1, -1):
        if segments[idx][2] == "borrow_right":
            phases[idx] = phases[idx + 1] + 1

    moves: list[Move] = []
    order = sorted(range(len(segments)), key=lambda idx: (phases[idx], idx))
    for idx in order:
        lo, hi, kind = segments[idx]
        if kind == "big":
            segment = parse_position(w[lo:hi], BoardMode.FIXED)
            for move in solve_to_one(segment):
                moves.append(single_hop_move(move.hops[0].from_ + lo,
                                             move.hops[0].over + lo,
                                             move.hops[0].to + lo))
        elif kind == "one":
            pass
        else:
            first = peg_positions[bisect.bisect_left(peg_positions, lo)]
            if kind in ("pair_left", "borrow_left"):
                moves.append(single_hop_move(first + 1, first, first - 1))
            else:
                moves.append(single_hop_move(first, first + 1, first + 2))

    plan = ReductionPlan(tuple((lo, hi) for lo, hi, _ in segments),
                         tuple(moves), k)
    current = p
    for move in plan.moves:
        current = apply_move(current, move)
    assert current.peg_count == k, "reduction plan broke on replay"
    return k, plan


# --- counting ---------------------------------------------------------------


def count_solvable(n: int) -> int:
    """Number of distinct solvable configurations with n pegs (closed form)."""
    if n < 1:
        raise ValueError("peg count must be at least 1")
    if n <= 3:
        return (1, 1, 2)[n - 1]
    if n % 2 == 0:
        return n * n - 7 * n + 15
    return n * n - 7 * n + 16


def enumerate_solvable(n: int) -> set[str]:
    """All peg-extent words of L with n pegs (011/110 collapse to 11).

    Enumerates the branch structure of L directly with the peg budget, an
    oracle independent of both the closed form and the automaton.
    """
    if n < 1:
        raise ValueError("peg count must be at least 1")
    out: set[str] = set()
    if n == 1:
        return {"1"}
    if n == 2:
        return {"11"}

    def pair_block(reps: int, unit: str) -> str:
        return unit * reps

    # bracket families: 11 (01)^p [...] (10)^r 11
    for p in range(n):
        for r in range(n):
            base = 4 + p + r
            if base > n:
                continue
            head = "11" + "01" * p
            tail = "10" * r + "11"
            if base == n:
                out.add(head + "00" + tail)
            extra = n - base
            if extra >= 2 and extra % 2 == 0:
                s = extra // 2
                out.add(head + "00" + "11" * s + tail)
                out.add(head + "11" * s + "00" + tail)
            if extra >= 3 and (extra - 3) % 2 == 0:
                s = (extra - 3) // 2
                out.add(head + "11" * s + "1011" + tail)
                out.add(head + "1101" + "11" * s + tail)
    # 11 (01)^p (11)^q 01  and its mirror 10 (11)^q (10)^r 11
    for q in range(n):
        rem = n - 3 - 2 * q
        if rem < 0:
            continue
        out.add("11" + "01" * rem + "11" * q + "01")
        out.add("10" + "11" * q + "10" * rem + "11")
    return out
