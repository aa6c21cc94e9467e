"""Computer-search operations: lexicographic nim-value search, the
xor witnesses, the P-intersection probe, the equivalence-class census
and the boundary-crossing counter.
"""
from __future__ import annotations

from .bits import word_to_mask
from .board import BoardMode, GameVariant, Move, Position, apply_move
from .duotaire import MemoStore, grundy_word
from .kernels import grundy_table

DEFAULT_SEARCH_MAX_LEN = 19


def _extent_words(length: int):
    """Words of the given length starting and ending with a peg, in
    lexicographic order ('0' < '1', leftmost significant)."""
    if length == 1:
        yield "1"
        return
    if length == 2:
        yield "11"
        return
    for x in range(1 << (length - 2)):
        yield "1" + format(x, f"0{length - 2}b") + "1"


def first_position_with_value(target: int, variant: GameVariant,
                              max_word_len: int = DEFAULT_SEARCH_MAX_LEN) -> str | None:
    """Lexicographically first w (by length, then '0' < '1') with
    G(0w0) == target on the fixed board; None when the budget runs out."""
    multihop = variant is GameVariant.MULTI_HOP
    for length in range(1, max_word_len + 1):
        table = grundy_table(length + 2, multihop)
        for w in _extent_words(length):
            # 0w0: shift the word mask one cell right
            if table[word_to_mask(w) << 1] == target:
                return w
    return None


def s_member(n: int) -> bool:
    """No two consecutive ones in the binary expansion of n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return (n & (n >> 1)) == 0


def xor_witness(n: int) -> bool:
    """n xor 2n xor 3n == 0; agrees with s_member for every n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return n ^ (2 * n) ^ (3 * n) == 0


def _component_word(reps: int) -> str:
    return "011" + "01" * reps + "0"


def probe_word(i: int, j: int, k: int) -> str:
    return ("011" + "01" * i + "00" + "011" + "01" * j + "00"
            + "011" + "01" * k + "0")


def component_value(n: int, store: MemoStore | None = None) -> int:
    """Multihop grundy of the fixed board 011(01)^n 0 (equals n+1)."""
    return grundy_word(_component_word(n), GameVariant.MULTI_HOP,
                       BoardMode.FIXED, store)


def pn_language_probe(i: int, j: int, k: int,
                      variant: GameVariant = GameVariant.MULTI_HOP,
                      store: MemoStore | None = None) -> tuple[int, bool]:
    """Grundy of 011(01)^i 00011(01)^j 00011(01)^k 0 and its P-status.

    The three blocks are separated by non-interacting gaps, so the value
    is the nim-sum of the three component boards - which is what makes
    the probe feasible for larger i, j, k.
    """
    if min(i, j, k) < 0:
        raise ValueError("block sizes must be non-negative")
    value = 0
    for reps in (i, j, k):
        value ^= grundy_word(_component_word(reps), variant, BoardMode.FIXED, store)
    return value, value == 0


def distinguishing_classes(max_prefix_len: int, max_suffix_len: int,
                           variant: GameVariant) -> int:
    """Number of distinct suffix-behaviour vectors among short prefixes.

    Prefix u maps to the vector (over every suffix w up to the bound,
    empty included) of whether the fixed board u+w is a P-position;
    distinct vectors lower-bound the Myhill-Nerode classes of the
    P-position language.
    """
    if max_prefix_len < 1 or max_suffix_len < 0:
        raise ValueError("bounds must cover at least one prefix")
    multihop = variant is GameVariant.MULTI_HOP
    tables = {length: grundy_table(length, multihop)
              for length in range(1, max_prefix_len + max_suffix_len + 1)}

    suffixes: list[tuple[int, int]] = [(0, 0)]  # (mask, length), empty first
    for length in range(1, max_suffix_len + 1):
        suffixes += [(x, length) for x in range(1 << length)]

    vectors: set[int] = set()
    for plen in range(1, max_prefix_len + 1):
        for pmask in range(1 << plen):
            vec = 0
            for bit, (smask, slen) in enumerate(suffixes):
                board = pmask | (smask << plen)
                if tables[plen + slen][board] == 0:
                    vec |= 1 << bit
            vectors.add(vec)
    return len(vectors)


def boundary_crossings(start: Position, moves: list[Move], boundary: int) -> int:
    """How many hops of a legal playout jump the gap between cells
    boundary and boundary+1.  The playout is replayed and validated."""
    current = start
    crossings = 0
    for move in moves:
        current = apply_move(current, move)  # raises on an illegal playout
        for hop in move.hops:
            if min(hop.from_, hop.to) <= boundary < max(hop.from_, hop.to):
                crossings += 1
    return crossings
