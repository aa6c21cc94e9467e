"""Bitboard helpers shared by the engines and the batch kernels.

A board of length L is an int whose bit i holds cell i (cell 0 is the
leftmost character of the board text).  All helpers are pure.
"""
from __future__ import annotations


def word_to_mask(word: str) -> int:
    """'1011' -> 0b1101 (bit 0 = leftmost cell)."""
    mask = 0
    for i, ch in enumerate(word):
        if ch == "1":
            mask |= 1 << i
        elif ch != "0":
            raise ValueError(f"invalid board character {ch!r}")
    return mask


def mask_to_word(mask: int, length: int) -> str:
    return "".join("1" if (mask >> i) & 1 else "0" for i in range(length))


def popcount(mask: int) -> int:
    return mask.bit_count()


def reverse_mask(mask: int, length: int) -> int:
    """Mirror image of the board (cell i <-> cell length-1-i)."""
    out = 0
    for i in range(length):
        if (mask >> i) & 1:
            out |= 1 << (length - 1 - i)
    return out


def trim(mask: int, length: int) -> tuple[int, int, int]:
    """Strip exterior holes.

    Returns (trimmed_mask, trimmed_length, left_offset); the empty board
    maps to (0, 0, 0).
    """
    if mask == 0:
        return 0, 0, 0
    lo = (mask & -mask).bit_length() - 1
    hi = mask.bit_length() - 1
    return mask >> lo, hi - lo + 1, lo
