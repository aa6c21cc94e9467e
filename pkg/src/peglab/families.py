"""Closed-form nim-value families and the P-position palindrome shapes.

The nine multihop families are evaluated on the open line (holes to
either side); family_value returns the tabulated closed form so the
engine can be checked against it.
"""
from __future__ import annotations

from enum import Enum


class FamilyId(Enum):
    ONES = "ones"                        # 1^n
    PAIR_ALT = "pair_alt"                # 11(01)^n
    TRIPLE_ALT = "triple_alt"            # 111(01)^n
    PAIR_ALT_ONE = "pair_alt_one"        # 11(01)^n 1
    PAIR_ALT_PAIR = "pair_alt_pair"      # 11(01)^n 11
    TRIPLE_ALT_PAIR = "triple_alt_pair"  # 111(01)^n 11, n > 0
    DOUBLE_PAIR_ALT = "double_pair_alt"  # 11011(01)^n
    TEN_PAIR_ALT_ONE = "ten_pair_alt_one"  # 1011(01)^n 1
    TEN_BLOCK = "ten_block"              # (10)^m 11(01)^n


_UNARY = {
    FamilyId.ONES: (1, lambda n: "1" * n),
    FamilyId.PAIR_ALT: (0, lambda n: "11" + "01" * n),
    FamilyId.TRIPLE_ALT: (0, lambda n: "111" + "01" * n),
    FamilyId.PAIR_ALT_ONE: (0, lambda n: "11" + "01" * n + "1"),
    FamilyId.PAIR_ALT_PAIR: (1, lambda n: "11" + "01" * n + "11"),
    FamilyId.TRIPLE_ALT_PAIR: (1, lambda n: "111" + "01" * n + "11"),
    FamilyId.DOUBLE_PAIR_ALT: (0, lambda n: "11011" + "01" * n),
    FamilyId.TEN_PAIR_ALT_ONE: (0, lambda n: "1011" + "01" * n + "1"),
}


def family_word(family: FamilyId, n: int, m: int | None = None) -> str:
    """The board word of the family member (TEN_BLOCK takes both m and n)."""
    if family is FamilyId.TEN_BLOCK:
        if m is None or m < 0 or n < 0:
            raise ValueError("TEN_BLOCK needs m >= 0 and n >= 0")
        return "10" * m + "11" + "01" * n
    if m is not None:
        raise ValueError(f"{family.value} takes a single parameter")
    minimum, shape = _UNARY[family]
    if n < minimum:
        raise ValueError(f"{family.value} needs n >= {minimum}")
    return shape(n)


def family_value(family: FamilyId, n: int, m: int | None = None) -> int:
    """Tabulated multihop nim-value of the family member on the open line."""
    family_word(family, n, m)  # parameter validation
    if family is FamilyId.ONES:
        return 0 if n % 4 in (0, 1) else 1
    if family in (FamilyId.PAIR_ALT, FamilyId.TRIPLE_ALT):
        return n + 1
    if family is FamilyId.PAIR_ALT_ONE:
        return n ^ 1
    if family is FamilyId.PAIR_ALT_PAIR:
        return {1: 3, 2: 4, 3: 2}.get(n, n + 2)
    if family is FamilyId.TRIPLE_ALT_PAIR:
        return 1
    if family is FamilyId.DOUBLE_PAIR_ALT:
        return (n + 1) ^ 1
    if family is FamilyId.TEN_PAIR_ALT_ONE:
        return n + 2
    return max(m, n) + 1  # TEN_BLOCK


def _mirror(text: str) -> str:
    return text[::-1]


def _middle_shape(middle: str) -> bool:
    if middle in ("010010", "01100110"):
        return True
    # 00 (10)^k 11100111 (01)^k 00
    if len(middle) < 12 or (len(middle) - 12) % 4:
        return False
    k = (len(middle) - 12) // 4
    return middle == "00" + "10" * k + "11100111" + "01" * k + "00"


def palindrome_p_check(word: str) -> bool:
    """Does the word match w M w^R for one of the three P-position middles?

    Matching words are P-positions in multihop duotaire (the second player
    mirrors until the gap is entered, then hops in and over).
    """
    n = len(word)
    for half in range(0, n // 2 + 1):
        if half and word[-half:] != _mirror(word[:half]):
            continue
        if _middle_shape(word[half:n - half]):
            return True
    return False
