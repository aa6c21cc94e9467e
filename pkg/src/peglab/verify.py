"""Reproduction suites behind `peglab verify`.

Each suite recomputes a published table or lemma with the engine and
reports PASS/FAIL per item.  Returns True when everything passed.
"""
from __future__ import annotations

from typing import Callable

from .board import BoardMode, GameVariant
from .duotaire import grundy_word
from .families import FamilyId, family_value, family_word, palindrome_p_check
from .probes import component_value, first_position_with_value, s_member, xor_witness
from .solver import count_solvable, enumerate_solvable

FIRST_POSITIONS_SINGLE = [
    "1", "11", "1011", "110111", "11010111", "11011010111",
    "10110111001111", "10110110010111011", "1101101101101110111",
]

SPOT_VALUES = [
    # (word as printed, variant, expected) - the printed string is the board
    ("1011" + "010010" + "1011", GameVariant.MULTI_HOP, 5),
    ("110111" + "00" + "111011", GameVariant.MULTI_HOP, 1),
    ("01111" + "00" + "11110", GameVariant.MULTI_HOP, 2),
    ("1011" + "00" + "1101", GameVariant.SINGLE_HOP, 1),
]


def _run(checks, report: Callable[[str], None]) -> bool:
    ok = True
    for label, passed in checks:
        report(f"{'PASS' if passed else 'FAIL'}  {label}")
        ok &= passed
    return ok


def verify_counting(report, max_n: int = 12) -> bool:
    checks = []
    for n in range(1, max_n + 1):
        got = len(enumerate_solvable(n))
        want = count_solvable(n)
        checks.append((f"N({n}) = {want} (enumerated {got})", got == want))
    return _run(checks, report)


def verify_table1(report, max_param: int = 6) -> bool:
    checks = []
    for family in FamilyId:
        if family is FamilyId.TEN_BLOCK:
            combos = [(n, m) for m in range(0, max_param + 1)
                      for n in range(0, max_param + 1)]
        else:
            lo = 1 if family in (FamilyId.ONES, FamilyId.PAIR_ALT_PAIR,
                                 FamilyId.TRIPLE_ALT_PAIR) else 0
            combos = [(n, None) for n in range(lo, max_param + 1)]
        good = True
        for n, m in combos:
            word = family_word(family, n, m)
            want = family_value(family, n, m)
            got = grundy_word(word, GameVariant.MULTI_HOP, BoardMode.OPEN)
            good &= got == want
        checks.append((f"table row {family.value} (params <= {max_param})", good))
    return _run(checks, report)


def verify_lemmas(report, max_w: int = 4) -> bool:
    checks = []
    good = True
    for wl in range(0, max_w + 1):
        for x in range(1 << wl):
            w = format(x, f"0{wl}b") if wl else ""
            for mid in ("010010", "01100110"):
                word = w + mid + w[::-1]
                assert palindrome_p_check(word)
                got = grundy_word(word, GameVariant.MULTI_HOP, BoardMode.FIXED)
                good &= got == 0
    checks.append((f"palindrome P-positions (|w| <= {max_w})", good))
    checks.append(("counterexample 110111 00 111011 has value 1",
                   grundy_word("11011100111011", GameVariant.MULTI_HOP,
                               BoardMode.FIXED) == 1))
    checks.append(("counterexample 01111 00 11110 has value 2",
                   grundy_word("011110011110", GameVariant.MULTI_HOP,
                               BoardMode.FIXED) == 2))
    checks.append(("single-hop 1011 00 1101 has value 1",
                   grundy_word("1011001101", GameVariant.SINGLE_HOP,
                               BoardMode.FIXED) == 1))
    return _run(checks, report)


def verify_spot(report) -> bool:
    checks = []
    for word, variant, want in SPOT_VALUES:
        got = grundy_word(word, variant, BoardMode.FIXED)
        checks.append((f"G({word}) [{variant.value}] = {want}", got == want))
    return _run(checks, report)


def verify_firstpos(report, max_g: int = 8) -> bool:
    checks = []
    for g in range(0, max_g + 1):
        want = FIRST_POSITIONS_SINGLE[g]
        got = first_position_with_value(g, GameVariant.SINGLE_HOP)
        checks.append((f"first position with G={g}: {want}", got == want))
    return _run(checks, report)


def verify_thm4(report, max_n: int = 4096, max_reps: int = 8) -> bool:
    checks = []
    agree = all(s_member(n) == xor_witness(n) for n in range(max_n + 1))
    checks.append((f"s_member == xor_witness for n <= {max_n}", agree))
    comp = all(component_value(n) == n + 1 for n in range(0, max_reps + 1))
    checks.append((f"G(011(01)^n 0) = n+1 for n <= {max_reps}", comp))
    return _run(checks, report)


SUITES = {
    "counting": verify_counting,
    "table1": verify_table1,
    "lemmas": verify_lemmas,
    "spot": verify_spot,
    "firstpos": verify_firstpos,
    "thm4": verify_thm4,
}


def run_suite(name: str, report: Callable[[str], None]) -> bool:
    if name == "all":
        return all([suite(report) for suite in SUITES.values()])
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](report)
