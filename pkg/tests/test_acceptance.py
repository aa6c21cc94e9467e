"""Acceptance suite: one test per numbered criterion, each printing a
PASS line with its runtime on success.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines.
"""
import random
import time

import pytest

from peglab import kernels
from peglab.bits import mask_to_word, reverse_mask, word_to_mask
from peglab.board import (
    BoardMode,
    GameVariant,
    apply_move,
    parse_position,
)
from peglab.duotaire import MemoStore, grundy, grundy_word, options
from peglab.families import FamilyId, family_value, family_word
from peglab.oracle import brute_force_min_pegs, brute_force_solvable
from peglab.probes import (
    boundary_crossings,
    component_value,
    distinguishing_classes,
    first_position_with_value,
    pn_language_probe,
    s_member,
    xor_witness,
)
from peglab.solver import count_solvable, enumerate_solvable, is_solvable, min_pegs

SINGLE = GameVariant.SINGLE_HOP
MULTI = GameVariant.MULTI_HOP


def fx(word):
    return parse_position(word, BoardMode.FIXED)


def report(number, label, t0):
    print(f"\nACCEPTANCE {number} PASS ({time.time() - t0:.1f}s): {label}")


def test_01_solvability_oracle_equivalence():
    t0 = time.time()
    for length in range(1, 15):
        table = kernels.solvable_table(length)  # exhaustive search, batch form
        for mask in range(1 << length):
            word = mask_to_word(mask, length)
            assert is_solvable(fx(word)) == bool(table[mask]), word
        # tie the per-board recursive oracle to the batch sweep
        if length <= 10:
            sample = range(1 << length)
        else:
            rng = random.Random(length)
            sample = [rng.randrange(1 << length) for _ in range(300)]
        for mask in sample:
            word = mask_to_word(mask, length)
            assert brute_force_solvable(fx(word)) == bool(table[mask]), word
    elapsed = time.time() - t0
    assert elapsed < 60.0
    report(1, "is_solvable == exhaustive search on all boards of length <= 14",
           t0)


def test_02_counting_closed_form():
    t0 = time.time()
    for n in range(1, 13):
        assert len(enumerate_solvable(n)) == count_solvable(n), n
    assert count_solvable(3) == 2 and count_solvable(4) == 3
    assert count_solvable(7) == 16
    report(2, "|enumerate_solvable(n)| == N(n) for 1 <= n <= 12", t0)


def test_03_min_pegs_exact_with_replayable_plans():
    t0 = time.time()
    for length in range(1, 13):
        for mask in range(1, 1 << length):
            word = mask_to_word(mask, length)
            p = fx(word)
            k, plan = min_pegs(p)
            assert k == brute_force_min_pegs(p), word
            assert plan.final_peg_count == k
            current = p
            for move in plan.moves:
                current = apply_move(current, move)
            assert current.peg_count == k, word
    report(3, "min_pegs == brute force on all boards <= 12, plans replay", t0)


def test_04_table1_reproduction():
    t0 = time.time()
    store = MemoStore()

    def g(word):
        return grundy_word(word, MULTI, BoardMode.OPEN, store)

    for n in range(1, 7):
        assert g("1" * n) == (0 if n % 4 in (0, 1) else 1), n
    for n in range(0, 7):
        assert g("11" + "01" * n) == n + 1
        assert g("111" + "01" * n) == n + 1
        assert g("11" + "01" * n + "1") == n ^ 1
        assert g("11011" + "01" * n) == (n + 1) ^ 1
        assert g("1011" + "01" * n + "1") == n + 2
    for n in range(1, 7):
        assert g("11" + "01" * n + "11") == {1: 3, 2: 4, 3: 2}.get(n, n + 2)
        assert g("111" + "01" * n + "11") == 1
    for m in range(0, 7):
        for n in range(0, 7):
            assert g("10" * m + "11" + "01" * n) == max(m, n) + 1
    # the closed forms the engine is checked against
    for family in FamilyId:
        if family is FamilyId.TEN_BLOCK:
            continue
        lo = 1 if family in (FamilyId.ONES, FamilyId.PAIR_ALT_PAIR,
                             FamilyId.TRIPLE_ALT_PAIR) else 0
        for n in range(lo, 7):
            assert g(family_word(family, n)) == family_value(family, n)
    elapsed = time.time() - t0
    assert elapsed < 300.0
    report(4, "all nine table rows match for parameters m, n <= 6", t0)


def test_05_first_position_table():
    t0 = time.time()
    expected = ["1", "11", "1011", "110111", "11010111", "11011010111",
                "10110111001111", "10110110010111011",
                "1101101101101110111"]
    for g, word in enumerate(expected):
        assert first_position_with_value(g, SINGLE) == word, g
    elapsed = time.time() - t0
    assert elapsed < 900.0
    report(5, "lexicographically first single-hop positions for G = 0..8", t0)


def test_06_spot_values():
    t0 = time.time()
    store = MemoStore()
    assert grundy_word("1011" + "010010" + "1011", MULTI,
                       BoardMode.FIXED, store) == 5
    assert grundy_word("110111" + "00" + "111011", MULTI,
                       BoardMode.FIXED, store) == 1
    assert grundy_word("01111" + "00" + "11110", MULTI,
                       BoardMode.FIXED, store) == 2
    assert grundy_word("1011" + "00" + "1101", SINGLE,
                       BoardMode.FIXED, store) == 1
    report(6, "published spot values (boards read literally, see ledger)", t0)


def test_07_gap_decomposition_identity():
    t0 = time.time()
    rng = random.Random(1729)
    store = MemoStore()
    for _ in range(500):
        x = "".join(rng.choice("01") for _ in range(rng.randint(1, 6)))
        y = "".join(rng.choice("01") for _ in range(rng.randint(1, 6)))
        sep = "0" + "01" * rng.randint(0, 2) + "00"
        joined = x + sep + y
        for variant in (SINGLE, MULTI):
            whole = grundy_word(joined, variant, BoardMode.FIXED, store)
            parts = grundy_word(x + "0", variant, BoardMode.FIXED, store) ^ \
                grundy_word("0" + y, variant, BoardMode.FIXED, store)
            assert whole == parts, (joined, variant)
    report(7, "gap lemma: 500 random joins equal the nim-sum of components",
           t0)


def test_08_palindrome_p_positions():
    t0 = time.time()
    store = MemoStore()
    for size in range(0, 6):
        for bits in range(1 << size):
            w = format(bits, f"0{size}b") if size else ""
            for middle in ("010010", "01100110"):
                word = w + middle + w[::-1]
                assert grundy_word(word, MULTI, BoardMode.FIXED, store) == 0, word
    report(8, "palindrome shapes are multihop P-positions for all |w| <= 5",
           t0)


def test_09_theorem4_witnesses():
    t0 = time.time()
    for n in range(4097):
        assert s_member(n) == xor_witness(n), n
    store = MemoStore()
    for n in range(0, 9):
        assert component_value(n, store) == n + 1, n
    # frozen indexing fixture: membership in P follows the component
    # values n+1, i.e. the shifted condition, not the literal i^j^k = 0
    for i in range(5):
        for j in range(5):
            for k in range(5):
                value, is_p = pn_language_probe(i, j, k, store=store)
                assert is_p == (value == 0)
                assert is_p == (((i + 1) ^ (j + 1) ^ (k + 1)) == 0), (i, j, k)
    report(9, "xor witnesses agree to 4096; component values n+1; "
              "P-membership uses the shifted xor", t0)


def test_10_properties_mirror_padding_crossings():
    t0 = time.time()
    # mirror invariance on every fixed board of length <= 12, both variants
    for multihop in (False, True):
        for length in range(1, 13):
            table = kernels.grundy_table(length, multihop)
            for mask in range(1 << length):
                assert table[mask] == table[reverse_mask(mask, length)]
    # padding stabilisation for every extent word of length <= 10
    store = MemoStore()
    for length in range(1, 11):
        if length == 1:
            words = ["1"]
        elif length == 2:
            words = ["11"]
        else:
            words = ["1" + format(x, f"0{length - 2}b") + "1"
                     for x in range(1 << (length - 2))]
        for w in words:
            pegs = w.count("1")
            for variant in (SINGLE, MULTI):
                values = {grundy_word("0" * a + w + "0" * a, variant,
                                      BoardMode.FIXED, store)
                          for a in (pegs, pegs + 1, pegs + 2)}
                values.add(grundy_word(w, variant, BoardMode.OPEN, store))
                assert len(values) == 1, (w, variant)
    # boundary crossings over 10,000 random complete playouts
    rng = random.Random(42)
    for trial in range(10000):
        length = rng.randint(2, 14)
        word = "".join(rng.choice("01") for _ in range(length))
        if "1" not in word:
            continue
        variant = MULTI if trial % 2 else SINGLE
        start = fx(word)
        current, moves = start, []
        while True:
            reachable = options(current, variant)
            if not reachable:
                break
            move, current = rng.choice(reachable)
            moves.append(move)
        counts = [0] * (length - 1)
        for move in moves:
            for hop in move.hops:
                lo, hi = sorted((hop.from_, hop.to))
                for b in range(max(0, lo), min(length - 1, hi)):
                    counts[b] += 1
        assert all(c <= 4 for c in counts), (word, counts)
        if moves:
            b = rng.randrange(length - 1)
            assert boundary_crossings(start, moves, b) == counts[b]
    report(10, "mirror invariance <= 12, padding stabilisation <= 10, "
               "crossings <= 4 over 10,000 playouts", t0)


def test_11_distinguishing_class_census():
    t0 = time.time()
    base = distinguishing_classes(4, 4, SINGLE)
    assert distinguishing_classes(5, 4, SINGLE) >= base
    assert distinguishing_classes(4, 5, SINGLE) >= base
    gate = distinguishing_classes(10, 8, SINGLE)
    assert gate >= 16
    assert gate == 451  # frozen regression value for this census
    report(11, f"census monotone; {gate} classes at (10, 8) single-hop >= 16",
           t0)
