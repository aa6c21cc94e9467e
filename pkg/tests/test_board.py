import pytest
from hypothesis import given, strategies as st

from peglab.board import (
    BoardMode,
    GameVariant,
    IllegalMoveError,
    Move,
    ParseError,
    Position,
    apply_move,
    mirror,
    multihop_options,
    parse_position,
    render,
    single_hop_move,
    single_hops,
    unhops,
)

words = st.text(alphabet="01", min_size=1, max_size=12)
peg_words = words.filter(lambda w: "1" in w)


def fx(word):
    return parse_position(word, BoardMode.FIXED)


def op(word):
    return parse_position(word, BoardMode.OPEN)


class TestParseRender:
    def test_fixed_is_literal(self):
        assert fx("1011").cells == (True, False, True, True)

    def test_open_canonicalises(self):
        p = op("0110")
        assert p.word == "11" and p.origin_offset == 1

    def test_invalid_symbol(self):
        with pytest.raises(ParseError):
            parse_position("2", BoardMode.FIXED)

    def test_empty_text(self):
        with pytest.raises(ParseError):
            parse_position("", BoardMode.FIXED)

    def test_render_examples(self):
        assert render(fx("110")) == "110"
        assert render(op("1")) == "1"
        assert render(Position((), BoardMode.OPEN)) == ""

    @given(words)
    def test_fixed_round_trip(self, w):
        assert render(fx(w)) == w

    @given(words)
    def test_open_round_trip_is_trim(self, w):
        assert render(op(w)) == w.strip("0")


class TestSingleHops:
    def test_1100(self):
        assert [r.word for _, r in single_hops(fx("1100"))] == ["0010"]

    def test_110(self):
        assert [r.word for _, r in single_hops(fx("110"))] == ["001"]

    def test_open_pair_has_two_exits(self):
        results = single_hops(op("11"))
        assert len(results) == 2
        assert {r.word for _, r in results} == {"1"}
        assert {r.origin_offset for _, r in results} == {-1, 2}

    @given(peg_words)
    def test_moves_round_trip_through_apply(self, w):
        p = fx(w)
        for move, result in single_hops(p):
            assert apply_move(p, move) == result
            assert result.peg_count == p.peg_count - 1

    @given(peg_words)
    def test_open_moves_round_trip(self, w):
        p = op(w)
        for move, result in single_hops(p):
            assert apply_move(p, move) == result


class TestMultihop:
    def test_1110_single_result(self):
        assert {r.word for _, r in multihop_options(fx("1110"))} == {"1001"}

    def test_chain_of_length_one_only(self):
        assert {r.word for _, r in multihop_options(fx("110"))} == {"001"}

    def test_two_hop_chain_exists(self):
        # 011010: the peg at 1 can hop to 3 and then on to 5
        results = {r.word: m for m, r in multihop_options(fx("011010"))}
        assert "000001" in results
        assert len(results["000001"].hops) == 2

    def test_results_deduplicated(self):
        seen = [r for _, r in multihop_options(fx("011010"))]
        assert len(seen) == len(set(seen))

    @given(peg_words)
    def test_supset_of_single_hops(self, w):
        p = fx(w)
        singles = {r for _, r in single_hops(p)}
        multis = {r for _, r in multihop_options(p)}
        assert singles <= multis

    @given(peg_words)
    def test_chain_moves_replay(self, w):
        p = fx(w)
        for move, result in multihop_options(p):
            assert apply_move(p, move) == result
            assert result.peg_count == p.peg_count - len(move.hops)

    def test_matches_bfs_enumeration(self):
        # independent enumeration: breadth-first over (board, peg) chains
        for w in ("1110", "11011", "110110", "011010", "1101110"):
            p = fx(w)
            expect = set()
            for start in range(len(w)):
                if w[start] != "1":
                    continue
                frontier = [(tuple(c == "1" for c in w), start)]
                while frontier:
                    cells, pos = frontier.pop()
                    for d in (1, -1):
                        over, to = pos + d, pos + 2 * d
                        if not (0 <= to < len(w)):
                            continue
                        if not cells[over] or cells[to]:
                            continue
                        nxt = list(cells)
                        nxt[pos] = nxt[over] = False
                        nxt[to] = True
                        nxt = tuple(nxt)
                        expect.add(nxt)
                        frontier.append((nxt, to))
            got = {r.cells for _, r in multihop_options(p)}
            assert got == expect


class TestApply:
    def test_simple(self):
        assert apply_move(fx("110"), single_hop_move(0, 1, 2)).word == "001"

    def test_rejects_missing_peg(self):
        with pytest.raises(IllegalMoveError, match="no peg at 2"):
            apply_move(fx("1100"), single_hop_move(2, 1, 0))

    def test_leftward(self):
        assert apply_move(fx("011"), single_hop_move(2, 1, 0)).word == "100"

    def test_rejects_occupied_landing(self):
        with pytest.raises(IllegalMoveError, match="occupied"):
            apply_move(fx("111"), single_hop_move(0, 1, 2))

    def test_malformed_hop_rejected_at_construction(self):
        with pytest.raises(IllegalMoveError):
            single_hop_move(0, 1, 3)
        with pytest.raises(IllegalMoveError):
            Move((), GameVariant.SINGLE_HOP)


class TestUnhops:
    def test_single_peg(self):
        got = {(q.word, q.origin_offset) for q in unhops(op("1"))}
        assert got == {("11", 1), ("11", -2)}

    def test_paper_second_level(self):
        level2 = set()
        for q in unhops(op("1")):
            level2 |= {r.word for r in unhops(q)}
        assert level2 == {"1101", "1011"}

    def test_empty_board(self):
        assert unhops(Position((), BoardMode.OPEN)) == []

    @given(peg_words)
    def test_duality_with_single_hops(self, w):
        # q in unhops(p) iff p among single-hop results of q (open mode)
        p = op(w)
        if not p.cells:
            return
        for q in unhops(p):
            results = {r.word for _, r in single_hops(q)}
            assert p.word in results

    @given(peg_words.filter(lambda w: w.count("1") >= 2))
    def test_duality_reverse(self, w):
        q = op(w)
        for _, r in single_hops(q):
            preds = {u.word for u in unhops(r)}
            assert q.word in preds


class TestMirror:
    def test_examples(self):
        assert mirror(fx("1011")).word == "1101"
        assert mirror(fx("11")).word == "11"
        assert mirror(fx("100")).word == "001"

    @given(words)
    def test_involution(self, w):
        p = fx(w)
        assert mirror(mirror(p)) == p

    @given(peg_words)
    def test_commutes_with_move_generation(self, w):
        p = fx(w)
        direct = {mirror(r).word for _, r in single_hops(p)}
        flipped = {r.word for _, r in single_hops(mirror(p))}
        assert direct == flipped
