import random

import pytest

from peglab.board import BoardMode, parse_position


def all_words(max_len, min_len=1):
    for length in range(min_len, max_len + 1):
        for x in range(1 << length):
            yield format(x, f"0{length}b")


def fixed(word):
    return parse_position(word, BoardMode.FIXED)


def open_board(word):
    return parse_position(word, BoardMode.OPEN)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
