import pytest

from peglab.cache import CacheFormatError, cache_load, cache_store


def test_missing_file_is_empty(tmp_path):
    assert cache_load(str(tmp_path / "nope.cache")) == []


def test_round_trip_is_byte_identical(tmp_path):
    path = str(tmp_path / "grundy.cache")
    records = [("m", "o", "11", 1), ("s", "f", "0110", 1), ("m", "f", "1011", 2)]
    cache_store(path, records)
    first = open(path, "rb").read()
    loaded = cache_load(path)
    assert loaded == sorted(records)
    cache_store(path, loaded)
    assert open(path, "rb").read() == first


def test_store_sorts_by_key(tmp_path):
    path = str(tmp_path / "c")
    cache_store(path, [("s", "o", "11", 1), ("m", "f", "11", 0)])
    lines = open(path).read().splitlines()
    assert lines == ["m|f|11|0", "s|o|11|1"]


def test_line_format(tmp_path):
    path = str(tmp_path / "c")
    cache_store(path, [("m", "o", "11", 1)])
    assert open(path).read() == "m|o|11|1\n"


@pytest.mark.parametrize("line,fragment", [
    ("x|o|11|1", "bad variant"),
    ("m|z|11|1", "bad mode"),
    ("m|o|21|1", "bad board word"),
    ("m|o|11|one", "bad value"),
    ("m|o|11", "4 fields"),
    ("m|o|011|1", "not canonical"),
])
def test_malformed_lines_rejected_with_line_number(tmp_path, line, fragment):
    path = str(tmp_path / "c")
    with open(path, "w") as fh:
        fh.write("m|o|11|1\n" + line + "\n")
    with pytest.raises(CacheFormatError, match="line 2") as err:
        cache_load(path)
    assert fragment in str(err.value)


def test_fixed_mode_words_may_have_exterior_holes(tmp_path):
    path = str(tmp_path / "c")
    cache_store(path, [("s", "f", "0110", 1)])
    assert cache_load(path) == [("s", "f", "0110", 1)]
