"""Flat-file persistence for the grundy memo.

One record per line, `<variant>|<mode>|<word>|<value>`, sorted by key on
store.  Plain ASCII so cache files diff cleanly and double as fixtures.
"""
from __future__ import annotations

import os
import tempfile
from typing import Iterable

CacheRecord = tuple[str, str, str, int]


class CacheFormatError(ValueError):
    pass


def _validate(variant: str, mode: str, word: str, value: int,
              lineno: int | None = None) -> None:
    where = f" at line {lineno}" if lineno is not None else ""
    if variant not in ("s", "m"):
        raise CacheFormatError(f"bad variant {variant!r}{where}")
    if mode not in ("f", "o"):
        raise CacheFormatError(f"bad mode {mode!r}{where}")
    if not word or any(c not in "01" for c in word):
        raise CacheFormatError(f"bad board word {word!r}{where}")
    if mode == "o" and (word[0] != "1" or word[-1] != "1"):
        raise CacheFormatError(f"open-mode word not canonical {word!r}{where}")
    if value < 0:
        raise CacheFormatError(f"negative value {value}{where}")


def cache_load(path: str) -> list[CacheRecord]:
    """Read records; a missing file is an empty cache, a bad line an error."""
    if not os.path.exists(path):
        return []
    records: list[CacheRecord] = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line:
                continue
            parts = line.split("|")
            if len(parts) != 4:
                raise CacheFormatError(f"expected 4 fields at line {lineno}: {line!r}")
            variant, mode, word, value_text = parts
            try:
                value = int(value_text)
            except ValueError:
                raise CacheFormatError(
                    f"bad value {value_text!r} at line {lineno}") from None
            _validate(variant, mode, word, value, lineno)
            records.append((variant, mode, word, value))
    return records


def cache_store(path: str, records: Iterable[CacheRecord]) -> None:
    """Write records sorted by key, atomically replacing the file."""
    rows = sorted(records)
    for variant, mode, word, value in rows:
        _validate(variant, mode, word, value)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".cache-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="ascii") as fh:
            for variant, mode, word, value in rows:
                fh.write(f"{variant}|{mode}|{word}|{value}\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
