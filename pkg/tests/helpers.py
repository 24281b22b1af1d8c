"""Shared helpers for the test suite."""

from functools import lru_cache
from pathlib import Path

from aloco import CodeParams, build_table

DATA = Path(__file__).parent / "data"


@lru_cache(maxsize=None)
def table_for(m, x):
    """Cached count table covering index m (tables are immutable)."""
    return build_table(CodeParams(m, x), m)


def golden_codebook():
    """Index/codeword pairs for the length-5, x=1 code."""
    rows = []
    for line in (DATA / "codebook_m5_x1.txt").read_text().splitlines():
        index, word = line.split("\t")
        rows.append((int(index), word))
    return rows


def golden_messages():
    """(message, index, codeword) rows for the clocked length-5, x=1 code."""
    rows = []
    for line in (DATA / "messages_m5_x1.txt").read_text().splitlines():
        message, index, word = line.split("\t")
        rows.append((message, int(index), word))
    return rows
