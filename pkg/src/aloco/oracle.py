"""Brute-force reference codebooks.

Enumerates every valid word by filtering all 2**m bit strings with a
plain substring scan. Deliberately shares no machinery with the
arithmetic codec so that agreement between the two is meaningful
evidence of correctness. Desk-scale only.
"""

from dataclasses import dataclass

from .counts import CodeParams
from .errors import ParameterError

EXHAUSTIVE_LIMIT = 24


@dataclass(frozen=True)
class Codebook:
    """All valid codewords for one (m, x), in ascending lexicographic order."""

    params: CodeParams
    codewords: tuple

    def __len__(self):
        return len(self.codewords)

    def __iter__(self):
        return iter(self.codewords)

    def __getitem__(self, k):
        return self.codewords[k]


def forbidden_patterns(x):
    """The x forbidden substrings: 101, 1001, ..., 1 0^x 1."""
    return ["1" + "0" * y + "1" for y in range(1, x + 1)]


def enumerate_codebook(params, limit=EXHAUSTIVE_LIMIT):
    """Filter all 2**m words; refuse m > limit to bound the search."""
    m, x = params.m, params.x
    if m > limit:
        raise ParameterError(
            f"exhaustive enumeration capped at m <= {limit}, got m={m}"
        )
    patterns = forbidden_patterns(x)
    width = f"0{m}b"
    # Ascending integers are ascending fixed-width bit strings.
    words = tuple(
        w
        for v in range(1 << m)
        if not any(p in (w := format(v, width)) for p in patterns)
    )
    return Codebook(params, words)


def classify_group(codeword, params):
    """Left-prefix group of a valid codeword: 1, 2, or 3.

    Group 1 starts with 0, group 2 with 11, group 3 with 10 (its zero
    run necessarily extends to x+1 zeros or to the end of the word).
    """
    if params.m < 2:
        raise ParameterError("group structure requires m >= 2")
    if len(codeword) != params.m:
        raise ParameterError(f"codeword must be {params.m} bits")
    if codeword[0] == "0":
        return 1
    return 2 if codeword[1] == "1" else 3


def format_codebook(codebook):
    """Render a codebook as index-annotated ASCII, one codeword per line."""
    return "".join(f"{k}\t{w}\n" for k, w in enumerate(codebook))
