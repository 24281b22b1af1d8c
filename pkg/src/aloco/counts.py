"""Exact codeword counts for the asymmetric zero-run constraint.

A code with parameters (m, x) consists of all length-m binary words in
which a 1 is never followed by one through x zeros and then another 1.
The number of such words, written N(m, x) here, satisfies

    N(m, x) = 2 N(m-1, x) - N(m-2, x) + N(m-x-2, x)    for m >= 2,

with N(1, x) = 2 and N(m, x) = 1 for every m <= 0. The recursion falls
out of splitting the code by its left-most bits: words starting with 0,
words starting with 11, and words starting with a 1 followed by at
least x+1 zeros.

All arithmetic is on Python's unbounded integers, so tables remain
exact at any length (indices near length 357 need around 290 bits).
"""

from dataclasses import dataclass

from .errors import ParameterError


@dataclass(frozen=True)
class CodeParams:
    """Code parameters: codeword length `m` and maximum forbidden zero run `x`.

    Both must be at least 1. Clocked-code operations (message codecs,
    run-length bounds) additionally require m >= 2; they check that
    themselves.
    """

    m: int
    x: int

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise ParameterError(f"m must be an integer >= 1, got {self.m!r}")
        if not isinstance(self.x, int) or self.x < 1:
            raise ParameterError(f"x must be an integer >= 1, got {self.x!r}")


class CountTable:
    """Immutable table of counts N(i, x) for i in [-(x+1), max_index].

    Negative indices are stored explicitly because the index arithmetic
    in the codec evaluates N at i - x, which can reach -x. Instances are
    safe for concurrent reads; build once and share.
    """

    __slots__ = ("x", "max_index", "_values")

    def __init__(self, x, values):
        self.x = x
        self.max_index = len(values) - (x + 2)
        self._values = tuple(values)

    def __getitem__(self, i):
        if not -(self.x + 1) <= i <= self.max_index:
            raise ParameterError(
                f"index {i} outside table range [{-(self.x + 1)}, {self.max_index}]"
            )
        return self._values[i + self.x + 1]

    def __repr__(self):
        return f"CountTable(x={self.x}, max_index={self.max_index})"


def build_table(params, max_index=None):
    """Build the count table for params.x up to `max_index` (default params.m).

    Entries satisfy the recursion above exactly; no floating point is
    involved anywhere.
    """
    x = params.x
    if max_index is None:
        max_index = params.m
    if max_index < 0:
        raise ParameterError(f"max_index must be >= 0, got {max_index}")
    values = [1] * (x + 2)  # indices -(x+1) .. 0
    offset = x + 1
    if max_index >= 1:
        values.append(2)
    for i in range(2, max_index + 1):
        values.append(
            2 * values[i - 1 + offset]
            - values[i - 2 + offset]
            + values[i - x - 2 + offset]
        )
    return CountTable(x, values)


def check_table(table, params, max_needed):
    """Raise ParameterError unless `table` matches params.x and covers `max_needed`."""
    if table.x != params.x:
        raise ParameterError(f"table was built for x={table.x}, not x={params.x}")
    if table.max_index < max_needed:
        raise ParameterError(
            f"table covers indices up to {table.max_index}, need {max_needed}"
        )


def group_counts(params, table):
    """Sizes of the three left-prefix groups of the length-m code.

    Group 1 holds the words starting with 0, group 2 those starting
    with 11, and group 3 those starting with a 1 followed by at least
    x+1 zeros (a single word when m <= x+1). Returns (n1, n2, n3) with
    n1 + n2 + n3 = N(m, x).
    """
    m, x = params.m, params.x
    if m < 2:
        raise ParameterError("group structure requires m >= 2")
    check_table(table, params, m)
    n1 = table[m - 1]
    n2 = table[m - 1] - table[m - 2]
    n3 = table[m - x - 2]
    return n1, n2, n3
