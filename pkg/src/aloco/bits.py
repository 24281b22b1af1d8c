"""Helpers for bit sequences held as '0'/'1' strings.

Convention used everywhere in this package: the left-most character is
the most significant bit.
"""

from itertools import groupby

from .errors import ParameterError


def check_bits(bits):
    """Validate that `bits` is a str containing only '0' and '1'."""
    if not isinstance(bits, str):
        raise ParameterError(f"expected a bit string, got {type(bits).__name__}")
    if not set(bits) <= {"0", "1"}:
        raise ParameterError("bit string may contain only '0' and '1'")
    return bits


def bits_to_int(bits):
    """Unsigned integer value of a non-empty bit string, MSB first."""
    if not bits:
        raise ParameterError("empty bit string has no value")
    return int(bits, 2)


def int_to_bits(value, width):
    """Render `value` as exactly `width` bits, MSB first."""
    if width < 1:
        raise ParameterError(f"width must be >= 1, got {width}")
    if not 0 <= value < (1 << width):
        raise ParameterError(f"value {value} does not fit in {width} bits")
    return format(value, f"0{width}b")


def find_forbidden(bits, x):
    """Locate every occurrence of a 1, then y zeros (1 <= y <= x), then a 1.

    Returns a list of (offset, length) pairs, one per adjacent pair of
    ones whose zero gap is in [1, x]. Overlapping occurrences that share
    a 1 are all reported.
    """
    hits = []
    prev = bits.find("1")
    while prev != -1:
        nxt = bits.find("1", prev + 1)
        if nxt == -1:
            break
        if 1 <= nxt - prev - 1 <= x:
            hits.append((prev, nxt - prev + 1))
        prev = nxt
    return hits


def iter_runs(bits):
    """Yield (offset, length) for each maximal run of identical bits."""
    pos = 0
    for _, group in groupby(bits):
        length = sum(1 for _ in group)
        yield pos, length
        pos += length


def longest_run(bits):
    """Length of the longest run of identical bits (0 for empty input)."""
    return max((length for _, length in iter_runs(bits)), default=0)


def pack_bits(bits):
    """Pack a bit string into bytes, MSB first, final byte zero-padded."""
    out = bytearray()
    for i in range(0, len(bits), 8):
        out.append(int(bits[i : i + 8].ljust(8, "0"), 2))
    return bytes(out)


def expand_bytes(data):
    """Expand bytes into a bit string of length 8 * len(data), MSB first."""
    return "".join(format(b, "08b") for b in data)
