"""Bridged codeword streams and their on-disk framing.

Consecutive codewords are separated by x bridging bits so forbidden
patterns cannot straddle a boundary: all ones when the adjoining bits
are both 1, all zeros otherwise. No bridge is written before the first
codeword or after the last, so n codewords occupy n*m + (n-1)*x bits.

Two interchange formats exist. ASCII is a single line of '0'/'1'
characters with an optional trailing newline. The packed format is a
fixed header followed by the payload bits packed MSB-first with the
final byte zero-padded:

    magic "ALC1" | version u8 = 1 | m u32 LE | x u32 LE |
    codeword count u64 LE | original message bit-length u64 LE | payload

The message bit-length field is 0 unless the writer padded its input
(see the CLI's --pad-zero); readers trim to it when nonzero.

Encoding is a two-pass affair in disguise: codewords are produced
independently first, then bridges are computed from adjacent boundary
bits, so both passes parallelize. Decoding is stride-based (m + x bits
per codeword) and embarrassingly parallel.
"""

import struct
from collections import namedtuple
from dataclasses import dataclass

from .bits import check_bits, expand_bytes, find_forbidden, iter_runs, pack_bits
from .codec import decode_codeword, encode_message, _require_codeword
from .counts import CodeParams
from .errors import (
    ConstraintViolation,
    CorruptionError,
    FramingError,
    ParameterError,
)

FRAME_MAGIC = b"ALC1"
FRAME_VERSION = 1
_HEADER = struct.Struct("<4sBIIQQ")

Violation = namedtuple("Violation", "kind offset length")
"""A scan finding: kind is 'pattern' or 'run', offset/length in bits."""


def max_run_bound(params):
    """Longest possible identical-bit run in a bridged stream: 2(m-1) + x.

    Achieved by a word ending in m-1 zeros followed by one starting
    with m-1 zeros (zero bridge in between), and by the all-ones
    mirror of that scenario.
    """
    if params.m < 2:
        raise ParameterError("run bound applies to clocked codes, m >= 2")
    return 2 * (params.m - 1) + params.x


def select_bridge(prev_rmb, next_lmb, x):
    """Bridge between a codeword ending in prev_rmb and one starting with next_lmb."""
    if x < 1:
        raise ParameterError(f"x must be >= 1, got {x}")
    for bit in (prev_rmb, next_lmb):
        if bit not in ("0", "1"):
            raise ParameterError(f"boundary bit must be '0' or '1', got {bit!r}")
    return ("1" if prev_rmb == "1" == next_lmb else "0") * x


def bridge_codewords(codewords, params):
    """Join already-encoded codewords into one bridged bit sequence."""
    words = list(codewords)
    if not words:
        raise ParameterError("a stream needs at least one codeword")
    for word in words:
        _require_codeword(word, params)
    parts = [words[0]]
    for prev, nxt in zip(words, words[1:]):
        parts.append(select_bridge(prev[-1], nxt[0], params.x))
        parts.append(nxt)
    return "".join(parts)


class StreamEncoder:
    """Incremental encoder: one message in, bridge-plus-codeword out.

    Carries the right-most bit of the previously emitted codeword,
    None before the first, so no bridge ever precedes the first
    codeword. Equivalent to encode_stream fed the same messages.
    """

    def __init__(self, params, table):
        self.params = params
        self.table = table
        self.prev_rmb = None

    def push(self, message):
        """Encode one message; returns the bits to append to the stream."""
        word = encode_message(message, self.params, self.table)
        if self.prev_rmb is None:
            out = word
        else:
            out = select_bridge(self.prev_rmb, word[0], self.params.x) + word
        self.prev_rmb = word[-1]
        return out


def encode_stream(messages, params, table):
    """Encode messages and join the codewords with bridges."""
    words = [encode_message(b, params, table) for b in messages]
    return bridge_codewords(words, params)


def _split_stream(bits, params):
    m, x = params.m, params.x
    stride = m + x
    if (len(bits) + x) % stride or len(bits) < m:
        raise FramingError(
            f"stream length {len(bits)} is not n*{m} + (n-1)*{x} "
            f"for any n >= 1"
        )
    count = (len(bits) + x) // stride
    return count, stride


def decode_stream(bits, params, table, strict=False):
    """Split a bridged stream and decode each codeword; inverse of encode_stream.

    Bridging bits are skipped. With strict=True each skipped bridge is
    additionally checked against the bridge the adjoining codewords
    dictate, and any mismatch raises CorruptionError listing the bad
    bit offsets. Codeword-level errors are re-raised with the codeword
    ordinal and stream-absolute positions.
    """
    check_bits(bits)
    count, stride = _split_stream(bits, params)
    m, x = params.m, params.x
    words = [bits[k * stride : k * stride + m] for k in range(count)]
    if strict:
        bad = []
        for k in range(count - 1):
            expected = select_bridge(words[k][-1], words[k + 1][0], x)
            start = k * stride + m
            actual = bits[start : start + x]
            bad.extend(start + j for j in range(x) if actual[j] != expected[j])
        if bad:
            raise CorruptionError(
                f"bridge bits at offsets {bad} do not match the "
                "adjoining codewords"
            )
    messages = []
    for k, word in enumerate(words):
        try:
            messages.append(decode_codeword(word, params, table))
        except ConstraintViolation as exc:
            raise ConstraintViolation(
                f"codeword {k}: {exc.args[0]}",
                position=k * stride + exc.position,
            ) from exc
        except CorruptionError as exc:
            raise CorruptionError(f"codeword {k}: {exc.args[0]}") from exc
    return messages


def scan_stream(bits, params):
    """Scan any bit sequence for forbidden patterns and over-long runs.

    Returns Violation records sorted by offset: 'pattern' entries for
    each forbidden 1 0^y 1 occurrence and 'run' entries for each
    maximal run longer than max_run_bound(params).
    """
    check_bits(bits)
    bound = max_run_bound(params)
    found = [
        Violation("pattern", offset, length)
        for offset, length in find_forbidden(bits, params.x)
    ]
    found.extend(
        Violation("run", offset, length)
        for offset, length in iter_runs(bits)
        if length > bound
    )
    found.sort(key=lambda v: v.offset)
    return found


@dataclass(frozen=True)
class StreamFrame:
    """A parsed packed frame: parameters, codeword count, payload bits."""

    params: CodeParams
    codeword_count: int
    bits: str
    message_bits: int = 0


def pack_frame(bits, params, message_bits=0):
    """Wrap a bridged bit sequence in the packed header."""
    check_bits(bits)
    count, _ = _split_stream(bits, params)
    if message_bits < 0:
        raise ParameterError("message_bits must be >= 0")
    header = _HEADER.pack(
        FRAME_MAGIC, FRAME_VERSION, params.m, params.x, count, message_bits
    )
    return header + pack_bits(bits)


def unpack_frame(data):
    """Parse a packed frame back into a StreamFrame."""
    if len(data) < _HEADER.size:
        raise FramingError(f"frame shorter than the {_HEADER.size}-byte header")
    magic, version, m, x, count, message_bits = _HEADER.unpack_from(data)
    if magic != FRAME_MAGIC:
        raise FramingError(f"bad magic {magic!r}")
    if version != FRAME_VERSION:
        raise FramingError(f"unsupported format version {version}")
    try:
        params = CodeParams(m, x)
    except ParameterError as exc:
        raise FramingError(f"header carries invalid parameters: {exc}") from exc
    if count < 1:
        raise FramingError(f"codeword count must be >= 1, got {count}")
    nbits = count * m + (count - 1) * x
    payload = data[_HEADER.size :]
    if len(payload) != (nbits + 7) // 8:
        raise FramingError(
            f"payload is {len(payload)} bytes, expected {(nbits + 7) // 8}"
        )
    expanded = expand_bytes(payload)
    if "1" in expanded[nbits:]:
        raise FramingError("final-byte padding bits must be zero")
    return StreamFrame(params, count, expanded[:nbits], message_bits)
