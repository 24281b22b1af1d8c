"""Message/codeword mapping through lexicographic index arithmetic.

A codeword c = [c_{m-1} ... c_0] (left-most bit most significant) has
lexicographic rank

    g(c) = sum over i of c_i * N(i - c_{i+1} * x, x),   c_m taken as 0,

within the ordered code. Encoding inverts the sum greedily: walk bit
positions from m-1 down to 0, emit a 1 and subtract the corresponding
count whenever the remaining residual allows it.

Messages carry s = floor(log2(N(m, x) - 2)) bits. Mapping a message b
to rank value(b) + 1 skips the all-zeros word, and value(b) + 1 <= 2**s
<= N - 2 keeps the all-ones word out of range, so every encoded word
has at least one bit transition (the self-clocking guarantee).

All functions are pure given an immutable CountTable and can run
concurrently on distinct codewords.
"""

from collections import namedtuple

from .bits import bits_to_int, check_bits, find_forbidden, int_to_bits
from .counts import check_table
from .errors import ConstraintViolation, CorruptionError, ParameterError

EncodeStep = namedtuple("EncodeStep", "position subt_index bit residual")
"""One encoder iteration: bit position, count index used, emitted bit,
and the residual after the step."""


class OpCounter:
    """Tallies wide-adder operations (rank-sized compare/add/subtract).

    The encoder performs exactly one such operation per bit position
    (the subtraction whose sign decides the bit); the decoder performs
    one per 1-bit. Pass an instance to a codec call to measure it.
    """

    __slots__ = ("ops",)

    def __init__(self):
        self.ops = 0


def _require_codeword(codeword, params):
    check_bits(codeword)
    if len(codeword) != params.m:
        raise ParameterError(
            f"codeword must be {params.m} bits, got {len(codeword)}"
        )
    hits = find_forbidden(codeword, params.x)
    if hits:
        offset, length = hits[0]
        raise ConstraintViolation(
            f"forbidden pattern {codeword[offset:offset + length]} "
            f"at bit offset {offset}",
            position=offset,
        )


def _rank_sum(codeword, params, table, counter):
    m, x = params.m, params.x
    total = 0
    prev = "0"  # c_{i+1}; starts as the implicit c_m = 0
    for j, ch in enumerate(codeword):
        i = m - 1 - j
        if ch == "1":
            total += table[i - x] if prev == "1" else table[i]
            if counter is not None:
                counter.ops += 1
        prev = ch
    return total


def message_size(params, table):
    """Message bits per codeword: floor(log2(N(m, x) - 2)). Requires m >= 2."""
    if params.m < 2:
        raise ParameterError("clocked codes require m >= 2")
    check_table(table, params, params.m)
    return (table[params.m] - 2).bit_length() - 1


def index_of(codeword, params, table, counter=None):
    """Lexicographic rank of a valid codeword, in [0, N(m, x) - 1].

    Raises ConstraintViolation (with the offending bit position) if the
    word contains a forbidden pattern.
    """
    if params.m < 2:
        raise ParameterError("indexing requires m >= 2")
    _require_codeword(codeword, params)
    check_table(table, params, params.m - 1)
    return _rank_sum(codeword, params, table, counter)


def codeword_at(index, params, table, counter=None, trace=None):
    """Codeword whose lexicographic rank is `index`, 0 <= index < N(m, x).

    Exact inverse of index_of. If `trace` is a list, one EncodeStep per
    bit position is appended to it.
    """
    m, x = params.m, params.x
    if m < 2:
        raise ParameterError("indexing requires m >= 2")
    check_table(table, params, m)
    if not 0 <= index <= table[m] - 1:
        raise ParameterError(
            f"index {index} outside [0, {table[m] - 1}] for m={m}, x={x}"
        )
    residual = index
    out = []
    prev = "0"
    for i in range(m - 1, -1, -1):
        subt_index = i - x if prev == "1" else i
        diff = residual - table[subt_index]
        if counter is not None:
            counter.ops += 1
        if diff >= 0:
            residual = diff
            prev = "1"
        else:
            prev = "0"
        out.append(prev)
        if trace is not None:
            trace.append(EncodeStep(i, subt_index, prev, residual))
    return "".join(out)


def encode_message(message, params, table, counter=None, trace=None):
    """Encode an s-bit message to its clocked codeword (rank value + 1)."""
    s = message_size(params, table)
    check_bits(message)
    if len(message) != s:
        raise ParameterError(
            f"message must be exactly {s} bits for m={params.m}, "
            f"x={params.x}, got {len(message)}"
        )
    return codeword_at(bits_to_int(message) + 1, params, table, counter, trace)


def decode_codeword(codeword, params, table, counter=None):
    """Recover the s-bit message from a codeword; inverse of encode_message.

    Raises ConstraintViolation if the word breaks the constraint, and
    CorruptionError if it is constraint-valid but its rank falls outside
    the encodable range [1, 2**s] (such a word can never leave the
    encoder, so the received data must be corrupt).
    """
    s = message_size(params, table)
    _require_codeword(codeword, params)
    rank = _rank_sum(codeword, params, table, counter)
    if not 1 <= rank <= (1 << s):
        raise CorruptionError(
            f"rank {rank} outside encodable range [1, {1 << s}]; "
            "valid word but not a clocked-encoder output"
        )
    return int_to_bits(rank - 1, s)
