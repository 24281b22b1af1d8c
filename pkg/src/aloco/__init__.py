"""Asymmetric run-length constrained (A-LOCO) codes.

Fixed-length binary codes whose words never contain a 1, a zero run of
length 1 through x, then another 1; such patterns disturb unprogrammed
Flash cells between programmed neighbours. Codewords are ranked
lexicographically, which yields constant-time-per-bit encoding and
decoding from exact count tables instead of lookup tables.

Bit sequences are '0'/'1' strings with the left-most bit most
significant. Count tables are immutable and shareable; everything else
is a pure function over them.
"""

from .analysis import (
    RateReport,
    capacity,
    dominant_root,
    format_table,
    fstd_adjacency,
    fstd_capacity,
    rate,
    rate_table,
    round_half_up,
)
from .codec import (
    EncodeStep,
    OpCounter,
    codeword_at,
    decode_codeword,
    encode_message,
    index_of,
    message_size,
)
from .counts import CodeParams, CountTable, build_table, check_table, group_counts
from .errors import (
    AlocoError,
    ConstraintViolation,
    CorruptionError,
    FramingError,
    ParameterError,
)
from .oracle import (
    EXHAUSTIVE_LIMIT,
    Codebook,
    classify_group,
    enumerate_codebook,
    forbidden_patterns,
    format_codebook,
)
from .stream import (
    StreamEncoder,
    StreamFrame,
    Violation,
    bridge_codewords,
    decode_stream,
    encode_stream,
    max_run_bound,
    pack_frame,
    scan_stream,
    select_bridge,
    unpack_frame,
)

__all__ = [
    "AlocoError",
    "Codebook",
    "CodeParams",
    "ConstraintViolation",
    "CorruptionError",
    "CountTable",
    "EncodeStep",
    "EXHAUSTIVE_LIMIT",
    "FramingError",
    "OpCounter",
    "ParameterError",
    "RateReport",
    "StreamEncoder",
    "StreamFrame",
    "Violation",
    "bridge_codewords",
    "build_table",
    "capacity",
    "check_table",
    "classify_group",
    "codeword_at",
    "decode_codeword",
    "decode_stream",
    "dominant_root",
    "encode_message",
    "encode_stream",
    "enumerate_codebook",
    "forbidden_patterns",
    "format_codebook",
    "format_table",
    "fstd_adjacency",
    "fstd_capacity",
    "group_counts",
    "index_of",
    "max_run_bound",
    "message_size",
    "pack_frame",
    "rate",
    "rate_table",
    "round_half_up",
    "scan_stream",
    "select_bridge",
    "unpack_frame",
]
