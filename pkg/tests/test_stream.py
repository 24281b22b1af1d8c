import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aloco import (
    CodeParams,
    ConstraintViolation,
    CorruptionError,
    FramingError,
    ParameterError,
    bridge_codewords,
    decode_stream,
    encode_stream,
    max_run_bound,
    message_size,
    pack_frame,
    scan_stream,
    select_bridge,
    StreamEncoder,
    unpack_frame,
)
from aloco.bits import longest_run
from helpers import table_for

P51 = CodeParams(5, 1)


def test_select_bridge_rules():
    assert select_bridge("1", "1", 2) == "11"
    assert select_bridge("1", "0", 1) == "0"
    assert select_bridge("0", "1", 3) == "000"
    assert select_bridge("0", "0", 2) == "00"


def test_encode_stream_known_outputs():
    t = table_for(5, 1)
    assert encode_stream(["0000", "1111"], P51, t) == "00001111000"
    assert encode_stream(["1011", "0000"], P51, t) == "10000000001"
    assert encode_stream(["0000"], P51, t) == "00001"


def test_decode_stream_inverts():
    t = table_for(5, 1)
    assert decode_stream("00001111000", P51, t) == ["0000", "1111"]
    assert decode_stream("00001", P51, t) == ["0000"]


def test_framing_error_on_bad_length():
    with pytest.raises(FramingError):
        decode_stream("0000111100", P51, table_for(5, 1))


def test_strict_mode_flags_forged_bridges():
    t = table_for(5, 1)
    stream = encode_stream(["0000", "1111"], P51, t)
    forged = stream[:5] + "0" + stream[6:]  # the lone bridge bit, flipped
    assert decode_stream(forged, P51, t) == ["0000", "1111"]
    with pytest.raises(CorruptionError) as info:
        decode_stream(forged, P51, t, strict=True)
    assert "5" in str(info.value)


def test_codeword_errors_carry_the_ordinal():
    t = table_for(5, 1)
    bad_word = "10100"  # pattern 101 at its offset 0
    stream = "00001" + "0" + bad_word
    with pytest.raises(ConstraintViolation) as info:
        decode_stream(stream, P51, t)
    assert "codeword 1" in str(info.value)
    assert info.value.position == 6

    unencodable = "00001" + "0" + "00000"  # rank 0 is never emitted
    with pytest.raises(CorruptionError) as info:
        decode_stream(unencodable, P51, t)
    assert "codeword 1" in str(info.value)


def test_run_bound_values():
    assert max_run_bound(P51) == 9
    assert max_run_bound(CodeParams(2, 1)) == 3
    assert max_run_bound(CodeParams(44, 1)) == 87
    with pytest.raises(ParameterError):
        max_run_bound(CodeParams(1, 1))


@pytest.mark.parametrize("m,x", [(5, 1), (6, 2), (7, 3)])
def test_run_bound_is_achieved_by_witness_streams(m, x):
    p = CodeParams(m, x)
    bound = max_run_bound(p)
    zeros_heavy = ["1" + "0" * (m - 1), "0" * (m - 1) + "1"]
    ones_heavy = ["0" + "1" * (m - 1), "1" * (m - 1) + "0"]
    assert longest_run(bridge_codewords(zeros_heavy, p)) == bound
    assert longest_run(bridge_codewords(ones_heavy, p)) == bound


def test_scan_flags_the_unbridged_counterexample():
    # Writing ranks 13 then 8 of the (5, 1) code back to back gives
    # 1000101001, which contains 101.
    found = scan_stream("1000101001", P51)
    assert [(v.kind, v.offset) for v in found] == [("pattern", 4)]


def test_scan_flags_over_long_runs():
    p = CodeParams(2, 1)  # bound 3
    found = scan_stream("10000", p)
    assert [(v.kind, v.offset, v.length) for v in found] == [("run", 1, 4)]


@st.composite
def _message_batch(draw):
    m = draw(st.integers(2, 10))
    x = draw(st.integers(1, 3))
    s = message_size(CodeParams(m, x), table_for(m, x))
    n = draw(st.integers(1, 8))
    values = draw(st.lists(st.integers(0, (1 << s) - 1), min_size=n, max_size=n))
    return m, x, [format(v, f"0{s}b") for v in values]


@given(_message_batch())
@settings(max_examples=100)
def test_incremental_encoder_matches_batch(case):
    m, x, messages = case
    p = CodeParams(m, x)
    t = table_for(m, x)
    encoder = StreamEncoder(p, t)
    assert encoder.prev_rmb is None
    incremental = "".join(encoder.push(b) for b in messages)
    assert incremental == encode_stream(messages, p, t)
    assert encoder.prev_rmb == incremental[-1]


@given(_message_batch())
@settings(max_examples=250)
def test_streams_are_safe_and_invertible(case):
    m, x, messages = case
    p = CodeParams(m, x)
    t = table_for(m, x)
    stream = encode_stream(messages, p, t)
    assert len(stream) == len(messages) * m + (len(messages) - 1) * x
    assert scan_stream(stream, p) == []
    assert longest_run(stream) <= max_run_bound(p)
    assert decode_stream(stream, p, t) == messages
    assert decode_stream(stream, p, t, strict=True) == messages


def test_frame_roundtrip():
    t = table_for(5, 1)
    stream = encode_stream(["0000", "1111"], P51, t)
    data = pack_frame(stream, P51, message_bits=8)
    frame = unpack_frame(data)
    assert frame.params == P51
    assert frame.codeword_count == 2
    assert frame.bits == stream
    assert frame.message_bits == 8


def test_frame_rejects_damage():
    t = table_for(5, 1)
    data = pack_frame(encode_stream(["0000"], P51, t), P51)
    with pytest.raises(FramingError):
        unpack_frame(b"XXXX" + data[4:])
    with pytest.raises(FramingError):
        unpack_frame(data[:4] + b"\x07" + data[5:])  # version
    with pytest.raises(FramingError):
        unpack_frame(data[:-1])  # truncated payload
    with pytest.raises(FramingError):
        unpack_frame(data[:10])  # truncated header
    with pytest.raises(FramingError):
        unpack_frame(data[:-1] + bytes([data[-1] | 0b001]))  # nonzero padding


def test_empty_stream_rejected():
    t = table_for(5, 1)
    with pytest.raises(ParameterError):
        encode_stream([], P51, t)
    with pytest.raises(ParameterError):
        bridge_codewords([], P51)
    with pytest.raises(FramingError):
        pack_frame("", P51)


def test_bridge_codewords_validates_words():
    with pytest.raises(ConstraintViolation):
        bridge_codewords(["10100"], P51)
    with pytest.raises(ParameterError):
        bridge_codewords(["000"], P51)
