#!/usr/bin/env python3
"""Writing many codewords in a row without breaking the constraint.

Butting two valid codewords together can manufacture a forbidden
pattern across the seam. The fix costs x bits per seam: insert x ones
when the adjoining bits are both 1, x zeros otherwise. The bridge
carries no data; readers skip it by stride.

The same stream is also self-clocking: every codeword contains a
transition, so runs of identical bits cannot exceed 2(m-1) + x.
"""

from aloco import (
    CodeParams,
    bridge_codewords,
    build_table,
    decode_stream,
    encode_stream,
    max_run_bound,
    pack_frame,
    scan_stream,
    select_bridge,
    unpack_frame,
)
from aloco.bits import longest_run


def main():
    params = CodeParams(5, 1)
    table = build_table(params)

    # Two valid words whose naked concatenation goes wrong.
    left, right = "10001", "01001"
    naked = left + right
    print(f"{left} and {right} are both valid, but written back to back:")
    print(f"  {naked}")
    for v in scan_stream(naked, params):
        print(f"  -> {v.kind} violation at bit offset {v.offset} "
              f"({naked[v.offset:v.offset + v.length]})")
    print()

    bridged = bridge_codewords([left, right], params)
    print(f"bridged with {select_bridge(left[-1], right[0], params.x)!r} "
          f"between them: {bridged}")
    print(f"  violations now: {scan_stream(bridged, params)}")
    print()

    messages = ["1010", "0000", "1111", "0110"]
    stream = encode_stream(messages, params, table)
    print(f"messages {messages}")
    print(f"encode to {stream}")
    print(f"decode back to {decode_stream(stream, params, table)}")
    print()

    bound = max_run_bound(params)
    worst = bridge_codewords(["10000", "00001"], params)
    print(f"longest possible run is 2(m-1)+x = {bound}, reached by the "
          f"worst-case pair:")
    print(f"  {worst}  (longest run: {longest_run(worst)})")
    print()

    frame = pack_frame(stream, params)
    print(f"packed frame ({len(frame)} bytes): {frame.hex()}")
    parsed = unpack_frame(frame)
    print(f"  header says m={parsed.params.m}, x={parsed.params.x}, "
          f"{parsed.codeword_count} codewords")
    print(f"  payload matches: {parsed.bits == stream}")


if __name__ == "__main__":
    main()
