#!/usr/bin/env python3
"""How a message becomes a codeword, one bit at a time.

Codewords are ranked lexicographically, and the rank of a word can be
computed directly from its bits with a short sum over the count table.
Encoding runs the sum in reverse: start from the target rank and walk
bit positions from the most significant end, emitting a 1 whenever the
remaining residual is large enough to afford it.

A message b maps to rank value(b) + 1. The +1 skips the all-zeros
word, and the power-of-two message range stops short of the all-ones
word, so every encoded word contains a bit transition the read clock
can lock onto.
"""

from aloco import (
    CodeParams,
    OpCounter,
    build_table,
    decode_codeword,
    encode_message,
    message_size,
)


def main():
    params = CodeParams(5, 1)
    table = build_table(params)
    s = message_size(params, table)
    print(f"code (m=5, x=1): {table[5]} valid words, "
          f"messages carry s = {s} bits (ranks 1..{2 ** s} are used)")
    print()

    message = "1010"
    trace = []
    counter = OpCounter()
    word = encode_message(message, params, table, counter=counter, trace=trace)
    print(f"encoding message {message} (rank {int(message, 2) + 1}):")
    print("  i  compare against      bit  residual after")
    for step in trace:
        print(f"  {step.position}  N({step.subt_index:2d}) = "
              f"{table[step.subt_index]:2d}          {step.bit}    "
              f"{step.residual}")
    print(f"codeword: {word}   ({counter.ops} adder operations, one per bit)")
    print()

    recovered = decode_codeword(word, params, table)
    print(f"decoding {word} sums the same counts back: message {recovered}")
    print()

    print("the full message map of this small code:")
    for value in range(1 << s):
        b = format(value, f"0{s}b")
        print(f"  {b} -> {encode_message(b, params, table)}")
    print()

    # The per-codeword cost is one fixed-width compare/subtract per bit,
    # so long codes stay cheap; only the adder width grows.
    long_params = CodeParams(357, 1)
    long_table = build_table(long_params)
    long_s = message_size(long_params, long_table)
    counter = OpCounter()
    encode_message("01" * (long_s // 2), long_params, long_table, counter=counter)
    print(f"(m=357, x=1): {long_s}-bit messages, "
          f"{counter.ops} adder operations per codeword")


if __name__ == "__main__":
    main()
