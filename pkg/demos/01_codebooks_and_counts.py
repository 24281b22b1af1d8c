#!/usr/bin/env python3
"""Counting the codewords of an asymmetric zero-run constrained code.

A code with parameters (m, x) keeps every length-m binary word except
those containing a 1, then one through x zeros, then another 1. Such
patterns charge-disturb the unprogrammed Flash cell(s) sitting between
two programmed neighbours, so they are written never.

This script lists small codebooks, shows the left-prefix group
structure behind the counting recursion, and checks the recursion
against plain brute force.
"""

from aloco import (
    CodeParams,
    build_table,
    classify_group,
    enumerate_codebook,
    forbidden_patterns,
    group_counts,
)


def main():
    x = 1
    print(f"forbidden patterns for x={x}: {forbidden_patterns(x)}")
    print()

    print("codebooks for m = 1..5 (every valid word, in lexicographic order):")
    for m in range(1, 6):
        book = enumerate_codebook(CodeParams(m, x))
        print(f"  m={m}: {len(book):2d} words: {' '.join(book)}")
    print()

    # Each word of the m=5 code belongs to one of three groups decided
    # by its left-most bits: 0... (group 1), 11... (group 2), 10...
    # (group 3, where the zero run must reach length x+1).
    params = CodeParams(5, x)
    book = enumerate_codebook(params)
    print("group structure of the m=5 code:")
    for rank, word in enumerate(book):
        print(f"  rank {rank:2d}  {word}  group {classify_group(word, params)}")
    print()

    table = build_table(params)
    n1, n2, n3 = group_counts(params, table)
    print(f"group sizes from the recursion: {n1} + {n2} + {n3} = {n1 + n2 + n3}")
    print()

    # The recursion never needs the words themselves, so it reaches
    # lengths far beyond anything enumerable.
    big = build_table(CodeParams(357, 1), 357)
    n = big[357]
    print(f"number of valid 357-bit words: {n}")
    print(f"  ({n.bit_length()} bits long; arithmetic stays exact throughout)")
    print()

    print("recursion vs brute force for m <= 12, x <= 3:")
    for xx in (1, 2, 3):
        t = build_table(CodeParams(12, xx), 12)
        counted = [t[m] for m in range(1, 13)]
        enumerated = [
            len(enumerate_codebook(CodeParams(m, xx))) for m in range(1, 13)
        ]
        tag = "match" if counted == enumerated else "MISMATCH"
        print(f"  x={xx}: {counted} {tag}")


if __name__ == "__main__":
    main()
