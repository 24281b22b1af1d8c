#!/usr/bin/env python3
"""How close these codes get to the constraint's capacity.

Capacity is computed two independent ways: as log2 of the dominant
root of the counting recursion's characteristic polynomial, and as
log2 of the spectral radius of the finite-state transition diagram
that generates exactly the constraint-satisfying sequences. Finite
codes then land within a fraction of a percent of it at moderate
lengths, using adders no wider than the message itself.
"""

import math

from aloco import (
    CodeParams,
    build_table,
    capacity,
    dominant_root,
    format_table,
    fstd_capacity,
    rate_table,
)


def main():
    for x in (1, 2):
        root = dominant_root(x)
        print(f"x={x}: characteristic root {root:.9f} "
              f"-> capacity {math.log2(root):.6f} bits/bit")
        print(f"      spectral-radius route agrees: {fstd_capacity(x):.6f}")
    print()

    print("count growth converges to capacity (x=1):")
    table = build_table(CodeParams(200, 1), 201)
    for m in (10, 25, 50, 100, 200):
        growth = math.log2(table[m + 1] / table[m])
        print(f"  m={m:3d}: log2(N(m+1)/N(m)) = {growth:.9f} "
              f"(capacity {capacity(1):.9f})")
    print()

    print("finite-length rates and the adder width that buys them:")
    for x, ms in ((1, [17, 44, 76, 113, 357]), (2, [18, 28, 64, 123, 244])):
        t = build_table(CodeParams(max(ms), x), max(ms))
        print(format_table(rate_table(x, ms, t)))

    print("reading: at x=1 a 62-bit adder already delivers rate 0.8052,")
    print("within 0.8% of capacity; 290 bits close the gap to 0.2%.")


if __name__ == "__main__":
    main()
