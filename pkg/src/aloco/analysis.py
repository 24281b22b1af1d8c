"""Finite-length rates, adder widths, and the constraint's capacity.

A clocked code of length m with x bridging bits per boundary carries
s = floor(log2(N(m, x) - 2)) message bits in m + x written bits, so its
rate is s / (m + x), and s is also the width of the adders an
encoder/decoder needs (the dominant hardware cost).

Capacity, the asymptotic ceiling on any code for the same constraint,
is log2 of the growth rate of N(m, x) in m. Two independent routes to
it are implemented and cross-checked on every call:

* the dominant real root in (1, 2) of the counting recursion's
  characteristic polynomial  t**(x+2) - 2 t**(x+1) + t**x - 1, found
  by bisection, and
* the spectral radius of the adjacency matrix of the (x+2)-state
  transition diagram generating exactly the constraint-satisfying
  sequences (one state for "last bit was 1", one per zero-run length
  1..x, and one free state once the run exceeds x).
"""

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction

import numpy as np

from .codec import message_size
from .counts import CodeParams
from .errors import ParameterError


def round_half_up(value, places=4):
    """Render an exact Fraction to `places` decimals, ties away from zero.

    Plain float formatting rounds ties to even; tables in this domain
    round them up, so exact decimal arithmetic is used instead.
    """
    quantum = Decimal(1).scaleb(-places)
    d = Decimal(value.numerator) / Decimal(value.denominator)
    return str(d.quantize(quantum, rounding=ROUND_HALF_UP))


def dominant_root(x, tolerance=1e-12):
    """Bisection root of t**(x+2) - 2 t**(x+1) + t**x - 1 in (1, 2).

    The polynomial is -1 at t=1 and 2**x - 1 at t=2, and the counting
    recursion guarantees a unique dominant real root between them.
    """
    if x < 1:
        raise ParameterError(f"x must be >= 1, got {x}")
    if tolerance <= 0:
        raise ParameterError("tolerance must be positive")

    def p(t):
        return t ** (x + 2) - 2 * t ** (x + 1) + t**x - 1

    lo, hi = 1.0, 2.0
    while hi - lo > tolerance:
        mid = (lo + hi) / 2
        if mid in (lo, hi):  # hit float resolution
            break
        if p(mid) < 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def fstd_adjacency(x):
    """Adjacency matrix of the (x+2)-state diagram for the constraint.

    State 0: last bit was 1. States 1..x: exactly that many zeros since
    the last 1 (only another zero may follow). State x+1: free, the
    zero run is already longer than x or no 1 has occurred yet.
    """
    if x < 1:
        raise ParameterError(f"x must be >= 1, got {x}")
    n = x + 2
    a = np.zeros((n, n), dtype=float)
    a[0, 0] = 1  # 1 after a 1
    a[0, 1] = 1  # first zero after a 1
    for j in range(1, x):
        a[j, j + 1] = 1  # the zero run must continue
    a[x, x + 1] = 1  # run length x+1 reached, constraint satisfied
    a[x + 1, x + 1] = 1  # free state absorbs zeros
    a[x + 1, 0] = 1  # and permits a fresh 1
    return a


def fstd_capacity(x):
    """log2 of the spectral radius of the transition-diagram adjacency."""
    return math.log2(max(abs(v) for v in np.linalg.eigvals(fstd_adjacency(x))))


def capacity(x, tolerance=1e-12):
    """Capacity of the constraint with parameter x, in bits per written bit.

    Computed as log2 of the characteristic root and cross-checked
    against the spectral-radius route; disagreement beyond what the
    bisection tolerance allows raises ArithmeticError.
    """
    cap = math.log2(dominant_root(x, tolerance))
    reference = fstd_capacity(x)
    if abs(cap - reference) > 1.5 * tolerance + 1e-9:
        raise ArithmeticError(
            f"capacity cross-check failed for x={x}: "
            f"root method {cap!r} vs spectral method {reference!r}"
        )
    return cap


@dataclass(frozen=True)
class RateReport:
    """Rate figures for one (m, x): exact rational rate plus context."""

    params: CodeParams
    s_c: int
    rate: Fraction
    adder_bits: int
    capacity: float
    capacity_gap: float

    @property
    def rate_decimal(self):
        """Rate to four decimal places, ties rounded up."""
        return round_half_up(self.rate, 4)


def rate(params, table):
    """Rate report for one code; exact arithmetic up to the final floats."""
    s = message_size(params, table)
    r = Fraction(s, params.m + params.x)
    cap = capacity(params.x)
    return RateReport(
        params=params,
        s_c=s,
        rate=r,
        adder_bits=s,
        capacity=cap,
        capacity_gap=1.0 - float(r) / cap,
    )


def rate_table(x, m_list, table):
    """One RateReport per m in m_list, all at the same x."""
    return [rate(CodeParams(m, x), table) for m in m_list]


def format_table(reports, csv=False):
    """Render reports as aligned plain text or as CSV.

    Columns: m, x, s_c, rate, adder_bits, capacity, gap_percent.
    """
    rows = [
        (
            str(r.params.m),
            str(r.params.x),
            str(r.s_c),
            r.rate_decimal,
            str(r.adder_bits),
            f"{r.capacity:.4f}",
            f"{100.0 * r.capacity_gap:.2f}",
        )
        for r in reports
    ]
    header = ("m", "x", "s_c", "rate", "adder_bits", "capacity", "gap_percent")
    if csv:
        return "".join(",".join(row) + "\n" for row in [header, *rows])
    widths = [max(len(row[k]) for row in [header, *rows]) for k in range(len(header))]
    return "".join(
        "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) + "\n"
        for row in [header, *rows]
    )
