import math
from fractions import Fraction

import pytest

from aloco import (
    CodeParams,
    ParameterError,
    capacity,
    dominant_root,
    format_table,
    fstd_adjacency,
    fstd_capacity,
    rate,
    rate_table,
    round_half_up,
)
from helpers import table_for

# Published finite-length figures: x -> list of (m, rate, adder bits).
KNOWN_RATES = {
    1: [(17, "0.7778", 14), (44, "0.8000", 36), (76, "0.8052", 62),
        (113, "0.8070", 92), (357, "0.8101", 290)],
    2: [(18, "0.6500", 13), (28, "0.6667", 20), (64, "0.6818", 45),
        (123, "0.6880", 86), (244, "0.6911", 170)],
}


def test_rate_worked_example():
    report = rate(CodeParams(5, 1), table_for(5, 1))
    assert report.s_c == 4
    assert report.rate == Fraction(4, 6)
    assert report.rate_decimal == "0.6667"
    assert report.adder_bits == 4


def test_rate_shortest_clocked_code():
    report = rate(CodeParams(2, 1), table_for(2, 1))
    assert report.s_c == 1
    assert report.rate_decimal == "0.3333"


@pytest.mark.parametrize("x", sorted(KNOWN_RATES))
def test_published_rate_table(x):
    ms = [m for m, _, _ in KNOWN_RATES[x]]
    reports = rate_table(x, ms, table_for(max(ms), x))
    for report, (m, rate_text, adder) in zip(reports, KNOWN_RATES[x]):
        assert report.params.m == m
        assert report.rate_decimal == rate_text
        assert report.adder_bits == adder


@pytest.mark.parametrize("x", sorted(KNOWN_RATES))
def test_rates_increase_toward_capacity(x):
    ms = [m for m, _, _ in KNOWN_RATES[x]]
    reports = rate_table(x, ms, table_for(max(ms), x))
    rates = [float(r.rate) for r in reports]
    assert rates == sorted(rates)
    assert all(r < capacity(x) for r in rates)


def test_capacity_known_values():
    assert capacity(1) == pytest.approx(0.8114, abs=1e-4)
    assert capacity(2) == pytest.approx(0.6942, abs=1e-4)


def test_capacity_x2_is_log2_of_the_golden_ratio():
    assert dominant_root(2) == pytest.approx((1 + math.sqrt(5)) / 2, abs=1e-11)


@pytest.mark.parametrize("x", range(1, 7))
def test_root_and_spectral_methods_agree(x):
    assert abs(math.log2(dominant_root(x)) - fstd_capacity(x)) < 1e-9


@pytest.mark.parametrize("x", [1, 2])
def test_count_growth_approaches_capacity(x):
    t = table_for(201, x)
    growth = math.log2(t[201] / t[200])
    assert abs(growth - capacity(x)) < 1e-3


@pytest.mark.parametrize(
    "m,x,bound",
    [(76, 1, 0.008), (113, 1, 0.006), (357, 1, 0.002),
     (64, 2, 0.018), (123, 2, 0.009), (244, 2, 0.005)],
)
def test_capacity_gap_claims(m, x, bound):
    report = rate(CodeParams(m, x), table_for(m, x))
    assert 0 < report.capacity_gap <= bound


def test_fstd_shape():
    a = fstd_adjacency(3)
    assert a.shape == (5, 5)
    assert a.sum() == 7  # x - 1 forced zero moves plus three 2-way states


def test_round_half_up():
    assert round_half_up(Fraction(2, 3)) == "0.6667"
    assert round_half_up(Fraction(1, 3)) == "0.3333"
    assert round_half_up(Fraction(1, 20000)) == "0.0001"  # exact tie goes up
    assert round_half_up(Fraction(4, 5), places=2) == "0.80"


def test_format_table_rendering():
    reports = rate_table(1, [17, 44], table_for(44, 1))
    text = format_table(reports)
    assert "0.7778" in text and "0.8000" in text
    csv = format_table(reports, csv=True)
    lines = csv.splitlines()
    assert lines[0] == "m,x,s_c,rate,adder_bits,capacity,gap_percent"
    assert lines[1].startswith("17,1,14,0.7778,14,")


def test_parameter_errors():
    with pytest.raises(ParameterError):
        rate(CodeParams(1, 1), table_for(1, 1))
    with pytest.raises(ParameterError):
        dominant_root(0)
    with pytest.raises(ParameterError):
        dominant_root(1, tolerance=0)
    with pytest.raises(ParameterError):
        fstd_adjacency(0)
