from fractions import Fraction
from math import ceil, comb

import pytest

from bicliquekit import bounds
from bicliquekit.core import BicliqueError, KSet


@pytest.mark.parametrize("d,k,expected", [(3, 3, 27), (3, 2, 19), (1, 1, 3)])
def test_alon_upper(d, k, expected):
    assert bounds.alon_upper(d, k) == expected


@pytest.mark.parametrize("d,k,expected", [(3, 2, 14), (4, 1, 8), (4, 2, 26)])
def test_koli_upper(d, k, expected):
    assert bounds.koli_upper(d, k) == expected


@pytest.mark.parametrize("d,k,expected", [(3, 2, (11, 11)), (4, 2, (21, 21)), (1, 1, (2, 2))])
def test_regular_upper(d, k, expected):
    assert bounds.regular_upper(d, k) == expected


@pytest.mark.parametrize(
    "d,k,expected",
    [(6, 2, (Fraction(9), 16)), (5, 2, (Fraction(25, 4), 12)), (4, 4, (Fraction(1), 16))],
)
def test_lower_bounds(d, k, expected):
    assert bounds.lower_bounds(d, k) == expected


@pytest.mark.parametrize("d,k,expected", [(3, 2, (19, 5, 4, 4)), (2, 1, (5, 1, 1, 0)), (4, 3, (65, 19, 12, 26))])
def test_counting_formulas(d, k, expected):
    assert bounds.counting_formulas(d, k) == expected


@pytest.mark.parametrize("fn", [bounds.alon_upper, bounds.koli_upper, bounds.regular_upper, bounds.lower_bounds, bounds.counting_formulas])
@pytest.mark.parametrize("d,k", [(3, 4), (3, 0), (0, 0)])
def test_range_errors(fn, d, k):
    with pytest.raises(BicliqueError):
        fn(d, k)


def test_identities_up_to_64():
    for d in range(1, 65):
        for k in range(1, d + 1):
            dim, a, ak, b = bounds.counting_formulas(d, k)
            statement, proof = bounds.regular_upper(d, k)
            assert bounds.alon_upper(d, k) - a == bounds.koli_upper(d, k)
            assert dim - ak - b == proof == statement
            assert bounds.koli_upper(d, k) <= bounds.alon_upper(d, k)
            ratio, product = bounds.lower_bounds(d, k)
            assert product >= ceil(ratio)


def test_chain_endpoints():
    for d in range(1, 40):
        assert bounds.lower_bounds(d, 1)[1] == d + 1
        assert bounds.lower_bounds(d, d)[1] == 2**d


def test_hockey_stick():
    assert all(bounds.hockey_stick_holds(m, n) for m in range(33) for n in range(33))


def test_block_formula_sums_to_closed_form():
    for d in range(2, 30):
        for k in range(1, d + 1):
            total = sum(bounds.script_b_block_count(d, k, i) for i in range(1, d))
            assert total == bounds.script_b_count(d, k)


def test_block_formula_against_direct_count():
    # |B_i| counted straight from its definition: union ∋ d-i+1, not the whole
    # of [d-i+1], size <= k-1, each element on one of two sides.
    for d in range(2, 12):
        for k in range(1, d + 1):
            for i in range(1, d):
                top = d - i + 1
                direct = sum(2**s * comb(top - 1, s - 1) for s in range(1, min(k - 1, top - 1) + 1))
                assert bounds.script_b_block_count(d, k, i) == direct


def test_large_d_is_exact():
    v = bounds.alon_upper(1000, 500)
    assert v == sum(2**i * comb(1000, i) for i in range(501))


def test_report_with_kset():
    rep = bounds.bound_report(4, k_set=KSet((2, 5)))
    assert rep.k == 2 and rep.koli_upper == 26 and rep.regular_upper == rep.regular_upper_proof_form == 21
    assert rep.as_dict()["ratio_lower"] == "4"
    with pytest.raises(BicliqueError):
        bounds.bound_report(4, k=3, k_set=KSet((1, 2)))
