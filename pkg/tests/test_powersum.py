"""Power sum polynomials, their denominators, and the scaled differences."""

from fractions import Fraction
from math import comb, gcd

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from powerdenom.bernoulli import BernoulliCache, RationalPoly
from powerdenom.denom import full_denom, nonconstant_denom
from powerdenom.powersum import (
    AMInteger,
    ProgressionSpec,
    am_congruence_check,
    am_integer,
    c_coeff,
    is_integral,
    power_sum_denominator,
    power_sum_difference,
    power_sum_naive,
    power_sum_poly,
)

CACHE = BernoulliCache()

F = Fraction

# (m, r, n) -> ascending coefficients of the power sum polynomial
WORKED_POLYNOMIALS = {
    (2, 0, 1): (0, -1, 1),
    (6, 0, 2): (0, 6, -18, 12),
    (2, 0, 3): (0, 0, 2, -4, 2),
    (30, 0, 4): (0, -27000, 0, 270000, -405000, 162000),
    (6, 0, 5): (0, 0, -648, 0, 3240, -3888, 1296),
    (2, 1, 1): (0, 0, 1),
    (6, 1, 2): (0, 1, -12, 12),
    (2, 1, 3): (0, 0, -1, 0, 2),
    (30, 1, 4): (0, -26159, 24360, 217800, -378000, 162000),
    (6, 1, 5): (0, -170, -273, 1200, 540, -2592, 1296),
}


@pytest.mark.parametrize("spec,coeffs", sorted(WORKED_POLYNOMIALS.items()))
def test_worked_polynomials(spec, coeffs):
    m, r, n = spec
    assert power_sum_poly(CACHE, ProgressionSpec(m, r, n)) == RationalPoly(coeffs)


def test_naive_examples():
    assert power_sum_naive(ProgressionSpec(3, 2, 4), 0) == 0
    assert power_sum_naive(ProgressionSpec(1, 0, 2), 4) == 14
    assert power_sum_naive(ProgressionSpec(2, 1, 1), 3) == 9


def test_naive_rejects_negative_count():
    with pytest.raises(ValueError):
        power_sum_naive(ProgressionSpec(1, 0, 1), -1)


def test_progression_spec_validation():
    with pytest.raises(ValueError):
        ProgressionSpec(0, 0, 1)
    with pytest.raises(ValueError):
        ProgressionSpec(1, -1, 1)
    with pytest.raises(ValueError):
        ProgressionSpec(1, 0, 0)


def test_poly_shape():
    for m, r, n in ((1, 0, 1), (4, 3, 7), (9, 2, 12)):
        f = power_sum_poly(CACHE, ProgressionSpec(m, r, n))
        assert f.degree == n + 1
        assert f.coefficient(0) == 0


def test_poly_matches_naive_small_grid():
    for m in range(1, 5):
        for r in range(4):
            for n in range(1, 13):
                spec = ProgressionSpec(m, r, n)
                f = power_sum_poly(CACHE, spec)
                for x in range(9):
                    assert f(x) == power_sum_naive(spec, x), (m, r, n, x)


@settings(max_examples=60)
@given(
    st.integers(min_value=1, max_value=12),
    st.integers(min_value=0, max_value=12),
    st.integers(min_value=1, max_value=40),
    st.integers(min_value=0, max_value=20),
)
def test_poly_matches_naive_sampled(m, r, n, x):
    spec = ProgressionSpec(m, r, n)
    assert power_sum_poly(CACHE, spec)(x) == power_sum_naive(spec, x)


def test_scaling_identity():
    # starting at zero, scaling the difference scales the whole polynomial
    for n in range(1, 21):
        base = power_sum_poly(CACHE, ProgressionSpec(1, 0, n))
        for m in range(1, 11):
            scaled = power_sum_poly(CACHE, ProgressionSpec(m, 0, n))
            assert scaled == base * m**n, (m, n)


def test_denominator_spot_values():
    assert power_sum_denominator(ProgressionSpec(2, 0, 2)) == 3
    for r in range(5):
        assert power_sum_denominator(ProgressionSpec(1, r, 4)) == 30
    assert power_sum_denominator(ProgressionSpec(30, 1, 4)) == 1
    assert power_sum_denominator(ProgressionSpec(6, 1, 2)) == 1


@settings(max_examples=80)
@given(
    st.integers(min_value=1, max_value=30),
    st.integers(min_value=0, max_value=6),
    st.integers(min_value=1, max_value=40),
)
def test_denominator_formula_matches_polynomial(m, r, n):
    spec = ProgressionSpec(m, r, n)
    formula = power_sum_denominator(spec)
    assert formula == power_sum_poly(CACHE, spec).denominator
    # r-independence and the envelope divisibility
    assert formula == power_sum_denominator(ProgressionSpec(m, r + 1, n))
    envelope = (n + 1) * nonconstant_denom(n + 1).value
    assert envelope % formula == 0


def test_integrality_spot_values():
    assert is_integral(ProgressionSpec(6, 1, 5))
    assert not is_integral(ProgressionSpec(2, 0, 2))
    for n, m in enumerate((2, 6, 2, 30, 6), start=1):
        assert is_integral(ProgressionSpec(m, 3, n)), (m, n)
        assert power_sum_denominator(ProgressionSpec(m, 3, n)) == 1


@settings(max_examples=80)
@given(
    st.integers(min_value=1, max_value=60),
    st.integers(min_value=0, max_value=2),
    st.integers(min_value=1, max_value=40),
)
def test_integrality_equivalence_sampled(m, r, n):
    spec = ProgressionSpec(m, r, n)
    flag = is_integral(spec)
    assert flag == (power_sum_poly(CACHE, spec).denominator == 1)
    assert flag == (m % full_denom(n).value == 0)


def test_difference_examples():
    assert power_sum_difference(CACHE, 5, 3, 3, 7).is_zero
    assert power_sum_difference(CACHE, 2, 1, 0, 1) == RationalPoly((0, 1))
    assert power_sum_difference(CACHE, 6, 1, 0, 2) == RationalPoly((0, -5, 6))


def test_difference_rejects_negative_start():
    with pytest.raises(ValueError):
        power_sum_difference(CACHE, 2, -1, 0, 3)


@settings(max_examples=60)
@given(
    st.integers(min_value=1, max_value=8),
    st.integers(min_value=0, max_value=6),
    st.integers(min_value=0, max_value=6),
    st.integers(min_value=1, max_value=20),
)
def test_difference_is_integral(m, r1, r2, n):
    diff = power_sum_difference(CACHE, m, r1, r2, n)
    assert diff.denominator == 1


def test_am_integer_examples():
    for m in (1, 2, 7):
        for n in (1, 2, 9):
            assert am_integer(CACHE, m, 0, n).value == 0
    for n in range(2, 30):
        assert am_integer(CACHE, 1, 1, n).value == 0
    assert am_integer(CACHE, 1, 1, 1).value == 1  # B_1(1) - B_1 = 1
    assert am_integer(CACHE, 2, 1, 2).value == -1


def test_am_integer_matches_rational_definition():
    for m in range(1, 13):
        for r in range(-12, 13):
            for n in range(1, 16):
                expected = m**n * (CACHE.value_at(n, F(r, m)) - CACHE.number(n))
                got = am_integer(CACHE, m, r, n)
                assert got.value == expected, (m, r, n)
                assert got == AMInteger(m, r, n, got.value)


def test_am_integer_validation():
    with pytest.raises(ValueError):
        am_integer(CACHE, 0, 1, 3)
    with pytest.raises(ValueError):
        am_integer(CACHE, 3, 1, 0)


def test_am_additive_relation():
    # shifting the start by r2 re-expands through binomials; the k = 0 term
    # vanishes because the n = 0 difference is zero
    for m in range(1, 9):
        table = {
            r: [am_integer(CACHE, m, r, k).value for k in range(1, 26)]
            for r in range(13)
        }
        for r1 in range(7):
            for r2 in range(7):
                for n in range(1, 26):
                    total = sum(
                        comb(n, k) * table[r1][k - 1] * r2 ** (n - k)
                        for k in range(1, n + 1)
                    )
                    assert table[r1 + r2][n - 1] == total + table[r2][n - 1], (
                        m, r1, r2, n,
                    )


def test_am_congruence_examples():
    assert am_congruence_check(CACHE, 3, 1, 4, 2, 2)
    assert am_congruence_check(CACHE, 2, 1, 12, 3, 1)
    assert am_congruence_check(CACHE, 9, 5, 8, 2, 0)


def test_am_congruence_validation():
    with pytest.raises(ValueError):
        am_congruence_check(CACHE, 3, 1, 4, 4, 1)  # p not prime
    with pytest.raises(ValueError):
        am_congruence_check(CACHE, 6, 1, 4, 2, 1)  # p divides m
    with pytest.raises(ValueError):
        am_congruence_check(CACHE, 3, 1, 4, 2, 3)  # e exceeds v_2(4)
    with pytest.raises(ValueError):
        am_congruence_check(CACHE, 3, 1, 4, 2, -1)


def test_triple_product_integrality():
    # c(n,k) * m^(n-k) * (scaled difference at exponent k) is an integer
    for m in range(1, 13):
        for r in range(13):
            diffs = [am_integer(CACHE, m, r, k).value for k in range(1, 31)]
            for n in range(1, 31):
                for k in range(1, n + 1):
                    value = c_coeff(n, k) * m ** (n - k) * diffs[k - 1]
                    assert value.denominator == 1, (m, r, n, k)


def test_c_coeff_values():
    assert c_coeff(5, 3) == F(10, 3)
    for n in range(1, 30):
        assert c_coeff(n, 1) == 1
        assert c_coeff(n, n) == 1


def test_c_coeff_validation():
    with pytest.raises(ValueError):
        c_coeff(5, 0)
    with pytest.raises(ValueError):
        c_coeff(5, 6)
    with pytest.raises(ValueError):
        c_coeff(0, 1)


def test_c_coeff_structure_to_200():
    for n in range(1, 201):
        for k in range(1, n + 1):
            value = c_coeff(n, k)
            assert value == F(comb(n + 1, k), n + 1)
            assert value == c_coeff(n, n + 1 - k)
            assert gcd(n + 1, k) % value.denominator == 0
            assert 2 * value.denominator <= n + 1
