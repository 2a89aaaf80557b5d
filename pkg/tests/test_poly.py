from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polystab.errors import LengthMismatch, NonFiniteCoefficient, ParseError
from polystab.poly import (
    all_coeffs_positive,
    make_polynomial,
    monic_from_leading,
    parse_scalar,
    scalar_to_json,
    scalar_to_text,
    to_float,
)


def test_binomial_quintic_construction(binomial_quintic):
    assert binomial_quintic.degree == 5
    assert binomial_quintic.coeffs == (5, 10, 10, 5, 1)
    assert binomial_quintic.exact
    # (s+1)^5 evaluated at a few points
    assert binomial_quintic(F(1)) == 32
    assert binomial_quintic(F(-1)) == 0
    assert binomial_quintic(F(0)) == 1


def test_coeff_beyond_degree_reads_zero(binomial_quintic):
    assert binomial_quintic.coeff(7) == 0
    assert binomial_quintic.coeff(5) == 1
    assert binomial_quintic.coeff(0) == 1
    assert binomial_quintic.coeff(-3) == 0


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=9))
def test_coeff_zero_extension_exhaustive(coeffs):
    p = make_polynomial(len(coeffs), coeffs)
    for k in range(p.degree + 1, 2 * p.degree + 2):
        assert p.coeff(k) == 0


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        make_polynomial(3, [1, 2])


def test_degree_must_be_positive():
    with pytest.raises(ValueError):
        make_polynomial(0, [])


def test_non_finite_float_rejected():
    with pytest.raises(NonFiniteCoefficient):
        make_polynomial(2, [1.0, float("inf")])
    with pytest.raises(NonFiniteCoefficient):
        make_polynomial(2, [float("nan"), 1.0])


def test_to_float_exact_binary_fraction():
    p = to_float(make_polynomial(1, [F(1, 2)]))
    assert p.coeffs == (0.5,)
    assert not p.exact


def test_to_float_rounds_to_nearest():
    p = to_float(make_polynomial(1, [F(1, 3)]))
    assert p.coeffs[0] == 1 / 3  # float division is correctly rounded


def test_to_float_integer_round_trip(binomial_quintic):
    assert to_float(binomial_quintic).coeffs == (5.0, 10.0, 10.0, 5.0, 1.0)


def test_to_float_overflow():
    with pytest.raises(NonFiniteCoefficient):
        to_float(make_polynomial(1, [F(10**400)]))


def test_all_coeffs_positive(binomial_quintic):
    assert all_coeffs_positive(binomial_quintic)
    assert not all_coeffs_positive(make_polynomial(2, [0, 1]))
    assert all_coeffs_positive(make_polynomial(5, [1, 2, 1, 1, F(1, 2)]))


@given(
    st.lists(st.integers(1, 100), min_size=1, max_size=9),
    st.data(),
)
def test_positivity_breaks_when_one_sign_flips(coeffs, data):
    p = make_polynomial(len(coeffs), coeffs)
    assert all_coeffs_positive(p)
    flip = data.draw(st.integers(0, len(coeffs) - 1))
    mutated = list(coeffs)
    mutated[flip] = -mutated[flip]
    assert not all_coeffs_positive(make_polynomial(len(coeffs), mutated))


def test_mixed_input_becomes_float_domain():
    p = make_polynomial(2, [F(1, 2), 0.25])
    assert not p.exact
    assert p.coeffs == (0.5, 0.25)


def test_monic_from_leading():
    p = monic_from_leading(2, [10, 20, 20, 10, 2])
    assert p.coeffs == (5, 10, 10, 5, 1)
    with pytest.raises(ParseError):
        monic_from_leading(0, [1, 2])


def test_parse_scalar_forms():
    assert parse_scalar("9/4", exact=True) == F(9, 4)
    assert parse_scalar("0.5", exact=True) == F(1, 2)
    assert parse_scalar("1e-3", exact=True) == F(1, 1000)
    assert parse_scalar(7, exact=True) == F(7)
    assert parse_scalar("9/4", exact=False) == 2.25
    assert parse_scalar("0.1", exact=False) == 0.1
    with pytest.raises(ParseError):
        parse_scalar("3/0", exact=True)
    with pytest.raises(ParseError):
        parse_scalar("not a number", exact=False)


@given(st.fractions(max_denominator=10**6))
def test_exact_serialization_round_trips(x):
    assert parse_scalar(scalar_to_json(x), exact=True) == x


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_float_serialization_round_trips_bit_identically(x):
    assert parse_scalar(scalar_to_text(x), exact=False) == x


def test_scalar_to_text():
    assert scalar_to_text(F(5, 16)) == "5/16"
    assert scalar_to_text(F(1024)) == "1024"
    assert float(scalar_to_text(0.1)) == 0.1


def test_str_rendering():
    p = make_polynomial(3, [2, 0, F(1, 2)])
    assert str(p) == "s^3 + 2 s^2 + 0 s + 1/2"
