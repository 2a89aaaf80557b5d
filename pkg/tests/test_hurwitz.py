import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polystab.errors import IndexOutOfRange
from polystab.hurwitz import (
    all_minors,
    delta2,
    delta4_expanded,
    delta4_factored,
    det_bareiss,
    det_cofactor,
    det_float,
    hurwitz_matrix,
    hurwitz_minor_det,
)
from polystab.poly import make_polynomial, to_float
from polystab.sampling import rational_polynomial

rationals = st.fractions(min_value=F(-50), max_value=F(50), max_denominator=20)


def rational_poly_strategy(min_degree=1, max_degree=9):
    return st.integers(min_degree, max_degree).flatmap(
        lambda n: st.lists(rationals, min_size=n, max_size=n)
    ).map(lambda cs: make_polynomial(len(cs), cs))


def test_matrix_shape_2(binomial_quintic):
    assert hurwitz_matrix(binomial_quintic, 2) == [[5, 10], [1, 10]]


def test_matrix_shape_4(binomial_quintic):
    assert hurwitz_matrix(binomial_quintic, 4) == [
        [5, 10, 1, 0],
        [1, 10, 5, 0],
        [0, 5, 10, 1],
        [0, 1, 10, 5],
    ]


def test_matrix_shape_1(binomial_quintic):
    assert hurwitz_matrix(binomial_quintic, 1) == [[5]]


def test_matrix_index_out_of_range(binomial_quintic):
    with pytest.raises(IndexOutOfRange):
        hurwitz_matrix(binomial_quintic, 0)
    with pytest.raises(IndexOutOfRange):
        hurwitz_matrix(binomial_quintic, 6)
    with pytest.raises(IndexOutOfRange):
        hurwitz_minor_det(binomial_quintic, 6)


def test_minor_values_binomial_quintic(binomial_quintic):
    # frozen from the cofactor-expansion oracle
    assert hurwitz_minor_det(binomial_quintic, 1) == 5
    assert hurwitz_minor_det(binomial_quintic, 2) == 40
    assert hurwitz_minor_det(binomial_quintic, 4) == 1024
    assert det_cofactor(hurwitz_matrix(binomial_quintic, 4)) == 1024


def test_minor_set(binomial_quintic):
    minors = all_minors(binomial_quintic)
    assert minors.values == (5, 40, 280, 1024, 1024)
    assert minors.exact
    assert len(minors.values) == binomial_quintic.degree
    assert minors.values[0] == binomial_quintic.coeff(1)


def test_delta2_examples(binomial_quintic, cor2_exemplar, cor5_exemplar):
    assert delta2(binomial_quintic) == 40
    assert delta2(cor2_exemplar) == 1
    assert delta2(cor5_exemplar) == F(3, 4)


def test_delta4_factored_examples(binomial_quintic, cor2_exemplar, cor5_exemplar):
    # each value cross-checked against the determinant oracle
    assert delta4_factored(binomial_quintic) == 1024
    assert delta4_factored(binomial_quintic) == det_cofactor(
        hurwitz_matrix(binomial_quintic, 4)
    )
    assert delta4_factored(cor2_exemplar) == F(-1, 4)
    assert delta4_factored(cor2_exemplar) == det_cofactor(hurwitz_matrix(cor2_exemplar, 4))
    assert delta4_factored(cor5_exemplar) == F(5, 16)
    assert delta4_factored(cor5_exemplar) == det_cofactor(hurwitz_matrix(cor5_exemplar, 4))


def test_delta4_expanded_examples(binomial_quintic):
    assert delta4_expanded(binomial_quintic) == 1024

    deg7 = make_polynomial(7, [1] * 7)
    assert delta4_expanded(deg7) == hurwitz_minor_det(deg7, 4)

    deg4 = make_polynomial(4, [1, 1, 1, 1])
    assert delta4_expanded(deg4) == -1
    assert delta4_expanded(deg4) == hurwitz_minor_det(deg4, 4)


@settings(max_examples=150, deadline=None)
@given(rational_poly_strategy(min_degree=4, max_degree=9))
def test_delta4_triple_agreement(p):
    """The executable identity: three independent routes, one exact value."""
    assert delta4_factored(p) == delta4_expanded(p) == hurwitz_minor_det(p, 4)


@settings(max_examples=100, deadline=None)
@given(rational_poly_strategy(min_degree=2, max_degree=9))
def test_delta2_matches_determinant(p):
    assert delta2(p) == hurwitz_minor_det(p, 2)


@settings(max_examples=50, deadline=None)
@given(rational_poly_strategy())
def test_delta1_is_first_coefficient(p):
    assert hurwitz_minor_det(p, 1) == p.coeff(1)


def test_bareiss_vs_cofactor_small_minors():
    rng = random.Random(1105)
    for _ in range(200):
        p = rational_polynomial(rng, rng.randint(4, 9), signed=True)
        for i in range(1, 5):
            m = hurwitz_matrix(p, i)
            assert det_bareiss(m) == det_cofactor(m)


def test_bareiss_handles_zero_pivots():
    # delta_2 of this matrix needs the row swap: a1 = 0 puts a zero pivot first
    p = make_polynomial(3, [0, 2, 1])
    assert hurwitz_minor_det(p, 2) == det_cofactor(hurwitz_matrix(p, 2))
    singular = [[F(0), F(0)], [F(0), F(1)]]
    assert det_bareiss(singular) == 0


def test_degree5_specialization():
    """For degree five the a7/a6 term vanishes and the factored form reduces."""
    rng = random.Random(77)
    for _ in range(100):
        p = rational_polynomial(rng, 5, signed=True)
        a1, a2, a4 = p.coeff(1), p.coeff(2), p.coeff(4)
        big_a = p.coeff(5) - a1 * a4
        d2 = delta2(p)
        reduced = -a2 * big_a * d2 - a4 * d2 * d2 - big_a * big_a
        assert delta4_factored(p) == reduced


def test_float_minors_close_to_exact():
    rng = random.Random(40318)
    for _ in range(100):
        p = rational_polynomial(rng, rng.randint(1, 9), signed=True)
        pf = to_float(p)
        for i in range(1, p.degree + 1):
            exact = float(hurwitz_minor_det(p, i))
            approx = hurwitz_minor_det(pf, i)
            assert approx == pytest.approx(exact, rel=1e-10, abs=1e-30)


def test_float_delta4_routes_close():
    rng = random.Random(40319)
    for _ in range(100):
        pf = to_float(rational_polynomial(rng, rng.randint(4, 9), signed=True))
        det = hurwitz_minor_det(pf, 4)
        assert delta4_factored(pf) == pytest.approx(det, rel=1e-10, abs=1e-12)
        assert delta4_expanded(pf) == pytest.approx(det, rel=1e-10, abs=1e-12)


def test_det_float_singular():
    assert det_float([[0.0, 0.0], [0.0, 1.0]]) == 0.0
