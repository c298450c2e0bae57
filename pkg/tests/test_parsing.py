from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hochschild.parsing import ParseError, parse_polynomial
from hochschild.poly import Polynomial


def test_basic_expression():
    p = parse_polynomial("z1^2 + 3*z2^2")
    assert p == Polynomial(2, {(2, 0): 1, (0, 2): 3})


def test_rational_coefficients():
    p = parse_polynomial("3/2*z1 - 1/4")
    assert p == Polynomial(1, {(1,): Fraction(3, 2), (0,): Fraction(-1, 4)})


def test_parentheses_and_powers():
    p = parse_polynomial("(z1 + z2)^2")
    assert p == Polynomial(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})


def test_variable_count_inferred_from_max_index():
    assert parse_polynomial("z2^3").n == 2
    assert parse_polynomial("z3 + z1").n == 3


def test_xy_variables():
    p = parse_polynomial("x^2*y - y^3")
    assert p.n == 2
    assert p == Polynomial(2, {(2, 1): 1, (0, 3): -1})


def test_leading_minus():
    assert parse_polynomial("-2*z1") == Polynomial(1, {(1,): -2})
    assert parse_polynomial("-(z1 - z2)") == Polynomial(2, {(1, 0): -1,
                                                            (0, 1): 1})


def test_round_trip_printer_output():
    p = Polynomial(2, {(2, 1): -2, (0, 3): Fraction(3, 2), (0, 0): -1})
    assert parse_polynomial(p.to_str()) == p


def test_no_implicit_multiplication():
    with pytest.raises(ParseError):
        parse_polynomial("2z1")
    with pytest.raises(ParseError):
        parse_polynomial("z1 z2")
    with pytest.raises(ParseError):
        parse_polynomial("3(z1 + 1)")


def test_error_positions():
    with pytest.raises(ParseError) as err:
        parse_polynomial("z1 + ")
    assert err.value.position == 5


def test_rejects_mixed_alphabets():
    with pytest.raises(ParseError):
        parse_polynomial("x + z1")


def test_rejects_unknown_variables():
    with pytest.raises(ParseError):
        parse_polynomial("z4 + 1")
    with pytest.raises(ParseError):
        parse_polynomial("w + 1")


def test_rejects_bad_exponents():
    with pytest.raises(ParseError):
        parse_polynomial("z1^-1")
    with pytest.raises(ParseError):
        parse_polynomial("z1^(2)")


def test_rejects_interior_unary_minus():
    with pytest.raises(ParseError):
        parse_polynomial("z1 * -z2")


def test_zero_denominator():
    with pytest.raises(ParseError):
        parse_polynomial("1/0")


coeffs = st.fractions(min_value=-9, max_value=9, max_denominator=7)
random_polys = st.lists(
    st.tuples(coeffs, st.tuples(st.integers(0, 5), st.integers(0, 5),
                                st.integers(0, 5))),
    max_size=6).map(lambda ts: Polynomial.from_terms(3, ts))


@settings(max_examples=80, deadline=None)
@given(random_polys)
def test_print_parse_round_trip(p):
    parsed = parse_polynomial(p.to_str(), n=3)
    assert parsed == p
