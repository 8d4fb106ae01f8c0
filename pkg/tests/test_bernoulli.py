from fractions import Fraction

import pytest
import sympy

from src.arith import as_rational, bernoulli_number, bernoulli_poly, format_rational, parse_rational


@pytest.mark.parametrize("t, expected", [
    (0, Fraction(1)),
    (1, Fraction(-1, 2)),
    (2, Fraction(1, 6)),
    (3, Fraction(0)),
    (4, Fraction(-1, 30)),
    (6, Fraction(1, 42)),
    (12, Fraction(-691, 2730)),
])
def test_bernoulli_numbers(t, expected):
    assert bernoulli_number(t) == expected


def test_odd_bernoulli_numbers_vanish():
    assert all(bernoulli_number(t) == 0 for t in range(3, 40, 2))


@pytest.mark.parametrize("t", range(2, 25))
def test_bernoulli_numbers_match_sympy(t):
    value = sympy.bernoulli(t)
    assert bernoulli_number(t) == Fraction(int(value.p), int(value.q))


@pytest.mark.parametrize("t", range(0, 9))
@pytest.mark.parametrize("ell", [-3, -1, 0, 1, 2, 5])
def test_bernoulli_polynomial_matches_sympy(t, ell):
    x = sympy.Symbol('x')
    value = sympy.bernoulli(t, x).subs(x, ell)
    assert bernoulli_poly(t, ell) == Fraction(int(value.p), int(value.q))


def test_bernoulli_polynomial_small_cases():
    assert bernoulli_poly(1, 0) == Fraction(-1, 2)
    assert bernoulli_poly(1, 1) == Fraction(1, 2)
    assert bernoulli_poly(2, 3) == 9 - 3 + Fraction(1, 6)
    # B_t(1) = B_t for t >= 2
    assert all(bernoulli_poly(t, 1) == bernoulli_number(t) for t in range(2, 15))


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        bernoulli_number(-1)
    with pytest.raises(ValueError):
        bernoulli_poly(-2, 0)


def test_rational_text_form():
    assert format_rational(Fraction(-3, 4)) == "-3/4"
    assert format_rational(Fraction(6, 3)) == "2"
    assert parse_rational(" 5/10 ") == Fraction(1, 2)
    assert as_rational("-7") == -7
    for bad in ("0.5", "1e3", "", "1/0"):
        with pytest.raises(ValueError):
            parse_rational(bad)
    with pytest.raises(ValueError):
        as_rational(0.5)
    with pytest.raises(ValueError):
        as_rational(True)
