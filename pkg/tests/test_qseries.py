"""
Tests for exact Laurent polynomial and rational function arithmetic.
"""
import math
from fractions import Fraction

import pytest

from src.algebra_core.qseries import (
    LaurentPoly,
    RationalFunc,
    bar,
    inverse_one_minus,
    ord_at_infinity,
    q_binomial,
    q_binomial_poly,
    q_factorial,
    q_integer,
)
from src.algebra_core.rootdata import build_root_datum
from src.workbench_utils.errors import DomainError

q = LaurentPoly.monomial(1)


def test_laurent_arithmetic():
    f = q + q ** -1
    assert f * f == LaurentPoly({2: 1, 0: 2, -2: 1})
    assert f - f == 0
    assert (f * 3).coefficient(1) == 3
    assert LaurentPoly.zero().is_zero()


def test_laurent_text_round_trip():
    f = LaurentPoly({4: 1, 2: -2, 0: 1, -3: Fraction(1, 2)})
    assert LaurentPoly.parse(str(f)) == f
    assert str(q ** -2) == "q^-2"


def test_rational_reduction():
    # (q - q^-1) / (q^2 - q^-2) = 1 / (q + q^-1)
    f = RationalFunc(q - q ** -1, q ** 2 - q ** -2)
    assert f == RationalFunc(1, q + q ** -1)
    assert f.den.valuation() == 0
    assert f.den.leading_coefficient() == 1


@pytest.mark.parametrize("f, expected", [
    (inverse_one_minus(2), 0),
    (RationalFunc.zero(), math.inf),
    (RationalFunc(q - q ** -1, q ** 2 - q ** -2), 1),
    (RationalFunc(q ** -3), 3),
])
def test_ord_at_infinity(f, expected):
    assert ord_at_infinity(f) == expected


def test_inverse_one_minus_normal_form():
    f = inverse_one_minus(2)
    assert f == RationalFunc(q ** 2, q ** 2 - 1)
    assert f.value_at_infinity() == 1


def test_q_integers():
    assert q_integer(2) == q + q ** -1
    assert q_integer(3, 2) == LaurentPoly({4: 1, 0: 1, -4: 1})
    assert q_integer(0).is_zero()
    assert q_factorial(3) == q_integer(2) * q_integer(3)


def test_q_binomial_examples():
    datum = build_root_datum("A1~1")
    assert q_binomial(2, 1, 1, datum) == q + q ** -1
    assert q_binomial(5, 0, 1, datum) == 1
    assert q_binomial(4, 2, 1, datum) == LaurentPoly({4: 1, 2: 1, 0: 2, -2: 1, -4: 1})


def test_q_binomial_matches_factorials():
    for n in range(6):
        for r in range(n + 1):
            lhs = RationalFunc(q_binomial_poly(n, r))
            rhs = RationalFunc(q_factorial(n), q_factorial(r) * q_factorial(n - r))
            assert lhs == rhs


def test_q_binomial_rejects_bad_arguments():
    with pytest.raises(DomainError):
        q_binomial_poly(2, 3)
    with pytest.raises(DomainError):
        q_binomial_poly(-1, 0)


def test_bar_involution():
    assert bar(q ** 3) == q ** -3
    assert bar(q + q ** -1) == q + q ** -1
    f = inverse_one_minus(2)
    assert bar(f) == RationalFunc(1, 1 - q ** 2)
    assert bar(bar(f)) == f


def test_bar_is_multiplicative():
    f = RationalFunc(q ** 2 + 3, q - 2)
    g = RationalFunc(q ** -1 + 1, q ** 3 + 1)
    assert bar(f * g) == bar(f) * bar(g)
    assert bar(f + g) == bar(f) + bar(g)


def test_small_coefficients_predicate():
    assert (q ** -1 * 2 - q ** -3).in_q_inverse_z()
    assert not (q ** -1 + 1).in_q_inverse_z()
    assert not LaurentPoly({-1: Fraction(1, 2)}).in_q_inverse_z()


def test_square_root():
    f = (q + q ** -1) * (q + q ** -1)
    assert f.sqrt() == q + q ** -1
    with pytest.raises(DomainError):
        (q + 1).sqrt()


def test_parse_rational():
    f = RationalFunc.parse("(q^2)/(q^2 - 1)")
    assert f == inverse_one_minus(2)
    assert RationalFunc.parse("q^-2") == q ** -2
