"""Exact numeric layer: generalized binomial coefficients, dense rational
polynomials, and the Newton-difference conversion between the power basis
and the binomial basis.

Oracles: math.comb for ordinary binomials, hand-expanded falling factorials
for negative upper arguments (frozen below), and round-trip/evaluation
identities for the basis conversions.
"""

from fractions import Fraction
import itertools
import math

import pytest

from gkdim.exactnum import (BinomialForm, Polynomial, binom, falling_binom,
                            finite_difference, from_binomial_basis,
                            to_binomial_basis)


# ---------------------------------------------------------------------------
# binomial coefficients


def test_binom_matches_math_comb():
    for n in range(0, 20):
        for k in range(0, 20):
            assert binom(n, k) == math.comb(n, k)


def test_falling_binom_agrees_with_comb_for_naturals():
    for m in range(0, 15):
        for i in range(0, 10):
            assert falling_binom(m, i) == math.comb(m, i)


# frozen values: falling_binom(m, i) = m(m-1)...(m-i+1)/i!, expanded by hand
NEGATIVE_BINOMIALS = [
    (-1, 0, 1),
    (-1, 1, -1),
    (-1, 2, 1),
    (-1, 3, -1),
    (-2, 1, -2),
    (-2, 2, 3),     # (-2)(-3)/2
    (-2, 3, -4),    # (-2)(-3)(-4)/6
    (-3, 2, 6),     # (-3)(-4)/2
    (-5, 3, -35),   # (-5)(-6)(-7)/6
]


def test_falling_binom_negative_upper_argument_frozen():
    for m, i, expected in NEGATIVE_BINOMIALS:
        assert falling_binom(m, i) == expected


def test_falling_binom_pascal_identity_everywhere():
    # C(m, i) = C(m-1, i) + C(m-1, i-1) holds for every integer m
    for m in range(-6, 7):
        assert falling_binom(m, 0) == 1
        for i in range(1, 7):
            assert falling_binom(m, i) == (
                falling_binom(m - 1, i) + falling_binom(m - 1, i - 1))


# ---------------------------------------------------------------------------
# polynomial arithmetic


def test_polynomial_normalizes_trailing_zeros():
    assert Polynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert Polynomial([0, 0]).coeffs == ()
    assert Polynomial().degree == -1
    assert Polynomial([5]).degree == 0


def test_polynomial_product_frozen():
    one_plus = Polynomial([1, 1])
    one_minus = Polynomial([1, -1])
    assert (one_plus * one_minus) == Polynomial([1, 0, -1])
    assert (one_plus * 3) == Polynomial([3, 3])
    assert (2 * one_minus) == Polynomial([2, -2])


def test_polynomial_addition_subtraction_negation():
    p = Polynomial([1, 2, 3])
    q = Polynomial([4, 5])
    assert p + q == Polynomial([5, 7, 3])
    assert p - q == Polynomial([-3, -3, 3])
    assert -p == Polynomial([-1, -2, -3])
    assert p - p == Polynomial()


def test_polynomial_power():
    p = Polynomial([1, 1])
    assert p ** 0 == Polynomial([1])
    assert p ** 3 == Polynomial([1, 3, 3, 1])


def test_evaluate_frozen():
    p = Polynomial([5, -1, 0, 2])  # 2x^3 - x + 5
    assert p.evaluate(3) == 56
    assert p.evaluate(0) == 5
    assert p.evaluate(Fraction(1, 2)) == Fraction(5 * 4 - 2 + 1, 4)


def test_compose_affine_frozen_and_pointwise():
    square = Polynomial([0, 0, 1])
    assert square.compose_affine(2, 1) == Polynomial([1, 4, 4])
    p = Polynomial([3, -2, 0, 1])
    a, b = Fraction(1, 3), Fraction(-2)
    comp = p.compose_affine(a, b)
    for x in range(-4, 5):
        assert comp.evaluate(x) == p.evaluate(a * x + b)


def test_divmod_exact():
    product = Polynomial([2, 3, 1])  # (x + 1)(x + 2)
    q, r = divmod(product, Polynomial([1, 1]))
    assert q == Polynomial([2, 1])
    assert r == Polynomial()
    q, r = divmod(product, Polynomial([0, 1]))  # divide by x
    assert q == Polynomial([3, 1])
    assert r == Polynomial([2])
    assert Polynomial([1, 1]).divides(product)
    assert not Polynomial([5, 1]).divides(product)


def test_gcd_is_monic_common_factor():
    a = Polynomial([2, -3, 1])   # (x - 1)(x - 2)
    b = Polynomial([3, -4, 1])   # (x - 1)(x - 3)
    assert Polynomial.gcd(a, b) == Polynomial([-1, 1])
    assert Polynomial.gcd(a, Polynomial()) == a.monic()


def test_derivative():
    p = Polynomial([5, -2, 0, 1])  # x^3 - 2x + 5
    assert p.derivative() == Polynomial([-2, 0, 3])
    assert Polynomial([7]).derivative() == Polynomial()


# ---------------------------------------------------------------------------
# binomial forms and finite differences


def test_binomial_form_evaluate_frozen():
    form = BinomialForm([1, 2, 3])  # 1 + 2 C(n,1) + 3 C(n,2)
    assert form.evaluate(0) == 1
    assert form.evaluate(1) == 3
    assert form.evaluate(4) == 1 + 8 + 18
    assert form.leading_coefficient() == 3
    assert form.degree == 2


def test_binomial_form_difference_matches_forward_difference():
    form = BinomialForm([1, 2, 3, Fraction(1, 2)])
    diff = form.difference()
    assert diff.coeffs == (2, 3, Fraction(1, 2))
    for n in range(0, 12):
        assert diff.evaluate(n) == form.evaluate(n + 1) - form.evaluate(n)


def test_finite_difference_frozen():
    assert finite_difference([1, 4, 9, 16]) == [3, 5, 7]
    assert finite_difference([2, 2]) == [0]
    with pytest.raises(ValueError):
        finite_difference([5])


def test_square_in_binomial_basis():
    # n^2 = C(n,1) + 2 C(n,2): differences of 0,1,4 are 1,3 then 2
    square = Polynomial([0, 0, 1])
    assert to_binomial_basis(square).coeffs == (0, 1, 2)


def test_basis_round_trip_exhaustive_small():
    values = [-2, -1, 0, 1, 2]
    for coeffs in itertools.product(values, repeat=4):
        p = Polynomial(coeffs)
        form = to_binomial_basis(p)
        assert from_binomial_basis(form) == p
        back = to_binomial_basis(from_binomial_basis(BinomialForm(coeffs)))
        assert back == BinomialForm(coeffs)
        # both representations evaluate identically
        for n in range(0, 8):
            assert form.evaluate(n) == p.evaluate(n)


def test_integer_binomial_coefficients_give_integer_values():
    for coeffs in itertools.product([-2, 0, 1, 3], repeat=4):
        form = BinomialForm(coeffs)
        assert form.is_integral()
        for n in range(0, 10):
            assert from_binomial_basis(form).evaluate(n).denominator == 1


def test_non_integer_valued_polynomial_has_non_integral_form():
    half_square = Polynomial([0, 0, Fraction(1, 2)])  # value 1/2 at n = 1
    form = to_binomial_basis(half_square)
    assert form.coeffs == (0, Fraction(1, 2), 1)
    assert not form.is_integral()
