"""Eventual-polynomial detection and growth classification.

detect_polynomial is checked by round trip: build a polynomial with known
binomial-basis coefficients, sample it, and require the exact coefficients
back with stabilization index 0. Head-corrupted samples must move only the
stabilization index. The classifier's verdicts are frozen on sequences whose
growth is known in closed form (binomial layer counts, geometric growth,
periodic slopes, partition-sum growth).
"""

from fractions import Fraction
import itertools
import math

import pytest

from gkdim.exactnum import BinomialForm, from_binomial_basis
from gkdim.hilbert import DimensionSequence
from gkdim.samuel import (GammaEstimate, classify_growth, detect_polynomial,
                          gamma_estimate, gk_dimension, multiplicity)

# ---------------------------------------------------------------------------
# exact polynomial detection


def test_detect_binomial_layer_counts():
    vals = [math.comb(n + 2, 2) for n in range(20)]
    fit = detect_polynomial(vals)
    assert fit is not None
    assert fit.form.coeffs == (1, 2, 1)
    assert fit.stabilization_index == 0
    assert gk_dimension(fit) == 2
    assert multiplicity(fit) == 1


def test_detect_linear_counts():
    fit = detect_polynomial([n + 1 for n in range(18)])
    assert fit.form.coeffs == (1, 1)
    assert gk_dimension(fit) == 1
    assert multiplicity(fit) == 1


def test_detect_constant_sequence():
    fit = detect_polynomial([5] * 16)
    assert fit.form.coeffs == (5,)
    assert gk_dimension(fit) == 0
    assert multiplicity(fit) == 5


def test_detect_zero_sequence():
    fit = detect_polynomial([0] * 16)
    assert fit.form.is_zero()
    assert gk_dimension(fit) == 0
    assert multiplicity(fit) == 0


def test_corrupted_head_moves_only_the_stabilization_index():
    vals = [7, 7] + [n + 1 for n in range(2, 26)]
    fit = detect_polynomial(vals)
    assert fit.form.coeffs == (1, 1)
    assert fit.stabilization_index == 2


def test_geometric_growth_is_not_polynomial():
    vals = [2 ** (n + 1) - 1 for n in range(24)]
    assert detect_polynomial(vals) is None


def test_periodic_slope_is_not_polynomial():
    vals = [n // 2 + 1 for n in range(24)]
    assert detect_polynomial(vals) is None


def test_detect_round_trip_exhaustive():
    span = [-2, -1, 0, 1, 2]
    for lower in itertools.product(span, repeat=3):
        for lead in (-2, -1, 1, 2):
            form = BinomialForm(lower + (lead,))
            poly = from_binomial_basis(form)
            vals = [poly.evaluate(n) for n in range(18)]
            fit = detect_polynomial(vals, window=3)
            assert fit is not None
            assert fit.form == form, form
            assert fit.stabilization_index == 0


def test_detect_accepts_fraction_values():
    form = BinomialForm((0, Fraction(1, 2), Fraction(3, 2)))
    poly = from_binomial_basis(form)
    vals = [poly.evaluate(n) for n in range(16)]
    fit = detect_polynomial(vals)
    assert fit.form == form


def test_detect_input_requirements():
    with pytest.raises(ValueError):
        detect_polynomial([1] * 10)  # fewer than 2*window + 4 samples
    with pytest.raises(ValueError):
        detect_polynomial([1] * 30, window=1)
    with pytest.raises(ValueError):
        detect_polynomial(DimensionSequence((1, 1, 1), "graded_piece"))


# ---------------------------------------------------------------------------
# floating growth diagnostic


def test_gamma_of_square_growth_converges_to_two():
    vals = [n * n for n in range(30)]
    est = gamma_estimate(vals)
    assert est.trend == "converging"
    assert est.value == pytest.approx(2.0, abs=1e-9)


def test_gamma_of_geometric_growth_diverges():
    vals = [2 ** n for n in range(30)]
    est = gamma_estimate(vals)
    assert est.trend == "diverging"
    assert est.value > 5


def test_gamma_needs_enough_positive_samples():
    with pytest.raises(ValueError):
        gamma_estimate([1, 2, 3])
    with pytest.raises(ValueError):
        gamma_estimate([0] * 20)


# ---------------------------------------------------------------------------
# growth classification


def test_classify_constant_as_finite_dimensional():
    report = classify_growth([5] * 15)
    assert report.classification == "finite_dimensional"
    assert report.gk == 0
    assert report.multiplicity == 5
    assert "sampled_agreement" in report.flags


def test_classify_binomial_counts_as_polynomial():
    vals = [math.comb(n + 2, 2) for n in range(25)]
    report = classify_growth(vals)
    assert report.classification == "polynomial"
    assert report.gk == 2
    assert report.multiplicity == 1
    assert report.hilbert_samuel.form.coeffs == (1, 2, 1)
    assert "sampled_agreement" in report.flags


def test_classify_geometric_as_exponential():
    vals = [2 ** (n + 1) - 1 for n in range(25)]
    report = classify_growth(vals)
    assert report.classification == "exponential"
    assert report.gk is None
    assert report.recurrence.order == 2
    assert report.recurrence.coefficients == (3, -2)
    assert report.denominator.radius_class == "inside_unit_disk"


def test_classify_periodic_slope_via_quasi_branches():
    # cumulative counts with slope 1/2: a line of weight-2 monomials
    vals = [n // 2 + 1 for n in range(26)]
    report = classify_growth(vals)
    assert report.classification == "polynomial"
    assert report.gk == 1
    assert report.multiplicity == Fraction(1, 2)
    assert report.quasi is not None
    assert report.quasi.period == 2
    assert "sampled_agreement" in report.flags


def test_classify_partition_sums_as_inconclusive():
    # intermediate growth: cumulative sums of partition numbers
    partitions = [1]
    for n in range(1, 30):
        total, k = 0, 1
        while True:
            pent1 = k * (3 * k - 1) // 2
            pent2 = k * (3 * k + 1) // 2
            if pent1 > n and pent2 > n:
                break
            sign = -1 if k % 2 == 0 else 1
            if pent1 <= n:
                total += sign * partitions[n - pent1]
            if pent2 <= n:
                total += sign * partitions[n - pent2]
            k += 1
        partitions.append(total)
    vals = list(itertools.accumulate(itertools.accumulate(partitions)))
    report = classify_growth(vals)
    assert report.classification == "inconclusive"
    assert report.gk is None
    assert report.gamma is not None
    assert "gamma_diagnostic_only" in report.flags


def test_classify_normalizes_graded_input():
    graded = DimensionSequence(tuple([1] * 20), "graded_piece")
    report = classify_growth(graded)
    assert report.classification == "polynomial"
    assert report.gk == 1
    assert report.multiplicity == 1


def test_classify_needs_twelve_samples():
    with pytest.raises(ValueError):
        classify_growth([1] * 11)


def test_classify_adapts_window_to_short_input():
    vals = [n + 1 for n in range(12)]
    report = classify_growth(vals, window=6)
    assert report.classification == "polynomial"
    assert report.gk == 1
