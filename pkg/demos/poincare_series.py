"""
From dimension counts to generating functions
=============================================

A dimension sequence that satisfies a linear recurrence has a rational
generating function; the location of the denominator's roots decides the
growth class.  Roots strictly inside the unit disk mean exponential growth;
denominators built from cyclotomic factors mean polynomial (or periodically
polynomial) growth.  This script runs three sequences through the pipeline:
recurrence -> series -> denominator -> verdict.
"""

from gkdim.catalog import cumulative_sequence
from gkdim.exactnum import Polynomial
from gkdim.hilbert import DimensionSequence, hilbert_series_monomial_quotient
from gkdim.poincare import (denominator_analysis, minimal_recurrence,
                            quasi_polynomial, series_from_recurrence)
from gkdim.presentations import AlgebraSpec
from gkdim.samuel import classify_growth


def show_poly(p):
    terms = []
    for i, c in enumerate(p.coeffs):
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            t = "t" if i == 1 else f"t^{i}"
            terms.append(t if c == 1 else f"-{t}" if c == -1 else f"{c}*{t}")
    return " + ".join(terms).replace("+ -", "- ") or "0"


# ---------------------------------------------------------------------------
# 1. Words in two letters: 2^(n+1) - 1 words of length at most n.

words = cumulative_sequence("free_algebra_2", 24)
rec = minimal_recurrence(words)
series = series_from_recurrence(words, rec)
analysis = denominator_analysis(series.denominator)
print("words in two letters, cumulative counts", list(words)[:6], "...")
print(f"  minimal recurrence: order {rec.order}, "
      f"coefficients {tuple(map(int, rec.coefficients))}")
print(f"  series: ({show_poly(series.numerator)}) / ({show_poly(series.denominator)})")
print(f"  denominator roots: {analysis.radius_class}")
print(f"  verdict: {classify_growth(words).classification}")

# ---------------------------------------------------------------------------
# 2. One generator of weight 2: the series is 1/(1 - t^2) and the counts are
#    periodically polynomial with period 2 (branches 1 and 0).

line2 = AlgebraSpec.polynomial(1, degrees=[(2,)])
series = hilbert_series_monomial_quotient(line2, ())
analysis = denominator_analysis(series.denominator)
quasi = quasi_polynomial(series, series.expand(24))
print()
print("one generator in weight two, graded counts", series.expand(8))
print(f"  series: ({show_poly(series.numerator)}) / ({show_poly(series.denominator)})")
print(f"  pure denominator (1 - t^s)^d with (s, d) = ({analysis.s}, {analysis.d})")
print(f"  period {quasi.period} branches: "
      f"{[show_poly(b) for b in quasi.branches]}")

# ---------------------------------------------------------------------------
# 3. The plane modulo one relation: k[x,y]/(xy) counts 1, 2, 2, 2, ... per
#    degree; cumulatively that is the polynomial 2n + 1.

plane = AlgebraSpec.polynomial(2)
series = hilbert_series_monomial_quotient(plane, [(1, 1)])
print()
print("the plane modulo xy, graded counts", series.expand(8))
print(f"  series as returned: ({show_poly(series.numerator)})"
      f" / ({show_poly(series.denominator)})")
reduced = series.reduced()
print(f"  reduced:            ({show_poly(reduced.numerator)})"
      f" / ({show_poly(reduced.denominator)})")

graded = DimensionSequence(tuple(series.expand(25)), "graded_piece")
report = classify_growth(graded)
print(f"  verdict: {report.classification}, "
      f"growth degree {report.gk}, multiplicity {report.multiplicity}")

# ---------------------------------------------------------------------------
# 4. The doubling denominator factored: (1 - t)(1 - 2t) has the root 1/2
#    strictly inside the unit disk, certified by its integer linear factors.

q = Polynomial([1, -1]) * Polynomial([1, -2])
analysis = denominator_analysis(q)
print()
print(f"factoring {show_poly(q)}:")
print(f"  cyclotomic multiplicities: {analysis.cyclotomic_multiplicities}")
print(f"  split linear factors: {[show_poly(f) for f in analysis.linear_factors]}")
print(f"  radius class: {analysis.radius_class}")
