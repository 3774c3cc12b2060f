"""
Admissible orders and refiltering by weight vectors
===================================================

Algebras carry multi-degrees in N^m; a positive weight vector collapses
them to scalar weights, re-filtering the algebra.  The collapse is only
legitimate when every defining relation keeps its leading term, i.e. the
lower-order terms stay strictly below the leading product in the new
weights.  This script collapses a quantum plane and a Weyl algebra, shows
a collapse that fails, and checks which monomial orders are admissible.
"""

from fractions import Fraction

from gkdim.presentations import (AdmissibleOrder, AlgebraSpec, RefilterError,
                                 Relation, check_admissibility,
                                 quantum_inversion_scalar, refilter)
from gkdim.hilbert import algebra_dim_sequence
from gkdim.samuel import classify_growth

# ---------------------------------------------------------------------------
# The quantum plane y x = q x y.  Swapping out-of-order letters only scales
# a word, so the standard-monomial count is that of the commutative plane.

q = Fraction(3)  # any nonzero scalar; the matrix needs lam[i][j]*lam[j][i] = 1
plane = AlgebraSpec.quantum_affine([[1, q], [1 / q, 1]],
                                   degrees=[(1, 0), (0, 1)],
                                   names=("x", "y"))
word = [1, 0, 1, 0]  # y x y x
scalar = quantum_inversion_scalar(word, plane.lam)
print(f"quantum plane with q = {q}: normalizing yxyx picks up q^3 = {scalar}")

# Collapse the multi-degree (a, b) to a + 3b.

collapsed = refilter(plane, (1, 3))
print(f"refiltered degrees: {collapsed.degrees}")
report = classify_growth(algebra_dim_sequence(collapsed, 30))
print(f"growth after collapse: {report.classification}, "
      f"degree {report.gk}, multiplicity {report.multiplicity}")

# ---------------------------------------------------------------------------
# The Weyl algebra: the relation y x = x y + 1 has the constant 1 as its
# lower term.  Any positive weight keeps deg(xy) = w_x + w_y > 0 = deg(1),
# so every collapse of W_1 is legitimate.

w1 = AlgebraSpec.weyl(1)
same = refilter(w1, (1,))
print()
print(f"W_1 refiltered by weight (1,): degrees {same.degrees} (unchanged)")

# ---------------------------------------------------------------------------
# A collapse that fails: a rewrite rule whose lower term would tie with its
# leading term.  Here y x -> x y + x^2 is fine for weights (1, 2), where
# deg(xy) = 3 > 2 = deg(x^2), but breaks for (1, 1), where both weigh 2.

skew = AlgebraSpec.pbw_weighted(
    degrees=[(1, 0), (0, 1)],
    relations=[Relation(greater=1, lesser=0, scalar=1,
                        lower=(((2, 0), 1),))],
    names=("x", "y"))
print()
for weight in ((1, 2), (1, 1)):
    try:
        refilter(skew, weight)
        print(f"weight {weight}: collapse accepted")
    except RefilterError as err:
        print(f"weight {weight}: collapse rejected -- {err}")

# ---------------------------------------------------------------------------
# Admissibility of monomial orders on N^2: a total order must respect
# addition and keep the zero vector minimal.  Degree-lexicographic passes;
# comparing by squared norm breaks translation invariance.

print()
for name, kind in (("deglex", "deglex"), ("lex", "lex"),
                   ("weightlex(1,3)", "weightlex")):
    order = AdmissibleOrder(kind, weight=(1, 3) if kind == "weightlex" else None)
    verdict = check_admissibility(order, samples=5, num_components=2)
    print(f"order {name:15s} admissible: {verdict.ok}")


def by_square_norm(alpha, beta):
    a, b = sum(e * e for e in alpha), sum(e * e for e in beta)
    return (a > b) - (a < b)


verdict = check_admissibility(by_square_norm, samples=5, num_components=2)
print(f"order by squared norm admissible: {verdict.ok}  ({verdict.reason})")
