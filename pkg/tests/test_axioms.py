"""Structural identities on short exact sequences, descending chains,
holonomic defects, torsion, and filtration comparison.

The short-exact-sequence triples are checked against closed-form dimension
counts (binomial coefficients and linear counts computed with math.comb),
so every growth dimension and multiplicity asserted here is known on paper
before the library runs. Chain bounds use explicit flags of free summands
where the length and the multiplicity coincide by construction.
"""

from fractions import Fraction
import math

import pytest

from gkdim.axioms import (AxiomReport, ChainReport, HolonomyCatalog,
                          SESSpec, TorsionReport, chain_bound_check,
                          check_exactness, check_multiplicity_axioms,
                          filtration_equivalent, holonomic_defect,
                          ses_dimension_triple, torsion_check_cyclic,
                          validate_ses)
from gkdim.hilbert import DimensionSequence, module_dim_sequence
from gkdim.presentations import (AlgebraSpec, ModuleSpec, SpecError, Summand,
                                 zero_module)

TOP = 25

# ---------------------------------------------------------------------------
# short exact sequences: dimension triples


def test_triple_of_coordinate_ideal_in_the_plane():
    # 0 -> x k[x,y] -> k[x,y] -> k[y] -> 0
    a = AlgebraSpec.polynomial(2)
    ses = SESSpec(a, ModuleSpec.regular(), (((1, 0),),))
    prime, big, double = ses_dimension_triple(ses, TOP)
    for n in range(TOP + 1):
        assert big[n] == math.comb(n + 2, 2)
        assert double[n] == n + 1
        assert prime[n] == math.comb(n + 2, 2) - (n + 1)
        assert prime[n] + double[n] == big[n]


def test_triple_balances_for_every_summand_layout():
    a = AlgebraSpec.polynomial(2)
    layouts = [
        (ModuleSpec.regular(), (((1, 1),),)),
        (ModuleSpec((Summand(0, ()), Summand(2, ((2, 0),)))), (((1, 0),), ((1, 0),))),
        (ModuleSpec.cyclic([(3, 0)]), (((1, 0),),)),
    ]
    for big, subs in layouts:
        prime, m, double = ses_dimension_triple(SESSpec(a, big, subs), TOP)
        assert [p + d for p, d in zip(prime, double)] == list(m)


# ---------------------------------------------------------------------------
# exactness and multiplicity cases


def test_case_b_quotient_drops_dimension():
    # 0 -> x k[x,y] -> k[x,y] -> k[y] -> 0: the sub keeps the full growth
    a = AlgebraSpec.polynomial(2)
    report = check_multiplicity_axioms(SESSpec(a, ModuleSpec.regular(), (((1, 0),),)), TOP)
    assert report.case == "b"
    assert report.gk_triple == (2, 2, 1)
    assert report.e_values == (1, 1, 1)
    assert report.exactness_ok is True
    assert report.additivity_ok is True


def test_case_a_sub_drops_dimension():
    # over k[x,y,z] / (xy, xz), the sub generated by x is a single line
    a = AlgebraSpec.polynomial(3)
    big = ModuleSpec.cyclic([(1, 1, 0), (1, 0, 1)])
    ses = SESSpec(a, big, (((1, 0, 0),),))
    prime, m, double = ses_dimension_triple(ses, TOP)
    assert prime.values == tuple(range(TOP + 1))           # x, x^2, ..., x^n
    assert double.values == tuple(math.comb(n + 2, 2) for n in range(TOP + 1))
    report = check_multiplicity_axioms(ses, TOP)
    assert report.case == "a"
    assert report.gk_triple == (1, 2, 2)
    assert report.e_values == (1, 1, 1)
    assert report.exactness_ok is True
    assert report.additivity_ok is True


def test_case_c_all_dimensions_equal():
    # inside k[x,y] / (xy): the sub spanned by x and the quotient k[y]
    a = AlgebraSpec.polynomial(2)
    ses = SESSpec(a, ModuleSpec.cyclic([(1, 1)]), (((1, 0),),))
    report = check_multiplicity_axioms(ses, TOP)
    assert report.case == "c"
    assert report.gk_triple == (1, 1, 1)
    assert report.e_values == (1, 2, 1)
    assert report.exactness_ok is True
    assert report.additivity_ok is True


def test_case_c_across_two_summands():
    a = AlgebraSpec.polynomial(1)
    big = ModuleSpec((Summand(0, ()), Summand(0, ())))
    ses = SESSpec(a, big, (((0,),), ()))  # first summand in, second out
    report = check_multiplicity_axioms(ses, TOP)
    assert report.case == "c"
    assert report.gk_triple == (1, 1, 1)
    assert report.e_values == (1, 2, 1)
    assert report.additivity_ok is True


def test_case_b_with_finite_quotient():
    a = AlgebraSpec.polynomial(2)
    big = ModuleSpec.cyclic([(2, 0)])
    ses = SESSpec(a, big, (((2, 0), (0, 3)),))
    report = check_multiplicity_axioms(ses, TOP)
    assert report.case == "b"
    assert report.gk_triple == (1, 1, 0)
    assert report.e_values == (2, 2, 6)
    assert report.exactness_ok is True
    assert report.additivity_ok is True


def test_degenerate_zero_sub():
    a = AlgebraSpec.polynomial(2)
    ses = SESSpec(a, ModuleSpec.regular(), ((),))  # J = I = 0
    report = check_multiplicity_axioms(ses, TOP)
    assert report.case == "degenerate"
    assert report.gk_triple == (None, 2, 2)
    assert report.e_values == (0, 1, 1)
    assert report.exactness_ok is True
    assert report.additivity_ok is True


def test_degenerate_zero_quotient():
    a = AlgebraSpec.polynomial(2)
    ses = SESSpec(a, ModuleSpec.regular(), (((0, 0),),))  # J = (1)
    report = check_multiplicity_axioms(ses, TOP)
    assert report.case == "degenerate"
    assert report.gk_triple == (2, 2, None)
    assert report.e_values == (1, 1, 0)
    assert report.additivity_ok is True


def test_degenerate_zero_module():
    a = AlgebraSpec.polynomial(2)
    ses = SESSpec(a, zero_module(a), (((0, 0),),))
    report = check_multiplicity_axioms(ses, TOP)
    assert report.case == "degenerate"
    assert report.gk_triple == (None, None, None)
    assert report.e_values == (0, 0, 0)
    assert report.exactness_ok is True
    assert report.additivity_ok is True


def test_exactness_report_leaves_multiplicities_empty():
    a = AlgebraSpec.polynomial(2)
    report = check_exactness(SESSpec(a, ModuleSpec.regular(), (((1, 0),),)), TOP)
    assert report.case == "b"
    assert report.exactness_ok is True
    assert report.e_values is None
    assert report.additivity_ok is None


def test_undetectable_dimensions_give_inconclusive():
    # a weight-2 generator makes the counts quasi-periodic, which the plain
    # polynomial detector refuses
    a = AlgebraSpec.polynomial(1, degrees=[(2,)])
    report = check_exactness(SESSpec(a, ModuleSpec.regular(), (((1,),),)), TOP)
    assert report.case == "inconclusive"
    assert report.gk_triple == (None, None, None)
    assert report.exactness_ok is None
    assert report.notes


def test_validate_ses_error_paths():
    a = AlgebraSpec.polynomial(2)
    with pytest.raises(SpecError) as exc:
        validate_ses(SESSpec(a, ModuleSpec.regular(), ()))
    assert exc.value.path == "ses.sub_ideals"

    with pytest.raises(SpecError) as exc:
        validate_ses(SESSpec(a, ModuleSpec.regular(), (((1, 0, 0),),)))
    assert exc.value.path == "ses.sub_ideals[1][1]"

    # sub-ideal must contain the summand ideal
    with pytest.raises(SpecError) as exc:
        validate_ses(SESSpec(a, ModuleSpec.cyclic([(2, 0)]), (((0, 3),),)))
    assert exc.value.path == "ses.sub_ideals[1]"

    with pytest.raises(SpecError) as exc:
        validate_ses(SESSpec(a, ModuleSpec.laurent(), ()))
    assert exc.value.path == "ses"


# ---------------------------------------------------------------------------
# descending chains


def _free_sum(r):
    return ModuleSpec(tuple(Summand(0, ()) for _ in range(r)))


def test_full_flag_attains_the_bound():
    a = AlgebraSpec.polynomial(1)
    for r in (1, 2, 3, 4):
        chain = [_free_sum(k) for k in range(r, 0, -1)] + [zero_module(a)]
        report = chain_bound_check(a, chain, TOP)
        assert report.n == r
        assert report.e_m == r
        assert report.gk_m == 1
        assert report.bound_ok is True
        assert report.quotients_full_gk is True


def test_partial_flag_stays_below_the_bound():
    a = AlgebraSpec.polynomial(1)
    chain = [_free_sum(3), _free_sum(1), zero_module(a)]
    report = chain_bound_check(a, chain, TOP)
    assert report.n == 2
    assert report.e_m == 3
    assert report.bound_ok is True


def test_single_module_chain_has_length_zero():
    a = AlgebraSpec.polynomial(1)
    report = chain_bound_check(a, [ModuleSpec.regular()], TOP)
    assert report.n == 0
    assert report.bound_ok is True
    assert report.quotients_full_gk is True
    assert report.notes == ()


def test_weyl_ideal_chain():
    a = AlgebraSpec.weyl(1)
    chain = [ModuleSpec.regular(), ModuleSpec.cyclic([(0, 1)])]
    report = chain_bound_check(a, chain, TOP)
    assert report.n == 1
    assert report.e_m == 1
    assert report.gk_m == 2
    assert report.bound_ok is True
    assert report.quotients_full_gk is True


def test_small_growth_quotient_is_reported_not_raised():
    a = AlgebraSpec.polynomial(1)
    shifted = ModuleSpec((Summand(1, ()),))
    report = chain_bound_check(a, [ModuleSpec.regular(), shifted], TOP)
    assert report.n == 1
    assert report.bound_ok is True
    assert report.quotients_full_gk is False
    assert any("smaller growth dimension" in note for note in report.notes)


def test_chain_strictness_violations_raise():
    a = AlgebraSpec.polynomial(1)
    with pytest.raises(SpecError) as exc:
        chain_bound_check(a, [ModuleSpec.regular(), ModuleSpec.regular()], TOP)
    assert exc.value.path == "chain[2]"

    with pytest.raises(SpecError) as exc:
        chain_bound_check(a, [ModuleSpec.cyclic([(1,)]), ModuleSpec.regular()], TOP)
    assert exc.value.path == "chain[2]"

    with pytest.raises(SpecError):
        chain_bound_check(a, [], TOP)


# ---------------------------------------------------------------------------
# holonomic defect


def test_weyl_regular_module_has_defect_equal_to_rank():
    catalog = HolonomyCatalog()
    for rank in (1, 2):
        a = AlgebraSpec.weyl(rank)
        report = holonomic_defect(a, ModuleSpec.regular(), catalog, TOP)
        assert report.gk == 2 * rank
        assert report.h == rank
        assert report.defect == rank
        assert report.min_holonomic is False


def test_weyl_coordinate_module_is_minimally_holonomic():
    catalog = HolonomyCatalog()
    for rank in (1, 2):
        a = AlgebraSpec.weyl(rank)
        # kill the y generators: what is left are the x monomials
        ideal = [tuple(1 if i == rank + j else 0 for i in range(2 * rank))
                 for j in range(rank)]
        report = holonomic_defect(a, ModuleSpec.cyclic(ideal), catalog, TOP)
        assert report.gk == rank
        assert report.defect == 0
        assert report.min_holonomic is True


def test_laurent_module_over_weyl_one_is_minimally_holonomic():
    a = AlgebraSpec.weyl(1)
    report = holonomic_defect(a, ModuleSpec.laurent(), HolonomyCatalog(), TOP)
    assert report.gk == 1
    assert report.h == 1
    assert report.min_holonomic is True


def test_polynomial_ring_has_holonomic_number_zero():
    a = AlgebraSpec.polynomial(2)
    catalog = HolonomyCatalog()
    regular = holonomic_defect(a, ModuleSpec.regular(), catalog, TOP)
    assert (regular.gk, regular.h, regular.defect) == (2, 0, 2)
    finite = holonomic_defect(a, ModuleSpec.cyclic([(1, 0), (0, 1)]), catalog, TOP)
    assert finite.gk == 0
    assert finite.min_holonomic is True


def test_holonomy_catalog_override_and_unknown_kind():
    quantum = AlgebraSpec.quantum_affine([[1, 2], [Fraction(1, 2), 1]])
    with pytest.raises(ValueError):
        HolonomyCatalog().h_for(quantum)
    assert HolonomyCatalog(override=3).h_for(quantum) == 3
    report = holonomic_defect(quantum, ModuleSpec.regular(), HolonomyCatalog(override=1), TOP)
    assert report.h == 1
    assert report.gk == 2


def test_holonomic_defect_needs_detectable_growth():
    a = AlgebraSpec.polynomial(1, degrees=[(2,)])
    with pytest.raises(ValueError):
        holonomic_defect(a, ModuleSpec.regular(), HolonomyCatalog(), TOP)


# ---------------------------------------------------------------------------
# torsion criterion


def test_torsion_for_cyclic_quotients():
    a = AlgebraSpec.weyl(1)
    hit = torsion_check_cyclic(a, ideal_nonzero=True, gk_a=2, h=1)
    assert (hit.applicable, hit.torsion) == (True, True)
    free = torsion_check_cyclic(a, ideal_nonzero=False, gk_a=2, h=1)
    assert (free.applicable, free.torsion) == (True, False)
    assert "embeds the algebra" in free.reason


def test_torsion_criterion_needs_gap_above_positive_h():
    a = AlgebraSpec.weyl(1)
    flat = torsion_check_cyclic(a, ideal_nonzero=True, gk_a=1, h=1)
    assert flat.applicable is False and flat.torsion is None
    poly = torsion_check_cyclic(AlgebraSpec.polynomial(2), True, gk_a=2, h=0)
    assert poly.applicable is False


# ---------------------------------------------------------------------------
# filtration comparison


def test_equal_filtrations_need_no_shift():
    vals = [math.comb(n + 2, 2) for n in range(30)]
    assert filtration_equivalent(vals, vals, 5) == 0


def test_shifted_filtration_is_recovered():
    a = [math.comb(n + 2, 2) for n in range(30)]
    b = [0, 0, 0] + a[:-3]
    assert filtration_equivalent(a, b, 10) == 3
    assert filtration_equivalent(b, a, 10) == 3


def test_incomparable_growth_is_rejected():
    a = [n + 1 for n in range(30)]
    b = [(n + 1) ** 2 for n in range(30)]
    assert filtration_equivalent(a, b, 10) is None


def test_filtration_comparison_accepts_dimension_sequences():
    a = AlgebraSpec.polynomial(1)
    dims = module_dim_sequence(a, ModuleSpec.regular(), 20)
    assert filtration_equivalent(dims, dims, 3) == 0
    with pytest.raises(ValueError):
        filtration_equivalent(dims.graded(), dims, 3)
