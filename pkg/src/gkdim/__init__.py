"""Exact growth analysis for filtered and graded algebras and their modules.

The library computes dimension sequences of monomial-presented algebras and
modules, fits eventual (quasi-)polynomials by exact finite differences,
extracts growth dimension and multiplicity, turns coefficient sequences into
rational generating functions with certified root-location analysis, and
verifies exactness and additivity of multiplicities on short exact
sequences. All arithmetic is exact over the rationals; the one floating
value (a log-growth diagnostic) is explicitly labeled as such.
"""

from .exactnum import (BinomialForm, Polynomial, Rational, binom,
                       falling_binom, finite_difference, from_binomial_basis,
                       to_binomial_basis)
from .presentations import (AdmissibilityReport, AdmissibleOrder, AlgebraSpec,
                            ModuleSpec, RefilterError, Relation, SpecError,
                            Summand, check_admissibility,
                            check_semicommutative_leading,
                            count_monomials_by_weight, defining_relations,
                            filtration_layer_dim, normal_order_quantum,
                            normal_order_weyl, refilter, validate_algebra,
                            validate_module, zero_module)
from .hilbert import (DimensionSequence, algebra_dim_sequence,
                      graded_piece_dim, hilbert_series_monomial_quotient,
                      minimalize_ideal, module_dim_sequence,
                      standard_monomial_counts)
from .samuel import (GammaEstimate, GrowthReport, HilbertSamuelPolynomial,
                     classify_growth, detect_polynomial, gamma_estimate,
                     gk_dimension, multiplicity)
from .poincare import (DenominatorAnalysis, QuasiPolynomial, RationalSeries,
                       Recurrence, cyclotomic_polynomial,
                       denominator_analysis, fit_quasi_polynomial,
                       minimal_recurrence, quasi_polynomial,
                       series_from_recurrence, unit_cyclotomic)
from .axioms import (AxiomReport, ChainReport, HolonomyCatalog,
                     HolonomyReport, SESSpec, TorsionReport,
                     chain_bound_check, check_exactness,
                     check_multiplicity_axioms, filtration_equivalent,
                     holonomic_defect, ses_dimension_triple,
                     torsion_check_cyclic, validate_ses)
from .catalog import (CatalogEntry, catalog_entry, catalog_ids,
                      cumulative_sequence, graded_values)

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityReport", "AdmissibleOrder", "AlgebraSpec", "AxiomReport",
    "BinomialForm", "CatalogEntry", "ChainReport", "DenominatorAnalysis",
    "DimensionSequence", "GammaEstimate", "GrowthReport",
    "HilbertSamuelPolynomial", "HolonomyCatalog", "HolonomyReport",
    "ModuleSpec", "Polynomial", "QuasiPolynomial", "Rational",
    "RationalSeries", "Recurrence", "RefilterError", "Relation", "SESSpec",
    "SpecError", "Summand", "TorsionReport", "algebra_dim_sequence", "binom",
    "catalog_entry", "catalog_ids", "chain_bound_check",
    "check_admissibility", "check_exactness", "check_multiplicity_axioms",
    "check_semicommutative_leading", "classify_growth",
    "count_monomials_by_weight", "cumulative_sequence",
    "cyclotomic_polynomial", "defining_relations", "denominator_analysis",
    "detect_polynomial", "falling_binom", "filtration_equivalent",
    "filtration_layer_dim", "finite_difference", "fit_quasi_polynomial",
    "from_binomial_basis", "gamma_estimate", "gk_dimension",
    "graded_piece_dim", "graded_values", "hilbert_series_monomial_quotient",
    "minimal_recurrence", "minimalize_ideal", "module_dim_sequence",
    "multiplicity", "normal_order_quantum", "normal_order_weyl",
    "quasi_polynomial", "refilter", "series_from_recurrence",
    "ses_dimension_triple", "standard_monomial_counts", "to_binomial_basis",
    "torsion_check_cyclic", "unit_cyclotomic", "validate_algebra",
    "validate_module", "validate_ses", "zero_module",
]
