"""Dimension sequences of monomial quotients and their Hilbert series.

Standard monomials of a monomial ideal are counted exactly: by
inclusion-exclusion over generator subsets (lcm of each subset) for small
generating sets, and by a pivot recursion on the most shared variable above
that. Weighted degrees come from the ambient algebra's generator weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .exactnum import Polynomial
from .poincare import RationalSeries
from .presentations import (AlgebraSpec, ModuleSpec, Monomial, SpecError,
                            count_monomials_by_weight, monomial_divides,
                            monomial_lcm, validate_module)

#: inclusion-exclusion is used up to this many minimal generators
_IE_LIMIT = 20

MEANINGS = ("graded_piece", "cumulative")


@dataclass(frozen=True)
class DimensionSequence:
    """Natural-number dimensions indexed by filtration degree 0..N.

    meaning is "graded_piece" (dimensions of the graded layers) or
    "cumulative" (dimensions of the filtration steps, nondecreasing).
    """

    values: tuple
    meaning: str = "cumulative"

    def __post_init__(self):
        if self.meaning not in MEANINGS:
            raise ValueError(f"unknown sequence meaning {self.meaning!r}")
        object.__setattr__(self, "values", tuple(self.values))
        for v in self.values:
            if (not isinstance(v, int)) or v < 0:
                raise ValueError("dimension sequences hold natural numbers")
        if self.meaning == "cumulative":
            for a, b in zip(self.values, self.values[1:]):
                if b < a:
                    raise ValueError("cumulative dimension sequences must be nondecreasing")

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def cumulative(self) -> "DimensionSequence":
        """This sequence with cumulative meaning (prefix sums if graded)."""
        if self.meaning == "cumulative":
            return self
        acc, out = 0, []
        for v in self.values:
            acc += v
            out.append(acc)
        return DimensionSequence(tuple(out), "cumulative")

    def graded(self) -> "DimensionSequence":
        """This sequence with graded meaning (first differences if cumulative)."""
        if self.meaning == "graded_piece":
            return self
        out = [self.values[0]] if self.values else []
        out.extend(self.values[i + 1] - self.values[i] for i in range(len(self.values) - 1))
        return DimensionSequence(tuple(out), "graded_piece")


# ---------------------------------------------------------------------------
# monomial-ideal counting


def minimalize_ideal(gens: Sequence[Monomial]) -> tuple:
    """Minimal generating antichain: drop duplicates and multiples."""
    uniq = sorted(set(tuple(g) for g in gens), key=lambda g: (sum(g), g))
    kept = []
    for g in uniq:
        if not any(monomial_divides(h, g) for h in kept):
            kept.append(g)
    return tuple(kept)


def _wdeg(mono: Monomial, weights: Sequence[int]) -> int:
    return sum(e * w for e, w in zip(mono, weights))


def numerator_terms(gens: Sequence[Monomial], weights: Sequence[int]) -> dict:
    """Numerator of the Hilbert series of the quotient, over prod(1 - t^w).

    Returns a map degree -> coefficient. Inclusion-exclusion over subsets of
    the minimal generators when there are at most 20 of them; otherwise a
    pivot recursion on the variable shared by the most generators.
    """
    gens = minimalize_ideal(gens)
    return _numerator(gens, tuple(weights))


def _numerator(gens: tuple, weights: tuple) -> dict:
    if len(gens) <= _IE_LIMIT:
        terms: dict = {}
        _ie_walk(gens, 0, None, 1, terms, weights)
        return {d: c for d, c in terms.items() if c}
    pivot = _most_shared_variable(gens)
    if pivot is None:
        # pairwise coprime generators: the quotient series factors
        terms = {0: 1}
        for g in gens:
            d = _wdeg(g, weights)
            nxt: dict = {}
            for k, c in terms.items():
                nxt[k] = nxt.get(k, 0) + c
                nxt[k + d] = nxt.get(k + d, 0) - c
            terms = nxt
        return {d: c for d, c in terms.items() if c}
    var_mono = tuple(1 if i == pivot else 0 for i in range(len(weights)))
    plus = minimalize_ideal(gens + (var_mono,))
    colon = minimalize_ideal(tuple(
        tuple(e - 1 if i == pivot and e > 0 else e for i, e in enumerate(g))
        for g in gens))
    out = dict(_numerator(plus, weights))
    shift = weights[pivot]
    for d, c in _numerator(colon, weights).items():
        out[d + shift] = out.get(d + shift, 0) + c
    return {d: c for d, c in out.items() if c}


def _ie_walk(gens, start, lcm, sign, terms, weights):
    d = 0 if lcm is None else _wdeg(lcm, weights)
    terms[d] = terms.get(d, 0) + sign
    for i in range(start, len(gens)):
        nxt = gens[i] if lcm is None else monomial_lcm(lcm, gens[i])
        _ie_walk(gens, i + 1, nxt, -sign, terms, weights)


def _most_shared_variable(gens) -> Optional[int]:
    counts = [0] * (len(gens[0]) if gens else 0)
    for g in gens:
        for i, e in enumerate(g):
            if e > 0:
                counts[i] += 1
    best = max(range(len(counts)), key=counts.__getitem__, default=None)
    if best is None or counts[best] < 2:
        return None
    return best


def standard_monomial_counts(a: AlgebraSpec, ideal: Sequence[Monomial], top: int,
                             cumulative: bool = False) -> list:
    """Counts of standard monomials (not in the ideal) by weighted degree 0..top."""
    weights = a.scalar_weights()
    free = count_monomials_by_weight(weights, top) if weights else [1] + [0] * top
    if cumulative:
        acc = 0
        free = [(acc := acc + v) for v in free]
    terms = numerator_terms(ideal, weights)
    out = [0] * (top + 1)
    for d, c in terms.items():
        if d <= top:
            for n in range(d, top + 1):
                out[n] += c * free[n - d]
    return out


def graded_piece_dim(a: AlgebraSpec, ideal: Sequence[Monomial], n: int) -> int:
    """Dimension of the degree-n graded piece of the monomial quotient."""
    if n < 0:
        raise ValueError("degree must be a natural number")
    return standard_monomial_counts(a, ideal, n)[n]


def module_dim_sequence(a: AlgebraSpec, m: ModuleSpec, top: int) -> DimensionSequence:
    """Cumulative dimensions of a module presentation, degrees 0..top."""
    validate_module(a, m)
    values = [0] * (top + 1)
    for s in m.summands:
        cum = standard_monomial_counts(a, s.ideal, top, cumulative=True)
        for n in range(s.shift, top + 1):
            values[n] += cum[n - s.shift]
    if m.negative_shift is not None:
        # rank-one module stretching in two directions: 2j + 1 states at level j
        for n in range(top + 1):
            values[n] += 2 * n + 1
    return DimensionSequence(tuple(values), "cumulative")


def algebra_dim_sequence(a: AlgebraSpec, top: int) -> DimensionSequence:
    """Cumulative dimensions of the algebra as a module over itself."""
    return module_dim_sequence(a, ModuleSpec.regular(), top)


def hilbert_series_monomial_quotient(a: AlgebraSpec, ideal: Sequence[Monomial]) -> RationalSeries:
    """Hilbert series of the monomial quotient as p(t) / prod_i (1 - t^w_i).

    The denominator is the structured product over the generator weights; the
    numerator comes from inclusion-exclusion (or the pivot recursion). The
    power-series expansion is verified against direct monomial counts out to
    twice the total ideal weight plus ten.
    """
    weights = a.scalar_weights()
    gens = minimalize_ideal(ideal)
    terms = numerator_terms(gens, weights)
    num_deg = max(terms, default=0)
    p = Polynomial([terms.get(d, 0) for d in range(num_deg + 1)])
    q = Polynomial([1])
    for w in weights:
        factor = [0] * (w + 1)
        factor[0], factor[w] = 1, -1
        q = q * Polynomial(factor)
    series = RationalSeries(p, q)
    check_to = 2 * sum(_wdeg(g, weights) for g in gens) + 10
    expansion = series.expand(check_to + 1)
    direct = standard_monomial_counts(a, gens, check_to)
    if list(expansion) != direct:
        raise RuntimeError("internal error: series expansion disagrees with direct counts")
    return series
