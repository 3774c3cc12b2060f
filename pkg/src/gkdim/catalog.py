"""Built-in dimension-sequence catalog.

Two stock entries exercise growth regimes that monomial presentations cannot
reach: the free algebra on two generators (exponential growth) and the
enveloping algebra of the Lie algebra spanned by x, y1, y2, ... with
[x, y_i] = y_{i+1} (subexponential but superpolynomial growth, so the
classifier is expected to return "inconclusive" on it).
"""

from dataclasses import dataclass

from .hilbert import DimensionSequence


@dataclass(frozen=True)
class CatalogEntry:
    """A named dimension sequence with a known growth verdict."""

    entry_id: str
    description: str
    expected_classification: str  # "exponential" | "inconclusive"
    expected_inconclusive: bool


_ENTRIES = {
    "free_algebra_2": CatalogEntry(
        "free_algebra_2",
        "free associative algebra on two generators; 2^n words of length n",
        "exponential", False),
    "smith_lie": CatalogEntry(
        "smith_lie",
        "enveloping algebra of the Lie algebra with basis x, y1, y2, ... and "
        "[x, y_i] = y_{i+1}; growth like exp(sqrt(n))",
        "inconclusive", True),
}


def catalog_ids() -> tuple:
    return tuple(sorted(_ENTRIES))


def catalog_entry(entry_id: str) -> CatalogEntry:
    if entry_id not in _ENTRIES:
        raise ValueError(f"unknown catalog entry {entry_id!r}; "
                         f"known: {', '.join(catalog_ids())}")
    return _ENTRIES[entry_id]


def _partition_counts(top: int) -> list:
    """p(0..top), the number of partitions of each integer."""
    p = [1] + [0] * top
    for part in range(1, top + 1):
        for n in range(part, top + 1):
            p[n] += p[n - part]
    return p


def graded_values(entry_id: str, top: int) -> list:
    """Graded piece dimensions of a catalog entry, degrees 0..top."""
    catalog_entry(entry_id)
    if entry_id == "free_algebra_2":
        return [2 ** n for n in range(top + 1)]
    # smith_lie: words x^a * (monomial in the y's of weight w) with a + w = n
    # and deg y_i = i, so the degree-n piece counts partitions of every w <= n
    p = _partition_counts(top)
    acc = 0
    return [(acc := acc + p[n]) for n in range(top + 1)]


def cumulative_sequence(entry_id: str, top: int) -> DimensionSequence:
    """Cumulative dimensions of a catalog entry as a DimensionSequence."""
    graded = graded_values(entry_id, top)
    acc = 0
    return DimensionSequence(tuple((acc := acc + g) for g in graded), "cumulative")
