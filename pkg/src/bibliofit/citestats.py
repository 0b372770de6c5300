"""Corpus-level citation statistics and the expected-h estimator.

Three views of a citation corpus:

* complementary cumulative distribution p(c): the fraction of papers with at
  least c citations;
* Lorenz curve: cumulative citation share against cumulative paper share,
  papers sorted ascending, which exposes how concentrated citations are;
* age profile: total citations acquired per year after publication.

The ccdf also drives a simple expected-h estimator: to hold h a researcher
needs h papers cited at least h times, so drawing papers at random from the
corpus distribution takes about h / p(h) papers. Inverting that relation
gives the expected h for a given paper count P.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .corpus import CitationCorpus
from .errors import UnreachableHError, ValidationError


@dataclass(frozen=True)
class CitationDistribution:
    """Empirical complementary cumulative distribution of citation counts.

    Stored sparsely: ``values`` are the distinct citation counts (ascending)
    and ``at_least[i]`` the number of items with citations >= values[i].
    ``p(c)`` is exact for every integer c, with p(0) = 1 and
    p(max_citations + 1) = 0.
    """

    values: np.ndarray
    at_least: np.ndarray
    n_items: int

    @property
    def max_citations(self) -> int:
        return int(self.values[-1])

    def p(self, c):
        """Fraction of items with at least c citations (scalar or array)."""
        c_arr = np.atleast_1d(np.asarray(c))
        idx = np.searchsorted(self.values, c_arr, side="left")
        counts = np.where(idx < self.values.size, self.at_least[np.minimum(idx, self.values.size - 1)], 0)
        out = counts / self.n_items
        return float(out[0]) if np.isscalar(c) else out

    def count_at_least(self, c: int) -> int:
        """Number of items with at least c citations (exact integer)."""
        idx = int(np.searchsorted(self.values, c, side="left"))
        return int(self.at_least[idx]) if idx < self.values.size else 0

    def change_points(self) -> list[tuple[int, float]]:
        """(c, p(c)) at every point where the step function changes value."""
        cs = sorted({0, int(self.values[-1]) + 1}
                    | {int(v) for v in self.values}
                    | {int(v) + 1 for v in self.values})
        return [(c, float(self.count_at_least(c) / self.n_items)) for c in cs]

    def to_dict(self) -> dict:
        return {
            "n_items": self.n_items,
            "max_citations": self.max_citations,
            "ccdf": [[c, p] for c, p in self.change_points()],
        }


@dataclass(frozen=True)
class LorenzCurve:
    """Cumulative (paper share, citation share) points, papers ascending.

    Starts at (0, 0), ends at (1, 1); lies on or below the diagonal.
    """

    points: np.ndarray  # shape (n+1, 2)


@dataclass(frozen=True)
class AgeProfile:
    """Total citations per year-after-publication, sparse and sorted."""

    points: tuple[tuple[int, int], ...]

    @property
    def total(self) -> int:
        return sum(n for _, n in self.points)


def _citation_values(corpus: CitationCorpus) -> np.ndarray:
    if len(corpus) == 0:
        raise ValidationError("citation corpus is empty")
    return np.asarray([item.citations for item in corpus.items], dtype=np.int64)


def ccdf(corpus: CitationCorpus) -> CitationDistribution:
    """Empirical p(c) = |{items with citations >= c}| / n over the corpus."""
    cits = _citation_values(corpus)
    values, counts = np.unique(cits, return_counts=True)
    at_least = np.cumsum(counts[::-1])[::-1]  # suffix sums: items >= values[i]
    return CitationDistribution(values=values, at_least=at_least, n_items=int(cits.size))


def lorenz(corpus: CitationCorpus) -> LorenzCurve:
    """Lorenz curve of citation concentration, papers sorted ascending."""
    cits = np.sort(_citation_values(corpus))
    total = int(cits.sum())
    if total == 0:
        raise ValidationError("lorenz curve undefined: corpus has zero citations")
    n = cits.size
    x = np.arange(n + 1) / n
    y = np.concatenate([[0.0], np.cumsum(cits) / total])
    return LorenzCurve(points=np.column_stack([x, y]))


def age_profile(corpus: CitationCorpus, drop_final_year: bool = False) -> AgeProfile:
    """Citations per year after publication, summed across all items.

    Needs per-year histories on every item and a uniform publication year.
    ``drop_final_year`` removes the most recent citation year in the corpus,
    which is usually only partially observed.
    """
    if len(corpus) == 0:
        raise ValidationError("citation corpus is empty")
    if corpus.publication_year is None:
        raise ValidationError("age profile needs a uniform publication year")
    pub = corpus.publication_year
    events: list[tuple[int, int]] = []
    for item in corpus.items:
        if item.yearly_citations is None:
            raise ValidationError(
                f"paper {item.paper_id!r} has no yearly citation data")
        events.extend(item.yearly_citations)
    if drop_final_year and events:
        final = max(year for year, _ in events)
        events = [(y, n) for y, n in events if y != final]
    totals: dict[int, int] = {}
    for year, count in events:
        age = year - pub
        totals[age] = totals.get(age, 0) + count
    return AgeProfile(points=tuple(sorted(totals.items())))


def required_papers(h: int, dist: CitationDistribution) -> float:
    """Expected paper count needed to reach h by drawing from ``dist``.

    h papers cited >= h times each, at success probability p(h) per paper,
    takes h / p(h) papers on average. Computed as h * n / count(>= h) so
    ratios of integers stay exact.
    """
    if h < 1:
        raise ValidationError(f"h must be >= 1, got {h}")
    k = dist.count_at_least(h)
    if k == 0:
        raise UnreachableHError(
            f"unreachable h: no item in the corpus has {h} or more citations")
    return h * dist.n_items / k


def expected_h_curve(dist: CitationDistribution, P_max: int) -> list[tuple[int, int]]:
    """Expected h at every paper count 1..P_max, from exact step inversion.

    The threshold for reaching h is required_papers(h, dist); the curve value
    at P is the largest h whose threshold is <= P (0 when even h=1 is out of
    reach). Non-decreasing in P and bounded by h <= P.
    """
    if P_max < 1:
        raise ValidationError(f"P_max must be >= 1, got {P_max}")
    hs = np.arange(1, dist.max_citations + 1, dtype=np.int64)
    if hs.size:
        counts = np.array([dist.count_at_least(int(h)) for h in hs], dtype=np.float64)
        reachable = counts > 0
        thresholds = hs[reachable] * dist.n_items / counts[reachable]
    else:
        thresholds = np.array([])
    ps = np.arange(1, P_max + 1)
    expected = np.searchsorted(thresholds, ps, side="right")
    return [(int(P), int(e)) for P, e in zip(ps, expected)]
