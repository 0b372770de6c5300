"""Per-researcher scalar indices: h, fractional h_m, and derived ratios.

h is the largest k such that k papers have at least k citations each. h_m is
the same construction with papers counted fractionally: walking down the
citation-sorted list, each paper advances the effective rank by 1/n_authors
instead of 1, and h_m is the largest effective rank still covered by its
paper's citation count. With single-author papers only, h_m reduces to h.

All operations are pure functions, safe for data-parallel mapping over
profiles.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import backend
from .corpus import ResearcherProfile
from .errors import ValidationError


@dataclass(frozen=True)
class IndexSet:
    """All scalar indices for one researcher.

    h_n is the normalized index h/P; mean_citations is C/P.
    """

    researcher_id: str
    P: int
    C: int
    h: int
    h_m: float
    h_n: float
    mean_citations: float


def h_index(citations) -> int:
    """Largest k such that at least k entries are >= k; 0 for an empty list."""
    arr = np.asarray(list(citations), dtype=np.int64)
    if arr.size == 0:
        return 0
    desc = np.ascontiguousarray(np.sort(arr)[::-1])
    return int(backend.h_index_core(desc))


def hm_index(papers) -> float:
    """Fractional-rank h over (citations, n_authors) pairs.

    Papers are ranked by citations descending; ties put larger author counts
    first so the effective rank grows as slowly as possible, which makes the
    tie order deterministic and the failure point conservative.
    """
    pairs = [(int(c), int(a)) for c, a in papers]
    for c, a in pairs:
        if a < 1:
            raise ValidationError(f"n_authors must be >= 1, got {a}")
    if not pairs:
        return 0.0
    pairs.sort(key=lambda ca: (-ca[0], -ca[1]))
    cits = np.ascontiguousarray([float(c) for c, _ in pairs])
    inv = np.ascontiguousarray([1.0 / a for _, a in pairs])
    return float(backend.hm_core(cits, inv))


def index_set(profile: ResearcherProfile) -> IndexSet:
    """Populate the full IndexSet from a profile's papers."""
    P = profile.paper_count
    if P == 0:
        raise ValidationError(
            f"researcher {profile.researcher_id!r}: empty profile "
            "(h_n and mean citations are undefined)")
    C = profile.total_citations
    h = h_index([p.citations for p in profile.papers])
    h_m = hm_index([(p.citations, p.n_authors) for p in profile.papers])
    return IndexSet(
        researcher_id=profile.researcher_id,
        P=P,
        C=C,
        h=h,
        h_m=h_m,
        h_n=h / P,
        mean_citations=C / P,
    )
