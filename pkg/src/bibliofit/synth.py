"""Seeded synthetic-career generator, used as a fitting oracle.

Two generative models are supported, matching the assumptions behind the
power-law families in :mod:`bibliofit.fitting`:

* constant-rate: a researcher active for y years publishes round(rate * t)
  papers by year t, and each paper then accrues a fixed number of citations
  per subsequent year (the hirsch-family premise);
* lotkaian: each paper's citation count is drawn i.i.d. from the discrete
  power law Pr(c >= k) = k**(1 - theta), truncated at a cap (the er-family
  premise, which implies h ~= P**(1/theta)).

Randomness comes from numpy's Philox counter-based bit generator (Philox
4x64 with 10 rounds) keyed by (seed, researcher index), so every researcher
owns an independent substream: generation order and batching cannot change
the output, and the raw uniform deviates behind any researcher are available
via :func:`uniform_stream` for reproducibility checks. Within a substream,
deviate 0 drives the career-length / paper-count draw and deviates 1..P the
per-paper citations (lotkaian only).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .corpus import Corpus, PaperRecord, ResearcherProfile
from .errors import ValidationError

START_YEAR = 1980       # first career year for constant-rate profiles
LOTKAIAN_YEAR = 2000    # all lotkaian papers share one year


@dataclass(frozen=True)
class HirschRateParams:
    """Constant publication and citation rates over a uniform career length."""

    papers_per_year: float
    citations_per_paper_year: float
    career_years: tuple[int, int]

    def __post_init__(self):
        if self.papers_per_year <= 0 or self.citations_per_paper_year <= 0:
            raise ValidationError("rates must be > 0")
        lo, hi = self.career_years
        if not 1 <= lo <= hi:
            raise ValidationError(f"bad career bounds {self.career_years}")


@dataclass(frozen=True)
class LotkaianParams:
    """I.i.d. power-law citations with exponent theta, truncated at a cap."""

    papers_range: tuple[int, int]
    exponent: float
    citation_cap: int = 100_000

    def __post_init__(self):
        lo, hi = self.papers_range
        if not 1 <= lo <= hi:
            raise ValidationError(f"bad papers range {self.papers_range}")
        if self.exponent <= 1.0:
            raise ValidationError(f"exponent must be > 1, got {self.exponent}")
        if self.citation_cap < 1:
            raise ValidationError(f"citation cap must be >= 1, got {self.citation_cap}")


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int
    n_researchers: int
    model: Union[HirschRateParams, LotkaianParams]

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValidationError("seed must be an unsigned 64-bit integer")
        if self.n_researchers < 1:
            raise ValidationError("n_researchers must be >= 1")


def uniform_stream(seed: int, index: int, n: int) -> np.ndarray:
    """The n leading uniform deviates of researcher ``index``'s substream.

    Philox4x64-10 keyed by (seed, index); deviates are the 53-bit uniforms
    of numpy's ``Generator.random``. This is the exact stream consumed by
    :func:`generate`.
    """
    key = np.array([seed, index], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key)).random(n)


def lotkaian_citations(u: np.ndarray, exponent: float, cap: int) -> np.ndarray:
    """Inverse-transform power-law counts: Pr(c >= k) = k**(1-exponent).

    Exact on the discrete ccdf: c = floor(u**(-1/(exponent-1))), clipped at
    the cap. u=0 maps to the cap.
    """
    u = np.asarray(u, dtype=np.float64)
    with np.errstate(divide="ignore", over="ignore"):
        raw = np.floor(u ** (-1.0 / (exponent - 1.0)))
    return np.clip(raw, 1, cap).astype(np.int64)


def _uniform_int(u: float, lo: int, hi: int) -> int:
    """Map one uniform deviate to an integer in [lo, hi] (inclusive)."""
    return lo + min(int(u * (hi - lo + 1)), hi - lo)


def _round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


def _hirsch_profile(rid: str, params: HirschRateParams, u: np.ndarray) -> ResearcherProfile:
    years = _uniform_int(float(u[0]), *params.career_years)
    papers = []
    published = 0
    for t in range(1, years + 1):
        target = _round_half_up(params.papers_per_year * t)
        for _ in range(target - published):
            published += 1
            citations = _round_half_up(
                params.citations_per_paper_year * (years - t))
            papers.append(PaperRecord(
                paper_id=f"{rid}-p{published}",
                year=START_YEAR + t - 1,
                citations=citations,
                n_authors=1,
            ))
    return ResearcherProfile(rid, None, tuple(papers))


def _lotkaian_profile(rid: str, params: LotkaianParams, seed: int, index: int) -> ResearcherProfile:
    lo, hi = params.papers_range
    head = uniform_stream(seed, index, 1)
    n_papers = _uniform_int(float(head[0]), lo, hi)
    u = uniform_stream(seed, index, n_papers + 1)[1:]
    citations = lotkaian_citations(u, params.exponent, params.citation_cap)
    papers = tuple(
        PaperRecord(paper_id=f"{rid}-p{k + 1}", year=LOTKAIAN_YEAR,
                    citations=int(c), n_authors=1)
        for k, c in enumerate(citations)
    )
    return ResearcherProfile(rid, None, papers)


def generate(config: GeneratorConfig) -> Corpus:
    """Deterministic synthetic corpus; identical output for identical seed."""
    profiles = []
    if isinstance(config.model, HirschRateParams):
        tag = "hirsch-rate"
        for i in range(config.n_researchers):
            rid = f"R{i:05d}"
            u = uniform_stream(config.seed, i, 1)
            profiles.append(_hirsch_profile(rid, config.model, u))
    elif isinstance(config.model, LotkaianParams):
        tag = "lotkaian"
        for i in range(config.n_researchers):
            rid = f"R{i:05d}"
            profiles.append(_lotkaian_profile(rid, config.model, config.seed, i))
    else:
        raise ValidationError(f"unknown model {type(config.model).__name__}")
    return Corpus(tuple(profiles),
                  provenance=f"synthetic:{tag}:seed={config.seed}")
