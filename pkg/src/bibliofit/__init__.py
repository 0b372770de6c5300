"""Researcher-level citation indices, power-law population fits, and
prediction-interval deviation scores.

The package computes h and the fractional multi-author h_m per researcher,
fits hirsch / er / gs power-law models across a population, scores each
researcher's deviation from a reference curve in prediction-interval units,
and derives corpus-level citation statistics including an expected-h
estimator. Hot numeric kernels run in a compiled extension when available
(see :mod:`bibliofit.backend`).
"""

from .backend import active_backend
from .corpus import (
    CitationCorpus,
    Corpus,
    Exclusion,
    PaperRecord,
    ResearcherProfile,
    active_years,
    apply_exclusions,
    ingest_citations,
    ingest_profiles,
    write_profiles,
)
from .citestats import (
    AgeProfile,
    CitationDistribution,
    LorenzCurve,
    age_profile,
    ccdf,
    expected_h_curve,
    lorenz,
    required_papers,
)
from .deviation import (
    DeviationReport,
    ReferenceCurve,
    delta_h,
    delta_h_m,
    deviation_report,
    piecewise_halfwidth,
    published_curve,
)
from .errors import UnreachableHError, ValidationError
from .fitting import (
    FitResult,
    chi2_profile,
    collect_points,
    fit,
    loglog_correlation,
    prediction_halfwidth,
)
from .indices import IndexSet, h_index, hm_index, index_set
from .synth import (
    GeneratorConfig,
    HirschRateParams,
    LotkaianParams,
    generate,
    lotkaian_citations,
    uniform_stream,
)

__version__ = "0.1.0"

__all__ = [
    "AgeProfile",
    "CitationCorpus",
    "CitationDistribution",
    "Corpus",
    "DeviationReport",
    "Exclusion",
    "FitResult",
    "GeneratorConfig",
    "HirschRateParams",
    "IndexSet",
    "LorenzCurve",
    "LotkaianParams",
    "PaperRecord",
    "ReferenceCurve",
    "ResearcherProfile",
    "UnreachableHError",
    "ValidationError",
    "active_backend",
    "active_years",
    "age_profile",
    "apply_exclusions",
    "ccdf",
    "chi2_profile",
    "collect_points",
    "delta_h",
    "delta_h_m",
    "deviation_report",
    "expected_h_curve",
    "fit",
    "generate",
    "h_index",
    "hm_index",
    "index_set",
    "ingest_citations",
    "ingest_profiles",
    "lorenz",
    "loglog_correlation",
    "lotkaian_citations",
    "piecewise_halfwidth",
    "prediction_halfwidth",
    "published_curve",
    "required_papers",
    "uniform_stream",
    "write_profiles",
]
