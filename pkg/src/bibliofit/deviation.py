"""Deviation scores against a reference power-law curve.

delta_h measures how far a researcher's h sits from a reference curve
h_ref(P) = amplitude * P**(1/exponent), in units of the 95% prediction-band
half-width Delta:

    delta_h = (h - h_ref(P)) / Delta

A positive score means the h was reached with fewer papers than the
population trend predicts; scores above +1 lie outside the upper prediction
band and are flagged. The same construction applies to the fractional h_m.

The published baseline constants for condensed-matter researcher populations
are h_ref(P) = 3.1 * P**(1/2.20) with Delta = 16 (19 beyond 1000 papers) and,
for h_m, 1.05 * P**(1/1.95) with Delta = 10 (12 beyond 1000 papers). A curve
fitted freshly via :mod:`bibliofit.fitting` can be used instead.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Callable, Union

from .corpus import Corpus
from .errors import ValidationError
from .indices import index_set

HalfwidthRule = Union[float, int, Callable[[int], float]]

# piecewise-constant half-widths; the split point only matters between the
# bulk of observed populations (P < ~900) and extreme outliers (P > 2300),
# 1000 is a round choice in that window
PIECEWISE_SPLIT = 1000
_HALFWIDTHS = {"h": (16.0, 19.0), "hm": (10.0, 12.0)}


def piecewise_halfwidth(P: int, kind: str) -> float:
    """Published band half-width: 16/19 for h, 10/12 for h_m, split at P=1000."""
    if kind not in _HALFWIDTHS:
        raise ValidationError(f"unknown kind {kind!r} (expected 'h' or 'hm')")
    if P < 1:
        raise ValidationError(f"P must be >= 1, got {P}")
    low, high = _HALFWIDTHS[kind]
    return low if P <= PIECEWISE_SPLIT else high


@dataclass(frozen=True)
class ReferenceCurve:
    """A reference power law plus the half-width rule normalizing deviations.

    ``halfwidth`` is either a constant or a callable of P (a piecewise table
    or a live prediction-interval binding).
    """

    amplitude: float
    exponent: float
    halfwidth: HalfwidthRule

    def __post_init__(self):
        if self.amplitude <= 0 or self.exponent <= 0:
            raise ValidationError("curve amplitude and exponent must be > 0")

    def predict(self, P: int) -> float:
        """Reference h at paper count P."""
        if P < 1:
            raise ValidationError(f"P must be >= 1, got {P}")
        return self.amplitude * float(P) ** (1.0 / self.exponent)

    def halfwidth_at(self, P: int) -> float:
        value = self.halfwidth(P) if callable(self.halfwidth) else float(self.halfwidth)
        if value <= 0:
            raise ValidationError(f"half-width must be > 0, got {value} at P={P}")
        return value


def published_curve(kind: str) -> ReferenceCurve:
    """The published baseline curve for h ('h') or h_m ('hm')."""
    if kind == "h":
        return ReferenceCurve(3.1, 2.20, lambda P: piecewise_halfwidth(P, "h"))
    if kind == "hm":
        return ReferenceCurve(1.05, 1.95, lambda P: piecewise_halfwidth(P, "hm"))
    raise ValidationError(f"unknown kind {kind!r} (expected 'h' or 'hm')")


def delta_h(h: float, P: int, curve: ReferenceCurve) -> float:
    """(h - h_ref(P)) / Delta, carried at full precision."""
    return (h - curve.predict(P)) / curve.halfwidth_at(P)


def delta_h_m(h_m: float, P: int, curve: ReferenceCurve) -> float:
    """Deviation of the fractional index from its reference curve."""
    return delta_h(h_m, P, curve)


@dataclass(frozen=True)
class DeviationReport:
    """Per-researcher deviation scores and outside-band flags.

    Flags mark only the upper band (delta > 1): those are researchers whose
    index exceeds the trend. Below-band cases keep their negative delta but
    are not flagged.
    """

    researcher_id: str
    P: int
    C: int
    h: int
    h_m: float
    delta_h: float
    delta_h_m: float
    outside_interval_h: bool
    outside_interval_h_m: bool

    def to_dict(self) -> dict:
        return asdict(self)


def deviation_report(corpus: Corpus, curve_h: ReferenceCurve,
                     curve_hm: ReferenceCurve) -> list[DeviationReport]:
    """Score every profile; sorted by delta_h descending, ties by id."""
    reports = []
    for profile in corpus.profiles:
        idx = index_set(profile)
        dh = delta_h(idx.h, idx.P, curve_h)
        dhm = delta_h_m(idx.h_m, idx.P, curve_hm)
        reports.append(DeviationReport(
            researcher_id=idx.researcher_id,
            P=idx.P,
            C=idx.C,
            h=idx.h,
            h_m=idx.h_m,
            delta_h=dh,
            delta_h_m=dhm,
            outside_interval_h=dh > 1.0,
            outside_interval_h_m=dhm > 1.0,
        ))
    reports.sort(key=lambda r: (-r.delta_h, r.researcher_id))
    return reports
