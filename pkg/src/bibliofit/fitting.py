"""Power-law fits of h against population data, with prediction intervals.

Three model families relate a researcher's h to their paper count P and
citation count C:

* ``hirsch``  h = a * C**(1/alpha)        (constant publication/citation rates)
* ``er``      h = a * P**(1/alpha)        (power-law per-paper citations)
* ``gs``      h = a * P**(1/(alpha+1)) * (C/P)**(alpha/(alpha+1))
              (extreme-value statistics; alpha=1 recovers the hirsch form)

Fits minimize the plain sum of squared residuals in h. For a fixed exponent
the amplitude is closed-form (the model is linear in it), so the search is a
robust one-dimensional scan over the exponent: a 64-point coarse grid
followed by golden-section refinement. The log-log Pearson correlation is
reported as a separate diagnostic.

Prediction half-widths use the standard first-order construction: Student-t
quantile on n-2 degrees of freedom times the residual scale, inflated by the
leverage of the query point under the design linearized at the optimum
(derivatives with respect to amplitude and exponent).

All functions are pure; chi2 accumulation order is fixed, so results do not
depend on any parallel mapping of callers.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np
from scipy.stats import t as student_t

from . import backend
from .corpus import Corpus
from .errors import ValidationError
from .indices import index_set

FAMILIES = ("hirsch", "er", "gs")
_FAMILY_CODES = {
    "hirsch": backend.FAMILY_HIRSCH,
    "er": backend.FAMILY_ER,
    "gs": backend.FAMILY_GS,
}

# exponent search ranges; gs admits small alpha (its alpha is not a direct
# power of the response)
DEFAULT_BOUNDS = {
    "hirsch": (1.01, 10.0),
    "er": (1.01, 10.0),
    "gs": (0.05, 10.0),
}

_COARSE_GRID = 64
_XTOL = 1e-9

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class FitResult:
    """A fitted power-law model.

    residual_sd is sqrt(chi2 / (n - 2)); degenerate flags an all-equal
    response whose exponent ended up pinned at a search bound.
    """

    family: str
    amplitude: float
    exponent: float
    chi2: float
    r_loglog: float
    n: int
    residual_sd: float
    degenerate: bool = False

    def to_dict(self) -> dict:
        return asdict(self)


def _family_code(family: str) -> int:
    try:
        return _FAMILY_CODES[family]
    except KeyError:
        raise ValidationError(
            f"unknown family {family!r} (expected one of {FAMILIES})") from None


def _prepare_points(points) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    arr = np.asarray(points, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[1] != 3:
        raise ValidationError("points must be an (n, 3) array of (P, C, h)")
    p = np.ascontiguousarray(arr[:, 0])
    c = np.ascontiguousarray(arr[:, 1])
    h = np.ascontiguousarray(arr[:, 2])
    if np.any(p < 1) or np.any(c < 1):
        raise ValidationError("all P and C values must be >= 1")
    if np.any(h <= 0):
        raise ValidationError("all response values must be > 0")
    return p, c, h


def predictor_values(p, c, family: str, exponent: float) -> np.ndarray:
    """Per-point predictor f with unit amplitude (vectorized)."""
    p = np.asarray(p, dtype=np.float64)
    c = np.asarray(c, dtype=np.float64)
    code = _family_code(family)
    if code == backend.FAMILY_HIRSCH:
        return c ** (1.0 / exponent)
    if code == backend.FAMILY_ER:
        return p ** (1.0 / exponent)
    return p ** (1.0 / (exponent + 1.0)) * (c / p) ** (exponent / (exponent + 1.0))


def predictor_dalpha(p, c, family: str, exponent: float) -> np.ndarray:
    """Derivative of the unit-amplitude predictor w.r.t. the exponent."""
    p = np.asarray(p, dtype=np.float64)
    c = np.asarray(c, dtype=np.float64)
    f = predictor_values(p, c, family, exponent)
    code = _family_code(family)
    if code == backend.FAMILY_HIRSCH:
        return -f * np.log(c) / exponent**2
    if code == backend.FAMILY_ER:
        return -f * np.log(p) / exponent**2
    # d/da of [ln P/(a+1) + a ln(C/P)/(a+1)] = (ln(C/P) - ln P)/(a+1)^2
    return f * (np.log(c / p) - np.log(p)) / (exponent + 1.0) ** 2


def _golden(objective, lo: float, hi: float, xtol: float) -> float:
    """Golden-section minimum of a unimodal scalar function on [lo, hi]."""
    a, b = lo, hi
    x1 = b - _INV_PHI * (b - a)
    x2 = a + _INV_PHI * (b - a)
    f1 = objective(x1)
    f2 = objective(x2)
    while b - a > xtol:
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _INV_PHI * (b - a)
            f1 = objective(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _INV_PHI * (b - a)
            f2 = objective(x2)
    return 0.5 * (a + b)


def fit(points, family: str, exponent_bounds: tuple[float, float] | None = None) -> FitResult:
    """Least-squares fit of one model family to (P, C, h) triples.

    Minimizes chi2 = sum((h_i - amplitude * f_i(exponent))**2) over both
    parameters; returns the global minimum within ``exponent_bounds``
    (family default when omitted).
    """
    code = _family_code(family)
    p, c, h = _prepare_points(points)
    n = h.size
    if n < 3:
        raise ValidationError(f"need at least 3 points to fit, got {n}")
    lo, hi = exponent_bounds if exponent_bounds is not None else DEFAULT_BOUNDS[family]
    if not (0.0 < lo < hi):
        raise ValidationError(f"bad exponent bounds ({lo}, {hi}): need 0 < lo < hi")

    def objective(alpha: float) -> float:
        return backend.model_chi2(p, c, h, code, alpha)[1]

    grid = np.linspace(lo, hi, _COARSE_GRID)
    coarse = [objective(a) for a in grid]
    k = int(np.argmin(coarse))
    bracket_lo = grid[max(k - 1, 0)]
    bracket_hi = grid[min(k + 1, grid.size - 1)]
    exponent = _golden(objective, float(bracket_lo), float(bracket_hi), _XTOL)
    amplitude, chi2 = backend.model_chi2(p, c, h, code, exponent)

    span = hi - lo
    pinned = min(exponent - lo, hi - exponent) < 1e-4 * span
    degenerate = bool(np.all(h == h[0]) and pinned)
    try:
        r = _loglog_r(p, c, h, family, exponent)
    except ValidationError:
        r = math.nan  # zero variance; the fit is still reported, just flagged
    return FitResult(
        family=family,
        amplitude=float(amplitude),
        exponent=float(exponent),
        chi2=float(chi2),
        r_loglog=float(r),
        n=int(n),
        residual_sd=math.sqrt(chi2 / (n - 2)),
        degenerate=degenerate,
    )


def _loglog_r(p, c, h, family: str, exponent: float) -> float:
    x = np.log(predictor_values(p, c, family, exponent))
    y = np.log(h)
    dx = x - x.mean()
    dy = y - y.mean()
    sxx = float(dx @ dx)
    syy = float(dy @ dy)
    if sxx == 0.0 or syy == 0.0:
        raise ValidationError("log-log correlation undefined: zero variance")
    return float(dx @ dy) / math.sqrt(sxx * syy)


def loglog_correlation(points, family: str, fit_result: FitResult) -> float:
    """Pearson correlation between ln(predictor at the fitted exponent) and ln(h)."""
    p, c, h = _prepare_points(points)
    return _loglog_r(p, c, h, family, fit_result.exponent)


def chi2_profile(points, family: str, exponent_grid) -> list[tuple[float, float]]:
    """chi2 along an exponent grid, amplitude re-optimized at each point.

    Useful for inspecting the sensitivity of the fit to the exponent; the
    result is plot-ready (exponent, chi2) pairs in grid order.
    """
    code = _family_code(family)
    p, c, h = _prepare_points(points)
    grid = [float(a) for a in exponent_grid]
    if not grid:
        raise ValidationError("exponent grid must be non-empty")
    if any(a <= 0 for a in grid):
        raise ValidationError("exponent grid values must be > 0")
    return [(a, backend.model_chi2(p, c, h, code, a)[1]) for a in grid]


def _leverages(fit_result: FitResult, p, c, qp, qc) -> np.ndarray:
    """Hat values of query points under the design linearized at the optimum."""
    a = fit_result.amplitude
    alpha = fit_result.exponent
    fam = fit_result.family
    col1 = predictor_values(p, c, fam, alpha)
    col2 = a * predictor_dalpha(p, c, fam, alpha)
    design = np.column_stack([col1, col2])
    jtj = design.T @ design
    g = np.column_stack([
        predictor_values(qp, qc, fam, alpha),
        a * predictor_dalpha(qp, qc, fam, alpha),
    ])
    try:
        solved = np.linalg.solve(jtj, g.T)
    except np.linalg.LinAlgError:
        raise ValidationError(
            "leverage undefined: linearized design is singular "
            "(e.g. all predictor values identical)") from None
    return np.einsum("ij,ji->i", g, solved)


def _query_arrays(fit_result: FitResult, P0, C0):
    qp = np.atleast_1d(np.asarray(P0, dtype=np.float64))
    if fit_result.family == "er":
        qc = np.ones_like(qp)  # unused by the er predictor
    else:
        if C0 is None:
            raise ValidationError(
                f"family {fit_result.family!r} needs the citation coordinate C0 "
                "to evaluate a prediction half-width")
        qc = np.atleast_1d(np.asarray(C0, dtype=np.float64))
    return qp, qc


def prediction_halfwidth(fit_result: FitResult, points, P0, level: float = 0.95,
                         C0=None) -> float:
    """Half-width of the prediction band at paper count P0.

    Delta(P0) = t((1+level)/2, n-2) * residual_sd * sqrt(1 + 1/n + leverage),
    the band expected to contain ``level`` of new observations. Families
    whose predictor depends on C (hirsch, gs) need C0 as well.
    """
    if not 0.0 < level < 1.0:
        raise ValidationError(f"level must be in (0, 1), got {level}")
    p, c, h = _prepare_points(points)
    n = h.size
    if n <= 2:
        raise ValidationError("prediction interval needs more than 2 points")
    qp, qc = _query_arrays(fit_result, P0, C0)
    if np.any(qp < 1):
        raise ValidationError("P0 must be >= 1")
    lev = _leverages(fit_result, p, c, qp, qc)
    tq = float(student_t.ppf(0.5 * (1.0 + level), n - 2))
    width = tq * fit_result.residual_sd * np.sqrt(1.0 + 1.0 / n + lev)
    return float(width[0]) if np.isscalar(P0) else width


def collect_points(corpus: Corpus, response: str = "h") -> np.ndarray:
    """(P, C, h) or (P, C, h_m) triples for every profile in a corpus."""
    if response not in ("h", "hm"):
        raise ValidationError(f"unknown response {response!r} (expected 'h' or 'hm')")
    rows = []
    for profile in corpus.profiles:
        idx = index_set(profile)
        rows.append((idx.P, idx.C, idx.h if response == "h" else idx.h_m))
    return np.asarray(rows, dtype=np.float64)
