"""Acceptance suite: one test per release criterion, at fixed tolerances.

Runs under pytest, or standalone with per-criterion PASS/FAIL lines:

    python tests/test_acceptance.py

Criteria 1-3 reproduce published one-decimal deviation scores for well-known
condensed-matter researcher profiles (ResearcherID data) from their (P, C,
h, h_m) values alone, using the published reference curves. Criterion 11
needs the original population datasets, which are not distributed with the
package; it is skipped unless the files are supplied (see DATASET_DIR).
"""

import math
import os
import time
from pathlib import Path

import numpy as np
import pytest

from bibliofit import (
    GeneratorConfig,
    LotkaianParams,
    PaperRecord,
    CitationCorpus,
    collect_points,
    ccdf,
    delta_h,
    delta_h_m,
    expected_h_curve,
    fit,
    generate,
    h_index,
    hm_index,
    ingest_citations,
    ingest_profiles,
    lorenz,
    prediction_halfwidth,
    published_curve,
    required_papers,
)

# (researcher, P, C, h, delta_h, h_m, delta_h_m) -- published one-decimal values
REFERENCE_ROWS = [
    ("Padilla",        96,  18208,  45, 1.3, 13.0, 0.2),
    ("Broholm",       149,   9646,  52, 1.4, 14.9, 0.1),
    ("Grier",         145,  14613,  54, 1.5, 30.8, 1.7),
    ("Lundqvist",     141,  19795,  57, 1.7, 27.7, 1.4),
    ("Bruno",         224,  11963,  56, 1.2, 30.7, 1.4),
    ("Schoenenberger", 210, 11910,  58, 1.4, 22.4, 0.6),
    ("van Blaaderen", 209,  14926,  62, 1.7, 30.0, 1.4),
    ("Hirsch",        246,  17458,  58, 1.3, 46.2, 2.8),
    ("Castro Neto",   311,  38116,  78, 2.2, 36.7, 1.7),
    ("Nori",          596,  27958,  81, 1.5, 47.6, 1.9),
    ("Das Sarma",     864,  49080,  92, 1.6, 62.8, 2.9),
    ("Kane",           73,  30312,  47, 1.6, 25.3, 1.6),
    ("Kim",           195,  53254,  77, 2.7, 21.8, 0.6),
    ("Zhang",         235,  45434,  89, 3.2, 39.9, 2.3),
    ("Geim",          321, 154026,  99, 3.5, 28.9, 0.9),
    ("Novoselov",     279, 148335, 100, 3.7, 28.0, 0.9),
    ("Scuseria",      399,  58471, 100, 3.3, 56.5, 3.4),
    ("Di Ventra",     178,  11343,  49, 1.0, 26.6, 1.2),
]

DATASET_DIR = Path(os.environ.get("BIBLIOFIT_DATASET_DIR",
                                  Path(__file__).parent / "data"))


def criterion_01_delta_h_reproduction():
    """published delta_h values within +/-0.1, curve 3.1*P**(1/2.20), width 16"""
    start = time.perf_counter()
    curve = published_curve("h")
    spot = {"Padilla": 1.3, "Castro Neto": 2.2, "Das Sarma": 1.6,
            "Novoselov": 3.7, "Scuseria": 3.3}
    for name, P, _C, h, printed, _hm, _dhm in REFERENCE_ROWS:
        assert curve.halfwidth_at(P) == 16.0
        got = delta_h(h, P, curve)
        assert abs(got - printed) <= 0.1 + 1e-12, (
            f"{name}: delta_h {got:.3f} vs printed {printed}")
        if name in spot:
            assert abs(got - spot[name]) <= 0.1 + 1e-12
    assert time.perf_counter() - start < 1.0


def criterion_02_delta_hm_reproduction():
    """published delta_h_m values within +/-0.1, curve 1.05*P**(1/1.95), width 10"""
    start = time.perf_counter()
    curve = published_curve("hm")
    for name, P, _C, _h, _dh, hm, printed in REFERENCE_ROWS:
        assert curve.halfwidth_at(P) == 10.0
        got = delta_h_m(hm, P, curve)
        # the Hirsch row computes to 2.85 and prints 2.8: inside +/-0.1
        assert abs(got - printed) <= 0.1 + 1e-12, (
            f"{name}: delta_h_m {got:.3f} vs printed {printed}")
    assert time.perf_counter() - start < 1.0


def criterion_03_reference_curve_anchor():
    """reference curve value at P=96 equals 24.7 within 0.05"""
    assert abs(published_curve("h").predict(96) - 24.7) <= 0.05


def criterion_04_required_papers_exact():
    """required_papers(10, dist with p(10)=0.4) is exactly 25"""
    items = tuple(PaperRecord(f"p{i}", 1990, c, 1)
                  for i, c in enumerate([0, 0, 0, 10, 10]))
    dist = ccdf(CitationCorpus(items))
    assert dist.p(10) == 0.4
    assert required_papers(10, dist) == 25.0


def criterion_05_h_oracle_equivalence():
    """1000 seeded citation lists: h_index equals the definition scan"""
    start = time.perf_counter()
    rng = np.random.default_rng(550)
    for _ in range(1000):
        n = int(rng.integers(0, 101))
        cits = rng.integers(0, 1001, size=n)
        # oracle: test every k in 0..n directly against the definition
        ks = np.arange(n + 1)
        qualifies = (cits[None, :] >= ks[:, None]).sum(axis=1) >= ks
        oracle = int(ks[qualifies].max()) if n else 0
        assert h_index(cits.tolist()) == oracle
    assert time.perf_counter() - start < 1.0


def criterion_06_index_invariants():
    """1000 seeded profiles: h_m <= h <= P, h^2 <= C, single-author equality"""
    start = time.perf_counter()
    rng = np.random.default_rng(660)
    for i in range(1000):
        n = int(rng.integers(1, 101))
        cits = rng.integers(0, 1001, size=n).tolist()
        single = i % 2 == 0
        authors = [1] * n if single else rng.integers(1, 12, size=n).tolist()
        P, C = n, sum(cits)
        h = h_index(cits)
        hm = hm_index(list(zip(cits, authors)))
        assert hm <= h + 1e-12
        assert h <= P
        assert h * h <= C
        if single:
            assert hm == pytest.approx(float(h))
    assert time.perf_counter() - start < 1.0


def criterion_07_noiseless_fit_recovery():
    """h = 3.1 * P**(1/2.20) over 50 points: parameters back to 1e-6"""
    start = time.perf_counter()
    P = np.geomspace(10, 1000, 50)
    pts = np.column_stack([P, 30.0 * P, 3.1 * P ** (1 / 2.20)])
    result = fit(pts, "er")
    assert abs(result.amplitude - 3.1) <= 1e-6
    assert abs(result.exponent - 2.20) <= 1e-6
    assert time.perf_counter() - start < 1.0


def criterion_08_stochastic_fit_recovery():
    """300 power-law researchers, theta=2, fixed seed: exponent 2.0 +/- 0.15"""
    start = time.perf_counter()
    config = GeneratorConfig(
        seed=20260809, n_researchers=300,
        model=LotkaianParams(papers_range=(10, 400), exponent=2.0))
    corpus = generate(config)
    result = fit(collect_points(corpus, "h"), "er")
    assert abs(result.exponent - 2.0) <= 0.15
    assert time.perf_counter() - start < 10.0


def criterion_09_prediction_interval_coverage():
    """200 seeded noisy populations (n=300): 95% band covers 93-97% of points"""
    start = time.perf_counter()
    rng = np.random.default_rng(990)
    inside = 0
    total = 0
    for _ in range(200):
        P = rng.integers(100, 1001, size=300).astype(float)
        h = 3.1 * P ** (1 / 2.2) + rng.normal(0.0, 6.0, size=300)
        pts = np.column_stack([P, 40.0 * P, np.maximum(h, 0.5)])
        result = fit(pts, "er")
        widths = prediction_halfwidth(result, pts, P)
        predicted = result.amplitude * P ** (1.0 / result.exponent)
        inside += int(np.sum(np.abs(pts[:, 2] - predicted) <= widths))
        total += P.size
    coverage = inside / total
    assert 0.93 <= coverage <= 0.97, f"coverage {coverage:.4f}"
    assert time.perf_counter() - start < 60.0


def criterion_10_citation_statistics_properties():
    """100 seeded corpora: ccdf/lorenz/expected-h structural invariants"""
    start = time.perf_counter()
    rng = np.random.default_rng(1010)
    for _ in range(100):
        n = int(rng.integers(2, 2000))
        # heavy-tailed counts, zeros included
        vals = np.minimum((1.0 / rng.random(n) - 1.0).astype(np.int64), 5000)
        items = tuple(PaperRecord(f"p{i}", 1990, int(c), 1)
                      for i, c in enumerate(vals))
        corpus = CitationCorpus(items)
        dist = ccdf(corpus)
        grid = np.arange(0, dist.max_citations + 2)
        ps = dist.p(grid)
        assert ps[0] == 1.0
        assert np.all(np.diff(ps) <= 1e-15)
        if vals.sum() > 0:
            pts = lorenz(corpus).points
            assert pts[0, 0] == 0.0 and pts[0, 1] == 0.0
            assert pts[-1, 0] == 1.0 and pts[-1, 1] == 1.0
            assert np.all(np.diff(pts[:, 0]) >= 0)
            assert np.all(np.diff(pts[:, 1]) >= -1e-15)
            assert np.all(pts[:, 1] <= pts[:, 0] + 1e-12)
        curve = expected_h_curve(dist, 300)
        hs = [h for _, h in curve]
        assert all(a <= b for a, b in zip(hs, hs[1:]))
        assert all(h <= P for P, h in curve)
    assert time.perf_counter() - start < 5.0


def criterion_11_dataset_conditional():
    """population fits and 1990-corpus statistics (needs the original data)"""
    profiles_path = DATASET_DIR / "population_profiles.csv"
    citations_path = DATASET_DIR / "citations_1990.csv"
    if not profiles_path.exists() or not citations_path.exists():
        pytest.skip(
            "original population datasets not supplied; place "
            "population_profiles.csv (profile schema) and citations_1990.csv "
            f"(citation-corpus schema) under {DATASET_DIR} to enable. "
            "Criteria 7-9 stand in as the property-based substitute.")
    corpus = ingest_profiles(profiles_path, "csv")
    points = collect_points(corpus, "h")
    expected = {
        "hirsch": (2.28, 5518.0, 0.95),
        "er": (2.2, 19017.0, 0.92),
        "gs": (0.84, 5497.0, None),
    }
    for family, (alpha, chi2, r) in expected.items():
        result = fit(points, family)
        assert abs(result.exponent - alpha) <= 0.02 * alpha
        assert abs(result.chi2 - chi2) <= 0.02 * chi2
        if r is not None:
            assert abs(result.r_loglog - r) <= 0.02 * r
    corpus1990 = ingest_citations(citations_path)
    dist = ccdf(corpus1990)
    assert abs(dist.p(1) - 0.90) <= 0.02
    pts = lorenz(corpus1990).points
    share_60 = float(np.interp(0.60, pts[:, 0], pts[:, 1]))
    share_75 = float(np.interp(0.75, pts[:, 0], pts[:, 1]))
    assert abs(share_60 - 0.10) <= 0.02
    assert abs((1.0 - share_75) - 0.80) <= 0.02


CRITERIA = [
    criterion_01_delta_h_reproduction,
    criterion_02_delta_hm_reproduction,
    criterion_03_reference_curve_anchor,
    criterion_04_required_papers_exact,
    criterion_05_h_oracle_equivalence,
    criterion_06_index_invariants,
    criterion_07_noiseless_fit_recovery,
    criterion_08_stochastic_fit_recovery,
    criterion_09_prediction_interval_coverage,
    criterion_10_citation_statistics_properties,
    criterion_11_dataset_conditional,
]


@pytest.mark.parametrize("criterion", CRITERIA,
                         ids=[c.__name__ for c in CRITERIA])
def test_acceptance(criterion):
    criterion()


def _run_standalone() -> int:
    failures = 0
    for criterion in CRITERIA:
        label = f"{criterion.__name__}: {criterion.__doc__}"
        start = time.perf_counter()
        try:
            criterion()
        except pytest.skip.Exception as exc:
            print(f"SKIP {label} ({exc})")
            continue
        except AssertionError as exc:
            failures += 1
            print(f"FAIL {label} ({exc})")
            continue
        print(f"PASS {label} [{time.perf_counter() - start:.2f}s]")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(_run_standalone())
