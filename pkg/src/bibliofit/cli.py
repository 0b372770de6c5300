"""Command-line front end.

Subcommands:

* ``indices``     per-researcher index table from a profiles file
* ``fit``         power-law fit across a population, JSON result
* ``deviations``  per-researcher deviation scores (CSV or JSON)
* ``stats``       ccdf / lorenz / age-profile data from a citation corpus
* ``expected``    expected-h curve derived from a citation corpus
* ``simulate``    seeded synthetic profiles file

Exit codes: 0 success, 1 validation error (reported on stderr), 2 usage
error. Text output uses fixed precision (h integer; h_m and deltas one
decimal); JSON output carries full precision.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import dataclasses
import json
import sys

import numpy as np

from . import citestats, corpus as corpus_mod, deviation, fitting, synth
from .errors import ValidationError
from .indices import index_set

FIT_MIN_PROFILES = 30  # below this a fitted reference curve is unreliable


@contextlib.contextmanager
def _open_out(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            yield fh


def _load_corpus(args) -> corpus_mod.Corpus:
    return corpus_mod.ingest_profiles(args.input, getattr(args, "input_format", None))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_indices(args) -> int:
    population = _load_corpus(args)
    sets = [index_set(p) for p in population.profiles]
    if args.format == "json":
        payload = [dataclasses.asdict(s) for s in sets]
        with _open_out(args.out) as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
        return 0
    with _open_out(args.out) as fh:
        writer = csv.writer(fh)
        writer.writerow(["researcher_id", "P", "C", "h", "h_m", "h_n", "mean_citations"])
        for s in sets:
            writer.writerow([s.researcher_id, s.P, s.C, s.h, f"{s.h_m:.1f}",
                             f"{s.h_n:.4f}", f"{s.mean_citations:.2f}"])
    return 0


def cmd_fit(args) -> int:
    population = _load_corpus(args)
    points = fitting.collect_points(population, args.response)
    bounds = tuple(args.bounds) if args.bounds else None
    result = fitting.fit(points, args.family, bounds)
    with _open_out(args.out) as fh:
        json.dump(result.to_dict(), fh, indent=2)
        fh.write("\n")
    if args.chi2_profile:
        lo, hi = bounds or fitting.DEFAULT_BOUNDS[args.family]
        grid = np.linspace(lo, hi, args.grid_points)
        profile = fitting.chi2_profile(points, args.family, grid)
        with open(args.chi2_profile, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["exponent", "chi2"])
            for exponent, chi2 in profile:
                writer.writerow([f"{exponent:.6f}", f"{chi2:.6f}"])
    return 0


def _reference_curves(args, population):
    mode = args.delta
    if mode == "paper":
        return deviation.published_curve("h"), deviation.published_curve("hm")
    if mode == "fit":
        if len(population) < FIT_MIN_PROFILES:
            print(f"warning: fitting a reference curve to only "
                  f"{len(population)} profiles (< {FIT_MIN_PROFILES})",
                  file=sys.stderr)
        curves = []
        for response in ("h", "hm"):
            points = fitting.collect_points(population, response)
            result = fitting.fit(points, "er")
            curves.append(deviation.ReferenceCurve(
                result.amplitude, result.exponent,
                lambda P, r=result, pts=points: fitting.prediction_halfwidth(r, pts, P)))
        return curves[0], curves[1]
    try:
        value = float(mode)
    except ValueError:
        raise ValidationError(
            f"--delta must be 'paper', 'fit' or a number, got {mode!r}") from None
    if value <= 0:
        raise ValidationError(f"--delta must be > 0, got {value}")
    base_h = deviation.published_curve("h")
    base_hm = deviation.published_curve("hm")
    return (deviation.ReferenceCurve(base_h.amplitude, base_h.exponent, value),
            deviation.ReferenceCurve(base_hm.amplitude, base_hm.exponent, value))


def cmd_deviations(args) -> int:
    population = _load_corpus(args)
    curve_h, curve_hm = _reference_curves(args, population)
    reports = deviation.deviation_report(population, curve_h, curve_hm)
    if args.format == "json":
        with _open_out(args.out) as fh:
            json.dump([r.to_dict() for r in reports], fh, indent=2)
            fh.write("\n")
        return 0
    with _open_out(args.out) as fh:
        writer = csv.writer(fh)
        writer.writerow(["researcher_id", "P", "C", "h", "delta_h",
                         "h_m", "delta_h_m", "flag_h", "flag_hm"])
        for r in reports:
            writer.writerow([
                r.researcher_id, r.P, r.C, r.h, f"{r.delta_h:.1f}",
                f"{r.h_m:.1f}", f"{r.delta_h_m:.1f}",
                str(r.outside_interval_h).lower(),
                str(r.outside_interval_h_m).lower(),
            ])
    return 0


def cmd_stats(args) -> int:
    items = corpus_mod.ingest_citations(args.input, args.yearly)
    prefix = args.out
    dist = citestats.ccdf(items)
    with open(f"{prefix}_ccdf.csv", "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["citations", "p"])
        for c, p in dist.change_points():
            writer.writerow([c, repr(p)])
    with open(f"{prefix}_ccdf.json", "w", encoding="utf-8") as fh:
        json.dump(dist.to_dict(), fh, indent=2)
        fh.write("\n")
    curve = citestats.lorenz(items)
    with open(f"{prefix}_lorenz.csv", "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["paper_fraction", "citation_fraction"])
        for x, y in curve.points:
            writer.writerow([repr(float(x)), repr(float(y))])
    if args.yearly is not None:
        profile = citestats.age_profile(items, drop_final_year=args.drop_final_year)
        with open(f"{prefix}_age.csv", "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["years_since_publication", "citations"])
            for age, count in profile.points:
                writer.writerow([age, count])
    else:
        print("note: no per-year data; age profile skipped "
              "(supply --yearly FILE)", file=sys.stderr)
    return 0


def cmd_expected(args) -> int:
    items = corpus_mod.ingest_citations(args.input)
    dist = citestats.ccdf(items)
    curve = citestats.expected_h_curve(dist, args.pmax)
    with _open_out(args.out) as fh:
        writer = csv.writer(fh)
        writer.writerow(["P", "expected_h"])
        for P, h in curve:
            writer.writerow([P, h])
    return 0


def cmd_simulate(args) -> int:
    if args.model == "hirsch":
        model = synth.HirschRateParams(
            papers_per_year=args.papers_per_year,
            citations_per_paper_year=args.citations_per_paper_year,
            career_years=tuple(args.career),
        )
    else:
        model = synth.LotkaianParams(
            papers_range=tuple(args.papers),
            exponent=args.theta,
            citation_cap=args.cap,
        )
    config = synth.GeneratorConfig(seed=args.seed, n_researchers=args.n, model=model)
    population = synth.generate(config)
    fmt = args.format or (corpus_mod.infer_format(args.out) if args.out else "csv")
    dump = (corpus_mod.dump_profiles_json if fmt == "json"
            else corpus_mod.dump_profiles_csv)
    with _open_out(args.out) as fh:
        dump(population, fh)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bibliofit",
        description="Citation indices, power-law population fits and deviation scores.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("--input", required=True, help="input data file")
        p.add_argument("--input-format", choices=["csv", "json"], default=None,
                       help="input format (default: infer from extension)")

    p = sub.add_parser("indices", help="per-researcher index table")
    add_input(p)
    p.add_argument("--format", choices=["csv", "json"], default="csv",
                   help="output format (default csv)")
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.set_defaults(func=cmd_indices)

    p = sub.add_parser("fit", help="fit a power-law model across the population")
    add_input(p)
    p.add_argument("--family", choices=list(fitting.FAMILIES), default="er")
    p.add_argument("--response", choices=["h", "hm"], default="h",
                   help="index to fit against the model (default h)")
    p.add_argument("--bounds", nargs=2, type=float, metavar=("LO", "HI"),
                   default=None, help="exponent search bounds")
    p.add_argument("--chi2-profile", metavar="FILE", default=None,
                   help="also write a chi2-vs-exponent CSV")
    p.add_argument("--grid-points", type=int, default=200,
                   help="points in the chi2 profile grid (default 200)")
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("deviations", help="per-researcher deviation scores")
    add_input(p)
    p.add_argument("--delta", default="paper",
                   help="'paper' (published curve and half-widths, default), "
                        "'fit' (fit this population), or an explicit half-width")
    p.add_argument("--format", choices=["csv", "json"], default="csv",
                   help="output format (default csv)")
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.set_defaults(func=cmd_deviations)

    p = sub.add_parser("stats", help="citation-corpus statistics (ccdf, lorenz, age)")
    add_input(p)
    p.add_argument("--yearly", default=None, help="per-year companion CSV")
    p.add_argument("--drop-final-year", action="store_true",
                   help="drop the most recent (partial) citation year")
    p.add_argument("--out", default="stats", metavar="PREFIX",
                   help="output file prefix (default 'stats')")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("expected", help="expected-h curve from citation statistics")
    add_input(p)
    p.add_argument("--pmax", type=int, required=True, help="largest paper count")
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.set_defaults(func=cmd_expected)

    p = sub.add_parser("simulate", help="generate a seeded synthetic profiles file")
    p.add_argument("--model", choices=["hirsch", "lotkaian"], required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, required=True, help="number of researchers")
    p.add_argument("--papers-per-year", type=float, default=3.0)
    p.add_argument("--citations-per-paper-year", type=float, default=2.0)
    p.add_argument("--career", nargs=2, type=int, metavar=("MIN", "MAX"),
                   default=(5, 40), help="career length bounds (hirsch)")
    p.add_argument("--papers", nargs=2, type=int, metavar=("MIN", "MAX"),
                   default=(10, 400), help="papers per researcher (lotkaian)")
    p.add_argument("--theta", type=float, default=2.0,
                   help="power-law exponent (lotkaian)")
    p.add_argument("--cap", type=int, default=100_000,
                   help="citation cap (lotkaian)")
    p.add_argument("--format", choices=["csv", "json"], default=None,
                   help="output format (default: from --out extension, else csv)")
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.set_defaults(func=cmd_simulate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
