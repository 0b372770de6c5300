"""Data model, file ingestion and profile-exclusion rules.

Canonical record types used throughout the package:

* PaperRecord       - one citable item (citations, author count, year).
* ResearcherProfile - identity plus the researcher's papers; source of the
                      derived quantities P (papers), C (citations) and the
                      active-year span.
* Corpus            - a population of profiles, ids pairwise distinct.
* CitationCorpus    - a bag of papers with no researcher identity, used for
                      corpus-level citation statistics.

All types are frozen dataclasses: immutable after construction and safe to
share across threads. Ingestion is single-threaded.

File formats
------------
Profile CSV    header ``researcher_id,display_name,paper_id,year,citations,
               n_authors``; one row per paper; display_name may be empty.
Profile JSON   array of ``{researcher_id, display_name, papers: [...]}``
               objects; papers may carry ``yearly_citations`` as a list of
               ``[year, count]`` pairs (CSV cannot represent these).
Citation CSV   header ``paper_id,year,citations``; optional companion
               per-year file with header ``paper_id,cite_year,count``.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Optional

from .errors import ValidationError

YEAR_MIN = 1800
YEAR_MAX = 2100

PROFILE_CSV_FIELDS = ("researcher_id", "display_name", "paper_id", "year",
                      "citations", "n_authors")
CITATION_CSV_FIELDS = ("paper_id", "year", "citations")
YEARLY_CSV_FIELDS = ("paper_id", "cite_year", "count")


@dataclass(frozen=True)
class PaperRecord:
    """One citable item.

    Attributes
    ----------
    paper_id : str
        Opaque identifier, unique within one researcher's profile.
    year : int
        Publication year, within [1800, 2100].
    citations : int
        Total citations, >= 0.
    n_authors : int
        Author count, >= 1.
    yearly_citations : tuple of (year, count), optional
        Per-year citation history; counts must sum to ``citations`` and no
        year may precede publication.
    """

    paper_id: str
    year: int
    citations: int
    n_authors: int
    yearly_citations: Optional[tuple[tuple[int, int], ...]] = None

    def __post_init__(self):
        if not self.paper_id:
            raise ValidationError("paper_id must be non-empty")
        if not YEAR_MIN <= self.year <= YEAR_MAX:
            raise ValidationError(
                f"year must be in [{YEAR_MIN}, {YEAR_MAX}], got {self.year}")
        if self.citations < 0:
            raise ValidationError(f"citations must be >= 0, got {self.citations}")
        if self.n_authors < 1:
            raise ValidationError(f"n_authors must be >= 1, got {self.n_authors}")
        if self.yearly_citations is not None:
            yearly = tuple((int(y), int(n)) for y, n in self.yearly_citations)
            object.__setattr__(self, "yearly_citations", yearly)
            for y, n in yearly:
                if n < 0:
                    raise ValidationError(
                        f"yearly citation count must be >= 0, got {n} in {y}")
                if y < self.year:
                    raise ValidationError(
                        f"citation year {y} precedes publication year {self.year}")
            total = sum(n for _, n in yearly)
            if total != self.citations:
                raise ValidationError(
                    f"yearly_citations sum to {total}, expected {self.citations}")


@dataclass(frozen=True)
class ResearcherProfile:
    """A researcher identity plus their list of papers."""

    researcher_id: str
    display_name: Optional[str] = None
    papers: tuple[PaperRecord, ...] = ()

    def __post_init__(self):
        if not self.researcher_id:
            raise ValidationError("researcher_id must be non-empty")
        object.__setattr__(self, "papers", tuple(self.papers))
        seen = set()
        for paper in self.papers:
            if paper.paper_id in seen:
                raise ValidationError(
                    f"researcher {self.researcher_id!r}: "
                    f"duplicate paper_id {paper.paper_id!r}")
            seen.add(paper.paper_id)

    @property
    def paper_count(self) -> int:
        """P: number of citable items."""
        return len(self.papers)

    @property
    def total_citations(self) -> int:
        """C: sum of citations over all papers."""
        return sum(p.citations for p in self.papers)


@dataclass(frozen=True)
class Corpus:
    """A population of researcher profiles with pairwise distinct ids."""

    profiles: tuple[ResearcherProfile, ...] = ()
    provenance: str = ""

    def __post_init__(self):
        object.__setattr__(self, "profiles", tuple(self.profiles))
        seen = set()
        for profile in self.profiles:
            if profile.researcher_id in seen:
                raise ValidationError(
                    f"duplicate researcher_id {profile.researcher_id!r}")
            seen.add(profile.researcher_id)

    def __len__(self) -> int:
        return len(self.profiles)


@dataclass(frozen=True)
class CitationCorpus:
    """Papers without researcher identity, for corpus-level statistics.

    ``publication_year`` is the common year when all items share one,
    otherwise None.
    """

    items: tuple[PaperRecord, ...] = ()
    publication_year: Optional[int] = field(init=False, default=None)

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))
        years = {p.year for p in self.items}
        common = years.pop() if len(years) == 1 else None
        object.__setattr__(self, "publication_year", common)

    def __len__(self) -> int:
        return len(self.items)


@dataclass(frozen=True)
class Exclusion:
    """A profile removed by :func:`apply_exclusions`, with the reason tag."""

    researcher_id: str
    reason: str


def active_years(profile: ResearcherProfile) -> int:
    """Inclusive year span between a researcher's first and last paper.

    Counted as (last - first + 1) so a single-year career spans 1 year.
    """
    if not profile.papers:
        raise ValidationError(
            f"researcher {profile.researcher_id!r} has no papers")
    years = [p.year for p in profile.papers]
    return max(years) - min(years) + 1


def apply_exclusions(corpus: Corpus) -> tuple[Corpus, list[Exclusion]]:
    """Drop profiles that carry no usable citation signal.

    Removes profiles with zero papers or zero total citations (the latter is
    exactly the h = 0 case, since h >= 1 iff some paper has a citation).
    Idempotent; returns the retained corpus and one record per removal.
    """
    retained = []
    excluded = []
    for profile in corpus.profiles:
        if profile.paper_count == 0:
            excluded.append(Exclusion(profile.researcher_id, "no papers"))
        elif profile.total_citations == 0:
            excluded.append(Exclusion(profile.researcher_id, "zero citations / h=0"))
        else:
            retained.append(profile)
    return Corpus(tuple(retained), corpus.provenance), excluded


# ---------------------------------------------------------------------------
# ingestion
# ---------------------------------------------------------------------------

def _parse_int(raw: str, field_name: str, line_num: int, minimum: int | None = None) -> int:
    try:
        value = int(raw)
    except (TypeError, ValueError):
        raise ValidationError(
            f"line {line_num}: {field_name}: invalid integer {raw!r}") from None
    if minimum is not None and value < minimum:
        raise ValidationError(
            f"line {line_num}: {field_name} must be >= {minimum}, got {value}")
    return value


def _check_header(fieldnames, expected: tuple[str, ...], path) -> None:
    if fieldnames is None:
        raise ValidationError(f"{path}: no records (empty file)")
    got = set(fieldnames)
    want = set(expected)
    missing = want - got
    extra = got - want
    if missing or extra:
        parts = []
        if missing:
            parts.append(f"missing columns {sorted(missing)}")
        if extra:
            parts.append(f"unexpected columns {sorted(extra)}")
        raise ValidationError(f"{path}: bad header: " + "; ".join(parts))


def infer_format(path) -> str:
    """Guess csv/json from the file extension."""
    suffix = Path(path).suffix.lower()
    if suffix == ".csv":
        return "csv"
    if suffix == ".json":
        return "json"
    raise ValidationError(
        f"cannot infer format from {path!r}; pass format='csv' or 'json'")


def ingest_profiles(path, format: str | None = None) -> Corpus:
    """Read researcher profiles from a CSV or JSON file.

    One ResearcherProfile per distinct researcher_id, rows grouped in file
    order; row order is preserved within a profile. Malformed input raises
    :class:`ValidationError` naming the offending line or record.
    """
    fmt = format or infer_format(path)
    if fmt == "csv":
        profiles = _read_profiles_csv(path)
    elif fmt == "json":
        profiles = _read_profiles_json(path)
    else:
        raise ValidationError(f"unknown format {fmt!r} (expected csv or json)")
    if not profiles:
        raise ValidationError(f"{path}: no records")
    return Corpus(tuple(profiles), provenance=f"{fmt}:{path}")


def _read_profiles_csv(path) -> list[ResearcherProfile]:
    order: list[str] = []
    names: dict[str, Optional[str]] = {}
    papers: dict[str, list[PaperRecord]] = {}
    seen_ids: dict[str, set[str]] = {}
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        _check_header(reader.fieldnames, PROFILE_CSV_FIELDS, path)
        for row in reader:
            line = reader.line_num
            rid = (row["researcher_id"] or "").strip()
            if not rid:
                raise ValidationError(f"line {line}: researcher_id is empty")
            if rid not in papers:
                order.append(rid)
                papers[rid] = []
                names[rid] = None
                seen_ids[rid] = set()
            display = (row["display_name"] or "").strip()
            if display and names[rid] is None:
                names[rid] = display
            try:
                record = PaperRecord(
                    paper_id=(row["paper_id"] or "").strip(),
                    year=_parse_int(row["year"], "year", line),
                    citations=_parse_int(row["citations"], "citations", line),
                    n_authors=_parse_int(row["n_authors"], "n_authors", line),
                )
            except ValidationError as exc:
                raise ValidationError(f"line {line}: {exc}") from None
            if record.paper_id in seen_ids[rid]:
                raise ValidationError(
                    f"line {line}: duplicate paper_id {record.paper_id!r} "
                    f"for researcher {rid!r}")
            seen_ids[rid].add(record.paper_id)
            papers[rid].append(record)
    out = []
    for rid in order:
        try:
            out.append(ResearcherProfile(rid, names[rid], tuple(papers[rid])))
        except ValidationError as exc:
            raise ValidationError(f"{path}: {exc}") from None
    return out


def _read_profiles_json(path) -> list[ResearcherProfile]:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"{path}: invalid JSON: {exc}") from None
    if not isinstance(data, list):
        raise ValidationError(f"{path}: expected a top-level array of profiles")
    profiles = []
    for i, entry in enumerate(data):
        where = f"profile {i}"
        if not isinstance(entry, dict):
            raise ValidationError(f"{path}: {where}: expected an object")
        rid = entry.get("researcher_id")
        if not isinstance(rid, str) or not rid:
            raise ValidationError(f"{path}: {where}: researcher_id missing or empty")
        display = entry.get("display_name")
        if display is not None and not isinstance(display, str):
            raise ValidationError(f"{path}: {where}: display_name must be a string")
        raw_papers = entry.get("papers")
        if not isinstance(raw_papers, list):
            raise ValidationError(f"{path}: {where}: papers must be an array")
        records = []
        for j, raw in enumerate(raw_papers):
            try:
                records.append(_paper_from_json(raw))
            except ValidationError as exc:
                raise ValidationError(
                    f"{path}: {where} ({rid!r}), paper {j}: {exc}") from None
        try:
            profiles.append(ResearcherProfile(rid, display or None, tuple(records)))
        except ValidationError as exc:
            raise ValidationError(f"{path}: {where}: {exc}") from None
    return profiles


def _paper_from_json(raw) -> PaperRecord:
    if not isinstance(raw, dict):
        raise ValidationError("expected an object")
    for key in ("paper_id", "year", "citations", "n_authors"):
        if key not in raw:
            raise ValidationError(f"missing field {key!r}")
    yearly = raw.get("yearly_citations")
    if yearly is not None:
        if not isinstance(yearly, list) or not all(
                isinstance(p, (list, tuple)) and len(p) == 2 for p in yearly):
            raise ValidationError("yearly_citations must be a list of [year, count] pairs")
        yearly = tuple((int(y), int(n)) for y, n in yearly)
    return PaperRecord(
        paper_id=str(raw["paper_id"]),
        year=int(raw["year"]),
        citations=int(raw["citations"]),
        n_authors=int(raw["n_authors"]),
        yearly_citations=yearly,
    )


def ingest_citations(path, yearly_path=None) -> CitationCorpus:
    """Read a citation corpus CSV, optionally joining a per-year companion.

    Companion rows referring to unknown paper_ids are an error; papers with
    no companion rows simply carry no yearly history.
    """
    items: list[PaperRecord] = []
    index: dict[str, int] = {}
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        _check_header(reader.fieldnames, CITATION_CSV_FIELDS, path)
        for row in reader:
            line = reader.line_num
            pid = (row["paper_id"] or "").strip()
            if not pid:
                raise ValidationError(f"line {line}: paper_id is empty")
            if pid in index:
                raise ValidationError(f"line {line}: duplicate paper_id {pid!r}")
            try:
                record = PaperRecord(
                    paper_id=pid,
                    year=_parse_int(row["year"], "year", line),
                    citations=_parse_int(row["citations"], "citations", line),
                    n_authors=1,
                )
            except ValidationError as exc:
                raise ValidationError(f"line {line}: {exc}") from None
            index[pid] = len(items)
            items.append(record)
    if not items:
        raise ValidationError(f"{path}: no records")

    if yearly_path is not None:
        per_paper: dict[str, list[tuple[int, int]]] = {}
        with open(yearly_path, newline="", encoding="utf-8") as fh:
            reader = csv.DictReader(fh)
            _check_header(reader.fieldnames, YEARLY_CSV_FIELDS, yearly_path)
            for row in reader:
                line = reader.line_num
                pid = (row["paper_id"] or "").strip()
                if pid not in index:
                    raise ValidationError(
                        f"{yearly_path}: line {line}: unknown paper_id {pid!r}")
                per_paper.setdefault(pid, []).append((
                    _parse_int(row["cite_year"], "cite_year", line),
                    _parse_int(row["count"], "count", line),
                ))
        for pid, history in per_paper.items():
            i = index[pid]
            try:
                items[i] = replace(items[i], yearly_citations=tuple(history))
            except ValidationError as exc:
                raise ValidationError(
                    f"{yearly_path}: paper {pid!r}: {exc}") from None
        # uncited papers have no companion rows; their history is trivially empty
        for i, item in enumerate(items):
            if item.yearly_citations is None and item.citations == 0:
                items[i] = replace(item, yearly_citations=())

    return CitationCorpus(tuple(items))


# ---------------------------------------------------------------------------
# serialization (round-trip compatible with the readers above)
# ---------------------------------------------------------------------------

def write_profiles(corpus: Corpus, path, format: str | None = None) -> None:
    """Write profiles as CSV or JSON.

    CSV cannot carry yearly_citations; use JSON for full fidelity.
    """
    fmt = format or infer_format(path)
    if fmt == "csv":
        dump = dump_profiles_csv
    elif fmt == "json":
        dump = dump_profiles_json
    else:
        raise ValidationError(f"unknown format {fmt!r} (expected csv or json)")
    with open(path, "w", newline="", encoding="utf-8") as fh:
        dump(corpus, fh)


def dump_profiles_csv(corpus: Corpus, fh) -> None:
    writer = csv.writer(fh)
    writer.writerow(PROFILE_CSV_FIELDS)
    for profile in corpus.profiles:
        display = profile.display_name or ""
        for paper in profile.papers:
            writer.writerow([profile.researcher_id, display, paper.paper_id,
                             paper.year, paper.citations, paper.n_authors])


def dump_profiles_json(corpus: Corpus, fh) -> None:
    data = []
    for profile in corpus.profiles:
        papers = []
        for paper in profile.papers:
            entry = {
                "paper_id": paper.paper_id,
                "year": paper.year,
                "citations": paper.citations,
                "n_authors": paper.n_authors,
            }
            if paper.yearly_citations is not None:
                entry["yearly_citations"] = [list(p) for p in paper.yearly_citations]
            papers.append(entry)
        data.append({
            "researcher_id": profile.researcher_id,
            "display_name": profile.display_name,
            "papers": papers,
        })
    json.dump(data, fh, indent=2)
    fh.write("\n")
