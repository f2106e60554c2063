"""Paper records and corpus ingestion from line-delimited JSON.

One JSON object per line: `id` (required, unique), `title`, `authors`
(array of strings), `journal`, `year` (int, 0 = unknown), `abstract`,
`body` (array of paragraph strings), `doi` (optional).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import CorpusParseError, DuplicateIdError
from .textproc import body_text

YEAR_MIN, YEAR_MAX = 1500, 2100


@dataclass(frozen=True)
class Paper:
    id: str
    title: str = ""
    authors: tuple[str, ...] = ()
    journal: str = ""
    year: int = 0
    abstract: str = ""
    body: tuple[str, ...] = ()
    doi: str | None = None


def doc_text(paper: Paper) -> str:
    """The text a paper is indexed and embedded from: title+abstract+body."""
    return "\n".join((paper.title, paper.abstract, body_text(list(paper.body))))


def eval_text(paper: Paper) -> str:
    """Leakage-free variant for the parent-retrieval task: abstract omitted."""
    return "\n".join((paper.title, body_text(list(paper.body))))


def paper_to_record(paper: Paper) -> dict:
    record = {
        "id": paper.id,
        "title": paper.title,
        "authors": list(paper.authors),
        "journal": paper.journal,
        "year": paper.year,
        "abstract": paper.abstract,
        "body": list(paper.body),
    }
    if paper.doi is not None:
        record["doi"] = paper.doi
    return record


def _string_list(value, what: str, line: int) -> tuple[str, ...]:
    if not isinstance(value, list) or any(not isinstance(v, str) for v in value):
        raise CorpusParseError(f"{what} must be an array of strings", line)
    return tuple(value)


def paper_from_record(record: dict, line: int = 0) -> Paper:
    if not isinstance(record, dict):
        raise CorpusParseError("record is not an object", line)
    paper_id = record.get("id")
    if not isinstance(paper_id, str) or not paper_id:
        raise CorpusParseError("missing or empty id", line)
    year = record.get("year", 0)
    if not isinstance(year, int) or isinstance(year, bool):
        raise CorpusParseError("year must be an integer", line)
    if year != 0 and not YEAR_MIN <= year <= YEAR_MAX:
        raise CorpusParseError(f"year {year} outside [{YEAR_MIN}, {YEAR_MAX}]", line)
    title = record.get("title", "")
    journal = record.get("journal", "")
    abstract = record.get("abstract", "")
    for name, value in (("title", title), ("journal", journal), ("abstract", abstract)):
        if not isinstance(value, str):
            raise CorpusParseError(f"{name} must be a string", line)
    doi = record.get("doi")
    if doi is not None and not isinstance(doi, str):
        raise CorpusParseError("doi must be a string", line)
    return Paper(
        id=paper_id,
        title=title,
        authors=_string_list(record.get("authors", []), "authors", line),
        journal=journal,
        year=year,
        abstract=abstract,
        body=_string_list(record.get("body", []), "body", line),
        doi=doi,
    )


def ingest(path: str | Path) -> list[Paper]:
    """Read a corpus file, one paper per line, order preserved."""
    papers: list[Paper] = []
    seen: set[str] = set()
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusParseError(f"invalid JSON: {exc.msg}", line_no) from exc
            paper = paper_from_record(record, line_no)
            if paper.id in seen:
                raise DuplicateIdError(paper.id)
            seen.add(paper.id)
            papers.append(paper)
    return papers
