"""User bibliography: saved papers, citation markers, DOI manual entry.

One entry per corpus paper or external DOI. An entry is "cited" while
at least one citation marker in the manuscript points at it; deleting
the marker clears the reference. Removing an entry is always allowed
and reports whatever markers it leaves dangling. The library persists
as one JSONL file written atomically (temp file + rename).
"""

from __future__ import annotations

import json
import os
import re
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Protocol

import httpx

from .errors import (
    DoiNotFoundError,
    DuplicateMarkerError,
    MalformedDoiError,
    NotFoundError,
    ResolverUnavailableError,
    UnknownPaperError,
)

DOI_RE = re.compile(r"^10\.\d{4,9}/\S+$")


@dataclass
class LibraryEntry:
    entry_id: str
    added_at: float
    paper_id: str | None = None
    metadata: dict | None = None  # title/authors/journal/year for DOI entries
    cite_keys: set[str] = field(default_factory=set)

    @property
    def cited(self) -> bool:
        return bool(self.cite_keys)


class MetadataResolver(Protocol):
    def resolve(self, doi: str) -> dict: ...


class FixtureResolver:
    """Offline resolver backed by a doi -> metadata mapping (or JSON file)."""

    def __init__(self, source: dict | str | Path):
        if isinstance(source, (str, Path)):
            self.records = json.loads(Path(source).read_text(encoding="utf-8"))
        else:
            self.records = dict(source)

    def resolve(self, doi: str) -> dict:
        try:
            return dict(self.records[doi])
        except KeyError:
            raise DoiNotFoundError(f"no metadata for doi {doi!r}") from None


class HttpResolver:
    """Resolver against an HTTP metadata service.

    Contract: GET {base_url}/works/{doi} returns 200 with a JSON object
    carrying title (string), authors (array of strings), journal
    (string), and year (int); 404 means the DOI is unknown.
    """

    def __init__(self, base_url: str, client: httpx.Client | None = None, timeout: float = 10.0):
        self.base_url = base_url.rstrip("/")
        self.client = client or httpx.Client(timeout=timeout)

    def resolve(self, doi: str) -> dict:
        try:
            response = self.client.get(f"{self.base_url}/works/{doi}")
        except httpx.HTTPError as exc:
            raise ResolverUnavailableError(f"resolver request failed: {exc}") from exc
        if response.status_code == 404:
            raise DoiNotFoundError(f"no metadata for doi {doi!r}")
        if response.status_code != 200:
            raise ResolverUnavailableError(f"resolver returned {response.status_code}")
        payload = response.json()
        return {
            "title": payload.get("title", ""),
            "authors": list(payload.get("authors", [])),
            "journal": payload.get("journal", ""),
            "year": int(payload.get("year", 0)),
        }


def resolve_doi(doi: str, resolver: MetadataResolver) -> dict:
    """Validate the DOI shape, then ask the resolver for metadata."""
    if not DOI_RE.match(doi):
        raise MalformedDoiError(f"malformed doi: {doi!r}")
    metadata = resolver.resolve(doi)
    metadata["doi"] = doi
    return metadata


class Library:
    def __init__(
        self,
        known_paper_ids: Callable[[str], bool] | None = None,
        clock: Callable[[], float] = time.time,
    ):
        self._known = known_paper_ids or (lambda _: False)
        self._clock = clock
        self.entries: dict[str, LibraryEntry] = {}
        self.markers: dict[str, str] = {}  # marker_id -> entry_id

    def add_entry(self, paper_id: str | None = None, metadata: dict | None = None) -> LibraryEntry:
        """Save a corpus paper or resolved DOI metadata; idempotent."""
        if (paper_id is None) == (metadata is None):
            raise ValueError("provide exactly one of paper_id or metadata")
        if paper_id is not None:
            if not self._known(paper_id):
                raise UnknownPaperError(paper_id)
            entry_id = paper_id
        else:
            doi = metadata.get("doi")
            if not doi:
                raise ValueError("metadata must carry a doi")
            entry_id = f"doi:{doi}"
        existing = self.entries.get(entry_id)
        if existing is not None:
            return existing
        entry = LibraryEntry(
            entry_id=entry_id,
            added_at=self._clock(),
            paper_id=paper_id,
            metadata=dict(metadata) if metadata is not None else None,
        )
        self.entries[entry_id] = entry
        return entry

    def cite(self, entry_id: str, marker_id: str) -> LibraryEntry:
        """Register a citation marker; auto-adds a corpus paper if needed."""
        if marker_id in self.markers:
            raise DuplicateMarkerError(marker_id)
        entry = self.entries.get(entry_id)
        if entry is None:
            entry = self.add_entry(paper_id=entry_id)
        entry.cite_keys.add(marker_id)
        self.markers[marker_id] = entry.entry_id
        return entry

    def remove_marker(self, marker_id: str) -> None:
        entry_id = self.markers.pop(marker_id, None)
        if entry_id is None:
            raise NotFoundError(f"unknown citation marker: {marker_id!r}")
        entry = self.entries.get(entry_id)
        if entry is not None:
            entry.cite_keys.discard(marker_id)

    def list_entries(self, cited_only: bool = False) -> list[LibraryEntry]:
        entries = sorted(self.entries.values(), key=lambda e: (e.added_at, e.entry_id))
        if cited_only:
            entries = [e for e in entries if e.cited]
        return entries

    def remove_entry(self, entry_id: str) -> list[str]:
        """Delete an entry; returns the marker ids it leaves dangling."""
        entry = self.entries.pop(entry_id, None)
        if entry is None:
            raise NotFoundError(f"unknown library entry: {entry_id!r}")
        dangling = sorted(entry.cite_keys)
        for marker_id in dangling:
            self.markers.pop(marker_id, None)
        return dangling

    def save(self, path: str | Path) -> None:
        """Atomic JSONL write: one record per entry."""
        path = Path(path)
        lines = []
        for entry in self.list_entries():
            record = {
                "entry_id": entry.entry_id,
                "added_at": entry.added_at,
                "paper_id": entry.paper_id,
                "metadata": entry.metadata,
                "cite_keys": sorted(entry.cite_keys),
            }
            lines.append(json.dumps(record, sort_keys=True, ensure_ascii=False))
        tmp = path.with_suffix(path.suffix + ".tmp")
        tmp.write_text("".join(line + "\n" for line in lines), encoding="utf-8")
        os.replace(tmp, path)

    def load(self, path: str | Path) -> None:
        self.entries.clear()
        self.markers.clear()
        for line in Path(path).read_text(encoding="utf-8").splitlines():
            if not line.strip():
                continue
            record = json.loads(line)
            entry = LibraryEntry(
                entry_id=record["entry_id"],
                added_at=record["added_at"],
                paper_id=record.get("paper_id"),
                metadata=record.get("metadata"),
                cite_keys=set(record.get("cite_keys", [])),
            )
            self.entries[entry.entry_id] = entry
            for marker_id in entry.cite_keys:
                self.markers[marker_id] = entry.entry_id
