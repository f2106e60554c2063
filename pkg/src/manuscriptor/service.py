"""HTTP facade over the engine, corpus, and library.

Every error response is a single `{code, message, detail?}` object;
codes: BadFilter, InvalidSource, UnknownPaper, NotFound, Conflict,
Corrupt, Internal. Messages never contain filesystem paths. The
snapshot loads at startup and can be swapped atomically via
POST /api/admin/reload; per-user libraries are selected with the
`user` header and persisted as one JSONL file each.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Literal

from fastapi import FastAPI, Header, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from .engine import DEFAULT_HIGHLIGHT_COUNT, Engine, RESULT_CAP, RankingSource
from .errors import (
    CorruptSnapshotError,
    DoiNotFoundError,
    DuplicateMarkerError,
    FilterSyntaxError,
    InvalidEmbeddingError,
    InvalidSourceError,
    MalformedDoiError,
    ManuscriptorError,
    NotFoundError,
    ResolverUnavailableError,
    UnknownPaperError,
)
from .library import FixtureResolver, Library, MetadataResolver, resolve_doi
from .snapshot import Snapshot, load_snapshot
from .textproc import body_text

USER_RE = re.compile(r"^[A-Za-z0-9_-]{1,64}$")


class SnapshotNotLoadedError(ManuscriptorError):
    """An engine-backed endpoint was hit before a snapshot was loaded."""


@dataclass
class AppState:
    snapshot_dir: Path | None = None
    library_dir: Path | None = None
    ui_dir: Path | None = None
    resolver: MetadataResolver | None = None
    snapshot: Snapshot | None = None
    engine: Engine | None = None
    libraries: dict[str, Library] = field(default_factory=dict)

    def load(self) -> None:
        """Load (or reload) the snapshot; readers swap to it atomically."""
        snapshot = load_snapshot(self.snapshot_dir)
        engine = Engine(snapshot)
        self.snapshot, self.engine = snapshot, engine
        self.libraries.clear()

    def library_for(self, user: str) -> Library:
        if not USER_RE.match(user):
            raise InvalidSourceError("invalid user header")
        library = self.libraries.get(user)
        if library is None:
            library = Library(known_paper_ids=self._knows_paper)
            if self.library_dir is not None:
                path = self.library_dir / f"{user}.jsonl"
                if path.is_file():
                    library.load(path)
            self.libraries[user] = library
        return library

    def persist_library(self, user: str) -> None:
        if self.library_dir is not None:
            self.library_dir.mkdir(parents=True, exist_ok=True)
            self.libraries[user].save(self.library_dir / f"{user}.jsonl")

    def _knows_paper(self, paper_id: str) -> bool:
        return self.snapshot is not None and paper_id in self.snapshot.ordinal_by_id


class SourceModel(BaseModel):
    kind: Literal["text", "paper"]
    text: str | None = None
    id: str | None = None

    def to_ranking_source(self) -> RankingSource:
        if self.kind == "text":
            if self.text is None:
                raise InvalidSourceError("text source requires a 'text' field")
            return RankingSource.from_text(self.text)
        if self.id is None:
            raise InvalidSourceError("paper source requires an 'id' field")
        return RankingSource.from_paper(self.id)


class SearchRequest(BaseModel):
    filter: str = ""
    source: SourceModel
    limit: int = Field(default=RESULT_CAP, ge=1, le=RESULT_CAP)
    offset: int = Field(default=0, ge=0)


class HighlightRequest(BaseModel):
    source: SourceModel
    k: int = Field(default=DEFAULT_HIGHLIGHT_COUNT, ge=1)


class LibraryAddRequest(BaseModel):
    paper_id: str | None = None
    doi: str | None = None


class CiteRequest(BaseModel):
    marker_id: str = Field(min_length=1)


_ERROR_MAP: list[tuple[type[Exception], int, str]] = [
    (SnapshotNotLoadedError, 503, "Internal"),
    (FilterSyntaxError, 400, "BadFilter"),
    (MalformedDoiError, 400, "InvalidSource"),
    (InvalidSourceError, 400, "InvalidSource"),
    (InvalidEmbeddingError, 400, "InvalidSource"),
    (UnknownPaperError, 404, "UnknownPaper"),
    (DoiNotFoundError, 404, "NotFound"),
    (NotFoundError, 404, "NotFound"),
    (DuplicateMarkerError, 409, "Conflict"),
    (CorruptSnapshotError, 500, "Corrupt"),
    (ResolverUnavailableError, 503, "Internal"),
]


def _error_response(status: int, code: str, message: str, detail=None) -> JSONResponse:
    body = {"code": code, "message": message}
    if detail is not None:
        body["detail"] = detail
    return JSONResponse(status_code=status, content=body)


def _entry_json(entry) -> dict:
    return {
        "entry_id": entry.entry_id,
        "paper_id": entry.paper_id,
        "metadata": entry.metadata,
        "added_at": entry.added_at,
        "cite_keys": sorted(entry.cite_keys),
        "cited": entry.cited,
    }


def _hit_json(hit) -> dict:
    return {
        "paper_id": hit.paper_id,
        "distance": hit.distance,
        "title": hit.title,
        "authors": list(hit.authors),
        "journal": hit.journal,
        "year": hit.year,
        "abstract": hit.abstract,
    }


def create_app(state: AppState) -> FastAPI:
    app = FastAPI(title="manuscriptor", docs_url=None, redoc_url=None)
    app.state.manuscriptor = state

    @app.exception_handler(ManuscriptorError)
    async def handle_domain_error(request: Request, exc: ManuscriptorError):
        for klass, status, code in _ERROR_MAP:
            if isinstance(exc, klass):
                detail = None
                if isinstance(exc, FilterSyntaxError) and exc.group is not None:
                    detail = {"group": exc.group}
                return _error_response(status, code, str(exc), detail)
        return _error_response(500, "Internal", str(exc))

    @app.exception_handler(RequestValidationError)
    async def handle_validation_error(request: Request, exc: RequestValidationError):
        detail = [
            {"loc": [str(p) for p in err.get("loc", [])], "msg": err.get("msg", "")}
            for err in exc.errors()
        ]
        return _error_response(400, "InvalidSource", "request does not match schema", detail)

    def engine_or_unavailable() -> Engine:
        if state.engine is None:
            raise SnapshotNotLoadedError("snapshot not loaded")
        return state.engine

    @app.post("/api/search")
    def search(request: SearchRequest):
        engine = engine_or_unavailable()
        hits = engine.search(
            request.filter,
            request.source.to_ranking_source(),
            limit=request.limit,
            offset=request.offset,
        )
        return {"results": [_hit_json(h) for h in hits]}

    @app.get("/api/papers/{paper_id}")
    def get_paper(paper_id: str):
        engine_or_unavailable()
        snapshot = state.snapshot
        ordinal = snapshot.ordinal_by_id.get(paper_id)
        if ordinal is None:
            raise NotFoundError(f"unknown paper id: {paper_id!r}")
        paper = snapshot.papers[ordinal]
        sentences = snapshot.sentences[ordinal]
        return {
            "id": paper.id,
            "title": paper.title,
            "authors": list(paper.authors),
            "journal": paper.journal,
            "year": paper.year,
            "abstract": paper.abstract,
            "body": list(paper.body),
            "body_text": body_text(list(paper.body)),
            "doi": paper.doi,
            "sentences": [
                {"ordinal": s.ordinal, "span": list(s.char_span), "text": s.text}
                for s in sentences
            ],
        }

    @app.post("/api/papers/{paper_id}/highlight")
    def highlight(paper_id: str, request: HighlightRequest):
        engine = engine_or_unavailable()
        if paper_id not in state.snapshot.ordinal_by_id:
            raise NotFoundError(f"unknown paper id: {paper_id!r}")
        highlights = engine.highlight(paper_id, request.source.to_ranking_source(), k=request.k)
        return {
            "paper_id": paper_id,
            "highlights": [
                {"ordinal": h.ordinal, "span": list(h.char_span), "distance": h.distance}
                for h in highlights
            ],
        }

    @app.get("/api/library")
    def list_library(cited_only: bool = False, user: str = Header(default="default")):
        library = state.library_for(user)
        return {"entries": [_entry_json(e) for e in library.list_entries(cited_only)]}

    @app.post("/api/library")
    def add_to_library(request: LibraryAddRequest, user: str = Header(default="default")):
        if (request.paper_id is None) == (request.doi is None):
            raise InvalidSourceError("provide exactly one of paper_id or doi")
        library = state.library_for(user)
        before = len(library.entries)
        if request.paper_id is not None:
            entry = library.add_entry(paper_id=request.paper_id)
        else:
            resolver = state.resolver or FixtureResolver({})
            entry = library.add_entry(metadata=resolve_doi(request.doi, resolver))
        created = len(library.entries) > before
        if created:
            state.persist_library(user)
        return JSONResponse(status_code=201 if created else 200, content=_entry_json(entry))

    @app.post("/api/library/{entry_id}/cite")
    def cite(entry_id: str, request: CiteRequest, user: str = Header(default="default")):
        library = state.library_for(user)
        entry = library.cite(entry_id, request.marker_id)
        state.persist_library(user)
        return JSONResponse(status_code=201, content=_entry_json(entry))

    @app.delete("/api/library/{entry_id}")
    def remove_entry(entry_id: str, user: str = Header(default="default")):
        library = state.library_for(user)
        dangling = library.remove_entry(entry_id)
        state.persist_library(user)
        return {"removed": entry_id, "dangling_markers": dangling}

    @app.delete("/api/markers/{marker_id}")
    def remove_marker(marker_id: str, user: str = Header(default="default")):
        library = state.library_for(user)
        library.remove_marker(marker_id)
        state.persist_library(user)
        return {"removed": marker_id}

    @app.get("/api/health")
    def health():
        if state.snapshot is None:
            return _error_response(503, "Internal", "snapshot not loaded")
        return {
            "status": "ok",
            "corpus_size": state.snapshot.doc_count,
            "dim": state.snapshot.dim,
            "snapshot_hash": state.snapshot.manifest_hash,
        }

    @app.post("/api/admin/reload")
    def reload_snapshot():
        if state.snapshot_dir is None:
            raise ManuscriptorError("no snapshot directory configured")
        state.load()
        return {
            "status": "reloaded",
            "corpus_size": state.snapshot.doc_count,
            "snapshot_hash": state.snapshot.manifest_hash,
        }

    if state.ui_dir is not None:
        app.mount("/", StaticFiles(directory=state.ui_dir, html=True), name="ui")

    return app
