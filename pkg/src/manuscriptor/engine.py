"""Two-step search: Boolean filter selects candidates, cosine distance to
the ranking source orders them. Also ranks the sentences of one paper
for highlighting.

Ordering contract everywhere: ascending distance, ties broken by paper
id (or sentence ordinal) ascending. Papers whose embedding is invalid
never appear in results; when the ranking source is a paper, that paper
is excluded from its own results.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .boolquery import parse_filter
from .embedder import Embedding, embed_text
from .errors import InvalidSourceError, UnknownPaperError
from .invindex import filter_docs
from .snapshot import Snapshot
from .textproc import Sentence

RESULT_CAP = 1000
DEFAULT_HIGHLIGHT_COUNT = 20


@dataclass(frozen=True)
class RankingSource:
    """What similarity is measured against: free text or an existing paper."""

    kind: str  # "text" | "paper"
    value: str

    @staticmethod
    def from_text(text: str) -> "RankingSource":
        return RankingSource(kind="text", value=text)

    @staticmethod
    def from_paper(paper_id: str) -> "RankingSource":
        return RankingSource(kind="paper", value=paper_id)


@dataclass(frozen=True)
class SearchHit:
    paper_id: str
    distance: float
    title: str
    authors: tuple[str, ...]
    journal: str
    year: int
    abstract: str


@dataclass(frozen=True)
class SentenceHighlight:
    ordinal: int
    char_span: tuple[int, int]
    distance: float


class Engine:
    def __init__(self, snapshot: Snapshot, doc_embeddings: list[Embedding] | None = None):
        self.snapshot = snapshot
        embeddings = doc_embeddings if doc_embeddings is not None else snapshot.doc_embeddings
        if len(embeddings) != snapshot.doc_count:
            raise ValueError("document embeddings misaligned with corpus")
        if embeddings:
            self._matrix = np.stack([e.vec for e in embeddings]).astype(np.float64)
            self._valid = np.array([e.valid for e in embeddings])
        else:
            self._matrix = np.zeros((0, snapshot.dim), dtype=np.float64)
            self._valid = np.zeros(0, dtype=bool)
        norms = np.linalg.norm(self._matrix, axis=1)
        self._valid &= norms > 0.0
        self._norms = norms
        self._ids = np.array(snapshot.index.doc_ids, dtype=object)

    def _resolve_source(self, source: RankingSource) -> tuple[Embedding, int | None]:
        if source.kind == "paper":
            ordinal = self.snapshot.ordinal_by_id.get(source.value)
            if ordinal is None:
                raise UnknownPaperError(source.value)
            embedding = self.snapshot.doc_embeddings[ordinal]
            if not embedding.valid:
                raise InvalidSourceError(f"paper {source.value!r} has no valid embedding")
            return embedding, ordinal
        embedding = embed_text(self.snapshot.vectors, source.value)
        if not embedding.valid:
            raise InvalidSourceError("ranking source has no in-vocabulary tokens")
        return embedding, None

    def _ranked_ordinals(self, filter_text: str, source: RankingSource) -> tuple[np.ndarray, np.ndarray]:
        """All eligible candidates sorted by (distance, paper id); no cap."""
        embedding, exclude = self._resolve_source(source)
        candidates = filter_docs(self.snapshot.index, parse_filter(filter_text))
        candidates = candidates[self._valid[candidates]]
        if exclude is not None:
            candidates = candidates[candidates != exclude]
        if not len(candidates):
            return candidates, np.zeros(0)
        query = embedding.vec.astype(np.float64)
        sub = self._matrix[candidates]
        distances = 1.0 - (sub @ query) / (self._norms[candidates] * np.linalg.norm(query))
        order = np.lexsort((self._ids[candidates], distances))
        return candidates[order], distances[order]

    def search(
        self,
        filter_text: str,
        source: RankingSource,
        limit: int = RESULT_CAP,
        offset: int = 0,
    ) -> list[SearchHit]:
        """Filtered nearest-neighbor search, capped at 1000 results.

        `offset`/`limit` page within the capped window.
        """
        if limit < 1:
            raise ValueError("limit must be >= 1")
        if offset < 0:
            raise ValueError("offset must be >= 0")
        ordinals, distances = self._ranked_ordinals(filter_text, source)
        window = min(len(ordinals), RESULT_CAP)
        stop = min(window, offset + min(limit, RESULT_CAP))
        hits = []
        for i in range(min(offset, window), stop):
            paper = self.snapshot.papers[int(ordinals[i])]
            hits.append(
                SearchHit(
                    paper_id=paper.id,
                    distance=float(distances[i]),
                    title=paper.title,
                    authors=paper.authors,
                    journal=paper.journal,
                    year=paper.year,
                    abstract=paper.abstract,
                )
            )
        return hits

    def highlight(
        self,
        paper_id: str,
        source: RankingSource,
        k: int = DEFAULT_HIGHLIGHT_COUNT,
    ) -> list[SentenceHighlight]:
        """The k sentences of one paper closest to the ranking source."""
        if k < 1:
            raise ValueError("k must be >= 1")
        ordinal = self.snapshot.ordinal_by_id.get(paper_id)
        if ordinal is None:
            raise UnknownPaperError(paper_id)
        embedding, _ = self._resolve_source(source)
        query = embedding.vec.astype(np.float64)
        query_norm = np.linalg.norm(query)

        kept: list[Sentence] = []
        vectors = []
        for sentence in self.snapshot.sentences[ordinal]:
            emb = embed_text(self.snapshot.vectors, sentence.text)
            if emb.valid:
                kept.append(sentence)
                vectors.append(emb.vec.astype(np.float64))
        if not kept:
            return []
        matrix = np.stack(vectors)
        norms = np.linalg.norm(matrix, axis=1)
        distances = 1.0 - (matrix @ query) / (norms * query_norm)
        ordinals = np.array([s.ordinal for s in kept])
        order = np.lexsort((ordinals, distances))[: min(k, len(kept))]
        return [
            SentenceHighlight(
                ordinal=int(ordinals[i]),
                char_span=kept[i].char_span,
                distance=float(distances[i]),
            )
            for i in order
        ]

    def subset_consistency_check(self, filter_text: str, source: RankingSource) -> bool:
        """Filtered ranking must equal the unfiltered ranking restricted to
        the filtered candidate set, in identical order."""
        filtered_ordinals, _ = self._ranked_ordinals(filter_text, source)
        all_ordinals, _ = self._ranked_ordinals("", source)
        member = set(filtered_ordinals.tolist())
        restricted = [o for o in all_ordinals.tolist() if o in member]
        return restricted == filtered_ordinals.tolist()
