"""Inverted unigram index: build, Boolean evaluation, binary snapshot.

Postings are presence-only sorted ordinal arrays. Filter evaluation
intersects the non-negated groups smallest-posting-first, then subtracts
the negated groups; all set algebra runs on numpy sorted arrays and the
result is always returned sorted ascending.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from functools import reduce
from pathlib import Path
from typing import Sequence

import numpy as np

from .boolquery import FilterQuery
from .corpus import Paper, doc_text
from .errors import CorruptSnapshotError, DuplicateIdError
from .textproc import Pipeline, tokenize

_EMPTY = np.empty(0, dtype=np.uint32)
MAGIC = b"IDX1"


@dataclass
class InvertedIndex:
    doc_ids: list[str]
    dictionary: dict[str, np.ndarray]  # term -> strictly ascending uint32 ordinals

    @property
    def doc_count(self) -> int:
        return len(self.doc_ids)

    def postings(self, term: str) -> np.ndarray:
        return self.dictionary.get(term, _EMPTY)


def build_index(corpus: Sequence[Paper]) -> InvertedIndex:
    """Index the IndexPipeline tokens of title+abstract+body per paper."""
    doc_ids: list[str] = []
    seen: set[str] = set()
    postings: dict[str, list[int]] = {}
    for ordinal, paper in enumerate(corpus):
        if paper.id in seen:
            raise DuplicateIdError(paper.id)
        seen.add(paper.id)
        doc_ids.append(paper.id)
        for term in set(tokenize(doc_text(paper), Pipeline.INDEX)):
            postings.setdefault(term, []).append(ordinal)
    dictionary = {
        term: np.asarray(ordinals, dtype=np.uint32)
        for term, ordinals in postings.items()
    }
    return InvertedIndex(doc_ids=doc_ids, dictionary=dictionary)


def filter_docs(index: InvertedIndex, query: FilterQuery) -> np.ndarray:
    """Ordinals of documents satisfying the filter, sorted ascending."""
    positive: list[np.ndarray] = []
    negative: list[np.ndarray] = []
    for clause in query.clauses:
        union = reduce(np.union1d, (index.postings(t) for t in clause.alternatives))
        (negative if clause.negated else positive).append(union)

    if positive:
        positive.sort(key=len)
        result = positive[0]
        for other in positive[1:]:
            if not len(result):
                break
            result = np.intersect1d(result, other, assume_unique=True)
    else:
        result = np.arange(index.doc_count, dtype=np.uint32)

    for excluded in negative:
        if not len(result):
            break
        result = np.setdiff1d(result, excluded, assume_unique=True)
    return result.astype(np.uint32, copy=False)


def _write_str(buf: bytearray, text: str) -> None:
    raw = text.encode("utf-8")
    buf += struct.pack("<I", len(raw))
    buf += raw


def dump_index(index: InvertedIndex) -> bytes:
    buf = bytearray(MAGIC)
    buf += struct.pack("<I", index.doc_count)
    for doc_id in index.doc_ids:
        _write_str(buf, doc_id)
    terms = sorted(index.dictionary)
    buf += struct.pack("<I", len(terms))
    for term in terms:
        _write_str(buf, term)
        ordinals = index.dictionary[term]
        buf += struct.pack("<I", len(ordinals))
        deltas = np.diff(ordinals, prepend=np.uint32(0)).astype(np.uint32)
        deltas[0] = ordinals[0]
        buf += deltas.astype("<u4").tobytes()
    return bytes(buf)


class _Reader:
    def __init__(self, data: bytes, filename: str):
        self.data = data
        self.pos = 0
        self.filename = filename

    def take(self, count: int) -> bytes:
        if self.pos + count > len(self.data):
            raise CorruptSnapshotError("truncated section", self.filename)
        chunk = self.data[self.pos : self.pos + count]
        self.pos += count
        return chunk

    def u32(self) -> int:
        return struct.unpack("<I", self.take(4))[0]

    def string(self) -> str:
        return self.take(self.u32()).decode("utf-8")

    def done(self) -> bool:
        return self.pos == len(self.data)


def parse_index(data: bytes, filename: str = "index") -> InvertedIndex:
    reader = _Reader(data, filename)
    if reader.take(4) != MAGIC:
        raise CorruptSnapshotError("bad magic", filename)
    doc_count = reader.u32()
    doc_ids = [reader.string() for _ in range(doc_count)]
    dictionary: dict[str, np.ndarray] = {}
    for _ in range(reader.u32()):
        term = reader.string()
        length = reader.u32()
        if length == 0:
            raise CorruptSnapshotError(f"empty posting list for {term!r}", filename)
        deltas = np.frombuffer(reader.take(4 * length), dtype="<u4")
        ordinals = np.cumsum(deltas.astype(np.uint64)).astype(np.uint32)
        if len(ordinals) > 1 and not (deltas[1:] >= 1).all():
            raise CorruptSnapshotError(f"non-ascending postings for {term!r}", filename)
        if ordinals[-1] >= doc_count:
            raise CorruptSnapshotError(f"posting ordinal out of range for {term!r}", filename)
        dictionary[term] = ordinals
    if not reader.done():
        raise CorruptSnapshotError("trailing bytes", filename)
    return InvertedIndex(doc_ids=doc_ids, dictionary=dictionary)


def save_index(index: InvertedIndex, path: str | Path) -> None:
    Path(path).write_bytes(dump_index(index))


def load_index(path: str | Path) -> InvertedIndex:
    path = Path(path)
    return parse_index(path.read_bytes(), path.name)
