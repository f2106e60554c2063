"""Snapshot persistence: one directory tying papers, sentences, index,
document embeddings, and word vectors together under a hash manifest.

Files: papers.jsonl, sentences.jsonl, index.idx (IDX1), embeddings.emb
and vectors.emb (binary embedding records), manifest.txt with
`filename<TAB>sha256-hex` lines. Builds are byte-deterministic, so
identical inputs reproduce identical manifests.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from . import embedder, invindex
from .corpus import Paper, paper_from_record, paper_to_record
from .embedder import Embedding, VectorStore
from .errors import CorruptSnapshotError
from .invindex import InvertedIndex
from .textproc import Sentence, body_text, split_sentences

MANIFEST = "manifest.txt"
SECTION_FILES = ("papers.jsonl", "sentences.jsonl", "index.idx", "embeddings.emb", "vectors.emb")


@dataclass
class Snapshot:
    papers: list[Paper]
    index: InvertedIndex
    doc_embeddings: list[Embedding]
    sentences: list[list[Sentence]]  # ordinal-aligned with papers
    vectors: VectorStore
    manifest_hash: str

    def __post_init__(self) -> None:
        self.ordinal_by_id = {p.id: i for i, p in enumerate(self.papers)}
        if self.doc_embeddings:
            self.embedding_matrix = np.stack([e.vec for e in self.doc_embeddings])
            self.embedding_valid = np.array([e.valid for e in self.doc_embeddings])
        else:
            self.embedding_matrix = np.zeros((0, self.vectors.dim), dtype=np.float32)
            self.embedding_valid = np.zeros(0, dtype=bool)

    @property
    def doc_count(self) -> int:
        return len(self.papers)

    @property
    def dim(self) -> int:
        return self.vectors.dim


def _canonical_json(record: dict) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _sha256(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def build_snapshot(papers: Sequence[Paper], store: VectorStore, out_dir: str | Path) -> Path:
    """Write all sections plus the manifest; returns the directory."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    index = invindex.build_index(papers)
    embeddings = embedder.embed_corpus(store, papers)

    sections: dict[str, bytes] = {}
    sections["papers.jsonl"] = (
        "".join(_canonical_json(paper_to_record(p)) + "\n" for p in papers)
    ).encode("utf-8")
    sentence_lines = []
    for paper in papers:
        spans = [list(s.char_span) for s in split_sentences(list(paper.body), paper.id)]
        sentence_lines.append(_canonical_json({"id": paper.id, "spans": spans}) + "\n")
    sections["sentences.jsonl"] = "".join(sentence_lines).encode("utf-8")
    sections["index.idx"] = invindex.dump_index(index)
    sections["embeddings.emb"] = embedder.dump_embeddings(
        [p.id for p in papers], embeddings, store.dim
    )
    words, word_embeddings = embedder.store_to_embeddings(store)
    sections["vectors.emb"] = embedder.dump_embeddings(words, word_embeddings, store.dim)

    for name, data in sections.items():
        (out / name).write_bytes(data)
    manifest = "".join(f"{name}\t{_sha256(sections[name])}\n" for name in sorted(sections))
    (out / MANIFEST).write_text(manifest, encoding="utf-8")
    return out


def read_manifest(snapshot_dir: str | Path) -> dict[str, str]:
    path = Path(snapshot_dir) / MANIFEST
    if not path.is_file():
        raise CorruptSnapshotError("missing manifest", MANIFEST)
    entries: dict[str, str] = {}
    for line in path.read_text(encoding="utf-8").splitlines():
        if not line.strip():
            continue
        try:
            name, digest = line.split("\t")
        except ValueError:
            raise CorruptSnapshotError("malformed manifest line", MANIFEST) from None
        entries[name] = digest
    return entries


def manifest_hash(snapshot_dir: str | Path) -> str:
    """Aggregate identity of a snapshot: sha256 of the manifest bytes."""
    return _sha256((Path(snapshot_dir) / MANIFEST).read_bytes())


def load_snapshot(snapshot_dir: str | Path) -> Snapshot:
    """Verify the manifest and reconstruct the in-memory state."""
    snapshot_dir = Path(snapshot_dir)
    entries = read_manifest(snapshot_dir)
    for name in SECTION_FILES:
        if name not in entries:
            raise CorruptSnapshotError("not listed in manifest", name)
    data: dict[str, bytes] = {}
    for name, digest in entries.items():
        path = snapshot_dir / name
        if not path.is_file():
            raise CorruptSnapshotError("listed file missing", name)
        blob = path.read_bytes()
        if _sha256(blob) != digest:
            raise CorruptSnapshotError("hash mismatch", name)
        data[name] = blob

    papers = []
    for line_no, line in enumerate(data["papers.jsonl"].decode("utf-8").splitlines(), 1):
        papers.append(paper_from_record(json.loads(line), line_no))

    index = invindex.parse_index(data["index.idx"], "index.idx")
    emb_ids, doc_embeddings, emb_dim = embedder.parse_embeddings(
        data["embeddings.emb"], "embeddings.emb"
    )
    word_ids, word_embeddings, vec_dim = embedder.parse_embeddings(
        data["vectors.emb"], "vectors.emb"
    )
    if emb_dim != vec_dim:
        raise CorruptSnapshotError("embedding/vector dimension mismatch", "embeddings.emb")
    vectors = embedder.embeddings_to_store(word_ids, word_embeddings, vec_dim)

    paper_ids = [p.id for p in papers]
    if index.doc_ids != paper_ids:
        raise CorruptSnapshotError("document order differs from metadata", "index.idx")
    if emb_ids != paper_ids:
        raise CorruptSnapshotError("embedding order differs from metadata", "embeddings.emb")

    sentences: list[list[Sentence]] = []
    sentence_records = data["sentences.jsonl"].decode("utf-8").splitlines()
    if len(sentence_records) != len(papers):
        raise CorruptSnapshotError("sentence table length mismatch", "sentences.jsonl")
    for paper, line in zip(papers, sentence_records):
        record = json.loads(line)
        if record.get("id") != paper.id:
            raise CorruptSnapshotError("sentence table order differs", "sentences.jsonl")
        text = body_text(list(paper.body))
        row = []
        for ordinal, (lo, hi) in enumerate(record.get("spans", [])):
            if not (0 <= lo <= hi <= len(text)):
                raise CorruptSnapshotError("sentence span out of range", "sentences.jsonl")
            row.append(Sentence(paper.id, ordinal, text[lo:hi], (lo, hi)))
        sentences.append(row)

    return Snapshot(
        papers=papers,
        index=index,
        doc_embeddings=doc_embeddings,
        sentences=sentences,
        vectors=vectors,
        manifest_hash=manifest_hash(snapshot_dir),
    )
