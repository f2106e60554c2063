"""Word vectors and averaged-unigram text embeddings with cosine distance.

A text embedding is the arithmetic mean (with multiplicity) of the
vectors of its in-vocabulary EMBED-pipeline tokens. Vectors are stored
as float32 (what the binary snapshot holds); all arithmetic runs in
float64 on those stored values so in-memory and reloaded snapshots rank
identically.
"""

from __future__ import annotations

import hashlib
import struct
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .corpus import Paper, doc_text
from .errors import CorruptSnapshotError, InvalidEmbeddingError, VectorFormatError
from .textproc import Pipeline, tokenize

DEFAULT_DIM = 400
MAGIC = b"EMB1"


@dataclass
class VectorStore:
    dim: int
    vocab: dict[str, np.ndarray]  # word -> float32 vector of length dim
    duplicate_count: int = 0


@dataclass(frozen=True)
class Embedding:
    vec: np.ndarray  # float32, length dim
    valid: bool


def load_vectors(path: str | Path) -> VectorStore:
    """Load the textual vector format: `<count> <dim>` header, then
    `<word> <c1> ... <cdim>` per line. Duplicate words: last one wins."""
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines:
        raise VectorFormatError("empty file")
    header = lines[0].split()
    if len(header) != 2:
        raise VectorFormatError("header must be '<count> <dim>'", line=1)
    try:
        count, dim = int(header[0]), int(header[1])
    except ValueError as exc:
        raise VectorFormatError("header must be two integers", line=1) from exc
    if count < 0 or dim < 1:
        raise VectorFormatError("header counts out of range", line=1)
    body = [line for line in lines[1:] if line.strip()]
    if len(body) != count:
        raise VectorFormatError(f"header promises {count} records, found {len(body)}")
    vocab: dict[str, np.ndarray] = {}
    duplicates = 0
    for offset, line in enumerate(body, start=2):
        fields = line.split()
        if len(fields) != dim + 1:
            raise VectorFormatError(
                f"expected {dim} components, found {len(fields) - 1}", line=offset
            )
        word = fields[0]
        try:
            vec = np.array([float(f) for f in fields[1:]], dtype=np.float32)
        except ValueError as exc:
            raise VectorFormatError("non-numeric component", line=offset) from exc
        if not np.isfinite(vec).all():
            raise VectorFormatError("non-finite component", line=offset)
        if word in vocab:
            duplicates += 1
        vocab[word] = vec
    return VectorStore(dim=dim, vocab=vocab, duplicate_count=duplicates)


def save_vectors(store: VectorStore, path: str | Path) -> None:
    """Write the textual vector format (words sorted for determinism)."""
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(f"{len(store.vocab)} {store.dim}\n")
        for word in sorted(store.vocab):
            components = " ".join(repr(float(c)) for c in store.vocab[word])
            handle.write(f"{word} {components}\n")


def synth_vectors(vocab: Iterable[str], dim: int, seed: int) -> VectorStore:
    """Deterministic stand-in for a trained model: each word's vector is
    standard-normal from a PCG64 generator seeded with
    sha256("<seed>\\x00<word utf-8>"), identical on every platform."""
    if dim < 1:
        raise ValueError("dim must be >= 1")
    words: dict[str, np.ndarray] = {}
    for word in sorted(set(vocab)):
        digest = hashlib.sha256(str(seed).encode() + b"\x00" + word.encode("utf-8")).digest()
        gen = np.random.Generator(np.random.PCG64(int.from_bytes(digest[:16], "little")))
        words[word] = gen.standard_normal(dim).astype(np.float32)
    return VectorStore(dim=dim, vocab=words)


def embed_text(store: VectorStore, text: str) -> Embedding:
    """Mean of in-vocabulary token vectors; invalid if every token is OOV."""
    total = np.zeros(store.dim, dtype=np.float64)
    hits = 0
    for token in tokenize(text, Pipeline.EMBED):
        vec = store.vocab.get(token)
        if vec is not None:
            total += vec
            hits += 1
    if hits == 0:
        return Embedding(vec=np.zeros(store.dim, dtype=np.float32), valid=False)
    return Embedding(vec=(total / hits).astype(np.float32), valid=True)


def embed_corpus(store: VectorStore, corpus: Sequence[Paper]) -> list[Embedding]:
    """Ordinal-aligned document embeddings over title+abstract+body."""
    return [embed_text(store, doc_text(paper)) for paper in corpus]


def cosine_distance(u: Embedding, v: Embedding) -> float:
    """1 - cos(u, v), in [0, 2]; raises on invalid or zero-norm input."""
    if not (u.valid and v.valid):
        raise InvalidEmbeddingError("cosine distance of an invalid embedding")
    a = u.vec.astype(np.float64)
    b = v.vec.astype(np.float64)
    na = np.linalg.norm(a)
    nb = np.linalg.norm(b)
    if na == 0.0 or nb == 0.0:
        raise InvalidEmbeddingError("cosine distance of a zero-norm embedding")
    return float(1.0 - np.dot(a, b) / (na * nb))


def dump_embeddings(ids: Sequence[str], embeddings: Sequence[Embedding], dim: int) -> bytes:
    """Binary embedding records: per record a length-prefixed UTF-8 id,
    a validity byte, then dim little-endian float32 components."""
    if len(ids) != len(embeddings):
        raise ValueError("ids and embeddings differ in length")
    buf = bytearray(MAGIC)
    buf += struct.pack("<II", len(ids), dim)
    for name, emb in zip(ids, embeddings):
        raw = name.encode("utf-8")
        buf += struct.pack("<I", len(raw))
        buf += raw
        buf += struct.pack("B", 1 if emb.valid else 0)
        buf += emb.vec.astype("<f4").tobytes()
    return bytes(buf)


def parse_embeddings(data: bytes, filename: str = "embeddings") -> tuple[list[str], list[Embedding], int]:
    pos = 0

    def take(count: int) -> bytes:
        nonlocal pos
        if pos + count > len(data):
            raise CorruptSnapshotError("truncated section", filename)
        chunk = data[pos : pos + count]
        pos += count
        return chunk

    if take(4) != MAGIC:
        raise CorruptSnapshotError("bad magic", filename)
    count, dim = struct.unpack("<II", take(8))
    ids: list[str] = []
    embeddings: list[Embedding] = []
    for _ in range(count):
        (name_len,) = struct.unpack("<I", take(4))
        ids.append(take(name_len).decode("utf-8"))
        valid = take(1) != b"\x00"
        vec = np.frombuffer(take(4 * dim), dtype="<f4").astype(np.float32)
        embeddings.append(Embedding(vec=vec, valid=valid))
    if pos != len(data):
        raise CorruptSnapshotError("trailing bytes", filename)
    return ids, embeddings, dim


def store_to_embeddings(store: VectorStore) -> tuple[list[str], list[Embedding]]:
    words = sorted(store.vocab)
    return words, [Embedding(vec=store.vocab[w], valid=True) for w in words]


def embeddings_to_store(ids: Sequence[str], embeddings: Sequence[Embedding], dim: int) -> VectorStore:
    return VectorStore(dim=dim, vocab={w: e.vec for w, e in zip(ids, embeddings)})
