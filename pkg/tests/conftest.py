import numpy as np
import pytest

from manuscriptor.corpus import Paper, doc_text, ingest
from manuscriptor.embedder import synth_vectors
from manuscriptor.snapshot import build_snapshot, load_snapshot
from manuscriptor.textproc import Pipeline, tokenize

from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parent.parent
SAMPLE_CORPUS = REPO_ROOT / "data" / "sample_corpus.jsonl"

_SYLLABLES = [
    "ba", "ce", "di", "fo", "gu", "ha", "je", "ki", "lo", "mu",
    "na", "pe", "qi", "ro", "su", "ta", "ve", "wi", "xo", "zu",
]


def make_word(rng: np.random.Generator) -> str:
    n = int(rng.integers(2, 4))
    return "".join(_SYLLABLES[int(rng.integers(len(_SYLLABLES)))] for _ in range(n))


def make_vocab(rng: np.random.Generator, size: int) -> list[str]:
    vocab: set[str] = set()
    while len(vocab) < size:
        vocab.add(make_word(rng))
    return sorted(vocab)


def make_corpus(
    rng: np.random.Generator,
    n_docs: int,
    vocab_size: int = 200,
    tokens_per_doc: tuple[int, int] = (10, 40),
) -> list[Paper]:
    """Random small corpus drawing words from a fresh pseudo-vocabulary."""
    vocab = make_vocab(rng, vocab_size)
    papers = []
    for i in range(n_docs):
        count = int(rng.integers(*tokens_per_doc))
        words = [vocab[int(rng.integers(len(vocab)))] for _ in range(count)]
        title = " ".join(words[:3]).capitalize()
        abstract = " ".join(words[3 : max(3, count // 3)])
        body_words = words[max(3, count // 3) :]
        body = []
        if body_words:
            half = len(body_words) // 2 or len(body_words)
            body = [" ".join(body_words[:half]).capitalize() + "."]
            if body_words[half:]:
                body.append(" ".join(body_words[half:]).capitalize() + ".")
        papers.append(
            Paper(id=f"doc{i:04d}", title=title, abstract=abstract, body=tuple(body))
        )
    return papers


def corpus_surface_terms(papers: list[Paper]) -> list[str]:
    """Surface tokens usable as filter terms (normalize to one term)."""
    terms: set[str] = set()
    for paper in papers:
        for token in tokenize(doc_text(paper), Pipeline.EMBED):
            if len(tokenize(token, Pipeline.INDEX)) == 1:
                terms.add(token)
    return sorted(terms)


def make_filter(rng: np.random.Generator, surface_terms: list[str]) -> str:
    """Random parseable filter over the corpus vocabulary."""
    groups = []
    for _ in range(int(rng.integers(1, 5))):
        alt_count = int(rng.integers(1, 4))
        alts = []
        for _ in range(alt_count):
            if surface_terms and rng.random() < 0.9:
                alts.append(surface_terms[int(rng.integers(len(surface_terms)))])
            else:
                alts.append("zzznotintheindex")
        group = "|".join(alts)
        if rng.random() < 0.3:
            group = "!" + group
        groups.append(group)
    return " ".join(groups)


@pytest.fixture(scope="session")
def sample_papers():
    return ingest(SAMPLE_CORPUS)


@pytest.fixture(scope="session")
def sample_store(sample_papers):
    vocab: set[str] = set()
    for paper in sample_papers:
        vocab.update(tokenize(doc_text(paper), Pipeline.EMBED))
    return synth_vectors(vocab, dim=400, seed=42)


@pytest.fixture(scope="session")
def sample_snapshot(sample_papers, sample_store, tmp_path_factory):
    out = tmp_path_factory.mktemp("snapshot")
    build_snapshot(sample_papers, sample_store, out)
    return load_snapshot(out)
