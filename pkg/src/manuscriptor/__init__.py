"""manuscriptor: hybrid keyword-filter + embedding-ranking literature search."""

from .boolquery import FilterQuery, parse_filter, query_terms, render_filter
from .corpus import Paper, ingest
from .embedder import (
    Embedding,
    VectorStore,
    cosine_distance,
    embed_corpus,
    embed_text,
    load_vectors,
    synth_vectors,
)
from .engine import Engine, RankingSource, SearchHit, SentenceHighlight
from .evalharness import EvalReport, run_parent_retrieval
from .invindex import InvertedIndex, build_index, filter_docs
from .library import FixtureResolver, HttpResolver, Library, resolve_doi
from .snapshot import Snapshot, build_snapshot, load_snapshot
from .textproc import Pipeline, Sentence, split_sentences, tokenize

__all__ = [
    "Embedding",
    "Engine",
    "EvalReport",
    "FilterQuery",
    "FixtureResolver",
    "HttpResolver",
    "InvertedIndex",
    "Library",
    "Paper",
    "Pipeline",
    "RankingSource",
    "SearchHit",
    "Sentence",
    "SentenceHighlight",
    "Snapshot",
    "VectorStore",
    "build_index",
    "build_snapshot",
    "cosine_distance",
    "embed_corpus",
    "embed_text",
    "filter_docs",
    "ingest",
    "load_snapshot",
    "load_vectors",
    "parse_filter",
    "query_terms",
    "render_filter",
    "resolve_doi",
    "run_parent_retrieval",
    "split_sentences",
    "synth_vectors",
    "tokenize",
]

__version__ = "0.1.0"
