"""Independent reference implementations the fast paths are checked against.

Nothing here touches posting lists, numpy batch ranking, or the engine:
filters are evaluated per document against its token set, rankings are
full sorts over per-pair cosine distances, and the parent-retrieval
oracle recomputes mean embeddings with its own accumulation loop.
"""

from __future__ import annotations

import math

import numpy as np

from manuscriptor.boolquery import FilterQuery
from manuscriptor.corpus import Paper, doc_text, eval_text
from manuscriptor.embedder import VectorStore, cosine_distance, embed_text
from manuscriptor.engine import RESULT_CAP, RankingSource
from manuscriptor.textproc import Pipeline, tokenize


def doc_term_sets(papers: list[Paper]) -> list[set[str]]:
    return [set(tokenize(doc_text(p), Pipeline.INDEX)) for p in papers]


def naive_filter_scan(term_sets: list[set[str]], query: FilterQuery) -> list[int]:
    """Clause semantics applied document by document."""
    result = []
    for ordinal, terms in enumerate(term_sets):
        ok = True
        for clause in query.clauses:
            hit = any(term in terms for term in clause.alternatives)
            if clause.negated and hit:
                ok = False
                break
            if not clause.negated and not hit:
                ok = False
                break
        if ok:
            result.append(ordinal)
    return result


def full_sort_search(
    papers: list[Paper],
    store: VectorStore,
    query: FilterQuery,
    source: RankingSource,
    limit: int = RESULT_CAP,
) -> list[tuple[str, float]]:
    """Compute every candidate distance, stable-sort by (distance, id)."""
    term_sets = doc_term_sets(papers)
    allowed = set(naive_filter_scan(term_sets, query))
    if source.kind == "paper":
        src_ordinal = next(i for i, p in enumerate(papers) if p.id == source.value)
        src_emb = embed_text(store, doc_text(papers[src_ordinal]))
    else:
        src_ordinal = None
        src_emb = embed_text(store, source.value)
    scored = []
    for ordinal, paper in enumerate(papers):
        if ordinal not in allowed or ordinal == src_ordinal:
            continue
        emb = embed_text(store, doc_text(paper))
        if not emb.valid:
            continue
        scored.append((paper.id, cosine_distance(emb, src_emb)))
    scored.sort(key=lambda pair: (pair[1], pair[0]))
    return scored[: min(limit, RESULT_CAP)]


def full_sort_highlight(
    paper: Paper,
    store: VectorStore,
    source_embedding,
    k: int,
) -> list[tuple[int, float]]:
    """Embed every sentence, full sort by (distance, ordinal)."""
    from manuscriptor.textproc import split_sentences

    scored = []
    for sentence in split_sentences(list(paper.body), paper.id):
        emb = embed_text(store, sentence.text)
        if not emb.valid:
            continue
        scored.append((sentence.ordinal, cosine_distance(emb, source_embedding)))
    scored.sort(key=lambda pair: (pair[1], pair[0]))
    return scored[:k]


def _naive_mean_embedding(store: VectorStore, text: str) -> np.ndarray | None:
    """Mean of word vectors, accumulated by hand in float64."""
    total = [0.0] * store.dim
    count = 0
    for token in tokenize(text, Pipeline.EMBED):
        vec = store.vocab.get(token)
        if vec is None:
            continue
        for i in range(store.dim):
            total[i] += float(vec[i])
        count += 1
    if count == 0:
        return None
    return np.array([t / count for t in total], dtype=np.float64)


def _naive_cosine(u: np.ndarray, v: np.ndarray) -> float:
    num = float(np.dot(u, v))
    den = math.sqrt(float(np.dot(u, u))) * math.sqrt(float(np.dot(v, v)))
    return 1.0 - num / den


def naive_parent_retrieval(
    papers: list[Paper],
    store: VectorStore,
    sampled_ordinals: list[int],
    k: int,
) -> tuple[list[bool], list[bool], int]:
    """Brute-force rerun of the whole retrieval pipeline.

    Returns per-sample top-1 and top-k hit flags (for evaluated samples,
    in sample order) plus the number excluded for invalid abstracts.
    """
    doc_vectors = []
    for paper in papers:
        doc_vectors.append((_naive_mean_embedding(store, eval_text(paper)), paper.id))
    top1_flags: list[bool] = []
    topk_flags: list[bool] = []
    excluded = 0
    for ordinal in sampled_ordinals:
        parent = papers[ordinal]
        query = _naive_mean_embedding(store, parent.abstract)
        if query is None:
            excluded += 1
            continue
        scored = [
            (_naive_cosine(vec, query), pid)
            for vec, pid in doc_vectors
            if vec is not None and float(np.dot(vec, vec)) > 0.0
        ]
        scored.sort()
        ranked = [pid for _, pid in scored[:k]]
        top1_flags.append(bool(ranked) and ranked[0] == parent.id)
        topk_flags.append(parent.id in ranked)
    return top1_flags, topk_flags, excluded
