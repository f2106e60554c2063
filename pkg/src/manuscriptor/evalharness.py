"""Parent-retrieval evaluation: query with a paper's abstract, count how
often the paper itself comes back first / within the top k.

Documents are re-embedded for the run with the abstract excluded
(title+body only) so the query text cannot leak into its own target.
Sampling is without replacement from a PCG64 generator seeded with the
run seed, so runs reproduce bit-for-bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .corpus import eval_text
from .embedder import embed_text
from .engine import Engine, RankingSource
from .errors import InsufficientCorpusError, InvalidSourceError
from .snapshot import Snapshot


@dataclass(frozen=True)
class EvalReport:
    samples: int  # papers actually evaluated
    top1_rate: float
    topk_rate: float
    k: int
    seed: int
    excluded_invalid: int


def run_parent_retrieval(snapshot: Snapshot, samples: int, k: int = 20, seed: int = 0) -> EvalReport:
    if samples > snapshot.doc_count:
        raise InsufficientCorpusError(
            f"requested {samples} samples from a corpus of {snapshot.doc_count}"
        )
    eval_embeddings = [embed_text(snapshot.vectors, eval_text(p)) for p in snapshot.papers]
    engine = Engine(snapshot, doc_embeddings=eval_embeddings)

    rng = np.random.Generator(np.random.PCG64(seed))
    sampled = rng.choice(snapshot.doc_count, size=samples, replace=False)

    top1 = topk = excluded = 0
    for ordinal in sampled:
        paper = snapshot.papers[int(ordinal)]
        try:
            hits = engine.search("", RankingSource.from_text(paper.abstract), limit=k)
        except InvalidSourceError:
            excluded += 1
            continue
        returned = [h.paper_id for h in hits]
        if returned and returned[0] == paper.id:
            top1 += 1
        if paper.id in returned:
            topk += 1

    evaluated = samples - excluded
    return EvalReport(
        samples=evaluated,
        top1_rate=top1 / evaluated if evaluated else 0.0,
        topk_rate=topk / evaluated if evaluated else 0.0,
        k=k,
        seed=seed,
        excluded_invalid=excluded,
    )


def report_to_text(report: EvalReport, fmt: str = "table") -> str:
    """Render a report; `table` for humans, `tsv` for machines."""
    if fmt == "tsv":
        header = "samples\ttop1_rate\ttopk_rate\tk\tseed\texcluded_invalid"
        row = "\t".join(
            [
                str(report.samples),
                repr(report.top1_rate),
                repr(report.topk_rate),
                str(report.k),
                str(report.seed),
                str(report.excluded_invalid),
            ]
        )
        return f"{header}\n{row}\n"
    if fmt != "table":
        raise ValueError(f"unknown format {fmt!r}")
    lines = ["parent-retrieval evaluation"]
    if report.samples == 0:
        lines.append("  no samples")
    else:
        lines += [
            f"  samples            {report.samples}",
            f"  top-1 rate         {report.top1_rate * 100:.1f}%",
            f"  top-{report.k} rate        {report.topk_rate * 100:.1f}%",
        ]
    lines += [
        f"  k                  {report.k}",
        f"  seed               {report.seed}",
        f"  excluded invalid   {report.excluded_invalid}",
    ]
    return "\n".join(lines) + "\n"


def parse_report_tsv(text: str) -> EvalReport:
    """Inverse of report_to_text(..., fmt="tsv")."""
    lines = [line for line in text.splitlines() if line.strip()]
    if len(lines) != 2:
        raise ValueError("expected a header line and one data line")
    fields = dict(zip(lines[0].split("\t"), lines[1].split("\t")))
    return EvalReport(
        samples=int(fields["samples"]),
        top1_rate=float(fields["top1_rate"]),
        topk_rate=float(fields["topk_rate"]),
        k=int(fields["k"]),
        seed=int(fields["seed"]),
        excluded_invalid=int(fields["excluded_invalid"]),
    )
