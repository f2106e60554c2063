"""Command line: ingest a corpus into a snapshot, serve the API, run a
one-shot search, or run the parent-retrieval evaluation.

Every flag can also be set through a MANUSCRIPTOR_<FLAG> environment
variable (e.g. MANUSCRIPTOR_SNAPSHOT mirrors --snapshot).
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .corpus import doc_text, ingest
from .embedder import load_vectors, synth_vectors
from .engine import Engine, RankingSource
from .evalharness import report_to_text, run_parent_retrieval
from .service import AppState, create_app
from .snapshot import build_snapshot, load_snapshot
from .textproc import Pipeline, tokenize


@click.group()
def main() -> None:
    """Literature discovery engine: filter by keywords, rank by embedding."""


@main.command("ingest")
@click.option("--corpus", "corpus_file", required=True, envvar="MANUSCRIPTOR_CORPUS",
              type=click.Path(exists=True, dir_okay=False), help="Corpus JSONL file.")
@click.option("--vectors", "vectors_file", envvar="MANUSCRIPTOR_VECTORS",
              type=click.Path(exists=True, dir_okay=False),
              help="Word-vector text file ('<count> <dim>' header).")
@click.option("--synth-seed", type=int, envvar="MANUSCRIPTOR_SYNTH_SEED",
              help="Generate deterministic synthetic vectors with this seed instead.")
@click.option("--dim", type=int, default=400, show_default=True, envvar="MANUSCRIPTOR_DIM",
              help="Vector dimension for --synth-seed.")
@click.option("--out", "out_dir", required=True, envvar="MANUSCRIPTOR_OUT",
              type=click.Path(file_okay=False), help="Snapshot output directory.")
def ingest_cmd(corpus_file: str, vectors_file: str | None, synth_seed: int | None,
               dim: int, out_dir: str) -> None:
    """Build a snapshot directory from a corpus file."""
    if (vectors_file is None) == (synth_seed is None):
        raise click.UsageError("provide exactly one of --vectors or --synth-seed")
    papers = ingest(corpus_file)
    if vectors_file is not None:
        store = load_vectors(vectors_file)
        if store.duplicate_count:
            click.echo(f"warning: {store.duplicate_count} duplicate vector words (last wins)", err=True)
    else:
        vocab: set[str] = set()
        for paper in papers:
            vocab.update(tokenize(doc_text(paper), Pipeline.EMBED))
        store = synth_vectors(vocab, dim=dim, seed=synth_seed)
    build_snapshot(papers, store, out_dir)
    click.echo(f"snapshot written: {len(papers)} papers, dim {store.dim}, vocab {len(store.vocab)}")


@main.command("serve")
@click.option("--snapshot", "snapshot_dir", required=True, envvar="MANUSCRIPTOR_SNAPSHOT",
              type=click.Path(exists=True, file_okay=False))
@click.option("--port", type=int, default=8000, show_default=True, envvar="MANUSCRIPTOR_PORT")
@click.option("--host", default="127.0.0.1", show_default=True, envvar="MANUSCRIPTOR_HOST")
@click.option("--ui", "ui_dir", envvar="MANUSCRIPTOR_UI",
              type=click.Path(exists=True, file_okay=False),
              help="Static directory with the built web UI.")
@click.option("--library-dir", envvar="MANUSCRIPTOR_LIBRARY_DIR",
              type=click.Path(file_okay=False), help="Where per-user libraries persist.")
def serve_cmd(snapshot_dir: str, port: int, host: str, ui_dir: str | None,
              library_dir: str | None) -> None:
    """Serve the HTTP API (and optionally the web UI bundle)."""
    import uvicorn

    state = AppState(
        snapshot_dir=Path(snapshot_dir),
        ui_dir=Path(ui_dir) if ui_dir else None,
        library_dir=Path(library_dir) if library_dir else None,
    )
    state.load()
    uvicorn.run(create_app(state), host=host, port=port, log_level="info")


@main.command("search")
@click.option("--snapshot", "snapshot_dir", required=True, envvar="MANUSCRIPTOR_SNAPSHOT",
              type=click.Path(exists=True, file_okay=False))
@click.option("--filter", "filter_text", default="", envvar="MANUSCRIPTOR_FILTER",
              help="Keyword filter, e.g. 'term1 term2|term3 !term4'.")
@click.option("--query-file", required=True, envvar="MANUSCRIPTOR_QUERY_FILE",
              type=click.Path(exists=True, dir_okay=False),
              help="Text file used as the ranking source.")
@click.option("--limit", type=int, default=20, show_default=True, envvar="MANUSCRIPTOR_LIMIT")
def search_cmd(snapshot_dir: str, filter_text: str, query_file: str, limit: int) -> None:
    """One-shot search; prints TSV: rank, id, distance, title."""
    engine = Engine(load_snapshot(snapshot_dir))
    query = Path(query_file).read_text(encoding="utf-8")
    hits = engine.search(filter_text, RankingSource.from_text(query), limit=limit)
    for rank, hit in enumerate(hits, start=1):
        sys.stdout.write(f"{rank}\t{hit.paper_id}\t{hit.distance:.6f}\t{hit.title}\n")


@main.command("eval")
@click.option("--snapshot", "snapshot_dir", required=True, envvar="MANUSCRIPTOR_SNAPSHOT",
              type=click.Path(exists=True, file_okay=False))
@click.option("--samples", type=int, required=True, envvar="MANUSCRIPTOR_SAMPLES")
@click.option("--seed", type=int, default=0, show_default=True, envvar="MANUSCRIPTOR_SEED")
@click.option("--top-k", type=int, default=20, show_default=True, envvar="MANUSCRIPTOR_TOP_K")
@click.option("--format", "fmt", type=click.Choice(["table", "tsv"]), default="table",
              show_default=True, envvar="MANUSCRIPTOR_FORMAT")
def eval_cmd(snapshot_dir: str, samples: int, seed: int, top_k: int, fmt: str) -> None:
    """Parent-retrieval evaluation on the snapshot corpus."""
    report = run_parent_retrieval(load_snapshot(snapshot_dir), samples=samples, k=top_k, seed=seed)
    sys.stdout.write(report_to_text(report, fmt=fmt))


if __name__ == "__main__":
    main()
