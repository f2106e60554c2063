#!/usr/bin/env python3
"""Generate the bundled desk-scale sample corpus (data/sample_corpus.jsonl).

500 synthetic papers. Each paper draws a small topic vocabulary from a
shared pool of pseudo-scientific terms; its title, abstract, and body
sample from that topic set mixed with corpus-wide filler, so an
abstract is measurably closer to its own body than to any other paper.
Deterministic: fixed generator seed, stable iteration order.

Run from the repo root:  python3 tools/make_sample_corpus.py
"""

import json
from pathlib import Path

import numpy as np

GENERATOR_SEED = 7
PAPER_COUNT = 500
TOPIC_VOCAB_SIZE = 2600
TOPIC_WORDS_PER_PAPER = 26
COMMON_WORDS = (
    "study results method analysis data model effect role measurement "
    "experiment observed increase decrease response significant evidence "
    "approach novel patients clinical treatment cohort baseline outcome "
    "the of and in to for with on by from we this these that was were"
).split()

ONSETS = "b bl br c ch cl cr d dr f fl fr g gl gr h j k kl kr l m n p ph pl pr qu r s sc sh sk sl sm sn sp st str t th tr v w z".split()
NUCLEI = "a e i o u ai ea ee io ou".split()
CODAS = ["", "", "", "n", "r", "s", "l", "m", "x", "st", "nd", "ct"]

JOURNALS = [
    "Journal of Synthetic Biology",
    "Annals of Computational Medicine",
    "Archives of Integrative Research",
    "Quarterly Review of Methods",
    "Letters in Applied Science",
    "Transactions on Discovery Systems",
    "Journal of Experimental Findings",
    "International Review of Analysis",
]

GIVEN = "Ada Boris Carla Deniz Elif Farid Greta Hugo Ines Jonas Karin Luca Mira Noor Omar Priya Quentin Rosa Sven Tala Uma Viktor Wanda Xenia Yusuf Zoe".split()
FAMILY = "Abramov Bennett Castillo Dufour Eriksen Fontana Grigoriev Haas Ibarra Jensen Kowalski Lindgren Moreau Novak Okafor Petrov Quispe Rossi Sato Tanaka Ulrich Vasquez Weber Xu Yamada Zhang".split()


def make_word(rng: np.random.Generator) -> str:
    syllables = rng.integers(2, 4)
    parts = []
    for _ in range(syllables):
        parts.append(str(rng.choice(ONSETS)) + str(rng.choice(NUCLEI)))
    word = "".join(parts) + str(rng.choice(CODAS))
    return word


def build_vocab(rng: np.random.Generator) -> list[str]:
    vocab: list[str] = []
    seen = set(COMMON_WORDS)
    while len(vocab) < TOPIC_VOCAB_SIZE:
        word = make_word(rng)
        if word not in seen and len(word) >= 5:
            seen.add(word)
            vocab.append(word)
    return vocab


def sentence(rng: np.random.Generator, topic: np.ndarray, length: int) -> str:
    words = []
    for _ in range(length):
        if rng.random() < 0.72:
            words.append(str(rng.choice(topic)))
        else:
            words.append(str(rng.choice(COMMON_WORDS)))
    words[0] = words[0].capitalize()
    return " ".join(words) + "."


def paragraph(rng: np.random.Generator, topic: np.ndarray) -> str:
    count = int(rng.integers(3, 7))
    return " ".join(sentence(rng, topic, int(rng.integers(8, 15))) for _ in range(count))


def main() -> None:
    rng = np.random.default_rng(GENERATOR_SEED)
    vocab = np.array(build_vocab(rng))
    out = Path(__file__).resolve().parent.parent / "data" / "sample_corpus.jsonl"
    lines = []
    for i in range(PAPER_COUNT):
        topic = rng.choice(vocab, size=TOPIC_WORDS_PER_PAPER, replace=False)
        title_words = [str(w) for w in rng.choice(topic, size=int(rng.integers(4, 8)), replace=False)]
        title = " ".join(title_words).capitalize()
        abstract = " ".join(
            sentence(rng, topic, int(rng.integers(9, 15))) for _ in range(int(rng.integers(3, 6)))
        )
        body = [paragraph(rng, topic) for _ in range(int(rng.integers(4, 7)))]
        author_count = int(rng.integers(1, 5))
        authors = [
            f"{rng.choice(GIVEN)} {rng.choice(FAMILY)}" for _ in range(author_count)
        ]
        record = {
            "id": f"P{i:04d}",
            "title": title,
            "authors": authors,
            "journal": str(rng.choice(JOURNALS)),
            "year": int(rng.integers(1985, 2025)),
            "abstract": abstract,
            "body": body,
        }
        if rng.random() < 0.6:
            record["doi"] = f"10.{5000 + i % 40}/sample.{record['id']}"
        lines.append(json.dumps(record, sort_keys=True, ensure_ascii=False))
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {PAPER_COUNT} papers to {out}")


if __name__ == "__main__":
    main()
