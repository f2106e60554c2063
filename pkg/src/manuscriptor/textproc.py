"""Deterministic text normalization: tokenization and sentence splitting.

Two token pipelines share one tokenizer (maximal runs of Unicode
letters/digits, lowercased; pure-digit tokens kept):

* INDEX  - stop words removed, snowball-stemmed to a fixed point, and
           stems that land on a stop word dropped again. Output tokens
           re-normalize to themselves, so indexed terms and parsed
           query terms always live in the same space.
* EMBED  - lowercase surface forms, stop words retained, no stemming
           (pretrained word-vector vocabularies are unstemmed).

Sentence splitting is rule-based: split after ./?/! followed by
whitespace and an uppercase letter or digit, or at paragraph end;
never split after a single letter or a pinned abbreviation. Known
limitation: unusual abbreviations not in the pinned list will split.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from pathlib import Path

from .stemmer import stem_fixpoint

_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)
_TERMINATOR_RE = re.compile(r"[.?!]")

PARAGRAPH_JOINER = "\n"


class Pipeline(Enum):
    """Which normalization a token stream is destined for."""

    INDEX = "index"
    EMBED = "embed"


def read_word_list(source: str | Path) -> frozenset[str]:
    """Parse a word-list file: one token per line, `#` starts a comment."""
    if isinstance(source, Path):
        text = source.read_text(encoding="utf-8")
    else:
        text = source
    words = set()
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            words.add(line.lower())
    return frozenset(words)


def _bundled(name: str) -> frozenset[str]:
    text = (resources.files("manuscriptor") / "data" / name).read_text(encoding="utf-8")
    return read_word_list(text)


STOPWORDS = _bundled("stopwords.txt")
ABBREVIATIONS = _bundled("abbreviations.txt")


def tokenize(text: str, pipeline: Pipeline = Pipeline.INDEX) -> list[str]:
    """Split text into normalized tokens for the given pipeline."""
    tokens = []
    for raw in _TOKEN_RE.findall(text):
        token = raw.lower()
        if not token.isalnum():
            # Lowercasing can introduce combining marks (e.g. İ); keep the
            # token alphabet closed under re-tokenization.
            token = "".join(c for c in token if c.isalnum())
            if not token:
                continue
        tokens.append(token)
    if pipeline is Pipeline.EMBED:
        return tokens
    out = []
    for token in tokens:
        if token in STOPWORDS:
            continue
        stemmed = stem_fixpoint(token)
        if stemmed and stemmed not in STOPWORDS:
            out.append(stemmed)
    return out


@dataclass(frozen=True)
class Sentence:
    """One sentence of a paper body; char_span indexes the joined body text."""

    paper_id: str
    ordinal: int
    text: str
    char_span: tuple[int, int]


def body_text(body: list[str]) -> str:
    """The canonical concatenated body that sentence spans index into."""
    return PARAGRAPH_JOINER.join(body)


def _abbreviation_before(text: str, dot: int) -> bool:
    i = dot
    while i > 0 and text[i - 1].isalpha():
        i -= 1
    word = text[i:dot]
    if not word:
        return False
    if len(word) == 1:
        return True
    low = word.lower()
    if low in ABBREVIATIONS:
        return True
    # two-word entries such as "et al"
    j = i
    while j > 0 and text[j - 1].isspace():
        j -= 1
    k = j
    while k > 0 and text[k - 1].isalpha():
        k -= 1
    if k < j:
        return f"{text[k:j].lower()} {low}" in ABBREVIATIONS
    return False


def _paragraph_spans(text: str) -> list[tuple[int, int]]:
    n = len(text)
    cuts = []
    for match in _TERMINATOR_RE.finditer(text):
        end = match.end()
        follow = end
        while follow < n and text[follow].isspace():
            follow += 1
        if follow == n:
            pass  # paragraph end
        elif follow == end:
            continue  # no whitespace after the terminator
        elif not (text[follow].isupper() or text[follow].isdigit()):
            continue
        if match.group() == "." and _abbreviation_before(text, match.start()):
            continue
        cuts.append(end)
    spans = []
    start = 0
    for cut in cuts + [n]:
        lo, hi = start, cut
        while lo < hi and text[lo].isspace():
            lo += 1
        while hi > lo and text[hi - 1].isspace():
            hi -= 1
        if lo < hi:
            spans.append((lo, hi))
        start = cut
    return spans


def split_sentences(body: list[str], paper_id: str = "") -> list[Sentence]:
    """Split body paragraphs into sentences; never crosses a paragraph."""
    sentences = []
    offset = 0
    for paragraph in body:
        for lo, hi in _paragraph_spans(paragraph):
            sentences.append(
                Sentence(
                    paper_id=paper_id,
                    ordinal=len(sentences),
                    text=paragraph[lo:hi],
                    char_span=(offset + lo, offset + hi),
                )
            )
        offset += len(paragraph) + len(PARAGRAPH_JOINER)
    return sentences
