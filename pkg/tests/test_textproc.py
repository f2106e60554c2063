import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from manuscriptor.textproc import (
    Pipeline,
    Sentence,
    body_text,
    read_word_list,
    split_sentences,
    tokenize,
)


class TestTokenize:
    def test_index_pipeline_stems_and_drops_stopwords(self):
        assert tokenize("Lung cancers, treated.", Pipeline.INDEX) == ["lung", "cancer", "treat"]

    def test_empty_input(self):
        assert tokenize("", Pipeline.INDEX) == []

    def test_stopwords_only(self):
        assert tokenize("The THE the", Pipeline.INDEX) == []

    def test_embed_pipeline_keeps_surface_forms(self):
        assert tokenize("Lung cancers", Pipeline.EMBED) == ["lung", "cancers"]

    def test_embed_pipeline_keeps_stopwords(self):
        assert tokenize("the lung", Pipeline.EMBED) == ["the", "lung"]

    def test_digit_tokens_kept(self):
        assert tokenize("covid 2020 19", Pipeline.INDEX) == ["covid", "2020", "19"]

    def test_punctuation_boundaries(self):
        assert tokenize("state-of-the-art (methods)!", Pipeline.INDEX) == [
            "state",
            "art",
            "method",
        ]

    def test_underscore_is_a_boundary(self):
        assert tokenize("foo_bar", Pipeline.EMBED) == ["foo", "bar"]

    def test_stem_landing_on_stopword_is_dropped(self):
        # "cans" stems to "can", which is a stop word
        assert tokenize("cans", Pipeline.INDEX) == []

    def test_fixpoint_stemming(self):
        # single-application snowball gives "decis", which restems to "deci"
        assert tokenize("decision", Pipeline.INDEX) == ["deci"]

    @pytest.mark.parametrize("text", ["Lung cancers, treated.", "decision cans İstanbul", "a b c"])
    def test_idempotence_examples(self, text):
        once = tokenize(text, Pipeline.INDEX)
        assert tokenize(" ".join(once), Pipeline.INDEX) == once

    @given(st.text(max_size=200))
    @settings(max_examples=300, deadline=None)
    def test_idempotence_property(self, text):
        once = tokenize(text, Pipeline.INDEX)
        assert tokenize(" ".join(once), Pipeline.INDEX) == once

    @given(st.text(max_size=200))
    @settings(max_examples=100, deadline=None)
    def test_determinism(self, text):
        assert tokenize(text, Pipeline.INDEX) == tokenize(text, Pipeline.INDEX)
        assert tokenize(text, Pipeline.EMBED) == tokenize(text, Pipeline.EMBED)


class TestSplitSentences:
    def test_three_sentences(self):
        sentences = split_sentences(["First. Second? Third!"], "p")
        assert [s.text for s in sentences] == ["First.", "Second?", "Third!"]
        assert [s.ordinal for s in sentences] == [0, 1, 2]

    def test_no_terminator(self):
        sentences = split_sentences(["One paragraph no terminator"], "p")
        assert [s.text for s in sentences] == ["One paragraph no terminator"]

    def test_paragraph_boundaries(self):
        sentences = split_sentences(["A first.", "B second."], "p")
        assert [s.ordinal for s in sentences] == [0, 1]
        assert [s.text for s in sentences] == ["A first.", "B second."]

    def test_empty_body(self):
        assert split_sentences([], "p") == []

    def test_lowercase_continuation_does_not_split(self):
        sentences = split_sentences(["Values of approx. three were seen. Next one."], "p")
        assert len(sentences) == 2
        assert sentences[0].text == "Values of approx. three were seen."

    def test_abbreviations_suppress_split(self):
        text = "As shown by Smith et al. 2020, results differ. See Fig. 3 for details."
        sentences = split_sentences([text], "p")
        assert [s.text for s in sentences] == [
            "As shown by Smith et al. 2020, results differ.",
            "See Fig. 3 for details.",
        ]

    def test_single_letter_abbreviation(self):
        sentences = split_sentences(["Methods (e.g. This one) work. Second."], "p")
        assert len(sentences) == 2

    def test_multiple_terminators(self):
        sentences = split_sentences(["What?! Really. Yes."], "p")
        assert [s.text for s in sentences] == ["What?!", "Really.", "Yes."]

    def test_spans_index_into_body_text(self):
        body = ["First. Second?", "Third one here. And a fourth!"]
        joined = body_text(body)
        for sentence in split_sentences(body, "p"):
            lo, hi = sentence.char_span
            assert joined[lo:hi] == sentence.text

    def test_spans_cover_every_nonspace_char_exactly_once(self):
        body = ["First. Second?  Extra   spacing.", "No terminator here"]
        joined = body_text(body)
        sentences = split_sentences(body, "p")
        covered = [0] * len(joined)
        for sentence in sentences:
            lo, hi = sentence.char_span
            for i in range(lo, hi):
                covered[i] += 1
        for i, ch in enumerate(joined):
            if not ch.isspace():
                assert covered[i] == 1, f"char {i} ({ch!r}) covered {covered[i]} times"
        assert all(c <= 1 for c in covered)

    def test_spans_ascending_and_disjoint(self):
        body = ["Alpha one. Beta two. Gamma three.", "Delta four. Epsilon five."]
        sentences = split_sentences(body, "p")
        for a, b in zip(sentences, sentences[1:]):
            assert a.char_span[1] <= b.char_span[0]

    def test_reconstructs_paragraph(self):
        paragraph = "First. Second?   Third!"
        sentences = split_sentences([paragraph], "p")
        # joining sentence texts with the skipped whitespace restores the paragraph
        rebuilt = paragraph[: sentences[0].char_span[0]]
        for i, s in enumerate(sentences):
            rebuilt += s.text
            end = sentences[i + 1].char_span[0] if i + 1 < len(sentences) else len(paragraph)
            rebuilt += paragraph[s.char_span[1] : end]
        assert rebuilt == paragraph

    def test_paper_id_carried(self):
        assert split_sentences(["Hello there."], "paper-9")[0].paper_id == "paper-9"


class TestWordList:
    def test_comments_and_blanks_ignored(self):
        text = "# comment\nalpha\n\nbeta # trailing\nGAMMA\n"
        assert read_word_list(text) == frozenset({"alpha", "beta", "gamma"})

    def test_sentence_type_is_frozen(self):
        s = Sentence("p", 0, "Hi.", (0, 3))
        with pytest.raises(AttributeError):
            s.text = "nope"
