"""Stemmer conformance tests.

GOLDEN_PAIRS were transcribed by hand from the published algorithm
description and its demo vocabulary (exceptional forms, per-step
examples, and classic derivational families). They are independent of
this implementation and must pass exactly.

The bundled 1000-pair file (tests/data/snowball_pairs.txt) is the
regression anchor used by the acceptance suite.
"""

from pathlib import Path

import pytest

from manuscriptor.stemmer import stem, stem_fixpoint

GOLDEN_PAIRS = [
    # exceptional forms
    ("skis", "ski"),
    ("skies", "sky"),
    ("dying", "die"),
    ("lying", "lie"),
    ("tying", "tie"),
    ("idly", "idl"),
    ("gently", "gentl"),
    ("ugly", "ugli"),
    ("early", "earli"),
    ("only", "onli"),
    ("singly", "singl"),
    ("sky", "sky"),
    ("news", "news"),
    ("howe", "howe"),
    ("atlas", "atlas"),
    ("cosmos", "cosmos"),
    ("bias", "bias"),
    ("andes", "andes"),
    # invariant after step 1a
    ("inning", "inning"),
    ("outing", "outing"),
    ("canning", "canning"),
    ("herring", "herring"),
    ("earring", "earring"),
    ("proceed", "proceed"),
    ("exceed", "exceed"),
    ("succeed", "succeed"),
    # step 1a
    ("ties", "tie"),
    ("cries", "cri"),
    ("gas", "gas"),
    ("this", "this"),
    ("gaps", "gap"),
    ("kiwis", "kiwi"),
    ("caresses", "caress"),
    ("ponies", "poni"),
    ("abyss", "abyss"),
    # step 1b
    ("feed", "feed"),
    ("agreed", "agre"),
    ("plastered", "plaster"),
    ("bled", "bled"),
    ("motoring", "motor"),
    ("sing", "sing"),
    ("hopped", "hop"),
    ("hopping", "hop"),
    ("hoped", "hope"),
    ("hoping", "hope"),
    ("fixedly", "fix"),
    ("luxuriated", "luxuri"),
    # step 1c
    ("cry", "cri"),
    ("by", "by"),
    ("say", "say"),
    ("enjoy", "enjoy"),
    # R1 prefix special cases
    ("generate", "generat"),
    ("generation", "generat"),
    ("generous", "generous"),
    ("generously", "generous"),
    ("generalization", "general"),
    ("communication", "communic"),
    ("arsenal", "arsenal"),
    # step 2
    ("relational", "relat"),
    ("conditional", "condit"),
    ("rational", "ration"),
    ("hesitancy", "hesit"),
    ("consistency", "consist"),
    ("digitizer", "digit"),
    ("conformably", "conform"),
    ("radically", "radic"),
    ("differently", "differ"),
    ("vilely", "vile"),
    ("analogously", "analog"),
    ("vietnamization", "vietnam"),
    ("predication", "predic"),
    ("operator", "oper"),
    ("feudalism", "feudal"),
    ("decisiveness", "decis"),
    ("hopefulness", "hope"),
    ("callousness", "callous"),
    ("formality", "formal"),
    ("sensitivity", "sensit"),
    ("ability", "abil"),
    ("mobility", "mobil"),
    ("responsibility", "respons"),
    ("geology", "geolog"),
    # step 3
    ("triplicate", "triplic"),
    ("authenticity", "authent"),
    ("electrical", "electr"),
    ("hopeful", "hope"),
    ("goodness", "good"),
    ("nationality", "nation"),
    # step 4
    ("revival", "reviv"),
    ("allowance", "allow"),
    ("inference", "infer"),
    ("airliner", "airlin"),
    ("gyroscopic", "gyroscop"),
    ("adjustable", "adjust"),
    ("defensible", "defens"),
    ("irritant", "irrit"),
    ("replacement", "replac"),
    ("adjustment", "adjust"),
    ("dependent", "depend"),
    ("adoption", "adopt"),
    ("homologous", "homolog"),
    ("effective", "effect"),
    ("bowdlerize", "bowdler"),
    ("communism", "communism"),
    # step 5
    ("cease", "ceas"),
    ("care", "care"),
    ("here", "here"),
    ("controlling", "control"),
    ("rolling", "roll"),
    ("matrices", "matric"),
    # demo vocabulary
    ("consign", "consign"),
    ("consigned", "consign"),
    ("consigning", "consign"),
    ("consignment", "consign"),
    ("consist", "consist"),
    ("consisted", "consist"),
    ("consistent", "consist"),
    ("consistently", "consist"),
    ("consisting", "consist"),
    ("consists", "consist"),
    ("consolation", "consol"),
    ("consolations", "consol"),
    ("consolatory", "consolatori"),
    ("console", "consol"),
    ("consoled", "consol"),
    ("consoles", "consol"),
    ("consolidate", "consolid"),
    ("consolidated", "consolid"),
    ("consolidating", "consolid"),
    ("consoling", "consol"),
    ("consols", "consol"),
    ("consonant", "conson"),
    ("consort", "consort"),
    ("consorted", "consort"),
    ("consorting", "consort"),
    ("conspicuous", "conspicu"),
    ("conspicuously", "conspicu"),
    ("conspiracy", "conspiraci"),
    ("conspirator", "conspir"),
    ("conspirators", "conspir"),
    ("conspire", "conspir"),
    ("conspired", "conspir"),
    ("conspiring", "conspir"),
    ("constable", "constabl"),
    ("constables", "constabl"),
    ("constance", "constanc"),
    ("constancy", "constanc"),
    ("constant", "constant"),
    # everyday corpus words
    ("lung", "lung"),
    ("lungs", "lung"),
    ("cancer", "cancer"),
    ("cancers", "cancer"),
    ("treated", "treat"),
    ("treatment", "treatment"),
    ("searching", "search"),
    ("searched", "search"),
    ("searches", "search"),
    ("papers", "paper"),
    ("embedding", "embed"),
    ("embeddings", "embed"),
    ("similarity", "similar"),
    ("ranking", "rank"),
    ("filtered", "filter"),
    ("indexes", "index"),
    ("indices", "indic"),
    ("queries", "queri"),
    ("query", "queri"),
    ("sentences", "sentenc"),
    ("highlighted", "highlight"),
    ("analysis", "analysi"),
    ("corpus", "corpus"),
    ("dies", "die"),
    ("died", "die"),
    ("flying", "fli"),
    ("fly", "fli"),
    ("decision", "decis"),
    ("decisions", "decis"),
    # short inputs returned untouched
    ("a", "a"),
    ("ab", "ab"),
    ("", ""),
    ("ox", "ox"),
]


@pytest.mark.parametrize("word,expected", GOLDEN_PAIRS, ids=[w or "<empty>" for w, _ in GOLDEN_PAIRS])
def test_golden_pair(word, expected):
    assert stem(word) == expected


def test_case_insensitive():
    assert stem("Lungs") == stem("lungs") == "lung"
    assert stem("CANCERS") == "cancer"


def test_fixpoint_stabilizes():
    # "decision" needs two passes: decis -> deci.
    assert stem("decision") == "decis"
    assert stem_fixpoint("decision") == stem(stem("decision")) == "deci"
    for word, _ in GOLDEN_PAIRS:
        fp = stem_fixpoint(word)
        assert stem(fp) == fp


def test_bundled_pairs_file():
    """The frozen 1000-pair file must agree with the stemmer >= 99%."""
    path = Path(__file__).parent / "data" / "snowball_pairs.txt"
    pairs = []
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        word, expected = line.split("\t")
        pairs.append((word, expected))
    assert len(pairs) == 1000
    agree = sum(1 for w, e in pairs if stem(w) == e)
    assert agree / len(pairs) >= 0.99
