"""Snowball English (Porter2) stemmer, pure Python.

Single-application `stem` follows the published algorithm: exceptional
forms, apostrophe stripping, consonant-y marking, the R1/R2 regions
(with the gener-/commun-/arsen- prefix special case), then steps 0-5.
`stem_fixpoint` re-applies `stem` until the output is stable; the index
pipeline uses it so that indexed terms re-normalize to themselves
(plain snowball is not idempotent: "decision" -> "decis" -> "deci").
"""

from functools import lru_cache

_VOWELS = frozenset("aeiouy")
# Marked consonant-y ("Y") is deliberately outside the vowel set.
_DOUBLES = ("bb", "dd", "ff", "gg", "mm", "nn", "pp", "rr", "tt")
_LI_ENDINGS = frozenset("cdeghkmnrt")

_EXCEPTIONS = {
    "skis": "ski",
    "skies": "sky",
    "dying": "die",
    "lying": "lie",
    "tying": "tie",
    "idly": "idl",
    "gently": "gentl",
    "ugly": "ugli",
    "early": "earli",
    "only": "onli",
    "singly": "singl",
    "sky": "sky",
    "news": "news",
    "howe": "howe",
    "atlas": "atlas",
    "cosmos": "cosmos",
    "bias": "bias",
    "andes": "andes",
}

# Words left untouched once step 1a has run.
_POST_1A_INVARIANT = frozenset(
    {"inning", "outing", "canning", "herring", "earring", "proceed", "exceed", "succeed"}
)

_R1_PREFIXES = ("gener", "commun", "arsen")

# (suffix, replacement) tables, longest suffix first. A None replacement
# carries an extra condition handled inline; "" means plain deletion.
_STEP2 = (
    ("ization", "ize"),
    ("ational", "ate"),
    ("fulness", "ful"),
    ("ousness", "ous"),
    ("iveness", "ive"),
    ("tional", "tion"),
    ("biliti", "ble"),
    ("lessli", "less"),
    ("entli", "ent"),
    ("ation", "ate"),
    ("alism", "al"),
    ("aliti", "al"),
    ("ousli", "ous"),
    ("iviti", "ive"),
    ("fulli", "ful"),
    ("enci", "ence"),
    ("anci", "ance"),
    ("abli", "able"),
    ("izer", "ize"),
    ("ator", "ate"),
    ("alli", "al"),
    ("bli", "ble"),
    ("ogi", None),  # -> og, only after l
    ("li", None),  # delete, only after a valid li-ending
)

_STEP3 = (
    ("ational", "ate"),
    ("tional", "tion"),
    ("alize", "al"),
    ("icate", "ic"),
    ("iciti", "ic"),
    ("ative", None),  # delete, only in R2
    ("ical", "ic"),
    ("ness", ""),
    ("ful", ""),
)

_STEP4 = (
    "ement",
    "ance",
    "ence",
    "able",
    "ible",
    "ment",
    "ant",
    "ent",
    "ism",
    "ate",
    "iti",
    "ous",
    "ive",
    "ize",
    "ion",  # only after s or t
    "al",
    "er",
    "ic",
)


def _is_vowel(ch: str) -> bool:
    return ch in _VOWELS


def _mark_consonant_y(word: str) -> str:
    chars = list(word)
    if chars[0] == "y":
        chars[0] = "Y"
    for i in range(1, len(chars)):
        if chars[i] == "y" and chars[i - 1] in _VOWELS:
            chars[i] = "Y"
    return "".join(chars)


def _region_start(word: str, start: int) -> int:
    """Offset of the region after the first non-vowel that follows a vowel."""
    i = start
    n = len(word)
    while i < n and not _is_vowel(word[i]):
        i += 1
    while i < n and _is_vowel(word[i]):
        i += 1
    return min(i + 1, n)


def _r1_start(word: str) -> int:
    for prefix in _R1_PREFIXES:
        if word.startswith(prefix):
            return len(prefix)
    return _region_start(word, 0)


def _ends_short_syllable(word: str) -> bool:
    n = len(word)
    if n == 2:
        return _is_vowel(word[0]) and not _is_vowel(word[1])
    if n >= 3:
        c1, v, c2 = word[-3], word[-2], word[-1]
        return (
            not _is_vowel(c1)
            and _is_vowel(v)
            and not _is_vowel(c2)
            and c2 not in "wxY"
        )
    return False


def _is_short_word(word: str, r1: int) -> bool:
    return r1 >= len(word) and _ends_short_syllable(word)


def _step0(word: str) -> str:
    for suffix in ("'s'", "'s", "'"):
        if word.endswith(suffix):
            return word[: -len(suffix)]
    return word


def _step1a(word: str) -> str:
    if word.endswith("sses"):
        return word[:-2]
    if word.endswith("ied") or word.endswith("ies"):
        return word[:-2] if len(word) > 4 else word[:-1]
    if word.endswith("us") or word.endswith("ss"):
        return word
    if word.endswith("s"):
        # Delete when a vowel exists somewhere other than right before the s.
        if any(_is_vowel(ch) for ch in word[:-2]):
            return word[:-1]
    return word


def _step1b(word: str, r1: int) -> str:
    for suffix in ("eedly", "eed"):
        if word.endswith(suffix):
            if len(word) - len(suffix) >= r1:
                return word[: -len(suffix)] + "ee"
            return word
    for suffix in ("ingly", "edly", "ing", "ed"):
        if word.endswith(suffix):
            preceding = word[: -len(suffix)]
            if not any(_is_vowel(ch) for ch in preceding):
                return word
            word = preceding
            if word.endswith(("at", "bl", "iz")):
                return word + "e"
            if word.endswith(_DOUBLES):
                return word[:-1]
            if _is_short_word(word, r1):
                return word + "e"
            return word
    return word


def _step1c(word: str) -> str:
    if len(word) > 2 and word[-1] in "yY" and not _is_vowel(word[-2]):
        return word[:-1] + "i"
    return word


def _step2(word: str, r1: int) -> str:
    for suffix, replacement in _STEP2:
        if not word.endswith(suffix):
            continue
        if len(word) - len(suffix) < r1:
            return word
        if suffix == "ogi":
            if word.endswith("logi"):
                return word[:-1]
            return word
        if suffix == "li":
            if word[-3] in _LI_ENDINGS:
                return word[:-2]
            return word
        return word[: -len(suffix)] + replacement
    return word


def _step3(word: str, r1: int, r2: int) -> str:
    for suffix, replacement in _STEP3:
        if not word.endswith(suffix):
            continue
        if len(word) - len(suffix) < r1:
            return word
        if suffix == "ative":
            if len(word) - len(suffix) >= r2:
                return word[:-5]
            return word
        return word[: -len(suffix)] + replacement
    return word


def _step4(word: str, r2: int) -> str:
    for suffix in _STEP4:
        if not word.endswith(suffix):
            continue
        if len(word) - len(suffix) < r2:
            return word
        if suffix == "ion":
            if word[-4] in "st":
                return word[:-3]
            return word
        return word[: -len(suffix)]
    return word


def _step5(word: str, r1: int, r2: int) -> str:
    if word.endswith("e"):
        if len(word) - 1 >= r2:
            return word[:-1]
        if len(word) - 1 >= r1 and not _ends_short_syllable(word[:-1]):
            return word[:-1]
        return word
    if word.endswith("l"):
        if len(word) - 1 >= r2 and len(word) >= 2 and word[-2] == "l":
            return word[:-1]
    return word


@lru_cache(maxsize=200_000)
def stem(word: str) -> str:
    """Stem one lowercase-insensitive word with the snowball English rules."""
    word = word.lower()
    if word.startswith("'"):
        word = word[1:]
    if len(word) <= 2:
        return word
    if word in _EXCEPTIONS:
        return _EXCEPTIONS[word]

    word = _mark_consonant_y(word)
    r1 = _r1_start(word)
    r2 = _region_start(word, r1)

    word = _step0(word)
    word = _step1a(word)
    if word in _POST_1A_INVARIANT:
        return word
    word = _step1b(word, r1)
    word = _step1c(word)
    word = _step2(word, r1)
    word = _step3(word, r1, r2)
    word = _step4(word, r2)
    word = _step5(word, r1, r2)
    return word.replace("Y", "y")


@lru_cache(maxsize=200_000)
def stem_fixpoint(word: str) -> str:
    """Re-apply `stem` until stable (a handful of words need two passes)."""
    previous = word
    for _ in range(5):
        current = stem(previous)
        if current == previous:
            return current
        previous = current
    return previous
