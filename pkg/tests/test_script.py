import hypothesis.strategies as st
from hypothesis import given

from nusus.morphology.script import (
    ARABIC_LETTERS,
    DIACRITICS,
    strip_diacritics,
    tokenize,
)

# The thirteen attested readings of one skeleton; the case endings are the
# short-vowel and tanwin marks named by each reading's transliteration.
RSL_READINGS = [
    "رَسَلْ",  # Raçala
    "رَسَّلْ",  # Rassala
    "رُسِّلْ",  # Russila
    "رَسِّلْ",  # Rassil
    "رُسُلْ",  # Rusulu
    "رُسُلَ",  # Rusula
    "رُسُلِ",  # Rusuli
    "رُسُلٌ",  # Rusulun
    "رُسُلٍ",  # Rusulin
    "رِسْلٌ",  # Rislun
    "رِسْلٍ",  # Rislin
    "رَسْلٌ",  # Raslun
    "رَسْلٍ",  # Raslin
]


def test_thirteen_readings_collapse():
    assert len(set(RSL_READINGS)) == 13
    for form in RSL_READINGS:
        assert strip_diacritics(form) == "رسل"


def test_bare_word_is_identity():
    assert strip_diacritics("رسل") == "رسل"


def test_empty_input():
    assert strip_diacritics("") == ""


arabic_text = st.text(
    alphabet=sorted(ARABIC_LETTERS | DIACRITICS | set(" .،!؟123")), max_size=40
)


@given(arabic_text)
def test_strip_idempotent(word):
    once = strip_diacritics(word)
    assert strip_diacritics(once) == once


@given(arabic_text)
def test_strip_preserves_base_letters(word):
    stripped = strip_diacritics(word)
    assert stripped == "".join(c for c in word if c not in DIACRITICS)
    assert len(stripped) == sum(1 for c in word if c not in DIACRITICS)


def test_tokenize_paper_sentence():
    tokens = tokenize("كتب الأولادُ")
    assert [t for t, _ in tokens] == ["كتب", "الأولادُ"]
    assert all(kind == "word" for _, kind in tokens)


def test_tokenize_empty():
    assert tokenize("") == []


def test_tokenize_kinds():
    tokens = tokenize("هذا يجري.")
    assert tokens == [("هذا", "word"), ("يجري", "word"), (".", "punctuation")]


def test_tokenize_digits_and_latin():
    tokens = tokenize("درس 12 اليوم!")
    assert ("12", "punctuation") in tokens
    assert tokens[-1] == ("!", "punctuation")


@given(arabic_text)
def test_tokenize_round_trip(text):
    tokens = tokenize(text)
    squeezed = "".join(ch for ch in text if not ch.isspace())
    assert "".join(t for t, _ in tokens) == squeezed
