"""Arabic script primitives: diacritic stripping and tokenization.

A *skeleton* is a word with every diacritic mark removed; it is the unit
the segmenter, the lexicon and the level word-lists all operate on.  The
diacritic set is fixed to U+064B..U+0652 (the two tanwin triples, the
three short vowels, shadda and sukun).  Shadda is stripped like any other
mark: skeleton identity is defined purely on base letters.

No orthographic normalization is performed: hamza seats (see
``HAMZA_LETTERS``) and bare alef are distinct letters, because the clitic
inventory distinguishes them.
"""

from __future__ import annotations

# U+064B fathatan .. U+0652 sukun, inclusive.
DIACRITICS = frozenset(chr(cp) for cp in range(0x064B, 0x0653))

# Letters of the Arabic block that can occur inside a word, including the
# hamza seats and tatweel (kashida) which joins but carries no reading.
ARABIC_LETTERS = frozenset(chr(cp) for cp in range(0x0621, 0x064B)) | {"ـ", "ٱ"}

WEAK_LETTERS = frozenset("اوي")
HAMZA_LETTERS = frozenset("ءأإؤئ")

WORD_CHARS = ARABIC_LETTERS | DIACRITICS

Skeleton = str


def is_diacritic(ch: str) -> bool:
    return ch in DIACRITICS


def strip_diacritics(word: str) -> Skeleton:
    """Remove every diacritic mark from *word*, keeping all other
    characters in order.

    Empty input yields an empty skeleton; the operation is idempotent and
    never touches base letters, so the thirteen readings of a skeleton all
    collapse onto the same string.
    """
    return "".join(ch for ch in word if ch not in DIACRITICS)


WORD_KIND = "word"
PUNCT_KIND = "punctuation"

_DIGITS = frozenset("0123456789" + "".join(chr(cp) for cp in range(0x0660, 0x066A)))


def tokenize(text: str) -> list[tuple[str, str]]:
    """Split *text* into ``(token, kind)`` pairs.

    Words are maximal runs of Arabic letters and diacritics.  Digit runs
    form one token each; any other non-space character is a token of its
    own.  Both are reported as ``punctuation``.  Whitespace is discarded,
    and concatenating the tokens together with the discarded whitespace
    reproduces the input exactly.
    """
    tokens: list[tuple[str, str]] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in WORD_CHARS:
            j = i
            while j < n and text[j] in WORD_CHARS:
                j += 1
            tokens.append((text[i:j], WORD_KIND))
            i = j
        elif ch in _DIGITS:
            j = i
            while j < n and text[j] in _DIGITS:
                j += 1
            tokens.append((text[i:j], PUNCT_KIND))
            i = j
        else:
            tokens.append((ch, PUNCT_KIND))
            i += 1
    return tokens
