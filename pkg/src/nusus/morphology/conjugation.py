"""Regular conjugation of bare triliteral verbs.

Six conjugation classes (baab) are keyed by the middle vowel of the past
and present stems.  Person/gender/number prefixes and suffixes come from
the frozen paradigm table shipped with the package; the generator covers
sound roots only — hamzated and weak verbs are lexicon-supplied.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .roots import SAHIH, UnsupportedRoot, classify_root
from .script import strip_diacritics

FATHA = "َ"
DAMMA = "ُ"
KASRA = "ِ"
SUKUN = "ْ"

_VOWEL = {"a": FATHA, "u": DAMMA, "i": KASRA}

PAST = "past"
PRESENT = "present"
IMPERATIVE = "imperative"

TENSES = (PAST, PRESENT, IMPERATIVE)


class InvalidConjugationRequest(ValueError):
    pass


@dataclass(frozen=True)
class Baab:
    """One of the six vowel classes, e.g. ``a-u`` for fatha/damma."""

    past_vowel: str
    present_vowel: str

    @property
    def id(self) -> str:
        return f"{self.past_vowel}-{self.present_vowel}"


BAABS: dict[str, Baab] = {
    b.id: b
    for b in (
        Baab("a", "u"),
        Baab("a", "i"),
        Baab("a", "a"),
        Baab("i", "a"),
        Baab("i", "i"),
        Baab("u", "u"),
    )
}

Subject = tuple[int, str, str]  # person, gender, number


def _load_paradigm() -> dict[tuple[str, str, int, str, str], tuple[str, str]]:
    table: dict[tuple[str, str, int, str, str], tuple[str, str]] = {}
    text = resources.files("nusus.data").joinpath("paradigm.tsv").read_text("utf-8")
    lines = text.splitlines()
    for line in lines[1:]:
        baab, tense, person, gender, number, prefix, suffix = line.split("\t")
        prefix = "" if prefix == "-" else prefix
        suffix = "" if suffix == "-" else suffix
        table[(baab, tense, int(person), gender, number)] = (prefix, suffix)
    return table


_PARADIGM = _load_paradigm()


def _cell(baab: Baab, tense: str, subject: Subject) -> tuple[str, str]:
    person, gender, number = subject
    for b in (baab.id, "any"):
        for g in (gender, "common"):
            hit = _PARADIGM.get((b, tense, person, g, number))
            if hit is not None:
                return hit
    raise InvalidConjugationRequest(
        f"no paradigm cell for tense={tense} subject={subject}"
    )


def conjugate(root: str, baab: Baab, tense: str, subject: Subject) -> str:
    """Produce the fully vocalized surface form for a sound root.

    Past stems are C1a-C2x-C3, present and imperative stems C1(sukun)-C2y-C3,
    where x and y are the baab vowels; the paradigm table contributes the
    person affixes and, for the imperative, the connective-alif prefix.
    """
    radicals = strip_diacritics(root)
    if classify_root(radicals).kind != SAHIH:
        raise UnsupportedRoot(f"regular generator covers sound roots only: {root!r}")
    if tense not in TENSES:
        raise InvalidConjugationRequest(f"unknown tense {tense!r}")
    if tense == IMPERATIVE and subject[0] != 2:
        raise InvalidConjugationRequest("imperative is second person only")

    c1, c2, c3 = radicals
    prefix, suffix = _cell(baab, tense, subject)
    if tense == PAST:
        stem = c1 + FATHA + c2 + _VOWEL[baab.past_vowel] + c3
    else:
        stem = c1 + SUKUN + c2 + _VOWEL[baab.present_vowel] + c3
    return prefix + stem + suffix
