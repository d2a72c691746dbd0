"""Nominal declension: case vowels, tanwin, dual and sound-plural suffixes."""

from __future__ import annotations

from dataclasses import dataclass

FATHA = "َ"
DAMMA = "ُ"
KASRA = "ِ"
FATHATAN = "ً"
DAMMATAN = "ٌ"
KASRATAN = "ٍ"

NOM = "NOM"
ACC = "ACC"
GEN = "GEN"
CASES = (NOM, ACC, GEN)

DEFINITE = "definite"
INDEFINITE = "indefinite"

SINGULAR = "singular"
DUAL = "dual"
PLURAL = "plural"

SOUND_MASC = "sound_masc"
SOUND_FEM = "sound_fem"
BROKEN = "broken"

TA_MARBUTA = "ة"

_PLAIN_VOWEL = {NOM: DAMMA, ACC: FATHA, GEN: KASRA}
_TANWIN = {NOM: DAMMATAN, ACC: FATHATAN, GEN: KASRATAN}

# Dual and sound masculine plural endings carry their case in the suffix
# itself; no further vowel is appended.
_DUAL_SUFFIX = {NOM: "ان", ACC: "ين", GEN: "ين"}
_SOUND_MASC_SUFFIX = {NOM: "ون", ACC: "ين", GEN: "ين"}


class MissingLexiconEntry(LookupError):
    """A broken plural was requested without its lexicon form."""


@dataclass(frozen=True)
class CaseMarking:
    case: str
    definiteness: str = DEFINITE

    def __post_init__(self) -> None:
        if self.case not in CASES:
            raise ValueError(f"unknown case {self.case!r}")
        if self.definiteness not in (DEFINITE, INDEFINITE):
            raise ValueError(f"unknown definiteness {self.definiteness!r}")


def _singular_ending(marking: CaseMarking, diptote: bool) -> str:
    if marking.definiteness == DEFINITE:
        return _PLAIN_VOWEL[marking.case]
    if diptote:
        # Diptotes never take tanwin; genitive falls together with accusative.
        return _PLAIN_VOWEL[NOM] if marking.case == NOM else FATHA
    return _TANWIN[marking.case]


def _sound_fem_ending(marking: CaseMarking) -> str:
    # The -at plural never takes fatha: accusative aligns with genitive.
    case = GEN if marking.case == ACC else marking.case
    if marking.definiteness == DEFINITE:
        return _PLAIN_VOWEL[case]
    return _TANWIN[case]


def decline(
    lemma: str,
    number: str,
    marking: CaseMarking | None = None,
    plural_kind: str | None = None,
    broken_form: str | None = None,
    diptote: bool = False,
) -> str:
    """Inflect a declinable noun for number and case.

    With ``marking=None`` singulars and sound feminine plurals are returned
    bare; duals and sound masculine plurals default to the nominative
    suffix.  Suffix choice depends only on (number, case, plural_kind) —
    the single lemma-sensitive step is the ta-marbuta to ``-at`` rewrite of
    the sound feminine plural.  Broken plurals are lexicon forms declined
    like singulars.
    """
    if number == SINGULAR:
        if marking is None:
            return lemma
        return lemma + _singular_ending(marking, diptote)

    if number == DUAL:
        case = marking.case if marking else NOM
        return lemma + _DUAL_SUFFIX[case]

    if number != PLURAL:
        raise ValueError(f"unknown number {number!r}")

    if plural_kind == SOUND_MASC:
        case = marking.case if marking else NOM
        return lemma + _SOUND_MASC_SUFFIX[case]
    if plural_kind == SOUND_FEM:
        stem = lemma[:-1] if lemma.endswith(TA_MARBUTA) else lemma
        plural = stem + "ات"
        if marking is None:
            return plural
        return plural + _sound_fem_ending(marking)
    if plural_kind == BROKEN:
        if broken_form is None:
            raise MissingLexiconEntry(f"no broken plural recorded for {lemma!r}")
        if marking is None:
            return broken_form
        return broken_form + _singular_ending(marking, diptote)
    raise ValueError(f"unknown plural kind {plural_kind!r}")
