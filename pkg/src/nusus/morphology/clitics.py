"""Clitic segmentation under agglutination constraints.

An agglutinated word is at most five morphemes: proclitics drawn from
ordered slots, one inflected base, and at most one pronoun enclitic.
``segment`` enumerates every division of a skeleton whose base the lexicon
knows and which passes ``check_agglutination``; a word can legitimately
carry several readings, so all are returned, fewest clitics first.

Two of the shipped verb-particle constraints reproduce the source
grammar's restrictions verbatim even though both read oddly (they bar the
subjunctive lam and the future sin from present-tense bases); they sit
behind ``RuleConfig`` toggles so a deployment can relax them.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .features import PASSIVE, LAZIM, NounFeatures, VerbFeatures
from .lexicon import Lexicon
from .pos import NOUN, VERB, PosTag

MAX_MORPHEMES = 5

# Slot names, in their fixed surface order.
INTERROGATION = "interrogation"
CONJUNCTION = "conjunction"
PARTICLE = "particle"
PREPOSITION = "preposition"
ARTICLE = "article"
ENCLITIC = "enclitic"

VERB_SLOTS = (INTERROGATION, CONJUNCTION, PARTICLE)
NOUN_SLOTS = (INTERROGATION, CONJUNCTION, PREPOSITION, ARTICLE)


@dataclass(frozen=True)
class CliticItem:
    slot: str
    surface: str
    function: str

    def to_dict(self) -> dict:
        return {"slot": self.slot, "surface": self.surface, "function": self.function}


@dataclass(frozen=True)
class Pronoun:
    surface: str
    person: int
    gender: str
    number: str

    def to_dict(self) -> dict:
        return {
            "surface": self.surface,
            "person": self.person,
            "gender": self.gender,
            "number": self.number,
        }


# Shared object/possessive pronoun set, skeleton surfaces.  The second
# person singular masculine and feminine collapse onto the same skeleton,
# so that surface yields two readings.
PRONOUNS: tuple[Pronoun, ...] = (
    Pronoun("ني", 1, "common", "sing"),
    Pronoun("نا", 1, "common", "plural"),
    Pronoun("ك", 2, "masc", "sing"),
    Pronoun("ك", 2, "fem", "sing"),
    Pronoun("كما", 2, "common", "dual"),
    Pronoun("كم", 2, "masc", "plural"),
    Pronoun("كن", 2, "fem", "plural"),
    Pronoun("ه", 3, "masc", "sing"),
    Pronoun("ها", 3, "fem", "sing"),
    Pronoun("هما", 3, "common", "dual"),
    Pronoun("هم", 3, "masc", "plural"),
    Pronoun("هن", 3, "fem", "plural"),
)


@dataclass(frozen=True)
class CliticInventory:
    """Proclitic slot contents per base class, plus the enclitic table.

    ``*_enclitic_persons`` narrow which pronoun persons may attach; the
    default admits all of them.
    """

    verb_proclitics: tuple[CliticItem, ...] = (
        CliticItem(INTERROGATION, "أ", "interrogation"),
        CliticItem(CONJUNCTION, "و", "conjunction"),
        CliticItem(CONJUNCTION, "ف", "conjunction"),
        CliticItem(PARTICLE, "ل", "subjunctive"),
        CliticItem(PARTICLE, "ل", "corroboration"),
        CliticItem(PARTICLE, "س", "future"),
    )
    noun_proclitics: tuple[CliticItem, ...] = (
        CliticItem(INTERROGATION, "أ", "interrogation"),
        CliticItem(CONJUNCTION, "و", "conjunction"),
        CliticItem(CONJUNCTION, "ف", "conjunction"),
        CliticItem(PREPOSITION, "ب", "preposition"),
        CliticItem(PREPOSITION, "ك", "preposition"),
        CliticItem(PREPOSITION, "ل", "preposition"),
        CliticItem(ARTICLE, "ال", "article"),
    )
    pronouns: tuple[Pronoun, ...] = PRONOUNS
    verb_enclitic_persons: frozenset[int] = frozenset({1, 2, 3})
    noun_enclitic_persons: frozenset[int] = frozenset({1, 2, 3})

    def slot_items(self, major: str) -> tuple[tuple[str, ...], tuple[CliticItem, ...]]:
        if major == VERB:
            return VERB_SLOTS, self.verb_proclitics
        if major == NOUN:
            return NOUN_SLOTS, self.noun_proclitics
        return (), ()

    def enclitics_for(self, major: str) -> tuple[Pronoun, ...]:
        persons = (
            self.verb_enclitic_persons if major == VERB else self.noun_enclitic_persons
        )
        return tuple(p for p in self.pronouns if p.person in persons)


DEFAULT_INVENTORY = CliticInventory()


@dataclass(frozen=True)
class RuleConfig:
    # Both default to the source grammar's stated restrictions.
    subjunctive_lam_blocks_present: bool = True
    future_sin_blocks_present: bool = True


DEFAULT_RULES = RuleConfig()


@dataclass(frozen=True)
class Segmentation:
    proclitics: tuple[CliticItem, ...]
    base: str
    base_tag: PosTag
    base_features: VerbFeatures | NounFeatures | None
    enclitic: Pronoun | None = None

    @property
    def base_class(self) -> str:
        return self.base_tag.major

    @property
    def morpheme_count(self) -> int:
        return len(self.proclitics) + 1 + (1 if self.enclitic else 0)

    @property
    def clitic_count(self) -> int:
        return len(self.proclitics) + (1 if self.enclitic else 0)

    def surface(self) -> str:
        enc = self.enclitic.surface if self.enclitic else ""
        return "".join(p.surface for p in self.proclitics) + self.base + enc

    def has_slot(self, slot: str) -> bool:
        return any(p.slot == slot for p in self.proclitics)

    def sort_key(self) -> tuple:
        enc = self.enclitic
        return (
            self.clitic_count,
            -len(self.base),
            tuple((p.slot, p.surface, p.function) for p in self.proclitics),
            (enc.surface, enc.person, enc.gender, enc.number) if enc else ("", 0, "", ""),
            str(self.base_tag),
            str(self.base_features),
        )

    def to_dict(self) -> dict:
        return {
            "proclitics": [p.to_dict() for p in self.proclitics],
            "base": self.base,
            "base_class": self.base_class,
            "base_tag": str(self.base_tag),
            "base_features": self.base_features.to_dict() if self.base_features else None,
            "enclitic": self.enclitic.to_dict() if self.enclitic else None,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Segmentation":
        from .features import features_from_dict

        return cls(
            proclitics=tuple(
                CliticItem(p["slot"], p["surface"], p["function"])
                for p in data["proclitics"]
            ),
            base=data["base"],
            base_tag=PosTag.parse(data["base_tag"]),
            base_features=features_from_dict(data["base_features"]),
            enclitic=Pronoun(**data["enclitic"]) if data.get("enclitic") else None,
        )


def check_agglutination(seg: Segmentation, rules: RuleConfig = DEFAULT_RULES) -> list[str]:
    """Return the ids of every violated agglutination constraint.

    An empty list means the segmentation is acceptable.
    """
    violations: list[str] = []
    f = seg.base_features

    if seg.base_class == VERB and isinstance(f, VerbFeatures):
        if seg.has_slot(INTERROGATION) and (
            f.tense == "imperative" or f.mood == "subjunctive"
        ):
            violations.append("V1")
        functions = {p.function for p in seg.proclitics if p.slot == PARTICLE}
        if (
            rules.subjunctive_lam_blocks_present
            and "subjunctive" in functions
            and f.tense == "present"
        ):
            violations.append("V2")
        if (
            rules.future_sin_blocks_present
            and "future" in functions
            and f.tense == "present"
        ):
            violations.append("V3")
        if seg.enclitic and (f.voice == PASSIVE or f.transitivity == LAZIM):
            violations.append("V4")

    if seg.base_class == NOUN and isinstance(f, NounFeatures):
        if seg.has_slot(ARTICLE) and seg.enclitic:
            violations.append("N1")
        if seg.has_slot(ARTICLE) and f.definiteness == "indefinite":
            violations.append("N2")
        if seg.has_slot(PREPOSITION) and f.case is not None and f.case != "GEN":
            violations.append("N3")

    if seg.morpheme_count > MAX_MORPHEMES:
        violations.append("G1")
    return violations


def _proclitic_parses(
    word: str, slots: tuple[str, ...], items: tuple[CliticItem, ...]
) -> list[tuple[tuple[CliticItem, ...], int]]:
    """All slot-ordered proclitic sequences that prefix *word*."""
    parses: list[tuple[tuple[CliticItem, ...], int]] = []

    def walk(slot_idx: int, pos: int, taken: tuple[CliticItem, ...]) -> None:
        parses.append((taken, pos))
        for idx in range(slot_idx, len(slots)):
            slot = slots[idx]
            for item in items:
                if item.slot != slot:
                    continue
                if word.startswith(item.surface, pos):
                    walk(idx + 1, pos + len(item.surface), taken + (item,))

    walk(0, 0, ())
    return parses


def segment(
    word: str,
    lexicon: Lexicon,
    inventory: CliticInventory = DEFAULT_INVENTORY,
    rules: RuleConfig = DEFAULT_RULES,
) -> list[Segmentation]:
    """Every admissible division of *word* into proclitics + base + enclitic.

    A division is admissible when the base skeleton is a lexicon entry of
    the slot-compatible class, slot order is respected, and no
    agglutination constraint fires.  Out-of-lexicon words yield an empty
    list.  Bases outside the noun/verb classes (particles, residuals) only
    match clitic-free.
    """
    results: list[Segmentation] = []
    for entry in lexicon.lookup(word):
        if entry.tag.major not in (NOUN, VERB):
            results.append(Segmentation((), word, entry.tag, entry.features))

    for major in (VERB, NOUN):
        slots, items = inventory.slot_items(major)
        enclitics = inventory.enclitics_for(major)
        for proclitics, consumed in _proclitic_parses(word, slots, items):
            rest = word[consumed:]
            if not rest:
                continue
            candidates: list[tuple[str, Pronoun | None]] = [(rest, None)]
            for pron in enclitics:
                if rest.endswith(pron.surface) and len(rest) > len(pron.surface):
                    candidates.append((rest[: -len(pron.surface)], pron))
            for base, enclitic in candidates:
                for entry in lexicon.lookup(base):
                    if entry.tag.major != major:
                        continue
                    seg = Segmentation(
                        proclitics, base, entry.tag, entry.features, enclitic
                    )
                    if not check_agglutination(seg, rules):
                        results.append(seg)

    results.sort(key=Segmentation.sort_key)
    return results
