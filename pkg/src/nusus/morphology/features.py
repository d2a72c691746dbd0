"""Feature bundles carried by lexicon entries and segmentations."""

from __future__ import annotations

from dataclasses import dataclass, field

INDICATIVE = "indicative"
SUBJUNCTIVE = "subjunctive"

ACTIVE = "active"
PASSIVE = "passive"

LAZIM = "lazim"  # intransitive: subject only
MOUTAADI = "moutaadi"  # transitive: subject and object


@dataclass(frozen=True)
class VerbFeatures:
    tense: str  # past | present | imperative
    mood: str = INDICATIVE
    voice: str = ACTIVE
    transitivity: str = MOUTAADI
    root_class: str | None = None  # e.g. "sahih", "mutal.medial"
    baab: str | None = None  # e.g. "a-u"

    def to_dict(self) -> dict:
        return {
            "kind": "verb",
            "tense": self.tense,
            "mood": self.mood,
            "voice": self.voice,
            "transitivity": self.transitivity,
            "root_class": self.root_class,
            "baab": self.baab,
        }


@dataclass(frozen=True)
class NounFeatures:
    case: str | None = None  # NOM | ACC | GEN, None when underspecified
    definiteness: str | None = None  # definite | indefinite
    diptote: bool = False

    def to_dict(self) -> dict:
        return {
            "kind": "noun",
            "case": self.case,
            "definiteness": self.definiteness,
            "diptote": self.diptote,
        }


Features = VerbFeatures | NounFeatures


def features_from_dict(data: dict | None) -> Features | None:
    if data is None:
        return None
    kind = data.get("kind")
    if kind == "verb":
        return VerbFeatures(
            tense=data["tense"],
            mood=data.get("mood", INDICATIVE),
            voice=data.get("voice", ACTIVE),
            transitivity=data.get("transitivity", MOUTAADI),
            root_class=data.get("root_class"),
            baab=data.get("baab"),
        )
    if kind == "noun":
        return NounFeatures(
            case=data.get("case"),
            definiteness=data.get("definiteness"),
            diptote=bool(data.get("diptote", False)),
        )
    raise ValueError(f"unknown feature bundle kind {kind!r}")
