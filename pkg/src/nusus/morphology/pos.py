"""Part-of-speech taxonomy: five major classes with closed sub-class table."""

from __future__ import annotations

from dataclasses import dataclass

NOUN = "noun"
VERB = "verb"
PARTICLE = "particle"
RESIDUAL = "residual"
PUNCTUATION = "punctuation"

MAJORS = (NOUN, VERB, PARTICLE, RESIDUAL, PUNCTUATION)

# Closed refinement table; a sub is only valid under its major.
SUBS: dict[str, frozenset[str]] = {
    NOUN: frozenset(
        {
            "demonstrative",
            "pronoun.personal",
            "pronoun.relative",
            "adverb_of_time",
            "adverb_of_place",
            "proper",
            "interrogative",
            "masdar",
        }
    ),
    VERB: frozenset({"past", "present", "imperative"}),
    PARTICLE: frozenset({"preposition", "conjunction", "interrogation", "negation"}),
    RESIDUAL: frozenset(),
    PUNCTUATION: frozenset(),
}


class InvalidPosTag(ValueError):
    pass


@dataclass(frozen=True)
class PosTag:
    """A major class plus an optional refinement from the closed table."""

    major: str
    sub: str | None = None

    def __post_init__(self) -> None:
        if self.major not in MAJORS:
            raise InvalidPosTag(f"unknown major class: {self.major!r}")
        if self.sub is not None and self.sub not in SUBS[self.major]:
            raise InvalidPosTag(f"sub {self.sub!r} not valid under {self.major!r}")

    def __str__(self) -> str:
        return self.major if self.sub is None else f"{self.major}.{self.sub}"

    @classmethod
    def parse(cls, text: str) -> "PosTag":
        major, _, sub = text.partition(".")
        return cls(major, sub or None)
