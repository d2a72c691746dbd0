"""Triliteral root classification: sound, hamzated, weak."""

from __future__ import annotations

from dataclasses import dataclass

from .script import HAMZA_LETTERS, WEAK_LETTERS, strip_diacritics

SAHIH = "sahih"
MAHMUZ = "mahmuz"
MUTAL = "mutal"

INITIAL = "initial"
MEDIAL = "medial"
FINAL = "final"

_POSITIONS = (INITIAL, MEDIAL, FINAL)


class UnsupportedRoot(ValueError):
    """Raised for roots outside the triliteral scope."""


@dataclass(frozen=True)
class RootClass:
    kind: str
    weak_position: str | None = None

    def __post_init__(self) -> None:
        if (self.kind == MUTAL) != (self.weak_position is not None):
            raise ValueError("weak_position present iff kind is mutal")

    def __str__(self) -> str:
        if self.kind == MUTAL:
            return f"{self.kind}.{self.weak_position}"
        return self.kind

    @classmethod
    def parse(cls, text: str) -> "RootClass":
        kind, _, pos = text.partition(".")
        return cls(kind, pos or None)


def classify_root(root: str) -> RootClass:
    """Classify a bare triliteral root.

    A root containing a weak letter (alef, waw, ya) is mutal, carrying the
    weak radical's position; a root containing a hamza seat is mahmuz;
    anything else is sahih.  Weakness takes precedence when both occur.
    """
    radicals = strip_diacritics(root)
    if len(radicals) != 3:
        raise UnsupportedRoot(f"expected 3 radicals, got {len(radicals)} in {root!r}")
    for ch, position in zip(radicals, _POSITIONS):
        if ch in WEAK_LETTERS:
            return RootClass(MUTAL, position)
    if any(ch in HAMZA_LETTERS for ch in radicals):
        return RootClass(MAHMUZ)
    return RootClass(SAHIH)
