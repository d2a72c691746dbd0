"""Derivation templates for sound triliteral roots.

Produces the unvocalized derived skeleton: the active participle on the
CaCiC-with-alef template, the passive participle on the ma-CCuC template,
and the place noun on the ma-CCC-a template (a lexicon form may override
the place-noun default, which covers only the productive pattern).
"""

from __future__ import annotations

from .roots import SAHIH, UnsupportedRoot, classify_root
from .script import strip_diacritics

ALIF = "ا"
WAW = "و"
MIM = "م"
TA_MARBUTA = "ة"

ACTIVE_PARTICIPLE = "active_participle"
PASSIVE_PARTICIPLE = "passive_participle"
PLACE_NOUN = "place_noun"

KINDS = (ACTIVE_PARTICIPLE, PASSIVE_PARTICIPLE, PLACE_NOUN)


def derive(root: str, kind: str, lexicon_override: str | None = None) -> str:
    radicals = strip_diacritics(root)
    if classify_root(radicals).kind != SAHIH:
        raise UnsupportedRoot(f"derivation covers sound roots only: {root!r}")
    c1, c2, c3 = radicals
    if kind == ACTIVE_PARTICIPLE:
        return c1 + ALIF + c2 + c3
    if kind == PASSIVE_PARTICIPLE:
        return MIM + c1 + c2 + WAW + c3
    if kind == PLACE_NOUN:
        if lexicon_override is not None:
            return lexicon_override
        return MIM + c1 + c2 + c3 + TA_MARBUTA
    raise ValueError(f"unknown derivation kind {kind!r}")
