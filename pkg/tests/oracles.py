"""Brute-force reference implementations the fast paths are checked against."""

from __future__ import annotations

import itertools
from collections import defaultdict

from nusus.morphology.clitics import (
    DEFAULT_INVENTORY,
    DEFAULT_RULES,
    CliticInventory,
    RuleConfig,
    Segmentation,
    check_agglutination,
)
from nusus.morphology.lexicon import Lexicon, LexiconEntry
from nusus.morphology.pos import NOUN, VERB


def seg_key(seg: Segmentation) -> tuple:
    enc = seg.enclitic
    return (
        tuple((p.slot, p.surface, p.function) for p in seg.proclitics),
        seg.base,
        str(seg.base_tag),
        str(seg.base_features),
        (enc.surface, enc.person, enc.gender, enc.number) if enc else None,
    )


def all_attachments(
    entry: LexiconEntry, inventory: CliticInventory
) -> list[Segmentation]:
    """Every slot-ordered clitic attachment around one base, legal or not."""
    if entry.tag.major not in (NOUN, VERB):
        return [Segmentation((), entry.skeleton, entry.tag, entry.features)]
    slots, items = inventory.slot_items(entry.tag.major)
    choices = [[None] + [it for it in items if it.slot == slot] for slot in slots]
    enclitics = (None,) + inventory.enclitics_for(entry.tag.major)
    out = []
    for combo in itertools.product(*choices):
        proclitics = tuple(c for c in combo if c is not None)
        for enc in enclitics:
            out.append(
                Segmentation(proclitics, entry.skeleton, entry.tag, entry.features, enc)
            )
    return out


def legal_closure(
    lexicon: Lexicon,
    inventory: CliticInventory = DEFAULT_INVENTORY,
    rules: RuleConfig = DEFAULT_RULES,
) -> tuple[dict[str, set[tuple]], set[str]]:
    """Enumerate the full attachment closure of a lexicon.

    Returns ``(accepted, rejected_surfaces)``: every legal surface mapped to
    the set of its legal segmentation keys, plus the surfaces produced only
    by constraint-violating attachments.
    """
    accepted: dict[str, set[tuple]] = defaultdict(set)
    violating: set[str] = set()
    for entry in lexicon.entries():
        for seg in all_attachments(entry, inventory):
            if check_agglutination(seg, rules):
                violating.add(seg.surface())
            else:
                accepted[seg.surface()].add(seg_key(seg))
    rejected_only = violating - set(accepted)
    return dict(accepted), rejected_only
