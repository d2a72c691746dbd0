"""Base-form lexicon: skeleton entries with class and features.

The on-disk format is one UTF-8 tab-separated record per reading:

    skeleton  lemma  pos  root  root_class  transitivity  diptote  broken_plural  baab

with ``-`` for empty fields.  ``pos`` uses dotted tags (``verb.past``,
``noun.demonstrative``); the verb tense is the tag refinement.  The baab
column is an extension over the minimal record so conjugation-class facet
counts do not need to re-derive vowels from the vocalized lemma.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .features import Features, NounFeatures, VerbFeatures
from .pos import NOUN, VERB, PosTag
from .roots import classify_root


@dataclass(frozen=True)
class LexiconEntry:
    skeleton: str
    tag: PosTag
    features: Features | None = None
    lemma: str | None = None
    root: str | None = None
    broken_plural: str | None = None

    def sort_key(self) -> tuple:
        return (self.skeleton, str(self.tag), str(self.features), self.lemma or "")


class Lexicon:
    def __init__(self, entries: list[LexiconEntry] | None = None):
        self._by_skeleton: dict[str, list[LexiconEntry]] = {}
        for entry in entries or []:
            self.add(entry)

    def add(self, entry: LexiconEntry) -> None:
        bucket = self._by_skeleton.setdefault(entry.skeleton, [])
        if entry not in bucket:
            bucket.append(entry)

    def lookup(self, skeleton: str) -> list[LexiconEntry]:
        return self._by_skeleton.get(skeleton, [])

    def __contains__(self, skeleton: str) -> bool:
        return skeleton in self._by_skeleton

    def __len__(self) -> int:
        return sum(len(v) for v in self._by_skeleton.values())

    def entries(self) -> list[LexiconEntry]:
        return [e for bucket in self._by_skeleton.values() for e in bucket]

    def merge(self, other: "Lexicon") -> None:
        for entry in other.entries():
            self.add(entry)


def _opt(field: str) -> str | None:
    return None if field in ("-", "") else field


def parse_lexicon(text: str) -> Lexicon:
    lex = Lexicon()
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        cols = line.split("\t")
        cols += ["-"] * (9 - len(cols))
        skeleton, lemma, pos, root, root_class, trans, diptote, broken, baab = cols[:9]
        tag = PosTag.parse(pos)
        root = _opt(root)
        if root and _opt(root_class) is None:
            root_class = str(classify_root(root))
        features: Features | None = None
        if tag.major == VERB:
            if tag.sub is None:
                raise ValueError(f"verb entry needs a tense tag: {line!r}")
            features = VerbFeatures(
                tense=tag.sub,
                transitivity=_opt(trans) or "moutaadi",
                root_class=_opt(root_class),
                baab=_opt(baab),
            )
        elif tag.major == NOUN:
            features = NounFeatures(diptote=diptote == "1")
        lex.add(
            LexiconEntry(
                skeleton=skeleton,
                tag=tag,
                features=features,
                lemma=_opt(lemma),
                root=root,
                broken_plural=_opt(broken),
            )
        )
    return lex


def load_lexicon(path: str | Path) -> Lexicon:
    return parse_lexicon(Path(path).read_text("utf-8"))
