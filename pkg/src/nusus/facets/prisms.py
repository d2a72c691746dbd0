"""The facet engine: prisms compute facet values from (document, context).

A prism is a named, deterministic computation; its facet value is what
search predicates match against.  Prisms that read only the document are
cacheable in the corpus manifest; context-dependent ones are recomputed
per query.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .. import analysis
from ..corpus.model import AnnotatedDocument, NOMINAL, VERBAL
from ..corpus.ingest import detect_pro_drop
from ..morphology.pos import PUNCTUATION, VERB
from .context import PedagogicalContext

INTEGER = "integer"
ENUMERATION = "enumeration"
VALUE_SET = "value set"
FRACTION = "fraction"


@dataclass(frozen=True)
class FacetValue:
    prism_name: str
    value: object
    error: str | None = None

    def to_jsonable(self):
        return {"error": self.error} if self.error else self.value


@dataclass(frozen=True)
class Prism:
    name: str
    facet_type: str
    compute: Callable[[AnnotatedDocument, PedagogicalContext], object]
    context_dependent: bool = False


class DuplicatePrism(ValueError):
    pass


class UnknownPrism(KeyError):
    pass


class PrismRegistry:
    def __init__(self) -> None:
        self._prisms: dict[str, Prism] = {}

    def register(self, prism: Prism) -> None:
        if prism.name in self._prisms:
            raise DuplicatePrism(prism.name)
        self._prisms[prism.name] = prism

    def get(self, name: str) -> Prism:
        try:
            return self._prisms[name]
        except KeyError:
            raise UnknownPrism(name) from None

    def __contains__(self, name: str) -> bool:
        return name in self._prisms

    def names(self) -> list[str]:
        return list(self._prisms)

    def compute(
        self, name: str, doc: AnnotatedDocument, cp: PedagogicalContext
    ) -> FacetValue:
        prism = self.get(name)
        try:
            return FacetValue(name, prism.compute(doc, cp))
        except Exception as exc:  # per-prism marker, never aborts the batch
            return FacetValue(name, None, error=f"{type(exc).__name__}: {exc}")

    def compute_all(
        self, doc: AnnotatedDocument, cp: PedagogicalContext
    ) -> list[FacetValue]:
        return [self.compute(name, doc, cp) for name in self._prisms]

    def cacheable_values(self, doc: AnnotatedDocument) -> dict:
        """Context-independent facet values, JSON-ready for the manifest."""
        neutral = PedagogicalContext()
        out = {}
        for name, prism in self._prisms.items():
            if prism.context_dependent:
                continue
            out[name] = self.compute(name, doc, neutral).to_jsonable()
        return out


# -- built-in prisms --------------------------------------------------------


def _sentence_type(doc: AnnotatedDocument, cp: PedagogicalContext) -> dict:
    counts = {"nominal": 0, "verbal": 0, "pro_drop": 0, "verbal_with_roles": 0}
    for s in doc.sentences:
        counts[s.kind] += 1
        if s.kind == VERBAL:
            if detect_pro_drop(s):
                counts["pro_drop"] += 1
            if analysis.has_roles(doc, s):
                counts["verbal_with_roles"] += 1
    return counts


def _verb_class(doc: AnnotatedDocument, cp: PedagogicalContext) -> dict:
    counts: dict[str, int] = {}
    for token in doc.tokens:
        if token.tag.major != VERB:
            continue
        kind = analysis.root_class_of(token)
        if kind:
            counts[kind] = counts.get(kind, 0) + 1
    return counts


def _representative_elements(doc: AnnotatedDocument, cp: PedagogicalContext) -> dict:
    counts: dict[str, int] = {}

    def bump(key: str) -> None:
        counts[key] = counts.get(key, 0) + 1

    for token in doc.tokens:
        if token.tag.major == PUNCTUATION:
            continue
        bump(f"pos.{token.tag.major}")
        if token.tag.major == VERB and cp.objective in ("conjugation", "mixed"):
            features = analysis.verb_features_of(token)
            if features:
                bump(f"verb.{features.tense}")
                if features.baab:
                    bump(f"baab.{features.baab}")
            kind = analysis.root_class_of(token)
            if kind:
                bump(f"root.{kind}")
    if cp.objective in ("grammar", "mixed"):
        for s in doc.sentences:
            if s.kind == NOMINAL:
                bump(f"mubtada.{s.mubtada_form}")
                bump(f"khabar.{s.khabar_form}")
            else:
                bump(f"subject.{s.subject_form}")
    return counts


def _unknown_vocabulary(wordlists: Callable[[str], frozenset | None]):
    def compute(doc: AnnotatedDocument, cp: PedagogicalContext) -> float:
        skeletons = {t.skeleton for t in doc.tokens if t.is_word}
        if not skeletons or not cp.student_level:
            return 0.0
        known = wordlists(cp.student_level)
        if known is None:
            return 0.0
        return len(skeletons - known) / len(skeletons)

    return compute


def build_registry(
    wordlists: Callable[[str], frozenset | None] | None = None,
) -> PrismRegistry:
    """Registry with the built-in prism set, in fixed registration order."""
    registry = PrismRegistry()
    registry.register(Prism("length", INTEGER, lambda d, c: d.line_count))
    registry.register(Prism("word_count", INTEGER, lambda d, c: d.word_count))
    registry.register(Prism("sentence_type", VALUE_SET, _sentence_type))
    registry.register(Prism("verb_class", VALUE_SET, _verb_class))
    registry.register(
        Prism(
            "representative_elements",
            VALUE_SET,
            _representative_elements,
            context_dependent=True,
        )
    )
    registry.register(
        Prism(
            "unknown_vocabulary",
            FRACTION,
            _unknown_vocabulary(wordlists or (lambda level: None)),
            context_dependent=True,
        )
    )
    registry.register(
        Prism("difficulty", INTEGER, lambda d, c: analysis.difficulty_of(d))
    )
    registry.register(
        Prism("exercise_material", VALUE_SET, lambda d, c: analysis.material_counts(d))
    )
    # Constant facets read straight off the metadata, so queries address
    # one namespace.
    registry.register(Prism("title", ENUMERATION, lambda d, c: d.metadata.title))
    registry.register(Prism("author", ENUMERATION, lambda d, c: d.metadata.author))
    registry.register(Prism("level", ENUMERATION, lambda d, c: d.metadata.level))
    return registry
