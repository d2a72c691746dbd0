"""Conjunctive facet matching, shortest-first ranking, no-repeat rotation."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..corpus.store import CorpusStore
from ..facets.context import PedagogicalContext
from ..facets.prisms import PrismRegistry, UnknownPrism
from .query import Predicate, Query, QueryError


@dataclass(frozen=True)
class Collection:
    doc_ids: tuple[str, ...]
    generated_from: PedagogicalContext


@dataclass
class RotationSession:
    collection: Collection
    served: set[str] = field(default_factory=set)


def evaluate_predicate(pred: Predicate, value) -> bool:
    if value is None:
        return False
    if pred.op == "=":
        return value == pred.operand
    if pred.op == "<=":
        return value <= pred.operand
    if pred.op == ">=":
        return value >= pred.operand
    if pred.op == "in":
        return value in pred.operand
    if pred.op == "contains_count_ge":
        if not isinstance(value, dict):
            return False
        key, n = pred.operand["key"], pred.operand["n"]
        total = sum(value.values()) if key == "*" else value.get(key, 0)
        return total >= n
    raise QueryError(f"unknown comparator {pred.op!r}")


def execute(query: Query, store: CorpusStore, registry: PrismRegistry) -> Collection:
    """All stored documents satisfying every predicate, shortest first.

    Cached context-independent facets come from the manifest; the rest are
    recomputed against the query's context.  Ordering is total: ascending
    line count, then word count, then document id.
    """
    for pred in query.predicates:
        if pred.prism not in registry:
            raise QueryError(f"unregistered prism {pred.prism!r}")

    matches: list[tuple[int, int, str]] = []
    for doc_id in store.list_ids():
        cached = store.get_facets(doc_id)
        doc = None
        ok = True
        for pred in query.predicates:
            prism = registry.get(pred.prism)
            if not prism.context_dependent and pred.prism in cached:
                value = cached[pred.prism]
                if isinstance(value, dict) and "error" in value:
                    value = None
            else:
                if doc is None:
                    doc = store.get(doc_id)
                facet = registry.compute(pred.prism, doc, query.context)
                value = None if facet.error else facet.value
            if not evaluate_predicate(pred, value):
                ok = False
                break
        if ok:
            entry = store.manifest_entry(doc_id)
            matches.append((entry["line_count"], entry["word_count"], doc_id))

    matches.sort()
    return Collection(tuple(doc_id for _, _, doc_id in matches), query.context)


def next_from_collection(session: RotationSession) -> str | None:
    """The first unserved member, or None once the collection is exhausted."""
    for doc_id in session.collection.doc_ids:
        if doc_id not in session.served:
            session.served.add(doc_id)
            return doc_id
    return None
