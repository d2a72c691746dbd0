"""Context-to-query translation driven by an editable mapping table.

Each mapping rule belongs to a group; the first rule of a group whose
``when`` clause matches the context contributes its predicate.  ``"*"``
matches any non-empty field value, operands may splice in context fields
(``{"$context": field}``) or the per-level unknown-vocabulary threshold
(``{"$threshold": true}``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from ..facets.context import PedagogicalContext

COMPARATORS = ("=", "<=", ">=", "in", "contains_count_ge")


class QueryError(Exception):
    pass


@dataclass(frozen=True)
class Predicate:
    prism: str
    op: str
    operand: object

    def __post_init__(self) -> None:
        if self.op not in COMPARATORS:
            raise QueryError(f"unknown comparator {self.op!r}")

    def to_jsonable(self) -> list:
        return [self.prism, self.op, self.operand]


@dataclass(frozen=True)
class Query:
    predicates: tuple[Predicate, ...]
    context: PedagogicalContext

    def to_jsonable(self) -> dict:
        return {
            "predicates": [p.to_jsonable() for p in self.predicates],
            "context": self.context.to_dict(),
        }


def _load_default_mapping() -> dict:
    text = resources.files("nusus.data").joinpath("query_mapping.json").read_text("utf-8")
    return json.loads(text)


_DEFAULT_MAPPING = _load_default_mapping()


def _matches(when: dict, cp: PedagogicalContext) -> bool:
    for field, wanted in when.items():
        actual = cp.field(field)
        if wanted == "*":
            if not actual:
                return False
        elif actual != wanted:
            return False
    return True


def _resolve_operand(operand, cp: PedagogicalContext, thresholds: dict):
    if isinstance(operand, dict):
        if "$context" in operand:
            return cp.field(operand["$context"])
        if "$threshold" in operand:
            level = cp.student_level or "default"
            return thresholds.get(level, thresholds.get("default", 0.2))
        return operand
    return operand


def build_query(cp: PedagogicalContext, mapping: dict | None = None) -> Query:
    mapping = mapping or _DEFAULT_MAPPING
    thresholds = mapping.get("thresholds", {"default": 0.2})
    predicates: list[Predicate] = []
    done_groups: set[str] = set()
    for rule in mapping["rules"]:
        group = rule["group"]
        if group in done_groups or not _matches(rule["when"], cp):
            continue
        done_groups.add(group)
        spec = rule["predicate"]
        predicates.append(
            Predicate(
                prism=spec["prism"],
                op=spec["op"],
                operand=_resolve_operand(spec["operand"], cp, thresholds),
            )
        )
    return Query(tuple(predicates), cp)
