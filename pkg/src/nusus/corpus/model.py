"""Annotated-document data model and its JSON form (schema version 1)."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from ..morphology.clitics import Segmentation
from ..morphology.pos import PUNCTUATION, PosTag
from ..morphology.script import strip_diacritics

NOMINAL = "nominal"
VERBAL = "verbal"

VERBAL_ROLES = frozenset(
    {"verb", "subject", "object", "time_complement", "place_complement", "manner_complement"}
)
NOMINAL_ROLES = frozenset({"mubtada", "khabar"})

MUBTADA_FORMS = frozenset(
    {
        "simple_noun",
        "pronoun",
        "demonstrative",
        "mourakab_naati",
        "mourakab_idhafi",
        "mourakab_badali",
        "mourakab_atfi",
        "mourakab_tawkidi",
        "interrogative",
        "relative",
        "masdar",
    }
)
KHABAR_FORMS = frozenset(
    {"mofrada", "mourakab_jar", "mourakab_idhafi", "mourakab_atfi", "mourakab_isnedi"}
)
SUBJECT_FORMS = frozenset({"explicit_moarab", "explicit_mabni", "dhamir_mostatir"})

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class AnnotatedToken:
    surface: str
    skeleton: str
    tag: PosTag
    segmentation: Segmentation | None = None
    alternatives: tuple[Segmentation, ...] = ()
    sentence_role: str | None = None

    @property
    def is_word(self) -> bool:
        return self.tag.major != PUNCTUATION

    def to_dict(self) -> dict:
        return {
            "surface": self.surface,
            "skeleton": self.skeleton,
            "tag": str(self.tag),
            "segmentation": self.segmentation.to_dict() if self.segmentation else None,
            "alternatives": [s.to_dict() for s in self.alternatives],
            "sentence_role": self.sentence_role,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "AnnotatedToken":
        return cls(
            surface=data["surface"],
            skeleton=data["skeleton"],
            tag=PosTag.parse(data["tag"]),
            segmentation=(
                Segmentation.from_dict(data["segmentation"])
                if data.get("segmentation")
                else None
            ),
            alternatives=tuple(
                Segmentation.from_dict(s) for s in data.get("alternatives", [])
            ),
            sentence_role=data.get("sentence_role"),
        )


@dataclass(frozen=True)
class SentenceAnalysis:
    kind: str  # nominal | verbal
    span: tuple[int, int]  # token index range, end exclusive
    mubtada_form: str | None = None
    khabar_form: str | None = None
    subject_form: str | None = None
    verb_transitivity: str | None = None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "span": list(self.span),
            "mubtada_form": self.mubtada_form,
            "khabar_form": self.khabar_form,
            "subject_form": self.subject_form,
            "verb_transitivity": self.verb_transitivity,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SentenceAnalysis":
        return cls(
            kind=data["kind"],
            span=(data["span"][0], data["span"][1]),
            mubtada_form=data.get("mubtada_form"),
            khabar_form=data.get("khabar_form"),
            subject_form=data.get("subject_form"),
            verb_transitivity=data.get("verb_transitivity"),
        )


@dataclass(frozen=True)
class DocumentMetadata:
    title: str = ""
    author: str = ""
    source: str = ""
    level: str = ""
    language_variant: str = ""
    extra: tuple[tuple[str, str], ...] = ()

    def value(self, name: str) -> str:
        if name in ("title", "author", "source", "level", "language_variant"):
            return getattr(self, name)
        return dict(self.extra).get(name, "")

    def to_dict(self) -> dict:
        data = {
            "title": self.title,
            "author": self.author,
            "source": self.source,
            "level": self.level,
            "language_variant": self.language_variant,
        }
        data.update(dict(self.extra))
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "DocumentMetadata":
        known = {"title", "author", "source", "level", "language_variant"}
        return cls(
            title=data.get("title", ""),
            author=data.get("author", ""),
            source=data.get("source", ""),
            level=data.get("level", ""),
            language_variant=data.get("language_variant", ""),
            extra=tuple(sorted((k, v) for k, v in data.items() if k not in known)),
        )


MANDATORY = "mandatory"
RECOMMENDED = "recommended"
OPTIONAL = "optional"


@dataclass(frozen=True)
class ProfileElement:
    name: str
    obligation: str
    vocabulary: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.obligation not in (MANDATORY, RECOMMENDED, OPTIONAL):
            raise ValueError(f"unknown obligation {self.obligation!r}")
        if self.vocabulary is not None and not self.vocabulary:
            raise ValueError("vocabulary, when present, must be non-empty")


@dataclass(frozen=True)
class ApplicationProfile:
    elements: tuple[ProfileElement, ...]

    def __post_init__(self) -> None:
        names = [e.name for e in self.elements]
        if len(names) != len(set(names)):
            raise ValueError("profile element names must be unique")

    def element(self, name: str) -> ProfileElement | None:
        for e in self.elements:
            if e.name == name:
                return e
        return None


DEFAULT_PROFILE = ApplicationProfile(
    (
        ProfileElement("title", MANDATORY),
        ProfileElement("author", RECOMMENDED),
        ProfileElement("level", MANDATORY, ("primary", "secondary")),
        ProfileElement("language_variant", MANDATORY, ("native", "foreign")),
        ProfileElement("source", OPTIONAL),
    )
)


def count_lines(raw_text: str) -> int:
    return sum(1 for line in raw_text.splitlines() if line.strip())


@dataclass(frozen=True)
class AnnotatedDocument:
    id: str
    metadata: DocumentMetadata
    raw_text: str
    tokens: tuple[AnnotatedToken, ...]
    sentences: tuple[SentenceAnalysis, ...]
    line_count: int
    word_count: int

    @classmethod
    def build(
        cls,
        metadata: DocumentMetadata,
        raw_text: str,
        tokens,
        sentences,
        doc_id: str = "",
    ) -> "AnnotatedDocument":
        tokens = tuple(tokens)
        return cls(
            id=doc_id,
            metadata=metadata,
            raw_text=raw_text,
            tokens=tokens,
            sentences=tuple(sentences),
            line_count=count_lines(raw_text),
            word_count=sum(1 for t in tokens if t.is_word),
        )

    def with_id(self, doc_id: str) -> "AnnotatedDocument":
        return replace(self, id=doc_id)

    def sentence_tokens(self, sentence: SentenceAnalysis) -> list[AnnotatedToken]:
        start, end = sentence.span
        return list(self.tokens[start:end])

    def to_dict(self) -> dict:
        return {
            "v": SCHEMA_VERSION,
            "id": self.id,
            "metadata": self.metadata.to_dict(),
            "raw_text": self.raw_text,
            "tokens": [t.to_dict() for t in self.tokens],
            "sentences": [s.to_dict() for s in self.sentences],
            "line_count": self.line_count,
            "word_count": self.word_count,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "AnnotatedDocument":
        if data.get("v") != SCHEMA_VERSION:
            raise ValueError(f"unsupported document schema version {data.get('v')!r}")
        return cls(
            id=data["id"],
            metadata=DocumentMetadata.from_dict(data["metadata"]),
            raw_text=data["raw_text"],
            tokens=tuple(AnnotatedToken.from_dict(t) for t in data["tokens"]),
            sentences=tuple(SentenceAnalysis.from_dict(s) for s in data["sentences"]),
            line_count=data["line_count"],
            word_count=data["word_count"],
        )


@dataclass(frozen=True)
class AnnotationProblem:
    token_index: int | None
    message: str


def validate_document(doc: AnnotatedDocument) -> list[AnnotationProblem]:
    """Check every structural invariant of a document.

    Skeleton/surface agreement per token, span sanity, role/kind agreement
    and the two derived counts.  Returns an empty list when sound.
    """
    problems: list[AnnotationProblem] = []
    for i, token in enumerate(doc.tokens):
        if strip_diacritics(token.surface) != token.skeleton:
            problems.append(
                AnnotationProblem(i, "surface does not strip to stored skeleton")
            )

    last_end = 0
    for s in doc.sentences:
        start, end = s.span
        if not (0 <= start < end <= len(doc.tokens)):
            problems.append(AnnotationProblem(None, f"span {s.span} out of range"))
            continue
        if start < last_end:
            problems.append(AnnotationProblem(None, f"span {s.span} overlaps or disorders"))
        last_end = end
        if s.kind == NOMINAL:
            if s.mubtada_form is None or s.khabar_form is None or s.subject_form:
                problems.append(
                    AnnotationProblem(None, "nominal sentence needs mubtada/khabar forms only")
                )
            allowed = NOMINAL_ROLES
        elif s.kind == VERBAL:
            if s.subject_form is None:
                problems.append(AnnotationProblem(None, "verbal sentence needs a subject form"))
            allowed = VERBAL_ROLES
        else:
            problems.append(AnnotationProblem(None, f"unknown sentence kind {s.kind!r}"))
            continue
        for i in range(start, end):
            role = doc.tokens[i].sentence_role
            if role is not None and role not in allowed:
                problems.append(
                    AnnotationProblem(i, f"role {role!r} not allowed in {s.kind} sentence")
                )

    if doc.word_count != sum(1 for t in doc.tokens if t.is_word):
        problems.append(AnnotationProblem(None, "word_count mismatch"))
    if doc.line_count != count_lines(doc.raw_text):
        problems.append(AnnotationProblem(None, "line_count mismatch"))
    return problems
