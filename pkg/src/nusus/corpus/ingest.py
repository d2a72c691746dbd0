"""Document ingestion: metadata validation, auto-annotation, pro-drop."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..morphology.clitics import DEFAULT_INVENTORY, CliticInventory, segment
from ..morphology.features import VerbFeatures
from ..morphology.lexicon import Lexicon
from ..morphology.pos import NOUN, PARTICLE, PUNCTUATION, VERB, PosTag
from ..morphology.script import WORD_KIND, strip_diacritics, tokenize
from .model import (
    AnnotatedDocument,
    AnnotatedToken,
    ApplicationProfile,
    DocumentMetadata,
    MANDATORY,
    NOMINAL,
    SentenceAnalysis,
    VERBAL,
    validate_document,
)
from .store import CorpusStore

SENTENCE_ENDERS = frozenset(".!?؟")

MABNI_SUBS = frozenset({"pronoun.personal", "demonstrative", "pronoun.relative"})


@dataclass(frozen=True)
class ValidationIssue:
    field: str
    problem: str  # "missing" | "invalid"


class MetadataRejection(Exception):
    def __init__(self, issues: list[ValidationIssue]):
        super().__init__(", ".join(f"{i.field}:{i.problem}" for i in issues))
        self.issues = issues

    @property
    def fields(self) -> list[str]:
        return [i.field for i in self.issues]


class AnnotationError(Exception):
    def __init__(self, token_index: int | None, message: str):
        super().__init__(f"token {token_index}: {message}")
        self.token_index = token_index


class EmptyDocument(Exception):
    pass


class InvalidRequest(Exception):
    pass


@dataclass(frozen=True)
class PendingAnnotation:
    """A raw text the analyzer could not fully cover; lists the gaps."""

    text: str
    metadata: DocumentMetadata
    unanalyzable: tuple[str, ...]
    pending_id: str | None = None


def validate_metadata(
    md: DocumentMetadata, profile: ApplicationProfile
) -> list[ValidationIssue]:
    """Report empty mandatory fields and out-of-vocabulary values.

    Recommended and optional omissions never appear; a value is only
    checked against a vocabulary when it is non-empty or mandatory.
    """
    issues: list[ValidationIssue] = []
    for element in profile.elements:
        value = md.value(element.name)
        if not value:
            if element.obligation == MANDATORY:
                issues.append(ValidationIssue(element.name, "missing"))
            continue
        if element.vocabulary is not None and value not in element.vocabulary:
            issues.append(ValidationIssue(element.name, "invalid"))
    return issues


def ingest_annotated(
    doc: AnnotatedDocument, profile: ApplicationProfile, store: CorpusStore
) -> str:
    issues = validate_metadata(doc.metadata, profile)
    if issues:
        raise MetadataRejection(issues)
    problems = validate_document(doc)
    if problems:
        first = problems[0]
        raise AnnotationError(first.token_index, first.message)
    return store.ingest(doc)


def ingest_raw(
    text: str,
    md: DocumentMetadata,
    lexicon: Lexicon,
    profile: ApplicationProfile,
    store: CorpusStore,
    inventory: CliticInventory = DEFAULT_INVENTORY,
) -> str | PendingAnnotation:
    """Analyze a raw text and store it, or report what needs a human.

    Every word must yield at least one segmentation; the first-ranked
    analysis is adopted and the full list kept on the token.  Documents
    with gaps are returned as a persisted ``PendingAnnotation`` instead.
    """
    issues = validate_metadata(md, profile)
    if issues:
        raise MetadataRejection(issues)
    if not text.strip():
        raise EmptyDocument("raw text is empty")

    tokens, unanalyzable = _analyze_tokens(text, lexicon, inventory)
    if unanalyzable:
        pending_id = store.save_pending(text, md, unanalyzable)
        return PendingAnnotation(text, md, tuple(unanalyzable), pending_id)

    sentences = _split_sentences(tokens)
    annotated = [_assign_roles(tokens, s) for s in sentences]
    doc = AnnotatedDocument.build(md, text, tokens, annotated)
    return store.ingest(doc)


def detect_pro_drop(sentence: SentenceAnalysis) -> bool:
    """True when a verbal sentence leaves its subject pronoun unexpressed."""
    if sentence.kind != VERBAL:
        raise InvalidRequest("pro-drop is defined for verbal sentences only")
    return sentence.subject_form == "dhamir_mostatir"


# -- auto-annotation ------------------------------------------------------


def _analyze_tokens(
    text: str, lexicon: Lexicon, inventory: CliticInventory
) -> tuple[list[AnnotatedToken], list[str]]:
    tokens: list[AnnotatedToken] = []
    unanalyzable: list[str] = []
    for surface, kind in tokenize(text):
        if kind != WORD_KIND:
            tokens.append(AnnotatedToken(surface, surface, PosTag(PUNCTUATION)))
            continue
        skeleton = strip_diacritics(surface)
        analyses = segment(skeleton, lexicon, inventory)
        if not analyses:
            if skeleton not in unanalyzable:
                unanalyzable.append(skeleton)
            continue
        best = analyses[0]
        tokens.append(
            AnnotatedToken(
                surface=surface,
                skeleton=skeleton,
                tag=best.base_tag,
                segmentation=best,
                alternatives=tuple(analyses),
            )
        )
    return tokens, unanalyzable


def _split_sentences(tokens: list[AnnotatedToken]) -> list[tuple[int, int]]:
    spans: list[tuple[int, int]] = []
    start = 0
    for i, token in enumerate(tokens):
        if token.tag.major == PUNCTUATION and token.surface in SENTENCE_ENDERS:
            if any(t.is_word for t in tokens[start : i + 1]):
                spans.append((start, i + 1))
            start = i + 1
    if start < len(tokens) and any(t.is_word for t in tokens[start:]):
        spans.append((start, len(tokens)))
    return spans


def _mubtada_form(tag: PosTag) -> str:
    return {
        "pronoun.personal": "pronoun",
        "demonstrative": "demonstrative",
        "pronoun.relative": "relative",
        "interrogative": "interrogative",
        "masdar": "masdar",
    }.get(tag.sub or "", "simple_noun")


def _has_preposition(token: AnnotatedToken) -> bool:
    if token.tag == PosTag(PARTICLE, "preposition"):
        return True
    seg = token.segmentation
    return bool(seg) and seg.has_slot("preposition")


def _assign_roles(
    tokens: list[AnnotatedToken], span: tuple[int, int]
) -> SentenceAnalysis:
    """Heuristic structural analysis of one sentence.

    Verb-initial sentences are verbal, everything else nominal; roles are
    filled positionally and a human annotation can always override the
    result by ingesting the corrected document.
    """
    start, end = span
    words = [(i, tokens[i]) for i in range(start, end) if tokens[i].is_word]
    kind = VERBAL if words and words[0][1].tag.major == VERB else NOMINAL

    roles: dict[int, str] = {}
    if kind == VERBAL:
        verb_idx, verb_token = words[0]
        roles[verb_idx] = "verb"
        features = verb_token.segmentation.base_features if verb_token.segmentation else None
        transitivity = features.transitivity if isinstance(features, VerbFeatures) else None
        subject_form = "dhamir_mostatir"
        nouns = [
            (i, t)
            for i, t in words[1:]
            if t.tag.major == NOUN and t.tag.sub not in ("adverb_of_time", "adverb_of_place")
        ]
        if nouns:
            subj_idx, subj_token = nouns[0]
            roles[subj_idx] = "subject"
            subject_form = (
                "explicit_mabni" if subj_token.tag.sub in MABNI_SUBS else "explicit_moarab"
            )
            if transitivity == "moutaadi" and len(nouns) > 1:
                roles[nouns[1][0]] = "object"
        for i, t in words[1:]:
            if t.tag.sub == "adverb_of_time":
                roles.setdefault(i, "time_complement")
            elif t.tag.sub == "adverb_of_place":
                roles.setdefault(i, "place_complement")
        analysis = SentenceAnalysis(
            kind=VERBAL,
            span=span,
            subject_form=subject_form,
            verb_transitivity=transitivity,
        )
    else:
        mubtada_form = "simple_noun"
        khabar_form = "mofrada"
        if words:
            mub_idx, mub_token = words[0]
            roles[mub_idx] = "mubtada"
            mubtada_form = _mubtada_form(mub_token.tag)
        if len(words) > 1:
            kha_idx, kha_token = words[1]
            roles[kha_idx] = "khabar"
            if kha_token.tag.major == VERB:
                khabar_form = "mourakab_isnedi"
            elif _has_preposition(kha_token):
                khabar_form = "mourakab_jar"
        analysis = SentenceAnalysis(
            kind=NOMINAL, span=span, mubtada_form=mubtada_form, khabar_form=khabar_form
        )

    for i, role in roles.items():
        tokens[i] = _with_role(tokens[i], role)
    return analysis


def _with_role(token: AnnotatedToken, role: str) -> AnnotatedToken:
    return AnnotatedToken(
        surface=token.surface,
        skeleton=token.skeleton,
        tag=token.tag,
        segmentation=token.segmentation,
        alternatives=token.alternatives,
        sentence_role=role,
    )
