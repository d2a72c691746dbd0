"""Document-level structural measures shared by the facet and exercise layers.

The difficulty model combines two axes per sentence — compositional
complexity and verb-class complexity — on a fixed, monotone scoring table:

    sentence score: 1 simple topic/predicate, or verb with explicit subject
                    2 any compound (mourakab) constituent, implicit subject,
                      or an unexpressed object of a transitive verb
                    3 corroborative/appositive compounds, manner complement
    verb score:     1 sound root, 2 hamzated, 3 weak (max over the sentence)

A sentence contributes round((sentence + verb) / 2), half away from zero,
capped at 3; the document takes the maximum, with 1 as the floor.
"""

from __future__ import annotations

from .corpus.model import NOMINAL, AnnotatedDocument, AnnotatedToken, SentenceAnalysis
from .morphology.features import VerbFeatures
from .morphology.pos import NOUN, PARTICLE, VERB

_ROOT_SCORE = {"sahih": 1, "mahmuz": 2, "mutal": 3}

ROLE_SET = frozenset({"verb", "subject", "object"})

# Token tags usable as closed-class material (selectable distractor pools).
CLOSED_CLASS_TAGS = frozenset(
    {
        (NOUN, "demonstrative"),
        (NOUN, "pronoun.personal"),
        (NOUN, "pronoun.relative"),
        (NOUN, "adverb_of_time"),
        (NOUN, "adverb_of_place"),
        (PARTICLE, "preposition"),
    }
)

EXTRACTABLE_SUBS = frozenset(
    {"demonstrative", "pronoun.personal", "adverb_of_time", "adverb_of_place"}
)


def root_class_of(token: AnnotatedToken) -> str | None:
    seg = token.segmentation
    if seg is None or not isinstance(seg.base_features, VerbFeatures):
        return None
    rc = seg.base_features.root_class
    return rc.split(".")[0] if rc else None


def verb_features_of(token: AnnotatedToken) -> VerbFeatures | None:
    seg = token.segmentation
    if seg is not None and isinstance(seg.base_features, VerbFeatures):
        return seg.base_features
    return None


def sentence_score(doc: AnnotatedDocument, sentence: SentenceAnalysis) -> int:
    tokens = doc.sentence_tokens(sentence)
    if sentence.kind == NOMINAL:
        if sentence.mubtada_form in ("mourakab_tawkidi", "mourakab_badali"):
            return 3
        compound = (sentence.mubtada_form or "").startswith("mourakab") or (
            sentence.khabar_form or ""
        ).startswith("mourakab")
        return 2 if compound else 1
    if any(t.sentence_role == "manner_complement" for t in tokens):
        return 3
    if sentence.subject_form == "dhamir_mostatir":
        return 2
    if sentence.verb_transitivity == "moutaadi" and not any(
        t.sentence_role == "object" for t in tokens
    ):
        return 2
    return 1


def verb_score(doc: AnnotatedDocument, sentence: SentenceAnalysis) -> int:
    score = 1
    for token in doc.sentence_tokens(sentence):
        if token.tag.major != VERB:
            continue
        kind = root_class_of(token)
        if kind in _ROOT_SCORE:
            score = max(score, _ROOT_SCORE[kind])
    return score


def difficulty_of(doc: AnnotatedDocument) -> int:
    level = 1
    for sentence in doc.sentences:
        combined = sentence_score(doc, sentence) + verb_score(doc, sentence)
        level = max(level, min(3, int(combined / 2 + 0.5)))
    return level


def has_roles(doc: AnnotatedDocument, sentence: SentenceAnalysis) -> bool:
    return any(
        t.sentence_role in ROLE_SET for t in doc.sentence_tokens(sentence)
    )


def material_counts(doc: AnnotatedDocument) -> dict[str, int]:
    """How much raw material each exercise kind can draw on."""
    verbs = sum(1 for t in doc.tokens if t.tag.major == VERB)
    closed = sum(
        1 for t in doc.tokens if (t.tag.major, t.tag.sub) in CLOSED_CLASS_TAGS
    )
    role_sentences = sum(
        1 for s in doc.sentences if s.kind == "verbal" and has_roles(doc, s)
    )
    extraction_sentences = sum(
        1
        for s in doc.sentences
        if any(t.tag.sub in EXTRACTABLE_SUBS for t in doc.sentence_tokens(s))
    )
    return {
        "cloze_wordbank": verbs,
        "cloze_select": closed,
        "role_mcq": role_sentences,
        "extraction": extraction_sentences,
    }
