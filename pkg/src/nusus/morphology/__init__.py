"""Rule-based Arabic morphology: script, segmentation, inflection, derivation."""

from .clitics import (
    DEFAULT_INVENTORY,
    DEFAULT_RULES,
    CliticInventory,
    CliticItem,
    Pronoun,
    RuleConfig,
    Segmentation,
    check_agglutination,
    segment,
)
from .conjugation import BAABS, Baab, InvalidConjugationRequest, conjugate
from .declension import CaseMarking, MissingLexiconEntry, decline
from .derivation import derive
from .features import NounFeatures, VerbFeatures
from .lexicon import Lexicon, LexiconEntry, load_lexicon, parse_lexicon
from .pos import PosTag
from .roots import RootClass, UnsupportedRoot, classify_root
from .script import Skeleton, strip_diacritics, tokenize

__all__ = [
    "BAABS",
    "Baab",
    "CaseMarking",
    "CliticInventory",
    "CliticItem",
    "DEFAULT_INVENTORY",
    "DEFAULT_RULES",
    "InvalidConjugationRequest",
    "Lexicon",
    "LexiconEntry",
    "MissingLexiconEntry",
    "NounFeatures",
    "PosTag",
    "Pronoun",
    "RootClass",
    "RuleConfig",
    "Segmentation",
    "Skeleton",
    "UnsupportedRoot",
    "VerbFeatures",
    "check_agglutination",
    "classify_root",
    "conjugate",
    "decline",
    "derive",
    "load_lexicon",
    "parse_lexicon",
    "segment",
    "strip_diacritics",
    "tokenize",
]
