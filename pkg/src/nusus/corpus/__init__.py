"""Corpus data model, persistence and ingestion."""

from .ingest import (
    AnnotationError,
    EmptyDocument,
    InvalidRequest,
    MetadataRejection,
    PendingAnnotation,
    ValidationIssue,
    detect_pro_drop,
    ingest_annotated,
    ingest_raw,
    validate_metadata,
)
from .model import (
    AnnotatedDocument,
    AnnotatedToken,
    AnnotationProblem,
    ApplicationProfile,
    DEFAULT_PROFILE,
    DocumentMetadata,
    ProfileElement,
    SentenceAnalysis,
    validate_document,
)
from .store import CorpusStore, NotFound
