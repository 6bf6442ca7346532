"""Corpus perspective analysis with frame semantics.

The package takes dependency-parsed text (CoNLL-U) with frame annotations
and derives, per frame instance, the syntactic construction, role-dependency
links, and predicate-root status; on top of that sit corpus statistics
(construction distributions, role-link frequencies, event-to-publication
time lags, victim-foregrounding shares), deterministic sentence sampling,
and embedding-based frame discovery with relation-driven alternatives.
"""

from .annotations import FrameInstance, RoleSpan, Span
from .conllu import Sentence, Token, parse_conllu
from .corpus import Corpus, CorpusDocument, EventRecord, load_corpus, open_corpus, save_corpus
from .discovery import (
    FrameEmbedding,
    WordVectorStore,
    embed_frames,
    keyword_search,
    load_word_vectors,
)
from .errors import (
    AnalysisError,
    AnnotationError,
    ConlluError,
    FramelensError,
    KBError,
    LoadError,
    QueryError,
)
from .kb import (
    DEFAULT_ALTERNATIVE_RELATIONS,
    Agentivity,
    FrameEntry,
    FrameKB,
    FrameRelation,
    load_kb,
)
from .stats import (
    CorpusFilter,
    FeatureQuery,
    FocusScoreTable,
    Predicate,
    construction_by_frame,
    focus_scores,
    foregrounding_share,
    frame_frequencies,
    role_link_frequencies,
    sample_sentences,
    time_lag_histogram,
)
from .syntax import (
    AnalyzedCorpus,
    Construction,
    PerspectiveAnnotation,
    RoleDependencyLink,
    analyze_corpus,
    analyze_instance,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisError",
    "AnalyzedCorpus",
    "Agentivity",
    "AnnotationError",
    "ConlluError",
    "Construction",
    "Corpus",
    "CorpusDocument",
    "CorpusFilter",
    "DEFAULT_ALTERNATIVE_RELATIONS",
    "EventRecord",
    "FeatureQuery",
    "FocusScoreTable",
    "FrameEmbedding",
    "FrameEntry",
    "FrameInstance",
    "FrameKB",
    "FrameRelation",
    "FramelensError",
    "KBError",
    "LoadError",
    "PerspectiveAnnotation",
    "Predicate",
    "QueryError",
    "RoleDependencyLink",
    "RoleSpan",
    "Sentence",
    "Span",
    "Token",
    "WordVectorStore",
    "analyze_corpus",
    "analyze_instance",
    "construction_by_frame",
    "embed_frames",
    "focus_scores",
    "foregrounding_share",
    "frame_frequencies",
    "keyword_search",
    "load_corpus",
    "load_kb",
    "load_word_vectors",
    "open_corpus",
    "parse_conllu",
    "role_link_frequencies",
    "sample_sentences",
    "save_corpus",
    "time_lag_histogram",
    "__version__",
]
