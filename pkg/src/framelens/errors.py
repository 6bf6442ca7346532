"""Exception types shared across the package."""


class FramelensError(Exception):
    """Base class for all errors raised by this package."""


class LoadError(FramelensError):
    """A data file could not be parsed or failed validation.

    Where possible the message names the offending file and line number.
    """


class ConlluError(LoadError):
    """Malformed or invalid CoNLL-U input."""


class AnnotationError(LoadError):
    """Malformed or invalid frame-annotation input."""


class KBError(LoadError):
    """Problem loading or querying the frame knowledge base."""


class QueryError(FramelensError):
    """Invalid query against a loaded corpus (bad filter key, unknown id, ...)."""


class AnalysisError(FramelensError):
    """A frame instance could not be analyzed."""
