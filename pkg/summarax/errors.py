"""Exception hierarchy for summarax."""

from typing import Iterable


class SummaraxError(Exception):
    """Base class for all summarax errors."""


# Corpus

class CorpusError(SummaraxError):
    """Corpus could not be loaded or validated."""


class MissingDocsDirError(CorpusError):
    """Corpus root has no ``docs/`` subdirectory."""


class EmptyCorpusError(CorpusError):
    """Corpus contains zero readable documents."""


class CorpusEncodingError(CorpusError):
    """A corpus file is not valid UTF-8."""

    def __init__(self, filename: str, reason: str = ""):
        self.filename = filename
        super().__init__(f"Not valid UTF-8: {filename}" + (f" ({reason})" if reason else ""))


class InvalidDocumentError(CorpusError, ValueError):
    """Document violates its invariants (empty text, bad id)."""


class UnpairedDocumentsError(CorpusError):
    """Some documents have no reference summary."""

    def __init__(self, ids: Iterable[str]):
        self.ids = sorted(ids)
        super().__init__(f"Documents without reference: {', '.join(self.ids)}")


# Text pipeline

class InvalidNError(SummaraxError, ValueError):
    """n-gram order below 1."""


class EmptyUnitListError(SummaraxError, ValueError):
    """IDF requested over zero text units."""


class StopwordEncodingError(SummaraxError, OSError):
    """A stopword file is not valid UTF-8."""

    def __init__(self, path: str, reason: str = ""):
        super().__init__(f"Not valid UTF-8: {path}" + (f" ({reason})" if reason else ""))
        self.path = path


# Numerics

class NumericsError(SummaraxError, ValueError):
    """Invalid input to a numeric kernel."""


class NonFiniteWeightError(NumericsError):
    pass


class NegativeWeightError(NumericsError):
    pass


class DimensionZeroError(NumericsError):
    pass


class InvalidDistributionError(NumericsError):
    pass


# Summarizers

class SummarizeError(SummaraxError):
    """Summarizer could not produce a summary."""


class EmptyDocumentError(SummarizeError, ValueError):
    """Document has zero sentences."""


class InvalidSummaryLengthError(SummarizeError, ValueError):
    """Requested summary length k < 1."""


# Metrics

class MetricsError(SummaraxError, ValueError):
    """Invalid input to a metric."""


class LengthMismatchError(MetricsError):
    pass


class InvalidWeightsError(MetricsError):
    pass


class InvalidReferenceLengthError(MetricsError):
    pass


class OutOfRangeError(MetricsError):
    pass


# Report

class ReportError(SummaraxError):
    pass


class UnsupportedFormatError(ReportError, ValueError):
    pass


class DocumentEvaluationError(ReportError):
    """A (document, algorithm) evaluation task failed."""

    def __init__(self, doc_id: str, algorithm: str, cause: Exception):
        self.doc_id = doc_id
        self.algorithm = algorithm
        self.cause = cause
        super().__init__(f"Evaluation failed for document '{doc_id}' ({algorithm}): {cause}")
