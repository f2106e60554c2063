"""Exception types shared across the engine, storage, and service layers."""


class ManuscriptorError(Exception):
    """Base class for all errors raised by this package."""


class FilterSyntaxError(ManuscriptorError):
    """A keyword filter group is malformed or normalizes to nothing."""

    def __init__(self, message: str, group: str | None = None):
        super().__init__(message)
        self.group = group


class DuplicateIdError(ManuscriptorError):
    """Two corpus papers share the same id."""

    def __init__(self, paper_id: str):
        super().__init__(f"duplicate paper id: {paper_id!r}")
        self.paper_id = paper_id


class VectorFormatError(ManuscriptorError):
    """A word-vector file violates the textual format."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InvalidEmbeddingError(ManuscriptorError):
    """Distance requested on an invalid or zero-norm embedding."""


class InvalidSourceError(ManuscriptorError):
    """The ranking source cannot be embedded (all tokens out of vocabulary)."""


class UnknownPaperError(ManuscriptorError):
    """A paper id is not present in the loaded corpus."""

    def __init__(self, paper_id: str):
        super().__init__(f"unknown paper id: {paper_id!r}")
        self.paper_id = paper_id


class CorpusParseError(ManuscriptorError):
    """A corpus record line is not a valid paper record."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class CorruptSnapshotError(ManuscriptorError):
    """A snapshot section is missing, truncated, or fails its hash check."""

    def __init__(self, message: str, filename: str | None = None):
        if filename is not None:
            message = f"{filename}: {message}"
        super().__init__(message)
        self.filename = filename


class DuplicateMarkerError(ManuscriptorError):
    """A citation marker id is already registered."""

    def __init__(self, marker_id: str):
        super().__init__(f"duplicate citation marker: {marker_id!r}")
        self.marker_id = marker_id


class NotFoundError(ManuscriptorError):
    """A library entry or citation marker does not exist."""


class MalformedDoiError(ManuscriptorError):
    """A DOI string does not match the 10.<registrant>/<suffix> shape."""


class DoiNotFoundError(ManuscriptorError):
    """The resolver has no metadata for a well-formed DOI."""


class ResolverUnavailableError(ManuscriptorError):
    """The metadata resolver cannot be reached."""


class InsufficientCorpusError(ManuscriptorError):
    """An evaluation asked for more samples than the corpus holds."""
