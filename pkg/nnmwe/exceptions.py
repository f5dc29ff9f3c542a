class NnmweError(ValueError):
    """Base class for every error raised by the package."""


class ConfigError(NnmweError):
    """A configuration value is missing or violates its type's invariants."""


class FormatError(NnmweError):
    """
    A line of an input file could not be parsed.

    Attributes:
        line_number (int): 1-based line number of the offending line
    """

    def __init__(self, message, line_number=None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class CorpusFormatError(FormatError):
    """A line of an annotated corpus could not be parsed."""


class LexiconFormatError(FormatError):
    """
    A lexicon entry could not be parsed.

    Attributes:
        headword (str): The headword being parsed, when known
    """

    def __init__(self, message, line_number=None, headword=None):
        self.headword = headword
        super().__init__(message, line_number)


class MeasureError(NnmweError):
    """An association measure was applied to a table outside its domain."""


class ZeroVectorError(NnmweError):
    """A similarity vector has no nonzero coordinate."""


class TaxonomyError(NnmweError):
    """A taxonomy or translation map breaks its structural invariants."""
