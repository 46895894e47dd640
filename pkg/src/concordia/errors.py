"""Exception hierarchy shared by all pipeline stages.

Parsing errors carry enough coordinates (line number, byte offset) for the
CLI to point at the offending spot in an input file.
"""

from __future__ import annotations


class ConcordiaError(Exception):
    """Base class for all errors raised by this package."""


class MalformedLineError(ConcordiaError):
    """A tabular input line does not match the expected column layout."""

    def __init__(self, message: str, line_no: int, line: str = ""):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
        self.line = line


class UnknownPosCodeError(ConcordiaError):
    """A part-of-speech code is outside the closed code set."""

    def __init__(self, code: str, line_no: int | None = None):
        where = f"line {line_no}: " if line_no is not None else ""
        super().__init__(f"{where}unknown part-of-speech code {code!r}")
        self.code = code
        self.line_no = line_no


class InconsistentGroupError(ConcordiaError):
    """One lemma group declares two different lemma frequencies."""

    def __init__(self, lemma: str, first: int, second: int, line_no: int):
        super().__init__(
            f"line {line_no}: lemma {lemma!r} declared with frequency "
            f"{second} after {first}"
        )
        self.lemma = lemma


class DuplicateSurfaceError(ConcordiaError):
    """The same surface key is mapped twice in one lemma table."""

    def __init__(self, surface_key: str, line_no: int | None = None):
        where = f"line {line_no}: " if line_no is not None else ""
        super().__init__(f"{where}duplicate surface key {surface_key!r}")
        self.surface_key = surface_key


class LemmaWithoutPosError(ConcordiaError):
    """A wordform references a lemma absent from the frequency list."""

    def __init__(self, lemma: str, surface_key: str):
        super().__init__(
            f"wordform {surface_key!r} references lemma {lemma!r} "
            "which has no frequency-list entry (no POS source)"
        )
        self.lemma = lemma
        self.surface_key = surface_key


class UnbalancedBraceError(ConcordiaError):
    """A '{' has no matching '}' within the same paragraph."""

    def __init__(self, offset: int):
        super().__init__(f"unbalanced '{{' at offset {offset}")
        self.offset = offset


class MalformedTagError(ConcordiaError):
    """Inline tag does not follow the surface<POS|LEMMA> grammar."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"offset {offset}: {message}")
        self.offset = offset


class UnknownLetterError(ConcordiaError):
    """Requested index letter is not part of the alphabet bar."""

    def __init__(self, letter: str):
        super().__init__(f"unknown index letter {letter!r}")
        self.letter = letter


class EmptyQueryError(ConcordiaError):
    """A search was issued with an empty query string."""


class ConfigError(ConcordiaError):
    """Service configuration file or environment override is invalid."""
