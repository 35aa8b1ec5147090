"""Exception types shared across the package.

Every error message names what failed and, where a source text is involved,
the line or character position it failed at.
"""
from __future__ import annotations


class OntologikError(Exception):
    """Base class for everything raised deliberately by this package."""


class OntologyError(OntologikError):
    """Ontology source rejected at load time."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UnknownTypeError(OntologikError):
    """A type name that the loaded ontology does not contain."""

    def __init__(self, name: str):
        super().__init__(f"unknown type name '{name}'")
        self.name = name


class LexiconError(OntologikError):
    """Lexicon source rejected at load time, or a bad predicate lookup."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class LFSyntaxError(OntologikError):
    """Logical-form source text rejected by the parser."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"at position {position}: {message}"
        super().__init__(message)
        self.position = position


class CanonicalizationError(OntologikError):
    """A form that cannot be brought to canonical shape."""


class TypeCheckError(OntologikError):
    """A variable or constant whose declared type cannot meet an expectation."""

    def __init__(self, subject: str, declared: str, expectation: str):
        super().__init__(
            f"'{subject}' of type {declared} cannot satisfy expectation {expectation}"
        )
        self.subject = subject
        self.declared = declared
        self.expectation = expectation


class SentenceError(OntologikError):
    """Controlled-English input that no pattern accepts."""


class HypothesisShapeError(OntologikError):
    """A hypothesis outside the supported universal-literal shape."""
