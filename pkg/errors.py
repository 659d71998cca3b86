"""
Exception hierarchy for the surface word bialgebra.

Every error raised by the library derives from SurfaceWordError so that the
CLI and the web API can turn them into usage errors with one except clause.
"""


class SurfaceWordError(Exception):
    """Base class for all library errors."""


class ParseError(SurfaceWordError):
    """Text does not match the word grammar."""


class InvalidLetter(SurfaceWordError):
    """Letter index is zero or outside the alphabet."""


class InvalidExponent(SurfaceWordError):
    """Power exponent is smaller than one."""


class InvalidOccurrence(SurfaceWordError):
    """Occurrence start or length does not fit the word."""


class EmptyWordError(SurfaceWordError):
    """A word reduced to the empty cyclic word where a basis word was required."""


class NonCanonicalWord(SurfaceWordError):
    """Cyclic word built from letters that are not reduced or not the least rotation."""


class NotASurfaceSymbol(SurfaceWordError):
    """Word does not use every letter of the alphabet exactly once, or is not reduced."""


class UnsupportedLength(SurfaceWordError):
    """Orientation requested for a word shorter than three letters."""


class InvalidPair(SurfaceWordError):
    """Linked pair does not belong to the word (or words) it is applied to."""


class IncompleteTable(SurfaceWordError):
    """Structure-constant table is not total over the basis."""
