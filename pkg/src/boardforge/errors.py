"""Exception hierarchy shared by every board module.

Parser and evaluator errors carry a source span ``(line, column)`` so the
CLI can point at the offending text. Geometry errors usually have no span
until the evaluator attaches the span of the node that raised them.
"""

from __future__ import annotations


class BoardError(Exception):
    """Base class for all errors raised by boardforge."""

    def __init__(self, message: str = "", *, span=None):
        super().__init__(message)
        self.message = message
        self.span = span

    @property
    def kind(self) -> str:
        return type(self).__name__

    def __str__(self) -> str:
        if self.span is not None:
            line, col = self.span[0], self.span[1]
            return f"{self.kind} at {line}:{col}: {self.message}"
        return f"{self.kind}: {self.message}"


# geometry / construction

class InvalidDimension(BoardError):
    pass


class DegenerateEdge(BoardError):
    pass


class NonPlanarInput(BoardError):
    def __init__(self, message="", *, pair=None, span=None):
        super().__init__(message, span=span)
        self.pair = pair


class NonPlanarOverlap(NonPlanarInput):
    pass


class UnsupportedTiling(BoardError):
    pass


class InvalidRingSpec(BoardError):
    pass


class IncompatibleShape(BoardError):
    pass


class InvalidPolygon(BoardError):
    pass


class NoQuadCells(BoardError):
    pass


class UnsupportedDiagType(BoardError):
    pass


class TooFewCells(BoardError):
    pass


class TooManyVertices(BoardError):
    pass


class InvalidElement(BoardError):
    pass


class SingularTransform(BoardError):
    pass


class UnknownFacing(BoardError):
    pass


class UnknownRelation(BoardError):
    pass


# board description language

class LexError(BoardError):
    pass


class UnbalancedParens(BoardError):
    pass


class UnexpectedToken(BoardError):
    pass


class UnknownKeyword(BoardError):
    def __init__(self, keyword: str, *, span=None):
        super().__init__(f"unknown keyword '{keyword}'", span=span)
        self.keyword = keyword


class UnsupportedKeyword(BoardError):
    def __init__(self, keyword: str, *, span=None):
        super().__init__(
            f"'{keyword}' is a recognised board keyword but is not implemented",
            span=span,
        )
        self.keyword = keyword


class ArityError(BoardError):
    pass


class ParamTypeError(BoardError):
    pass


class EmptyResultWarning(UserWarning):
    """An operator produced a board with no cells."""
