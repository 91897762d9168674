"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class DncError(Exception):
    """Base class for every error raised by the engine."""


class MixedRings(DncError):
    pass


class ZeroSaturant(DncError):
    pass


class ParseError(DncError):
    def __init__(self, message: str, pos: int = 0, line: int | None = None, col: int | None = None):
        self.message = message
        self.pos = pos
        self.line = line
        self.col = col
        where = f" at line {line}, column {col}" if line is not None else f" at offset {pos}"
        super().__init__(message + where)


class UnknownVariable(ParseError):
    pass


class DuplicateVariable(ParseError):
    pass


class DSquareNonzero(DncError):
    def __init__(self, generator: str, residue):
        self.generator = generator
        self.residue = residue
        super().__init__(f"d^2({generator}) = {residue} != 0")


class WeightMismatch(DncError):
    pass


class DegreeMismatch(DncError):
    pass


class NotDegreeZero(DncError):
    pass


class BaseMismatch(DncError):
    pass


class NameCollision(DncError):
    pass


class NameCollisionWarning(UserWarning):
    pass


class CellNotCancellable(DncError):
    pass


class CutoffTooSmall(DncError):
    pass


class EmptyCenter(DncError):
    pass


class IndexOutOfRange(DncError):
    pass


class CorruptCache(DncError):
    pass
