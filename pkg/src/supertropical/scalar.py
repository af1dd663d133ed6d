"""Exact arithmetic for max-plus numbers extended with ghosts.

The carrier has three kinds of element: ``-inf`` (the additive identity),
tangible values, and ghost values (a parallel copy of the tangibles that
records ties). Magnitudes are exact `fractions.Fraction`, so equality of
magnitudes -- the event that produces ghosts -- is always decided exactly.

Addition takes the larger magnitude; a tie comes out ghost. Multiplication
adds magnitudes and is ghost as soon as one factor is.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import DomainError, ParseError


class Kind(Enum):
    ZERO = "zero"
    TANGIBLE = "tangible"
    GHOST = "ghost"


@dataclass(frozen=True, slots=True)
class Scalar:
    """An immutable max-plus number: ``-inf``, tangible, or ghost.

    Equality is structural (same kind, same magnitude). The magnitude is
    ``None`` exactly for the zero element; everywhere it participates in an
    order comparison it reads as minus infinity.
    """

    kind: Kind
    value: Fraction | None = None

    def __post_init__(self):
        if self.kind is Kind.ZERO:
            if self.value is not None:
                raise DomainError("the zero element carries no magnitude")
        elif not isinstance(self.value, Fraction):
            raise DomainError(f"{self.kind.value} scalar needs an exact magnitude")

    @property
    def is_zero(self) -> bool:
        return self.kind is Kind.ZERO

    @property
    def is_tangible(self) -> bool:
        return self.kind is Kind.TANGIBLE

    @property
    def is_ghost(self) -> bool:
        return self.kind is Kind.GHOST

    def __add__(self, other: Scalar) -> Scalar:
        if self.kind is Kind.ZERO:
            return other
        if other.kind is Kind.ZERO:
            return self
        if self.value > other.value:
            return self
        if self.value < other.value:
            return other
        # Tie: the result is ghost whatever the operand kinds were.
        if self.kind is Kind.GHOST:
            return self
        if other.kind is Kind.GHOST:
            return other
        return Scalar(Kind.GHOST, self.value)

    def __mul__(self, other: Scalar) -> Scalar:
        if self.kind is Kind.ZERO or other.kind is Kind.ZERO:
            return ZERO
        if self.kind is Kind.GHOST or other.kind is Kind.GHOST:
            return Scalar(Kind.GHOST, self.value + other.value)
        return Scalar(Kind.TANGIBLE, self.value + other.value)

    def __pow__(self, k: int) -> Scalar:
        if k < 0:
            raise DomainError("negative powers are not defined here")
        if k == 0:
            return ONE
        if self.kind is Kind.ZERO:
            return ZERO
        return Scalar(self.kind, self.value * k)

    def root(self, k: int) -> Scalar:
        """The unique k-th root: magnitude divided by k, kind preserved."""
        if k < 1:
            raise DomainError("root index must be at least 1")
        if self.kind is Kind.ZERO:
            return ZERO
        return Scalar(self.kind, self.value / k)

    def as_ghost(self) -> Scalar:
        """Project onto the ghost copy; ghosts and zero are fixed."""
        if self.kind is Kind.TANGIBLE:
            return Scalar(Kind.GHOST, self.value)
        return self

    def reciprocal(self) -> Scalar:
        if self.kind is Kind.ZERO:
            raise DomainError("the zero element has no reciprocal")
        return Scalar(self.kind, -self.value)

    def surpasses(self, other: Scalar) -> bool:
        """Ghost-surpass relation: equal, or ghost with magnitude >= other's."""
        if self == other:
            return True
        if self.kind is not Kind.GHOST:
            return False
        if other.kind is Kind.ZERO:
            return True
        return self.value >= other.value

    def __str__(self) -> str:
        if self.kind is Kind.ZERO:
            return "-inf"
        text = str(self.value)
        return text + "g" if self.kind is Kind.GHOST else text

    def __repr__(self) -> str:
        return f"Scalar({self})"


ZERO = Scalar(Kind.ZERO)
ONE = Scalar(Kind.TANGIBLE, Fraction(0))


def tangible(value) -> Scalar:
    return Scalar(Kind.TANGIBLE, Fraction(value))


def ghost(value) -> Scalar:
    return Scalar(Kind.GHOST, Fraction(value))


_SCALAR_RE = re.compile(r"(-?\d+)(?:/(\d+))?(g)?\Z")


def parse_scalar(text: str) -> Scalar:
    """Parse ``-inf`` | RATIONAL | RATIONAL``g``, RATIONAL = ``[-]digits[/digits]``."""
    if not isinstance(text, str):
        raise ParseError(f"expected a scalar string, got {type(text).__name__}")
    stripped = text.strip()
    if stripped == "-inf":
        return ZERO
    match = _SCALAR_RE.match(stripped)
    if match is None:
        raise ParseError(f"not a scalar: {text!r}")
    num, den, ghost_mark = match.groups()
    if den == "0":
        raise ParseError(f"zero denominator in {text!r}")
    value = Fraction(int(num), int(den) if den else 1)
    return Scalar(Kind.GHOST if ghost_mark else Kind.TANGIBLE, value)
