"""Scalar arithmetic shared by every engine.

Two arithmetic modes are supported.  Exact mode stores entries as
:class:`fractions.Fraction` (always in lowest terms, positive denominator).
Float mode stores plain Python floats and treats anything within a fixed
tolerance of zero as zero.

Engines never inspect entry types directly; they only ask an arithmetic
object whether a value is zero and how large it is.  The arithmetic
operators themselves are Python's own, which both ``Fraction`` and
``float`` implement.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

DEFAULT_EPSILON = 1e-12

_INT = r"[+-]?\d+"
_DECIMAL = r"[+-]?(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?"
_QUOTIENT = r"[+-]?\d+/\d+"
_TOKEN_RE = re.compile(rf"(?:{_QUOTIENT}|{_DECIMAL}|{_INT})")


class ScalarSyntaxError(ValueError):
    """Raised for a token that is not an integer, decimal, or quotient."""


def normalize(numerator: int, denominator: int) -> Fraction:
    """Return ``numerator/denominator`` in lowest terms.

    Raises ``ZeroDivisionError`` when the denominator is zero.
    """
    return Fraction(numerator, denominator)


def parse_token(token: str) -> Fraction:
    """Parse a scalar token exactly.

    Decimals become rationals with a power-of-ten denominator, so
    ``"0.2"`` is exactly ``1/5``.  The typographic minus (U+2212) is
    accepted as a sign.
    """
    text = token.strip().replace("−", "-")
    if not _TOKEN_RE.fullmatch(text):
        raise ScalarSyntaxError(f"malformed scalar {token!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ScalarSyntaxError(f"zero denominator in {token!r}") from None


def format_scalar(value) -> str:
    """Render a scalar: ``p/q`` (or ``p``) for rationals, shortest repr for floats."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


@dataclass(frozen=True)
class Exact:
    """Exact rational arithmetic."""

    name = "exact"

    def convert(self, value) -> Fraction:
        if isinstance(value, str):
            return parse_token(value)
        if isinstance(value, float):
            return Fraction(value)
        return Fraction(value)

    def is_zero(self, value) -> bool:
        return value == 0

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)


@dataclass(frozen=True)
class Approx:
    """Binary floating point; ``|v| <= epsilon`` counts as zero."""

    epsilon: float = DEFAULT_EPSILON
    name = "float"

    def __post_init__(self):
        if not self.epsilon >= 0:
            raise ValueError(f"epsilon must be nonnegative, got {self.epsilon}")

    def convert(self, value) -> float:
        if isinstance(value, str):
            # Go through the exact parse so "1/3" rounds once, correctly.
            return float(parse_token(value))
        return float(value)

    def is_zero(self, value) -> bool:
        return abs(value) <= self.epsilon

    @property
    def zero(self) -> float:
        return 0.0

    @property
    def one(self) -> float:
        return 1.0


EXACT = Exact()


def arithmetic(mode: str, epsilon: float | None = None):
    """Look up an arithmetic by CLI name (``exact`` or ``float``)."""
    if mode == "exact":
        return EXACT
    if mode == "float":
        return Approx(DEFAULT_EPSILON if epsilon is None else epsilon)
    raise ValueError(f"unknown arithmetic mode {mode!r}")


def is_zero(value, epsilon: float = DEFAULT_EPSILON) -> bool:
    """Zero test that dispatches on the value's type."""
    if isinstance(value, float):
        return abs(value) <= epsilon
    return value == 0
