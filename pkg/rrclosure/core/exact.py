"""Exact rationals and lexicographically ordered vectors.

Every value here is immutable and every function is pure. Rationals are
``fractions.Fraction``, which normalizes on construction, so two
rationals are equal exactly when their reduced forms are.
"""
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from typing import Iterable, Tuple, Union

from .errors import DimensionMismatchError, UsageError

Rational = Fraction
RationalLike = Union[int, str, Fraction]


def rational(value: RationalLike) -> Fraction:
    """Build a rational from an int, a ``"p/q"`` string or a Fraction."""
    if isinstance(value, float):
        raise UsageError("floating point values are not accepted; use 'p/q'")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"not a rational number: {value!r}") from e


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class Ordering(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


@dataclass(frozen=True)
class LexVector:
    entries: Tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable[RationalLike]) -> "LexVector":
        return cls(tuple(rational(v) for v in values))

    @classmethod
    def zero(cls, k: int) -> "LexVector":
        return cls((Fraction(0),) * k)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def __iter__(self):
        return iter(self.entries)

    def __add__(self, other: "LexVector") -> "LexVector":
        return vec_add(self, other)

    def __sub__(self, other: "LexVector") -> "LexVector":
        return vec_sub(self, other)

    def __neg__(self) -> "LexVector":
        return LexVector(tuple(-e for e in self.entries))

    def __lt__(self, other: "LexVector") -> bool:
        return lex_compare(self, other) is Ordering.LT

    def __le__(self, other: "LexVector") -> bool:
        return lex_compare(self, other) is not Ordering.GT

    def __gt__(self, other: "LexVector") -> bool:
        return lex_compare(self, other) is Ordering.GT

    def __ge__(self, other: "LexVector") -> bool:
        return lex_compare(self, other) is not Ordering.LT

    def prefix(self, m: int) -> Tuple[Fraction, ...]:
        return self.entries[:m]

    def __str__(self):
        return "(" + ",".join(format_rational(e) for e in self.entries) + ")"


def _check_lengths(a: LexVector, b: LexVector) -> None:
    if len(a.entries) != len(b.entries):
        raise DimensionMismatchError(len(a.entries), len(b.entries))


def lex_compare(a: LexVector, b: LexVector) -> Ordering:
    _check_lengths(a, b)
    for x, y in zip(a.entries, b.entries):
        if x != y:
            return Ordering.LT if x < y else Ordering.GT
    return Ordering.EQ


def vec_add(a: LexVector, b: LexVector) -> LexVector:
    _check_lengths(a, b)
    return LexVector(tuple(x + y for x, y in zip(a.entries, b.entries)))


def vec_sub(a: LexVector, b: LexVector) -> LexVector:
    _check_lengths(a, b)
    return LexVector(tuple(x - y for x, y in zip(a.entries, b.entries)))


def vec_scale(a: LexVector, n: int) -> LexVector:
    if not isinstance(n, int):
        raise UsageError(f"scale factor must be an integer, got {n!r}")
    return LexVector(tuple(x * n for x in a.entries))
