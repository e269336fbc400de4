"""Value groups, cut ideals and their exact arithmetic.

A value group is a lexicographic product of rank-one components, each
discrete (Z) or dense (Q). An ideal of the valuation domain is an
upward-closed set of values; the representable ones are the cuts

    GE_m(rho) = {g : prefix_m(g) >= rho}     GT_m(rho) = {g : prefix_m(g) > rho}

with a rational prefix ``rho`` of length ``m``. Membership
(``cut_contains``) is the ground truth. Products and colons are computed
symbolically on canonical forms; the suite re-validates them against
membership on sampled elements.

Canonical form:
  * rho is integral at every discrete position (the first non-integral
    discrete entry truncates the cut there, rounding up, kind GE);
  * GT only occurs at a dense position m (GT at a discrete position is
    GE with rho_m + 1).
Two canonical cuts denote the same set exactly when they are equal.
"""
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Tuple

from ..core.errors import GroupMismatchError, UsageError
from ..core.exact import LexVector, RationalLike, format_rational, rational


class ComponentKind(str, Enum):
    DISCRETE = "Z"
    DENSE = "Q"


@dataclass(frozen=True)
class ValueGroup:
    components: Tuple[ComponentKind, ...]

    def __post_init__(self):
        if not self.components:
            raise UsageError("a value group needs at least one component")

    @classmethod
    def lex(cls, *kinds) -> "ValueGroup":
        return cls(tuple(ComponentKind(k) for k in kinds))

    @property
    def rank(self) -> int:
        return len(self.components)

    def is_dense(self, position: int) -> bool:
        """``position`` is 1-based."""
        return self.components[position - 1] is ComponentKind.DENSE

    def is_discrete(self, position: int) -> bool:
        return self.components[position - 1] is ComponentKind.DISCRETE

    @property
    def strongly_discrete(self) -> bool:
        return all(c is ComponentKind.DISCRETE for c in self.components)

    def __str__(self):
        return "lex(" + ",".join(c.value for c in self.components) + ")"


@dataclass(frozen=True)
class GroupElement:
    group: ValueGroup
    value: LexVector

    def __post_init__(self):
        if len(self.value) != self.group.rank:
            raise UsageError(f"element {self.value} does not have rank {self.group.rank}")
        for position, entry in enumerate(self.value, start=1):
            if self.group.is_discrete(position) and entry.denominator != 1:
                raise UsageError(f"element {self.value} is not integral at discrete position {position}")

    @classmethod
    def of(cls, group: ValueGroup, values: Iterable[RationalLike]) -> "GroupElement":
        return cls(group, LexVector.of(values))

    @classmethod
    def zero(cls, group: ValueGroup) -> "GroupElement":
        return cls(group, LexVector.zero(group.rank))

    def __add__(self, other: "GroupElement") -> "GroupElement":
        _check_group(self.group, other.group)
        return GroupElement(self.group, self.value + other.value)

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        _check_group(self.group, other.group)
        return GroupElement(self.group, self.value - other.value)

    def __str__(self):
        return str(self.value)


class CutKind(str, Enum):
    GE = "ge"
    GT = "gt"


@dataclass(frozen=True)
class CutIdeal:
    kind: CutKind
    m: int
    rho: Tuple[Fraction, ...]
    group: ValueGroup

    def __post_init__(self):
        if not 1 <= self.m <= self.group.rank:
            raise UsageError(f"prefix length m={self.m} outside 1..{self.group.rank}")
        if len(self.rho) != self.m:
            raise UsageError(f"rho has {len(self.rho)} entries but m={self.m}")

    @classmethod
    def of(cls, group: ValueGroup, kind, m: int, rho: Iterable[RationalLike]) -> "CutIdeal":
        return cls(CutKind(kind), m, tuple(rational(r) for r in rho), group)

    def __contains__(self, g: GroupElement) -> bool:
        return cut_contains(self, g)

    def __mul__(self, other: "CutIdeal") -> "CutIdeal":
        return cut_multiply(self, other)

    def __pow__(self, n: int) -> "CutIdeal":
        return cut_power(self, n)

    def __le__(self, other: "CutIdeal") -> bool:
        return cut_includes(other, self)

    def __str__(self):
        return f"{self.kind.value.upper()}_{self.m}({','.join(format_rational(r) for r in self.rho)})"


@dataclass(frozen=True)
class PrimeSpec:
    j: int


def _check_group(a: ValueGroup, b: ValueGroup) -> None:
    if a != b:
        raise GroupMismatchError(a, b)


def unit_cut(group: ValueGroup) -> CutIdeal:
    """V itself, GE_k(0)."""
    return CutIdeal(CutKind.GE, group.rank, (Fraction(0),) * group.rank, group)


def prime_cut(group: ValueGroup, j: int) -> CutIdeal:
    """P_j = {g : prefix_j(g) > 0}; j = k is the maximal ideal."""
    return canonicalize(CutIdeal(CutKind.GT, j, (Fraction(0),) * j, group))


def principal_cut(element: GroupElement) -> CutIdeal:
    return CutIdeal(CutKind.GE, element.group.rank, tuple(element.value), element.group)


def canonicalize(cut: CutIdeal, integral: bool = False) -> CutIdeal:
    group = cut.group
    kind, m, rho = cut.kind, cut.m, list(cut.rho)
    for position in range(1, m + 1):
        entry = rho[position - 1]
        if group.is_discrete(position) and entry.denominator != 1:
            # prefix equality is unattainable here: round the boundary up and stop.
            rho = rho[: position - 1] + [Fraction(math.ceil(entry))]
            kind, m = CutKind.GE, position
            break
    if kind is CutKind.GT and group.is_discrete(m):
        rho[-1] += 1
        kind = CutKind.GE
    result = CutIdeal(kind, m, tuple(rho), group)
    if integral and cut_contains(result, GroupElement.zero(group)):
        return unit_cut(group)
    return result


def is_integral(cut: CutIdeal) -> bool:
    """True when the cut lies inside V (as a set of values)."""
    return cut_includes(unit_cut(cut.group), canonicalize(cut))


def cut_contains(cut: CutIdeal, g: GroupElement) -> bool:
    _check_group(cut.group, g.group)
    prefix = g.value.prefix(cut.m)
    if cut.kind is CutKind.GE:
        return prefix >= cut.rho
    return prefix > cut.rho


_NEG_INF, _FINITE, _POS_INF = -1, 0, 1


def _boundary_key(cut: CutIdeal):
    """Sort key of a canonical cut: larger key, smaller set."""
    k = cut.group.rank
    key = [(_FINITE, r) for r in cut.rho]
    if cut.m < k:
        tail = _NEG_INF if cut.kind is CutKind.GE else _POS_INF
        key.extend([(tail, 0)] * (k - cut.m))
        key.append((_FINITE, 0))
    else:
        key.append((_FINITE, 0 if cut.kind is CutKind.GE else 1))
    return tuple(key)


def cut_includes(outer: CutIdeal, inner: CutIdeal) -> bool:
    """True when ``inner`` is contained in ``outer``."""
    _check_group(outer.group, inner.group)
    return _boundary_key(canonicalize(inner)) >= _boundary_key(canonicalize(outer))


def cut_join(a: CutIdeal, b: CutIdeal) -> CutIdeal:
    """Union; cuts are totally ordered by inclusion."""
    return canonicalize(b) if cut_includes(b, a) else canonicalize(a)


def cut_meet(a: CutIdeal, b: CutIdeal) -> CutIdeal:
    return canonicalize(a) if cut_includes(b, a) else canonicalize(b)


def cut_multiply(a: CutIdeal, b: CutIdeal) -> CutIdeal:
    """Canonical cut for {x + y : x in a, y in b}.

    The shorter prefix binds: the longer operand projects onto it as a
    closed set, so the result takes the shorter operand's kind. On equal
    prefixes the result is GE only when both are GE.
    """
    _check_group(a.group, b.group)
    a, b = canonicalize(a), canonicalize(b)
    m = min(a.m, b.m)
    rho = tuple(x + y for x, y in zip(a.rho[:m], b.rho[:m]))
    if a.m == b.m:
        kind = CutKind.GE if a.kind is CutKind.GE and b.kind is CutKind.GE else CutKind.GT
    else:
        kind = a.kind if a.m < b.m else b.kind
    return canonicalize(CutIdeal(kind, m, rho, a.group))


def cut_power(cut: CutIdeal, n: int) -> CutIdeal:
    if n < 1:
        raise UsageError(f"power exponent must be positive, got {n}")
    result = canonicalize(cut)
    for _ in range(n - 1):
        result = cut_multiply(result, cut)
    return result


def cut_shift(cut: CutIdeal, a: GroupElement) -> CutIdeal:
    """a + C, the cut of the principal multiple of C."""
    return cut_multiply(principal_cut(a), cut)


def cut_colon(a: CutIdeal, b: CutIdeal) -> CutIdeal:
    """Canonical cut for {x : x + b ⊆ a}.

    Aligned prefixes: GE:GE -> GE, GE:GT -> GE, GT:GE -> GT, GT:GT -> GE.
    Shorter numerator: the denominator projects onto its prefix as a closed
    set, so the numerator's kind is kept. Shorter denominator: its free
    tail reaches arbitrarily low, so a GE denominator forces strictness and
    a GT denominator does not.
    """
    _check_group(a.group, b.group)
    a, b = canonicalize(a), canonicalize(b)
    if a.m == b.m:
        m = a.m
        kind = CutKind.GT if a.kind is CutKind.GT and b.kind is CutKind.GE else CutKind.GE
    elif a.m < b.m:
        m = a.m
        kind = a.kind
    else:
        m = b.m
        kind = CutKind.GT if b.kind is CutKind.GE else CutKind.GE
    rho = tuple(x - y for x, y in zip(a.rho[:m], b.rho[:m]))
    return canonicalize(CutIdeal(kind, m, rho, a.group))


def cut_inverse(cut: CutIdeal) -> CutIdeal:
    return cut_colon(unit_cut(cut.group), cut)


def trace(cut: CutIdeal) -> CutIdeal:
    """I * I^-1: V or a prime."""
    return canonicalize(cut_multiply(cut, cut_inverse(cut)))


def is_prime(cut: CutIdeal) -> Optional[PrimeSpec]:
    c = canonicalize(cut)
    for j in range(1, c.group.rank + 1):
        if c == prime_cut(c.group, j):
            return PrimeSpec(j)
    return None


def is_idempotent(cut: CutIdeal) -> bool:
    c = canonicalize(cut)
    return cut_power(c, 2) == c


def is_maximal(cut: CutIdeal) -> bool:
    spec = is_prime(cut)
    return spec is not None and spec.j == cut.group.rank


def has_nonmax_idempotent_prime(group: ValueGroup) -> bool:
    return any(group.is_dense(j) for j in range(1, group.rank))
