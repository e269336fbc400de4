"""Monomial ideals and fractional monomial modules.

A monomial ideal is stored as the antichain of its minimal generator
exponents, sorted by degree and then lexicographically descending
(``x^2, x*y, y^2``). Coefficients never appear: every statement used
here holds over any field.

Fractional modules ``d^-1 * I`` are stored canonically: after reduction
no variable divides both ``d`` and every generator of ``I``. Internally
they are handled through their Laurent generators (exponents of any
sign); the integral kernel does the work after denominators are
cleared.
"""
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from ..core.errors import DimensionMismatchError, UsageError

ExponentVector = Tuple[int, ...]


def _order_key(v: ExponentVector):
    return (sum(v), tuple(-e for e in v))


def _divides(g: ExponentVector, m: ExponentVector) -> bool:
    return all(a <= b for a, b in zip(g, m))


def _minimal(vectors: Iterable[Sequence[int]]) -> Tuple[ExponentVector, ...]:
    """Minimal elements under the componentwise order, in canonical order.

    Works for exponents of any sign. Two variables use a sweep; otherwise
    candidates are visited by increasing degree, so anything that could
    dominate a candidate has already been kept.
    """
    points = {tuple(int(e) for e in v) for v in vectors}
    if not points:
        return ()
    width = len(next(iter(points)))
    if width == 2:
        kept = []
        lowest = None
        for x, y in sorted(points):
            if lowest is None or y < lowest:
                kept.append((x, y))
                lowest = y
    else:
        kept = []
        for v in sorted(points, key=lambda p: (sum(p), p)):
            if not any(_divides(k, v) for k in kept):
                kept.append(v)
    return tuple(sorted(kept, key=_order_key))


@dataclass(frozen=True)
class MonomialIdeal:
    generators: Tuple[ExponentVector, ...]
    nvars: int

    @classmethod
    def of(cls, gens: Iterable[Sequence[int]], nvars: Optional[int] = None) -> "MonomialIdeal":
        return minimalize(gens, nvars)

    @classmethod
    def unit(cls, nvars: int) -> "MonomialIdeal":
        return cls(((0,) * nvars,), nvars)

    @property
    def is_unit(self) -> bool:
        return self.generators == ((0,) * self.nvars,)

    @property
    def is_principal(self) -> bool:
        return len(self.generators) == 1

    @property
    def max_degree(self) -> int:
        return max(sum(g) for g in self.generators)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __contains__(self, m) -> bool:
        return contains(self, m)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return multiply(self, other)

    def __pow__(self, k: int) -> "MonomialIdeal":
        return power(self, k)

    def __le__(self, other: "MonomialIdeal") -> bool:
        return is_subideal(self, other)

    def __str__(self):
        return "<" + ", ".join(str(g) for g in self.generators) + ">"


def _check_dims(nvars: int, other: int) -> None:
    if nvars != other:
        raise DimensionMismatchError(nvars, other)


def minimalize(gens: Iterable[Sequence[int]], nvars: Optional[int] = None) -> MonomialIdeal:
    points = [tuple(int(e) for e in g) for g in gens]
    if not points:
        raise UsageError("a monomial ideal needs at least one generator")
    width = nvars if nvars is not None else len(points[0])
    for p in points:
        _check_dims(width, len(p))
        if any(e < 0 for e in p):
            raise UsageError(f"negative exponent in generator {p}")
    return MonomialIdeal(_minimal(points), width)


def contains(ideal: MonomialIdeal, m: Sequence[int]) -> bool:
    _check_dims(ideal.nvars, len(m))
    return any(_divides(g, m) for g in ideal.generators)


def is_subideal(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    """True when ``a`` is contained in ``b``."""
    _check_dims(a.nvars, b.nvars)
    return all(contains(b, g) for g in a.generators)


def multiply(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_dims(a.nvars, b.nvars)
    sums = (tuple(x + y for x, y in zip(g, h)) for g in a.generators for h in b.generators)
    return MonomialIdeal(_minimal(sums), a.nvars)


def power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 1:
        raise UsageError(f"power exponent must be positive, got {k}")
    result = None
    base = ideal
    while k:
        if k & 1:
            result = base if result is None else multiply(result, base)
        k >>= 1
        if k:
            base = multiply(base, base)
    return result


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_dims(a.nvars, b.nvars)
    lcms = (tuple(max(x, y) for x, y in zip(g, h)) for g in a.generators for h in b.generators)
    return MonomialIdeal(_minimal(lcms), a.nvars)


def shift(ideal: MonomialIdeal, s: Sequence[int]) -> MonomialIdeal:
    """The ideal ``x^s * I``."""
    _check_dims(ideal.nvars, len(s))
    return MonomialIdeal(tuple(tuple(e + t for e, t in zip(g, s)) for g in ideal.generators), ideal.nvars)


def colon_by_monomial(ideal: MonomialIdeal, g: Sequence[int]) -> MonomialIdeal:
    _check_dims(ideal.nvars, len(g))
    quotients = (tuple(max(e - t, 0) for e, t in zip(h, g)) for h in ideal.generators)
    return MonomialIdeal(_minimal(quotients), ideal.nvars)


def _profile(gens: Sequence[ExponentVector], width: int):
    """Staircase heights f(x) = min{y : (x, y) in I} for x = 0..width, None below the staircase."""
    heights = []
    ordered = sorted(gens)
    lowest = None
    i = 0
    for x in range(width + 1):
        while i < len(ordered) and ordered[i][0] <= x:
            y = ordered[i][1]
            lowest = y if lowest is None else min(lowest, y)
            i += 1
        heights.append(lowest)
    return heights


def _colon_2v(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    # Beyond the last corner of ``a`` the staircase is flat, and so is the colon.
    width = max(g[0] for g in a.generators)
    f = _profile(a.generators, width)
    gens = []
    previous = None
    for x in range(width + 1):
        height = 0
        for gx, gy in b.generators:
            fy = f[min(x + gx, width)]
            if fy is None:
                height = None
                break
            height = max(height, fy - gy)
        if height is not None and (previous is None or height < previous):
            gens.append((x, height))
            previous = height
    return MonomialIdeal(_minimal(gens), 2)


def colon(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """(a : b) = intersection over generators g of b of (a : g)."""
    _check_dims(a.nvars, b.nvars)
    if a.nvars == 2:
        return _colon_2v(a, b)
    result = None
    for g in b.generators:
        part = colon_by_monomial(a, g)
        result = part if result is None else intersect(result, part)
    return result


@dataclass(frozen=True)
class FractionalMonomialIdeal:
    denominator: ExponentVector
    numerator: MonomialIdeal

    @classmethod
    def from_ideal(cls, ideal: MonomialIdeal) -> "FractionalMonomialIdeal":
        return cls((0,) * ideal.nvars, ideal)

    @classmethod
    def from_laurent(cls, gens: Iterable[Sequence[int]], nvars: int) -> "FractionalMonomialIdeal":
        minimal = _minimal(gens)
        if not minimal:
            raise UsageError("a fractional module needs at least one generator")
        _check_dims(nvars, len(minimal[0]))
        d = tuple(max(0, -min(g[i] for g in minimal)) for i in range(nvars))
        numerator = MonomialIdeal(tuple(tuple(e + t for e, t in zip(g, d)) for g in minimal), nvars)
        return cls(d, numerator)

    @classmethod
    def unit(cls, nvars: int) -> "FractionalMonomialIdeal":
        return cls.from_ideal(MonomialIdeal.unit(nvars))

    @property
    def nvars(self) -> int:
        return self.numerator.nvars

    @property
    def laurent_generators(self) -> Tuple[ExponentVector, ...]:
        d = self.denominator
        return tuple(tuple(e - t for e, t in zip(g, d)) for g in self.numerator.generators)

    @property
    def is_unit(self) -> bool:
        return self.laurent_generators == ((0,) * self.nvars,)

    @property
    def is_integral(self) -> bool:
        return not any(self.denominator)

    def contains(self, m: Sequence[int]) -> bool:
        _check_dims(self.nvars, len(m))
        return any(_divides(g, m) for g in self.laurent_generators)

    def __mul__(self, other: "FractionalMonomialIdeal") -> "FractionalMonomialIdeal":
        return frac_multiply(self, other)

    def __str__(self):
        if self.is_integral:
            return str(self.numerator)
        return f"{self.denominator}^-1 * {self.numerator}"


def frac_multiply(a: FractionalMonomialIdeal, b: FractionalMonomialIdeal) -> FractionalMonomialIdeal:
    _check_dims(a.nvars, b.nvars)
    sums = (tuple(x + y for x, y in zip(g, h)) for g in a.laurent_generators for h in b.laurent_generators)
    return FractionalMonomialIdeal.from_laurent(sums, a.nvars)


def frac_colon(a: FractionalMonomialIdeal, b: FractionalMonomialIdeal) -> FractionalMonomialIdeal:
    """{x : x*b in a} over Laurent monomials.

    With a = d^-1 I and b = e^-1 J, x*b ⊆ a iff (x + d - e) + J ⊆ I. Any
    such Laurent exponent is >= -s where s is the componentwise minimum of
    the generators of J, so the integral colon (x^s I : J) shifted back by
    -s gives every solution.
    """
    _check_dims(a.nvars, b.nvars)
    nvars = a.nvars
    numerator, denominator = a.numerator, b.numerator
    s = tuple(min(g[i] for g in denominator.generators) for i in range(nvars))
    integral = colon(shift(numerator, s), denominator)
    offset = tuple(e - d - t for d, e, t in zip(a.denominator, b.denominator, s))
    return FractionalMonomialIdeal.from_laurent(
        (tuple(x + o for x, o in zip(g, offset)) for g in integral.generators), nvars
    )


def frac_equals(a: FractionalMonomialIdeal, b: FractionalMonomialIdeal) -> bool:
    """Equal as sets of Laurent monomials; ``from_laurent`` forms are canonical."""
    return a.laurent_generators == b.laurent_generators


def frac_includes(a: FractionalMonomialIdeal, b: FractionalMonomialIdeal) -> bool:
    """True when ``b`` is contained in ``a``."""
    return all(a.contains(g) for g in b.laurent_generators)


def endomorphism_ring(ideal: MonomialIdeal) -> FractionalMonomialIdeal:
    """(I : I) as a fractional module; it always contains the unit."""
    frac = FractionalMonomialIdeal.from_ideal(ideal)
    return frac_colon(frac, frac)
