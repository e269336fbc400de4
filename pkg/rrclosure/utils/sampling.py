"""Seeded case generators for both universes.

Every stream is drawn from ``numpy.random.default_rng`` seeded with
``(seed, stream, position)``, so a case depends only on its own
coordinates: the same configuration always reproduces the same cases,
whatever order they are requested in.

Membership checks against cuts run in bulk on integer arrays: an element
is a row of its entries times ``VALUE_SCALE``, and a cut compares rows
lexicographically along the last axis.
"""
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from ..core.errors import UsageError
from ..core.exact import rational
from ..models.monomial import MonomialIdeal, minimalize
from ..models.valuation import (
    CutIdeal,
    CutKind,
    GroupElement,
    ValueGroup,
    canonicalize,
)
from ..schemas.suite import VALUE_SCALE, GeneratorConfig, MonomialGeneratorConfig

STREAM_MONOMIAL = 0
STREAM_CUT = 1
STREAM_PROBE = 3
STREAM_STAR = 4

EPSILON = Fraction(1, 1000)
TAIL_SPREAD = 1000
# Boundary tails dominate any sampled tail.
BOUNDARY_SPREAD = 1_000_000


def make_rng(seed: int, stream: int, *position: int) -> np.random.Generator:
    return np.random.default_rng([seed % 2 ** 64, stream, *position])


def group_code(group: ValueGroup) -> int:
    """A small integer identifying the group, used to separate per-group streams."""
    code = 0
    for c in group.components:
        code = code * 3 + (2 if c.value == "Q" else 1)
    return code


def _chance(rng: np.random.Generator, p: Fraction) -> bool:
    return int(rng.integers(0, p.denominator)) < p.numerator


def _distinct(rng: np.random.Generator, low: int, high: int, count: int) -> List[int]:
    return sorted(int(v) for v in rng.choice(np.arange(low, high + 1), size=count, replace=False))


def _antichain_2v(mc: MonomialGeneratorConfig, rng: np.random.Generator, forced: bool) -> List[Tuple[int, int]]:
    """Generators x^a_i * y^b_i with a strictly increasing and b strictly decreasing.

    Forced ideals start at a pure power of y and end at a pure power of x.
    """
    top = mc.max_exp
    width = min(mc.max_gens, top + 1)
    if forced:
        count = int(rng.integers(2, width + 1))
        xs = [0] + _distinct(rng, 1, top, count - 1)
        ys = _distinct(rng, 1, top, count - 1)[::-1] + [0]
    else:
        count = int(rng.integers(1, width + 1))
        xs = _distinct(rng, 0, top, count)
        ys = _distinct(rng, 0, top, count)[::-1]
        if count == 1 and xs[0] == ys[0] == 0:
            xs = [int(rng.integers(1, top + 1))]
    return list(zip(xs, ys))


def gen_monomial_ideal(cfg: GeneratorConfig, position: int) -> MonomialIdeal:
    mc = cfg.monomial
    rng = make_rng(cfg.seed, STREAM_MONOMIAL, position)
    nvars = mc.max_vars
    # Forcing a pure power of every variable needs room for nvars generators.
    forced = mc.max_gens >= nvars and _chance(rng, mc.bias)
    if nvars == 2:
        return MonomialIdeal.of(_antichain_2v(mc, rng, forced), 2)
    gens: List[List[int]] = []
    if forced:
        for i in range(nvars):
            power = [0] * nvars
            power[i] = int(rng.integers(1, mc.max_exp + 1))
            gens.append(power)
    count = int(rng.integers(1, mc.max_gens + 1))
    for _ in range(max(count - len(gens), 0)):
        exps = [int(e) for e in rng.integers(0, mc.max_exp + 1, size=nvars)]
        if not any(exps):
            exps[int(rng.integers(0, nvars))] = 1
        gens.append(exps)
    return minimalize(gens, nvars)


def parse_rho_grid(rho_grid: Iterable[str]) -> List[Fraction]:
    return [rational(r) for r in rho_grid]


def cut_grid(group: ValueGroup, rho_grid: Sequence[str], integral: bool = True) -> List[CutIdeal]:
    """Every cut with kind GE/GT, m in 1..k and rho entries from the grid.

    Cuts are canonicalized (clamped to V when ``integral``) and
    deduplicated, keeping first-seen order.
    """
    values = parse_rho_grid(rho_grid)
    seen: Dict[CutIdeal, None] = {}
    for kind in (CutKind.GE, CutKind.GT):
        for m in range(1, group.rank + 1):
            for rho in itertools.product(values, repeat=m):
                cut = canonicalize(CutIdeal(kind, m, tuple(rho), group), integral=integral)
                seen.setdefault(cut, None)
    return list(seen)


def gen_cut(cfg: GeneratorConfig, group: ValueGroup, position: int) -> CutIdeal:
    rng = make_rng(cfg.seed, STREAM_CUT, group_code(group), position)
    values = parse_rho_grid(cfg.valuation.rho_grid)
    kind = CutKind.GE if rng.integers(0, 2) == 0 else CutKind.GT
    m = int(rng.integers(1, group.rank + 1))
    rho = tuple(values[int(i)] for i in rng.integers(0, len(values), size=m))
    return canonicalize(CutIdeal(kind, m, rho, group), integral=not cfg.valuation.fractional)


def sample_element(group: ValueGroup, rng: np.random.Generator) -> GroupElement:
    """Dense entries are quarters in [-3, 3]; discrete entries are integers in [-3, 3]."""
    entries = []
    for position in range(1, group.rank + 1):
        if group.is_dense(position):
            entries.append(Fraction(int(rng.integers(-12, 13)), 4))
        else:
            entries.append(Fraction(int(rng.integers(-3, 4))))
    return GroupElement.of(group, entries)


def boundary_members(cut: CutIdeal) -> List[GroupElement]:
    """Members of the cut sitting on (or just above) its boundary, with extreme tails."""
    c = canonicalize(cut)
    group = c.group
    base = list(c.rho)
    if c.kind is CutKind.GT:
        base[-1] += EPSILON
    tails = itertools.product((-BOUNDARY_SPREAD, 0, BOUNDARY_SPREAD), repeat=group.rank - c.m)
    return [GroupElement.of(group, base + list(tail)) for tail in tails]


# -- bulk membership ---------------------------------------------------------

def scale_value(q: Fraction) -> int:
    scaled = q * VALUE_SCALE
    if scaled.denominator != 1:
        raise UsageError(f"{q} is not a multiple of 1/{VALUE_SCALE}")
    return int(scaled)


def to_element(group: ValueGroup, row: np.ndarray) -> GroupElement:
    return GroupElement.of(group, [Fraction(int(v), VALUE_SCALE) for v in row])


def lex_sign(diff: np.ndarray) -> np.ndarray:
    """Sign of the first nonzero entry along the last axis (0 for a zero row)."""
    signs = np.sign(diff)
    first = (signs != 0).argmax(axis=-1)
    return np.take_along_axis(signs, first[..., None], axis=-1)[..., 0]


@dataclass(frozen=True)
class ScaledCut:
    """A canonical cut with its boundary in units of 1/VALUE_SCALE."""

    cut: CutIdeal
    rho: Tuple[int, ...]
    strict: bool

    @classmethod
    def of(cls, cut: CutIdeal) -> "ScaledCut":
        c = canonicalize(cut)
        return cls(c, tuple(scale_value(r) for r in c.rho), c.kind is CutKind.GT)

    @property
    def group(self) -> ValueGroup:
        return self.cut.group

    def contains(self, rows: np.ndarray) -> np.ndarray:
        order = lex_sign(rows[..., : len(self.rho)] - np.asarray(self.rho, dtype=np.int64))
        return order > 0 if self.strict else order >= 0


@lru_cache(maxsize=4096)
def boundary_rows(cut: CutIdeal) -> np.ndarray:
    rows = np.array(
        [[scale_value(e) for e in g.value] for g in boundary_members(cut)], dtype=np.int64
    )
    rows.setflags(write=False)
    return rows


def _dense_mask(group: ValueGroup) -> np.ndarray:
    return np.array([group.is_dense(p) for p in range(1, group.rank + 1)])


def nearby_rows(cut: ScaledCut, rng: np.random.Generator, count: int) -> np.ndarray:
    """Scaled elements near the boundary of the cut, a third of them uniform.

    Uniform rows follow ``sample_element``. The others sit on the
    boundary moved by at most one step (1/2 on dense entries, 1 on
    discrete ones) at a random position; half of those get tails of
    ±TAIL_SPREAD past the boundary.
    """
    group = cut.group
    k, m = group.rank, len(cut.rho)
    dense = _dense_mask(group)
    quarters = rng.integers(-12, 13, size=(count, k)) * (VALUE_SCALE // 4)
    units = rng.integers(-3, 4, size=(count, k)) * VALUE_SCALE
    rows = np.where(dense, quarters, units).astype(np.int64)
    mode = rng.integers(0, 3, size=count)
    near = mode > 0
    rows[near, :m] = cut.rho
    position = rng.integers(0, m, size=count)
    step = rng.integers(-1, 2, size=count) * np.where(dense[position], VALUE_SCALE // 2, VALUE_SCALE)
    rows[np.arange(count), position] += np.where(near, step, 0)
    if m < k:
        far = mode == 2
        tails = rng.choice(np.array([-1, 1]), size=(count, k - m)) * TAIL_SPREAD * VALUE_SCALE
        rows[:, m:] = np.where(far[:, None], tails, rows[:, m:])
    return rows


def member_rows(cut: ScaledCut, rng: np.random.Generator, count: int) -> np.ndarray:
    """Boundary members of the cut followed by the nearby rows that fall inside it."""
    rows = nearby_rows(cut, rng, count)
    return np.concatenate([boundary_rows(cut.cut), rows[cut.contains(rows)]])
