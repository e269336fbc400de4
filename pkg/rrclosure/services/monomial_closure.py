import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..core.errors import UnsupportedDimensionError, UsageError
from ..models.monomial import (
    FractionalMonomialIdeal,
    MonomialIdeal,
    colon,
    endomorphism_ring,
    frac_colon,
    frac_equals,
    frac_multiply,
    is_subideal,
    minimalize,
    multiply,
)
from ..schemas.closure import ChainReport, ClosureConfig, LStabilityVerdict

logger = logging.getLogger(__name__)


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _lower_hull(points: Sequence[Tuple[int, int]]) -> List[Tuple[int, int]]:
    """Lower convex chain of points sorted by x (monotone chain)."""
    hull: List[Tuple[int, int]] = []
    for p in points:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    return hull


@lru_cache(maxsize=64)
def power_table(ideal: MonomialIdeal, count: int) -> Tuple[MonomialIdeal, ...]:
    """(I, I^2, ..., I^count)."""
    powers = [ideal]
    for _ in range(count - 1):
        powers.append(multiply(powers[-1], ideal))
    return tuple(powers)


def _membership_grid(ideal: MonomialIdeal, extent: int) -> np.ndarray:
    """Boolean array over [0, extent)^n marking the exponents of ``ideal``."""
    grid = np.zeros((extent,) * ideal.nvars, dtype=bool)
    for g in ideal.generators:
        if all(e < extent for e in g):
            grid[g] = True
    for axis in range(ideal.nvars):
        grid = np.logical_or.accumulate(grid, axis=axis)
    return grid


class MonomialClosureService:
    def __init__(self, config: Optional[ClosureConfig] = None):
        self.config = config or ClosureConfig()

    def rr_chain_term(self, ideal: MonomialIdeal, n: int) -> MonomialIdeal:
        """(I^{n+1} : I^n)."""
        if n < 1:
            raise UsageError(f"chain index must be positive, got {n}")
        lower = ideal ** n
        return colon(multiply(lower, ideal), lower)

    def rr_closure(self, ideal: MonomialIdeal, certify: bool = True) -> Tuple[MonomialIdeal, ChainReport]:
        cfg = self.config
        terms: List[MonomialIdeal] = []
        stabilized_at = None
        lower = ideal
        for n in range(1, cfg.n_max + 1):
            upper = multiply(lower, ideal)
            term = colon(upper, lower)
            terms.append(term)
            logger.debug(f"chain term {n}: {term}")
            if len(terms) >= cfg.window and all(t == term for t in terms[-cfg.window:]):
                stabilized_at = n - cfg.window + 1
                break
            lower = upper

        result = minimalize((g for t in terms for g in t.generators), ideal.nvars)
        warnings: List[str] = []
        certified = False
        if stabilized_at is None:
            warnings.append(f"chain did not stabilize within n_max={cfg.n_max}")
            logger.warning(f"Ratliff-Rush chain of {ideal} did not stabilize within n_max={cfg.n_max}")
        elif certify:
            oracle, touches_bound = self.oracle_closure(ideal)
            if touches_bound:
                warnings.append("oracle generator reached the degree bound")
            elif oracle != result:
                warnings.append(f"oracle disagrees with the chain: {oracle}")
                logger.warning(f"oracle closure {oracle} differs from chain closure {result} for {ideal}")
            else:
                certified = True

        report = ChainReport(
            terms=terms,
            stabilized_at=stabilized_at,
            certified=certified,
            n_max=cfg.n_max,
            window=cfg.window,
            warnings=warnings,
        )
        return result, report

    def rr_oracle_membership(self, ideal: MonomialIdeal, m: Sequence[int]) -> bool:
        """m + gens(I^n) ⊆ I^{n+1} for some n up to the oracle bound."""
        if len(m) != ideal.nvars or any(e < 0 for e in m):
            raise UsageError(f"exponent {tuple(m)} is not a valid monomial in {ideal.nvars} variables")
        powers = power_table(ideal, self.config.oracle_n_bound + 1)
        for lower, upper in zip(powers, powers[1:]):
            if all(tuple(a + b for a, b in zip(m, g)) in upper for g in lower.generators):
                return True
        return False

    def integral_oracle_membership(self, ideal: MonomialIdeal, m: Sequence[int], k_max: int) -> bool:
        """k*m lies in I^k for some k <= k_max."""
        for k, p in enumerate(power_table(ideal, k_max), start=1):
            if tuple(k * e for e in m) in p:
                return True
        return False

    def oracle_closure(self, ideal: MonomialIdeal) -> Tuple[MonomialIdeal, bool]:
        """Brute-force Ratliff-Rush closure restricted to the degree bound.

        Returns the minimalized closure and whether one of its generators
        sits on the degree bound, in which case the bound may be too small.
        """
        cfg = self.config
        bound = cfg.degree_bound_for(ideal)
        n = ideal.nvars
        box = (bound + 1,) * n
        hits = np.zeros(box, dtype=bool)
        powers = power_table(ideal, cfg.oracle_n_bound + 1)
        for lower, upper in zip(powers, powers[1:]):
            reach = max(max(g) for g in lower.generators)
            grid = _membership_grid(upper, bound + reach + 1)
            ok = np.ones(box, dtype=bool)
            for g in lower.generators:
                ok &= grid[tuple(slice(e, e + bound + 1) for e in g)]
            hits |= ok
        hits &= np.indices(box).sum(axis=0) <= bound
        closure = minimalize(np.argwhere(hits).tolist(), n)
        touches_bound = any(sum(g) >= bound for g in closure.generators)
        logger.debug(f"oracle closure of {ideal} within degree {bound}: {closure}")
        return closure, touches_bound

    def integral_closure_2v(self, ideal: MonomialIdeal) -> MonomialIdeal:
        """Lattice points of the Newton polyhedron, from its exact lower hull."""
        if ideal.nvars != 2:
            raise UnsupportedDimensionError("integral closure", ideal.nvars)
        hull = _lower_hull(sorted(ideal.generators))
        if len(hull) == 1:
            return ideal
        gens = []
        for (x0, y0), (x1, y1) in zip(hull, hull[1:]):
            slope = Fraction(y1 - y0, x1 - x0)
            for x in range(x0, x1 + 1):
                gens.append((x, math.ceil(y0 + slope * (x - x0))))
        return minimalize(gens, 2)

    def is_stable(self, ideal: MonomialIdeal) -> bool:
        endo = endomorphism_ring(ideal)
        frac = FractionalMonomialIdeal.from_ideal(ideal)
        return frac_equals(frac_multiply(frac, frac_colon(endo, frac)), endo)

    def is_l_stable(self, ideal: MonomialIdeal) -> LStabilityVerdict:
        base = endomorphism_ring(ideal)
        # Stable ideals are invertible over (I:I), so all powers share it.
        certain = ideal.is_principal or self.is_stable(ideal)
        current = ideal
        for n in range(2, self.config.n_max + 1):
            current = multiply(current, ideal)
            if not frac_equals(endomorphism_ring(current), base):
                logger.info(f"{ideal} is not L-stable: (I^{n}:I^{n}) differs from (I:I)")
                return LStabilityVerdict(l_stable=False, capped=False, failed_at=n)
        return LStabilityVerdict(l_stable=True, capped=not certain)

    def high_power_index(self, ideal: MonomialIdeal, n_bound: int = 8, span: int = 4) -> Optional[int]:
        """Smallest n <= n_bound such that for k in [n, n + span) the power I^k
        is Ratliff-Rush and equals the k-th power of the closure of I."""
        closure, _ = self.rr_closure(ideal, certify=False)
        count = n_bound + span - 1
        good: List[bool] = []
        for k, (p, q) in enumerate(zip(power_table(ideal, count), power_table(closure, count)), start=1):
            closed_p, report = self.rr_closure(p, certify=False)
            good.append(report.stabilized_at is not None and closed_p == p and p == q)
            n = k - span + 1
            if n >= 1 and all(good[n - 1:k]):
                return n
        return None

    def is_reduction_of(self, small: MonomialIdeal, big: MonomialIdeal) -> Optional[int]:
        """Smallest n <= n_max with small * big^n = big^{n+1}."""
        if not is_subideal(small, big):
            raise UsageError(f"{small} is not contained in {big}")
        power = big
        for n in range(1, self.config.n_max + 1):
            following = multiply(power, big)
            if multiply(small, power) == following:
                return n
            power = following
        return None
