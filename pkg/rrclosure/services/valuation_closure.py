import logging
from enum import Enum
from typing import Dict, List, Optional, Sequence

from ..core.errors import UsageError
from ..models.valuation import (
    CutIdeal,
    GroupElement,
    ValueGroup,
    canonicalize,
    cut_colon,
    cut_includes,
    cut_join,
    cut_meet,
    cut_multiply,
    cut_power,
    cut_shift,
    is_idempotent,
    is_integral,
    is_prime,
    prime_cut,
    trace,
    unit_cut,
)
from ..schemas.star import StarAxiomReport
from ..schemas.suite import DEFAULT_RHO_GRID
from ..utils.parser import format_cut
from ..utils.sampling import STREAM_STAR, cut_grid, group_code, make_rng, sample_element

logger = logging.getLogger(__name__)


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


class ValuationClosureService:
    def __init__(self, chain_n_max: int = 4):
        if chain_n_max < 1:
            raise UsageError(f"chain_n_max must be positive, got {chain_n_max}")
        self.chain_n_max = chain_n_max

    def _require_integral(self, cut: CutIdeal) -> CutIdeal:
        c = canonicalize(cut)
        if not is_integral(c):
            raise UsageError(f"{format_cut(c)} is not an ideal of V")
        return c

    def rr_closed_form(self, cut: CutIdeal) -> CutIdeal:
        """Ratliff-Rush closure from the trace of the ideal.

        Idempotent primes close to V. Otherwise, with Q = I * I^-1, the
        closure is I when Q = V and (IQ : Q) ∩ V when Q is a prime.
        """
        c = self._require_integral(cut)
        v = unit_cut(c.group)
        if is_prime(c) is not None and is_idempotent(c):
            return v
        q = trace(c)
        if q == v:
            return c
        return cut_meet(cut_colon(cut_multiply(c, q), q), v)

    def _chain_terms(self, cut: CutIdeal, n_max: int) -> List[CutIdeal]:
        terms = []
        lower = canonicalize(cut)
        for n in range(1, n_max + 1):
            upper = cut_multiply(lower, cut)
            terms.append(cut_colon(upper, lower))
            lower = upper
        return terms

    def rr_by_chain(self, cut: CutIdeal, n_max: Optional[int] = None) -> CutIdeal:
        c = self._require_integral(cut)
        v = unit_cut(c.group)
        result = c
        for term in self._chain_terms(c, n_max or self.chain_n_max):
            result = cut_join(result, cut_meet(term, v))
        return result

    def rr_hat(self, cut: CutIdeal) -> CutIdeal:
        """Union of (I^{n+1} : I^n) taken among fractional cuts."""
        c = canonicalize(cut)
        result = c
        for term in self._chain_terms(c, self.chain_n_max):
            result = cut_join(result, term)
        return result

    def v_closure(self, cut: CutIdeal) -> CutIdeal:
        v = unit_cut(cut.group)
        return cut_colon(v, cut_colon(v, cut))

    def is_divisorial(self, cut: CutIdeal) -> bool:
        return self.v_closure(cut) == canonicalize(cut)

    def check_endomorphism_inclusion(self, cut: CutIdeal) -> CheckStatus:
        """(I:I) ⊆ (Ĩ:Ĩ); skipped when the closure is V."""
        c = self._require_integral(cut)
        closure = self.rr_closed_form(c)
        if closure == unit_cut(c.group):
            return CheckStatus.SKIPPED
        if cut_includes(cut_colon(closure, closure), cut_colon(c, c)):
            return CheckStatus.PASS
        logger.warning(f"endomorphism inclusion fails for {format_cut(c)}")
        return CheckStatus.FAIL

    def is_l_stable(self, cut: CutIdeal) -> bool:
        """(I^n : I^n) = (I : I) for n up to chain_n_max."""
        c = canonicalize(cut)
        base = cut_colon(c, c)
        for n in range(2, self.chain_n_max + 1):
            p = cut_power(c, n)
            if cut_colon(p, p) != base:
                return False
        return True

    def check_star_axioms(
        self,
        group: ValueGroup,
        samples: int,
        seed: int,
        rho_grid: Sequence[str] = DEFAULT_RHO_GRID,
    ) -> StarAxiomReport:
        if samples < 1:
            raise UsageError(f"samples must be positive, got {samples}")
        grid = cut_grid(group, rho_grid, integral=False)
        hats: Dict[CutIdeal, CutIdeal] = {c: self.rr_hat(c) for c in grid}
        v = unit_cut(group)
        rng = make_rng(seed, STREAM_STAR, group_code(group))

        e1_witness = None
        if self.rr_hat(v) != v:
            e1_witness = (format_cut(v), str(GroupElement.zero(group)))
        for _ in range(samples):
            if e1_witness is not None:
                break
            c = grid[int(rng.integers(0, len(grid)))]
            a = sample_element(group, rng)
            if self.rr_hat(cut_shift(c, a)) != cut_shift(hats[c], a):
                e1_witness = (format_cut(c), str(a))

        e2_witness = None
        for c in grid:
            if not cut_includes(hats[c], c):
                e2_witness = (format_cut(c), format_cut(hats[c]))
                break
        if e2_witness is None:
            e2_witness = self._monotonicity_witness(group, grid, hats)

        e3_witness = None
        for c in grid:
            if self.rr_hat(hats[c]) != hats[c]:
                e3_witness = format_cut(c)
                break

        coincides = all(hats[c] == self.v_closure(c) for c in grid)
        report = StarAxiomReport(
            group=str(group),
            samples=samples,
            e1_pass=e1_witness is None,
            e2_pass=e2_witness is None,
            e3_pass=e3_witness is None,
            coincides_with_v=coincides,
            e1_witness=e1_witness,
            e2_witness=e2_witness,
            e3_witness=e3_witness,
        )
        logger.info(
            f"star axioms on {group}: E1={report.e1_pass} E2={report.e2_pass} "
            f"E3={report.e3_pass} hat=v:{coincides}"
        )
        return report

    def _monotonicity_witness(self, group: ValueGroup, grid: List[CutIdeal], hats: Dict[CutIdeal, CutIdeal]):
        # A nonmaximal idempotent prime P_j sits inside e_k + V, whose closure is itself.
        k = group.rank
        unit_step = GroupElement.of(group, [0] * (k - 1) + [1])
        shifted_v = cut_shift(unit_cut(group), unit_step)
        for j in range(1, k):
            if not group.is_dense(j):
                continue
            p = prime_cut(group, j)
            if cut_includes(shifted_v, p) and not cut_includes(self.rr_hat(shifted_v), self.rr_hat(p)):
                return (format_cut(p), format_cut(shifted_v))
        for small in grid:
            for big in grid:
                if small != big and cut_includes(big, small) and not cut_includes(hats[big], hats[small]):
                    return (format_cut(small), format_cut(big))
        return None
