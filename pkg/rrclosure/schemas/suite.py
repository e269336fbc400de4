from fractions import Fraction
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from ..core.config import Settings

DEFAULT_GROUPS = ["lex(Z)", "lex(Q)", "lex(Z,Z)", "lex(Z,Q)", "lex(Q,Z)"]
DEFAULT_RHO_GRID = ["0", "1/2", "-1/2", "1", "-1", "3/2", "2"]
# Membership checks run on integers in units of 1/VALUE_SCALE.
VALUE_SCALE = 1000


class MonomialGeneratorConfig(BaseModel):
    max_vars: int = 2
    max_gens: int = 5
    max_exp: int = 8
    m_primary_bias: str = Field("1/2", description="Probability, as a rational in [0, 1], of forcing pure powers")

    @field_validator('max_vars', 'max_gens', 'max_exp')
    @classmethod
    def validate_positive(cls, v):
        if v < 1:
            raise ValueError('Generator bounds must be positive')
        return v

    @field_validator('m_primary_bias')
    @classmethod
    def validate_bias(cls, v):
        try:
            bias = Fraction(v)
        except (ValueError, ZeroDivisionError):
            raise ValueError('m_primary_bias must be a rational number')
        if not 0 <= bias <= 1:
            raise ValueError('m_primary_bias must lie in [0, 1]')
        return v

    @property
    def bias(self) -> Fraction:
        return Fraction(self.m_primary_bias)


class ValuationGeneratorConfig(BaseModel):
    groups: List[str] = Field(default_factory=lambda: list(DEFAULT_GROUPS))
    rho_grid: List[str] = Field(default_factory=lambda: list(DEFAULT_RHO_GRID))
    fractional: bool = True
    probes: int = 200

    @field_validator('groups')
    @classmethod
    def validate_groups(cls, v):
        if not v:
            raise ValueError('At least one value group must be provided')
        return v

    @field_validator('rho_grid')
    @classmethod
    def validate_rho_grid(cls, v):
        for entry in v:
            try:
                value = Fraction(entry)
            except (ValueError, ZeroDivisionError):
                raise ValueError(f'rho grid entry {entry!r} is not a rational number')
            if VALUE_SCALE % value.denominator:
                raise ValueError(f'rho grid entry {entry!r} is not a multiple of 1/{VALUE_SCALE}')
        return v

    @field_validator('probes')
    @classmethod
    def validate_probes(cls, v):
        if v < 1:
            raise ValueError('Probes must be positive')
        return v


class GeneratorConfig(BaseModel):
    seed: int = 42
    cases: int = 200
    heavy_case_cap: int = 50
    calculus_cases: int = 1000
    monomial: MonomialGeneratorConfig = Field(default_factory=MonomialGeneratorConfig)
    valuation: ValuationGeneratorConfig = Field(default_factory=ValuationGeneratorConfig)

    @field_validator('seed')
    @classmethod
    def validate_seed(cls, v):
        if not -(2 ** 63) <= v < 2 ** 64:
            raise ValueError('Seed must fit in 64 bits')
        return v

    @field_validator('cases', 'heavy_case_cap', 'calculus_cases')
    @classmethod
    def validate_cases(cls, v):
        if v < 0:
            raise ValueError('Case counts cannot be negative')
        return v

    @property
    def heavy_cases(self) -> int:
        return min(self.cases, self.heavy_case_cap)

    @classmethod
    def from_settings(cls, settings: Settings, **overrides) -> "GeneratorConfig":
        values = {
            "seed": settings.seed,
            "cases": settings.cases,
            "heavy_case_cap": settings.heavy_case_cap,
            "calculus_cases": settings.calculus_cases,
            "valuation": ValuationGeneratorConfig(probes=settings.probes),
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


class CheckResult(BaseModel):
    name: str
    claim: str = Field(..., description="Plain statement of what the check exercises")
    scope: Literal["witness", "sampled", "grid"]
    cases: int = 0
    failures: int = 0
    expected_failure: bool = False
    witness_found: Optional[bool] = None
    counterexample: Optional[str] = Field(None, description="First counterexample, in the CLI ideal grammar")
    notes: List[str] = Field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        if self.expected_failure:
            return bool(self.witness_found)
        return self.failures == 0


class SuiteReport(BaseModel):
    seed: int
    cases: int
    checks: List[CheckResult]
    passed: bool

    @model_validator(mode='after')
    def validate_order(self):
        names = [c.name for c in self.checks]
        if names != sorted(names):
            raise ValueError('Checks must be ordered by name')
        return self

    def without_timing(self) -> Dict[str, Any]:
        data = self.model_dump()
        for check in data["checks"]:
            check.pop("elapsed", None)
        return data
