from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..core.config import Settings
from ..models.monomial import MonomialIdeal


class ClosureConfig(BaseModel):
    n_max: int = Field(16, description="Largest chain index computed")
    window: int = Field(3, description="Consecutive equal chain terms that count as stabilized")
    oracle_degree_bound: Optional[int] = Field(None, description="Total degree bound of the oracle; derived when absent")
    oracle_n_bound: int = Field(24, description="Largest power index the oracle tries")
    oracle_degree_slack: int = 4

    @field_validator('n_max', 'window', 'oracle_n_bound')
    @classmethod
    def validate_positive(cls, v):
        if v < 1:
            raise ValueError('Bounds must be positive')
        return v

    @field_validator('oracle_degree_bound')
    @classmethod
    def validate_degree_bound(cls, v):
        if v is not None and v < 1:
            raise ValueError('Oracle degree bound must be positive')
        return v

    @model_validator(mode='after')
    def validate_window(self):
        if self.window > self.n_max:
            raise ValueError('Window cannot exceed n_max')
        return self

    @classmethod
    def from_settings(cls, settings: Settings, **overrides) -> "ClosureConfig":
        values = {
            "n_max": settings.n_max,
            "window": settings.window,
            "oracle_n_bound": settings.oracle_n_bound,
            "oracle_degree_slack": settings.oracle_degree_slack,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def degree_bound_for(self, ideal: MonomialIdeal) -> int:
        if self.oracle_degree_bound is not None:
            return self.oracle_degree_bound
        return 2 * ideal.max_degree + self.oracle_degree_slack


class ChainReport(BaseModel):
    """The computed part of the chain (I^{n+1} : I^n), n = 1, 2, ..."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    terms: List[MonomialIdeal]
    stabilized_at: Optional[int] = None
    certified: bool = False
    n_max: int
    window: int
    warnings: List[str] = Field(default_factory=list)

    @property
    def status(self) -> str:
        if self.certified:
            return "certified"
        return "uncertified" if self.stabilized_at is not None else "unstable"


class LStabilityVerdict(BaseModel):
    l_stable: bool
    capped: bool = Field(..., description="Equality held up to n_max, which is the only certificate")
    failed_at: Optional[int] = None

    def __bool__(self):
        return self.l_stable
