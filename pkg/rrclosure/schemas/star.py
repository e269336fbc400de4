from typing import Optional, Tuple

from pydantic import BaseModel, Field, model_validator


class StarAxiomReport(BaseModel):
    """Outcome of checking the star-operation axioms for the generalized closure on one group."""
    group: str
    samples: int
    e1_pass: bool
    e2_pass: bool
    e3_pass: bool
    coincides_with_v: bool = Field(..., description="Generalized closure equaled the v-closure on every sample")
    e1_witness: Optional[Tuple[str, str]] = Field(None, description="(cut, scalar) breaking the shift rule")
    e2_witness: Optional[Tuple[str, str]] = Field(None, description="(A, B) with A ⊆ B but closure(A) ⊄ closure(B)")
    e3_witness: Optional[str] = None

    @model_validator(mode='after')
    def validate_witnesses(self):
        if not self.e2_pass and self.e2_witness is None:
            raise ValueError('A failed monotonicity check must carry its witness pair')
        if not self.e1_pass and self.e1_witness is None:
            raise ValueError('A failed shift check must carry its witness')
        return self

    @property
    def is_star_operation(self) -> bool:
        return self.e1_pass and self.e2_pass and self.e3_pass
