from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field


class CommandResult(BaseModel):
    """The structured document printed by ``--json``."""
    universe: Literal["poly", "val", "suite"]
    op: str
    inputs: Dict[str, str]
    result: Any = None
    certified: Optional[bool] = None
    chain: Optional[List[str]] = None
    warnings: List[str] = Field(default_factory=list)
