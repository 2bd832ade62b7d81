"""
Verification report schemas
"""

from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, model_validator


class ReportStatus(str, Enum):
    """Outcome of one verification run"""
    PASS = "pass"
    FAIL = "fail"


class Counterexample(BaseModel):
    """Witness of a failed check, re-checkable on its own"""
    permutation: Optional[List[int]] = Field(None, description="Failing element in one-line notation")
    property: Optional[str] = Field(None, description="Registered property that failed")
    degree: Optional[int] = Field(None, description="Degree of the failing population")
    q: Optional[int] = Field(None, description="q parameter, for q-family checks")
    observed: Dict[str, Any] = Field(default_factory=dict, description="Both sides of the failed comparison")


class VerifyReport(BaseModel):
    """Result of one theorem, lemma or oracle check"""
    theorem: str = Field(..., description="Theorem, lemma or oracle identifier")
    params: Dict[str, Any] = Field(default_factory=dict, description="Parameters of the run")
    status: ReportStatus = Field(..., description="pass or fail")
    counterexample: Optional[Counterexample] = Field(None, description="Present exactly when failing")
    population: int = Field(..., ge=0, description="Number of elements examined")
    elapsed_ms: float = Field(..., ge=0, description="Wall-clock time in milliseconds")
    notes: List[str] = Field(default_factory=list, description="Free-form remarks")

    @model_validator(mode="after")
    def validate_counterexample(self) -> "VerifyReport":
        if self.status is ReportStatus.FAIL and self.counterexample is None:
            raise ValueError("A failing report must carry a counterexample")
        if self.status is ReportStatus.PASS and self.counterexample is not None:
            raise ValueError("A passing report cannot carry a counterexample")
        return self

    @property
    def passed(self) -> bool:
        return self.status is ReportStatus.PASS


class DistributionTable(BaseModel):
    """Distribution of one statistic over a filtered group"""
    group: str = Field(..., description="s, a or q")
    statistic: str = Field(..., description="Statistic name")
    degree: int = Field(..., ge=1, description="Degree of the enumerated group")
    q: Optional[int] = Field(None, description="q parameter for the q group")
    filter: str = Field("none", description="Population filter")
    coefficients: Dict[int, int] = Field(..., description="Statistic value to count")
    des: Optional[List[int]] = Field(None, description="Inverse descent set filter")
    del_set: Optional[List[int]] = Field(None, description="Inverse delent set filter")
    set_match: Optional[str] = Field(None, description="within or equal, when a set filter is given")
    population: int = Field(..., ge=0, description="Number of elements counted")
