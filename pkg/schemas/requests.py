"""
Request schemas for all API endpoints
"""

from typing import List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from services.perm_core import Permutation


class PermutationPayload(BaseModel):
    """Structured permutation input: one-line images under "images" """
    images: List[int] = Field(..., min_length=1, description="One-line notation [w(1), ..., w(n)]")

    def to_permutation(self) -> Permutation:
        # Permutation validates; format errors surface as PermutationFormatError
        return Permutation(tuple(self.images))


class CanonicalRequest(PermutationPayload):
    """Canonical presentation request"""
    group: str = Field("s", pattern="^(s|a)$", description="s for S_n, a for A_{n+1}")


class QStatsRequest(PermutationPayload):
    """Statistics request; q selects the shifted family on top of the S/A records"""
    q: Optional[int] = Field(None, ge=1, description="q parameter of the shifted statistics")


class FoataRequest(PermutationPayload):
    """Foata transformation request"""
    trace: bool = Field(False, description="Include the intermediate rows")


class CoverRequest(PermutationPayload):
    """Covering map request: f when q is absent, f_q otherwise"""
    q: Optional[int] = Field(None, ge=1, description="q parameter of f_q")


class PsiRequest(PermutationPayload):
    """Extended bijection request"""
    inverse: bool = Field(False, description="Apply the inverse bijection")
    trace: bool = Field(False, description="Include every pipeline stage")


class PsiQRequest(PsiRequest):
    """q-family extended bijection request"""
    q: int = Field(..., ge=1, description="q parameter")


class AvoidRequest(BaseModel):
    """Pattern avoidance query or avoider enumeration"""
    q: int = Field(..., ge=1, description="Pattern family Pat(q)")
    images: Optional[List[int]] = Field(None, description="Permutation to test")
    enumerate_degree: Optional[int] = Field(None, ge=1, description="Degree whose avoiders are listed")

    @model_validator(mode="after")
    def validate_mode(self) -> "AvoidRequest":
        if (self.images is None) == (self.enumerate_degree is None):
            raise ValueError("Provide exactly one of images or enumerate_degree")
        return self


class VerifyRequest(BaseModel):
    """Theorem verification request"""
    theorem: str = Field(..., description="Theorem identifier, see the verify command")
    n: int = Field(..., ge=1, description="Size parameter")
    q: int = Field(1, ge=1, description="q parameter for the q family")
    q_cap: int = Field(3, ge=1, description="Largest q for the lemma and oracle suites")
    d1: Optional[List[int]] = Field(None, description="D1 for a-eq; all subsets when absent")
    d2: Optional[List[int]] = Field(None, description="D2 for a-eq; all subsets when absent")
    regime: Optional[str] = Field(None, pattern="^(literal|extended)$", description="D2 ground set for a-eq sweeps; both when absent")
    b1: Optional[List[int]] = Field(None, description="B1 for qst1")
    b2: Optional[List[int]] = Field(None, description="B2 for qst1")
    b: Optional[List[int]] = Field(None, description="B for qst2")

    @field_validator("theorem")
    def validate_theorem(cls, v: str) -> str:
        return v.strip().lower()


class TableRequest(BaseModel):
    """Distribution table request"""
    group: str = Field(..., pattern="^(s|a|q)$", description="s, a or q")
    statistic: str = Field(..., description="Statistic name")
    n: int = Field(..., ge=1, description="Degree of the enumerated group")
    q: int = Field(1, ge=1, description="q parameter for the q group")
    filter: str = Field("none", description="Population filter")
    des: Optional[List[int]] = Field(
        None, description="Descent set of the inverse; alternating tables keep subsets of it"
    )
    del_set: Optional[List[int]] = Field(
        None, description="Delent set of the inverse; alternating tables keep subsets of it"
    )
