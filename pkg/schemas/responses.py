"""
Response schemas for all API endpoints
"""

from datetime import datetime
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, Field

from services.bijections import PsiTrace
from services.canonical import ACanonical, AFactor, SCanonical, SFactor
from services.perm_core import Permutation
from services.stats import AStatRecord, QStatRecord, SStatRecord


def _images(w: Permutation) -> List[int]:
    return list(w.images)


class FactorModel(BaseModel):
    """One factor w_j / v_j of a canonical presentation"""
    j: int = Field(..., ge=1, description="Factor index")
    kind: str = Field(..., description="identity, run or tail")
    ell: Optional[int] = Field(None, description="Lowest generator index of a run")
    sign: Optional[int] = Field(None, description="Exponent of a_1 in a tail")

    @classmethod
    def from_factor(cls, factor: Union[SFactor, AFactor]) -> "FactorModel":
        return cls(
            j=factor.j,
            kind=factor.kind.value,
            ell=factor.ell,
            sign=getattr(factor, "sign", None),
        )


class CanonicalModel(BaseModel):
    """Canonical presentation with its printed form"""
    group: str = Field(..., description="s or a")
    degree: int = Field(..., description="Degree of the permutation presented")
    factors: List[FactorModel] = Field(..., description="Factors for j = 1 .. n-1, Identity included")
    length: int = Field(..., ge=0, description="Number of generators")
    text: str = Field(..., description="Printed presentation, Identity factors omitted")

    @classmethod
    def from_presentation(cls, p: Union[SCanonical, ACanonical]) -> "CanonicalModel":
        is_a = isinstance(p, ACanonical)
        return cls(
            group="a" if is_a else "s",
            degree=p.degree if is_a else p.n,
            factors=[FactorModel.from_factor(f) for f in p.factors],
            length=p.length,
            text=str(p),
        )


class SStatsModel(BaseModel):
    des: List[int]
    maj: int
    rmaj: int
    ell: int
    del_set: List[int]
    del_count: int
    ltrm: List[int]

    @classmethod
    def from_record(cls, r: SStatRecord) -> "SStatsModel":
        return cls(des=sorted(r.des), maj=r.maj, rmaj=r.rmaj, ell=r.ell,
                   del_set=sorted(r.del_set), del_count=r.del_count, ltrm=sorted(r.ltrm))


class AStatsModel(BaseModel):
    des: List[int]
    maj: int
    rmaj: int
    ell: int
    del_set: List[int]
    del_count: int
    ltram: List[int]

    @classmethod
    def from_record(cls, r: AStatRecord) -> "AStatsModel":
        return cls(des=sorted(r.des), maj=r.maj, rmaj=r.rmaj, ell=r.ell,
                   del_set=sorted(r.del_set), del_count=r.del_count, ltram=sorted(r.ltram))


class QStatsModel(BaseModel):
    q: int
    m: int
    ell_q: int
    del_q_set: List[int]
    des_q: List[int]
    rmaj_q: int
    ltrm_q: List[int]

    @classmethod
    def from_record(cls, r: QStatRecord) -> "QStatsModel":
        return cls(q=r.q, m=r.m, ell_q=r.ell_q, del_q_set=sorted(r.del_q_set),
                   des_q=sorted(r.des_q), rmaj_q=r.rmaj_q, ltrm_q=sorted(r.ltrm_q))


class StatsResponse(BaseModel):
    """All statistic records that apply to one permutation"""
    images: List[int]
    s: SStatsModel
    a: Optional[AStatsModel] = Field(None, description="Present for even permutations of degree >= 3")
    q: Optional[QStatsModel] = Field(None, description="Present when q was requested")


class FoataResponse(BaseModel):
    """Image of a Foata-type map, with its rows when traced"""
    operation: str
    images: List[int]
    output: List[int]
    trace: Optional[List[List[int]]] = None


class CoverResponse(BaseModel):
    images: List[int]
    q: Optional[int] = None
    presentation: CanonicalModel = Field(..., description="Presentation of the input")
    image_presentation: CanonicalModel = Field(..., description="Presentation of the image")
    output: List[int]


class PsiTraceModel(BaseModel):
    """Every stage of one extended-bijection evaluation"""
    input: List[int]
    input_presentation: CanonicalModel
    f_image: List[int]
    rtl_phi_image: List[int]
    s_presentation_of_image: CanonicalModel
    lifted_presentation: CanonicalModel
    output: List[int]
    q: Optional[int] = None
    inverse: bool = False

    @classmethod
    def from_trace(cls, t: PsiTrace) -> "PsiTraceModel":
        return cls(
            input=_images(t.input),
            input_presentation=CanonicalModel.from_presentation(t.input_presentation),
            f_image=_images(t.f_image),
            rtl_phi_image=_images(t.rtl_phi_image),
            s_presentation_of_image=CanonicalModel.from_presentation(t.s_presentation_of_image),
            lifted_presentation=CanonicalModel.from_presentation(t.lifted_presentation),
            output=_images(t.output),
            q=t.q,
            inverse=t.inverse,
        )


class PsiResponse(BaseModel):
    images: List[int]
    output: List[int]
    q: Optional[int] = None
    inverse: bool = False
    trace: Optional[PsiTraceModel] = None


class AvoidResponse(BaseModel):
    q: int
    patterns: List[str] = Field(..., description="Pat(q) in printed form")
    images: Optional[List[int]] = None
    avoids: Optional[bool] = None
    occurrence: Optional[Dict[str, object]] = Field(None, description="First witnessing pattern and positions")
    avoiders: Optional[List[List[int]]] = None
    count: Optional[int] = None


class HealthResponse(BaseModel):
    """Health check response"""
    status: str = Field(..., description="Service status")
    service: str = Field(..., description="Service name")
    version: str = Field(..., description="Service version")
    timestamp: datetime = Field(..., description="Health check timestamp")
    environment: str = Field(..., description="Deployment environment")
    limits: Dict[str, int] = Field(default_factory=dict, description="Configured enumeration caps")
