"""
Permutation engine endpoints: statistics, presentations, maps and avoidance
"""

from fastapi import APIRouter

from services import operations
from services.perm_core import Permutation
from schemas.requests import (
    AvoidRequest,
    CanonicalRequest,
    CoverRequest,
    FoataRequest,
    PsiQRequest,
    PsiRequest,
    QStatsRequest,
)
from utils.response_envelope import format_success_response

router = APIRouter()


@router.post("/stats")
def permutation_stats(request: QStatsRequest) -> dict:
    """S, A and (optionally) q statistic records of one permutation"""
    result = operations.stats_of(request.to_permutation(), request.q)
    return format_success_response(result.model_dump())


@router.post("/canonical")
def canonical_presentation(request: CanonicalRequest) -> dict:
    result = operations.canonical_of(request.to_permutation(), request.group)
    return format_success_response(result.model_dump())


@router.post("/foata/{operation}")
def foata_transform(operation: str, request: FoataRequest) -> dict:
    """phi, phi-inverse, rtl-phi or rtl-phi-inverse"""
    result = operations.foata(operation, request.to_permutation(), request.trace)
    return format_success_response(result.model_dump())


@router.post("/cover")
def covering_map(request: CoverRequest) -> dict:
    result = operations.cover(request.to_permutation(), request.q)
    return format_success_response(result.model_dump())


@router.post("/psi")
def psi_bijection(request: PsiRequest) -> dict:
    result = operations.extended_bijection(
        request.to_permutation(), inverse=request.inverse, trace=request.trace
    )
    return format_success_response(result.model_dump())


@router.post("/psiq")
def psi_q_bijection(request: PsiQRequest) -> dict:
    result = operations.extended_bijection(
        request.to_permutation(), q=request.q, inverse=request.inverse, trace=request.trace
    )
    return format_success_response(result.model_dump())


@router.post("/avoid")
def pattern_avoidance(request: AvoidRequest) -> dict:
    """Test one permutation against Pat(q) or list the avoiders of a degree"""
    w = Permutation(tuple(request.images)) if request.images is not None else None
    result = operations.avoidance(request.q, w, request.enumerate_degree)
    return format_success_response(result.model_dump(exclude_none=True))
