"""
Request-level operations shared by the HTTP routes and the CLI
"""

from typing import Callable, Dict, List, Optional

from services import stats
from services.bijections import psi_inverse_trace, psi_q_inverse_trace, psi_q_trace, psi_trace
from services.canonical import a_canonical, expand_s, s_canonical
from services.covering import f_presentation, f_q_presentation
from services.foata import (
    phi_inverse_permutation,
    phi_permutation,
    phi_trace,
    rtl_phi,
    rtl_phi_inverse,
    rtl_phi_trace,
)
from services.patterns import enumerate_avoiders, find_pat_q_occurrence, pattern_family
from services.perm_core import Permutation, is_even
from services.verification import checkers
from services.verification.distribution import SetFilter, distribution_table
from schemas.reports import DistributionTable, VerifyReport
from schemas.requests import TableRequest, VerifyRequest
from schemas.responses import (
    AStatsModel,
    AvoidResponse,
    CanonicalModel,
    CoverResponse,
    FoataResponse,
    PsiResponse,
    PsiTraceModel,
    QStatsModel,
    SStatsModel,
    StatsResponse,
)
from utils.exceptions import DomainError
from utils.structured_logging import get_structured_logger

logger = get_structured_logger(__name__)


def canonical_of(w: Permutation, group: str = "s") -> CanonicalModel:
    presentation = a_canonical(w) if group == "a" else s_canonical(w)
    return CanonicalModel.from_presentation(presentation)


def stats_of(w: Permutation, q: Optional[int] = None) -> StatsResponse:
    """S record always; A record for even w of degree >= 3; q record on request"""
    a_record = None
    if w.n >= 3 and is_even(w):
        a_record = AStatsModel.from_record(stats.a_stats(w))
    q_record = QStatsModel.from_record(stats.q_stats(q, w)) if q is not None else None
    return StatsResponse(
        images=list(w.images),
        s=SStatsModel.from_record(stats.s_stats(w)),
        a=a_record,
        q=q_record,
    )


FOATA_OPERATIONS: Dict[str, Callable[[Permutation], Permutation]] = {
    "phi": phi_permutation,
    "phi-inverse": phi_inverse_permutation,
    "rtl-phi": rtl_phi,
    "rtl-phi-inverse": rtl_phi_inverse,
}

_FOATA_TRACES = {
    "phi": lambda w: phi_trace(w.images),
    "rtl-phi": rtl_phi_trace,
}


def foata(operation: str, w: Permutation, trace: bool = False) -> FoataResponse:
    if operation not in FOATA_OPERATIONS:
        raise DomainError(f"Unknown Foata operation {operation!r}",
                          {"operation": operation, "known": sorted(FOATA_OPERATIONS)})
    rows = None
    if trace and operation in _FOATA_TRACES:
        rows = [list(row) for row in _FOATA_TRACES[operation](w)]
    return FoataResponse(
        operation=operation,
        images=list(w.images),
        output=list(FOATA_OPERATIONS[operation](w).images),
        trace=rows,
    )


def cover(w: Permutation, q: Optional[int] = None) -> CoverResponse:
    """f on A_{n+1} when q is None, f_q on S_{n+q-1} otherwise"""
    if q is None:
        if w.n < 3:
            raise DomainError(f"f needs degree at least 3, got {w.n}", {"degree": w.n})
        presentation = a_canonical(w)
        image = f_presentation(presentation)
    else:
        if w.n < q:
            raise DomainError(f"q must satisfy 1 <= q <= degree, got q={q}, degree={w.n}",
                              {"q": q, "degree": w.n})
        presentation = s_canonical(w)
        image = f_q_presentation(q, presentation)
    return CoverResponse(
        images=list(w.images),
        q=q,
        presentation=CanonicalModel.from_presentation(presentation),
        image_presentation=CanonicalModel.from_presentation(image),
        output=list(expand_s(image).images),
    )


def extended_bijection(
    w: Permutation, q: Optional[int] = None, inverse: bool = False, trace: bool = False
) -> PsiResponse:
    """psi / psi_inverse when q is None, psi_q / psi_q_inverse otherwise"""
    if q is None:
        result = psi_inverse_trace(w) if inverse else psi_trace(w)
    else:
        result = psi_q_inverse_trace(q, w) if inverse else psi_q_trace(q, w)
    return PsiResponse(
        images=list(w.images),
        output=list(result.output.images),
        q=q,
        inverse=inverse,
        trace=PsiTraceModel.from_trace(result) if trace else None,
    )


def avoidance(q: int, w: Optional[Permutation] = None, degree: Optional[int] = None) -> AvoidResponse:
    """Test one permutation against Pat(q), or list Avoid_q(degree)"""
    patterns = list(pattern_family(q))
    if w is not None:
        found = find_pat_q_occurrence(q, w)
        occurrence = None
        if found is not None:
            occurrence = {"pattern": str(found[0]), "positions": list(found[1])}
        return AvoidResponse(q=q, patterns=patterns, images=list(w.images),
                             avoids=found is None, occurrence=occurrence)
    if degree is None:
        raise DomainError("Either a permutation or a degree is required", {"q": q})
    avoiders = enumerate_avoiders(q, degree)
    return AvoidResponse(q=q, patterns=patterns, avoiders=[list(v.images) for v in avoiders],
                         count=len(avoiders))


THEOREMS = (
    "a-eq", "psi", "psi-q", "qst1", "qst2", "foata", "lemmas", "macmahon", "oracles", "f-fibers",
)


def verify(request: VerifyRequest, slow: bool = False, workers: Optional[int] = None) -> List[VerifyReport]:
    """Dispatch one verify request to its checkers"""
    r = request
    kw = {"slow": slow, "workers": workers}
    logger.info("Verify requested", theorem=r.theorem, n=r.n, q=r.q, slow=slow)
    if r.theorem == "a-eq":
        if r.d1 is None and r.d2 is None:
            regimes = [r.regime] if r.regime else list(checkers.A_EQ_REGIMES)
            return [checkers.check_a_eq_all(r.n, regime, **kw) for regime in regimes]
        d1 = r.d1 if r.d1 is not None else range(1, r.n)
        d2 = r.d2 if r.d2 is not None else range(1, r.n + 2)
        return [checkers.check_a_eq(r.n, d1, d2, **kw)]
    if r.theorem == "psi":
        return [checkers.check_psi_theorem(r.n, **kw)]
    if r.theorem == "psi-q":
        return [checkers.check_psi_q_theorem(r.n, r.q, **kw)]
    if r.theorem == "qst1":
        if r.b1 is None and r.b2 is None:
            return [checkers.check_qst1_all(r.n, r.q, **kw)]
        return [checkers.check_qst1(r.n, r.q, r.b1 or (), r.b2 or (), **kw)]
    if r.theorem == "qst2":
        if r.b is None:
            return [checkers.check_qst2_all(r.n, r.q, **kw)]
        return [checkers.check_qst2(r.n, r.q, r.b, **kw)]
    if r.theorem == "foata":
        return checkers.check_foata(r.n, **kw)
    if r.theorem == "lemmas":
        return checkers.check_lemma_suite(r.n, r.q_cap, **kw)
    if r.theorem == "macmahon":
        return [checkers.check_macmahon(r.n, **kw)]
    if r.theorem == "oracles":
        return checkers.check_oracles(r.n, r.q_cap, **kw)
    if r.theorem == "f-fibers":
        return [checkers.check_f_fibers(r.n, **kw)]
    raise DomainError(f"Unknown theorem {r.theorem!r}", {"theorem": r.theorem, "known": list(THEOREMS)})


def table(request: TableRequest, slow: bool = False, workers: Optional[int] = None) -> DistributionTable:
    checkers.require_cap(request.n, slow)
    sets = SetFilter.for_group(request.group, request.des, request.del_set)
    poly = distribution_table(
        request.group,
        request.n,
        request.statistic,
        request.filter,
        q=request.q,
        workers=checkers.resolve_workers(workers),
        sets=sets,
    )
    return DistributionTable(
        group=request.group,
        statistic=request.statistic,
        degree=request.n,
        q=request.q if request.group == "q" or request.filter != "none" else None,
        filter=request.filter,
        coefficients=dict(poly.coeffs),
        des=sorted(sets.des) if sets.des is not None else None,
        del_set=sorted(sets.dels) if sets.dels is not None else None,
        set_match=sets.mode if sets.active else None,
        population=poly.total,
    )
