"""
Verification and distribution-table endpoints

Runs are bounded by the exhaustive degree cap; the slow cap is CLI-only.
"""

from fastapi import APIRouter

from services import operations
from schemas.requests import TableRequest, VerifyRequest
from utils.response_envelope import format_success_response

router = APIRouter()


@router.post("/verify")
def verify_theorem(request: VerifyRequest) -> dict:
    reports = operations.verify(request, slow=False)
    passed = all(report.passed for report in reports)
    return format_success_response(
        [report.model_dump(mode="json") for report in reports],
        meta={"all_passed": passed, "reports": len(reports)},
    )


@router.post("/tables")
def distribution_table(request: TableRequest) -> dict:
    table = operations.table(request, slow=False)
    return format_success_response(table.model_dump(mode="json"))
