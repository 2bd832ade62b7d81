"""
Global error handling for the HTTP surface and the CLI
"""

import time
from typing import Any, Dict, Tuple

from fastapi import FastAPI, HTTPException, Request
from fastapi.encoders import jsonable_encoder
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from starlette.middleware.base import BaseHTTPMiddleware

from utils.error_codes import EXIT_CODES, ErrorCode, error_code_for, is_user_error
from utils.exceptions import PermStatsError
from utils.metrics_collector import metrics
from utils.response_envelope import ResponseFormatter
from utils.structured_logging import get_structured_logger

logger = get_structured_logger(__name__)


class GlobalExceptionHandler(BaseHTTPMiddleware):
    """Catches anything the routes let escape and records request metrics"""

    async def dispatch(self, request: Request, call_next):
        started = time.perf_counter()
        try:
            response = await call_next(request)
        except HTTPException:
            # Re-raise HTTP exceptions as-is
            raise
        except Exception as e:
            response = self._handle_exception(request, e)
        metrics.track_request(
            method=request.method,
            endpoint=request.url.path,
            status_code=response.status_code,
            duration=time.perf_counter() - started,
        )
        return response

    def _handle_exception(self, request: Request, exc: Exception) -> JSONResponse:
        code = error_code_for(exc)
        logger.error(
            "Unhandled exception",
            method=request.method,
            path=request.url.path,
            exception_type=type(exc).__name__,
            error_code=code.value,
            exc_info=exc,
        )
        return ResponseFormatter.error(code, details={"exception_type": type(exc).__name__})


async def permstats_exception_handler(request: Request, exc: PermStatsError) -> JSONResponse:
    """Engine errors become enveloped responses with the mapped status"""
    code = error_code_for(exc)
    log = logger.info if is_user_error(code) else logger.error
    log("Request rejected", path=request.url.path, error_code=code.value, message=exc.message)
    return ResponseFormatter.error(code, exc.message, exc.details)


async def request_validation_handler(request: Request, exc: RequestValidationError) -> JSONResponse:
    """Schema violations in request bodies, enveloped like engine errors"""
    return ResponseFormatter.error(
        ErrorCode.VALIDATION_OUT_OF_DOMAIN,
        "Request body failed validation",
        {"errors": [
            {"loc": jsonable_encoder(list(e.get("loc", ()))), "msg": e.get("msg"), "type": e.get("type")}
            for e in exc.errors()
        ]},
    )


def register_exception_handlers(app: FastAPI) -> None:
    app.add_exception_handler(RequestValidationError, request_validation_handler)
    app.add_exception_handler(PermStatsError, permstats_exception_handler)
    app.add_middleware(GlobalExceptionHandler)


def format_cli_error(exc: BaseException) -> Tuple[Dict[str, Any], int]:
    """Envelope payload and process exit code for an error reaching the CLI"""
    code = error_code_for(exc)
    if isinstance(exc, PermStatsError):
        message, details = exc.message, exc.details
    else:
        message, details = None, {"exception_type": type(exc).__name__}
    if is_user_error(code):
        logger.info("Command rejected", error_code=code.value, message=message)
    else:
        logger.error("Command failed", error_code=code.value, exc_info=exc)
    envelope = ResponseFormatter.failure(code, message, details).model_dump(mode="json")
    return envelope, EXIT_CODES.get(code, EXIT_CODES[ErrorCode.SYSTEM_INTERNAL_ERROR])
