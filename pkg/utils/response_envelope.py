"""
Global response envelope formatting
"""

from typing import Any, Optional, Dict
from pydantic import BaseModel
from fastapi.responses import JSONResponse

from utils.error_codes import ERROR_MESSAGES, HTTP_STATUS, ErrorCode


class ApiResponse(BaseModel):
    """Standard response envelope shared by the API and the CLI --json output"""
    success: bool
    data: Optional[Any] = None
    error: Optional[Dict[str, Any]] = None
    meta: Optional[Dict[str, Any]] = None


class ResponseFormatter:
    """Global response formatter"""

    @staticmethod
    def success(data: Any = None, meta: Dict[str, Any] = None) -> ApiResponse:
        """Format successful response"""
        return ApiResponse(
            success=True,
            data=data,
            meta=meta
        )

    @staticmethod
    def failure(code: ErrorCode, message: Optional[str] = None, details: Dict[str, Any] = None) -> ApiResponse:
        """Envelope for a failed operation, message defaulting to the code's catalogue text"""
        return ApiResponse(
            success=False,
            error={
                "code": code.value,
                "message": message or ERROR_MESSAGES[code],
                "details": details or {},
            }
        )

    @staticmethod
    def error(
        code: ErrorCode,
        message: Optional[str] = None,
        details: Dict[str, Any] = None,
    ) -> JSONResponse:
        """Format error response with the status mapped from the error code"""
        response = ResponseFormatter.failure(code, message, details)
        return JSONResponse(
            status_code=HTTP_STATUS[code],
            content=response.model_dump()
        )


def format_success_response(data: Any = None, meta: Dict[str, Any] = None) -> Dict[str, Any]:
    """Helper function to format success responses"""
    return ResponseFormatter.success(data, meta).model_dump(mode="json")
