"""
Standard error code taxonomy
"""

from enum import Enum

from utils.exceptions import (
    ConfigurationError,
    DegreeMismatchError,
    DomainError,
    InvariantViolation,
    ParityError,
    PermStatsError,
    PermutationFormatError,
    ResourceCapError,
    WordFormatError,
)


class ErrorCode(str, Enum):
    """Standardized error codes"""

    # Input validation
    VALIDATION_INVALID_PERMUTATION = "VALIDATION_INVALID_PERMUTATION"
    VALIDATION_INVALID_WORD = "VALIDATION_INVALID_WORD"
    VALIDATION_DEGREE_MISMATCH = "VALIDATION_DEGREE_MISMATCH"
    VALIDATION_ODD_PERMUTATION = "VALIDATION_ODD_PERMUTATION"
    VALIDATION_OUT_OF_DOMAIN = "VALIDATION_OUT_OF_DOMAIN"

    # Resource management
    RESOURCE_CAP_EXCEEDED = "RESOURCE_CAP_EXCEEDED"

    # System errors
    SYSTEM_CONFIGURATION_ERROR = "SYSTEM_CONFIGURATION_ERROR"
    SYSTEM_INVARIANT_VIOLATION = "SYSTEM_INVARIANT_VIOLATION"
    SYSTEM_INTERNAL_ERROR = "SYSTEM_INTERNAL_ERROR"


ERROR_MESSAGES = {
    ErrorCode.VALIDATION_INVALID_PERMUTATION: "Input is not a valid permutation",
    ErrorCode.VALIDATION_INVALID_WORD: "Generator word is malformed",
    ErrorCode.VALIDATION_DEGREE_MISMATCH: "Operands have incompatible degrees",
    ErrorCode.VALIDATION_ODD_PERMUTATION: "Operation requires an even permutation",
    ErrorCode.VALIDATION_OUT_OF_DOMAIN: "Argument is outside the operation's domain",

    ErrorCode.RESOURCE_CAP_EXCEEDED: "Requested group exceeds the configured degree cap",

    ErrorCode.SYSTEM_CONFIGURATION_ERROR: "System configuration error",
    ErrorCode.SYSTEM_INVARIANT_VIOLATION: "Internal invariant violated",
    ErrorCode.SYSTEM_INTERNAL_ERROR: "Internal system error",
}

EXIT_CODES = {
    ErrorCode.VALIDATION_INVALID_PERMUTATION: 2,
    ErrorCode.VALIDATION_INVALID_WORD: 2,
    ErrorCode.VALIDATION_DEGREE_MISMATCH: 2,
    ErrorCode.VALIDATION_ODD_PERMUTATION: 2,
    ErrorCode.VALIDATION_OUT_OF_DOMAIN: 2,
    ErrorCode.RESOURCE_CAP_EXCEEDED: 3,
    ErrorCode.SYSTEM_CONFIGURATION_ERROR: 78,
    ErrorCode.SYSTEM_INVARIANT_VIOLATION: 70,
    ErrorCode.SYSTEM_INTERNAL_ERROR: 70,
}

HTTP_STATUS = {
    ErrorCode.VALIDATION_INVALID_PERMUTATION: 422,
    ErrorCode.VALIDATION_INVALID_WORD: 422,
    ErrorCode.VALIDATION_DEGREE_MISMATCH: 422,
    ErrorCode.VALIDATION_ODD_PERMUTATION: 422,
    ErrorCode.VALIDATION_OUT_OF_DOMAIN: 422,
    ErrorCode.RESOURCE_CAP_EXCEEDED: 413,
    ErrorCode.SYSTEM_CONFIGURATION_ERROR: 500,
    ErrorCode.SYSTEM_INVARIANT_VIOLATION: 500,
    ErrorCode.SYSTEM_INTERNAL_ERROR: 500,
}

# Most specific first: subclasses must precede their bases.
_EXCEPTION_CODES = [
    (PermutationFormatError, ErrorCode.VALIDATION_INVALID_PERMUTATION),
    (WordFormatError, ErrorCode.VALIDATION_INVALID_WORD),
    (DegreeMismatchError, ErrorCode.VALIDATION_DEGREE_MISMATCH),
    (ParityError, ErrorCode.VALIDATION_ODD_PERMUTATION),
    (DomainError, ErrorCode.VALIDATION_OUT_OF_DOMAIN),
    (ResourceCapError, ErrorCode.RESOURCE_CAP_EXCEEDED),
    (ConfigurationError, ErrorCode.SYSTEM_CONFIGURATION_ERROR),
    (InvariantViolation, ErrorCode.SYSTEM_INVARIANT_VIOLATION),
]


def error_code_for(exc: BaseException) -> ErrorCode:
    """Map an exception to its error code"""
    if isinstance(exc, PermStatsError):
        for exc_type, code in _EXCEPTION_CODES:
            if isinstance(exc, exc_type):
                return code
    return ErrorCode.SYSTEM_INTERNAL_ERROR


def is_user_error(code: ErrorCode) -> bool:
    """Whether the code describes bad input rather than a system fault"""
    return code.value.startswith("VALIDATION_") or code is ErrorCode.RESOURCE_CAP_EXCEEDED
