"""
Unit tests for error code taxonomy - one code, status and exit code per failure kind
"""

import pytest

from utils.error_codes import (
    ERROR_MESSAGES,
    EXIT_CODES,
    HTTP_STATUS,
    ErrorCode,
    error_code_for,
    is_user_error,
)
from utils.exceptions import (
    ConfigurationError,
    DegreeMismatchError,
    DomainError,
    InvariantViolation,
    ParityError,
    PermutationFormatError,
    ResourceCapError,
    WordFormatError,
    require_same_degree,
)


class TestErrorCodeTaxonomy:
    """Exception to code mapping"""

    @pytest.mark.parametrize("exc,code", [
        (PermutationFormatError("x"), ErrorCode.VALIDATION_INVALID_PERMUTATION),
        (WordFormatError("x"), ErrorCode.VALIDATION_INVALID_WORD),
        (DegreeMismatchError("x"), ErrorCode.VALIDATION_DEGREE_MISMATCH),
        (ParityError("x"), ErrorCode.VALIDATION_ODD_PERMUTATION),
        (DomainError("x"), ErrorCode.VALIDATION_OUT_OF_DOMAIN),
        (ResourceCapError("x"), ErrorCode.RESOURCE_CAP_EXCEEDED),
        (ConfigurationError("x"), ErrorCode.SYSTEM_CONFIGURATION_ERROR),
        (InvariantViolation("x"), ErrorCode.SYSTEM_INVARIANT_VIOLATION),
        (ValueError("x"), ErrorCode.SYSTEM_INTERNAL_ERROR),
    ])
    def test_error_code_for(self, exc, code):
        """
        Core: every engine error has its own code, foreign errors are internal
        """
        assert error_code_for(exc) is code

    def test_every_code_is_catalogued(self):
        for code in ErrorCode:
            assert ERROR_MESSAGES[code]
            assert code in HTTP_STATUS
            assert code in EXIT_CODES

    def test_user_errors_exit_with_small_codes(self):
        """
        Core: bad input exits 2, cap overruns 3, system faults above 64
        """
        for code in ErrorCode:
            if is_user_error(code):
                assert EXIT_CODES[code] in (2, 3)
                assert 400 <= HTTP_STATUS[code] < 500
            else:
                assert EXIT_CODES[code] > 64
                assert HTTP_STATUS[code] == 500

    def test_exception_carries_details(self):
        exc = DomainError("q too large", {"q": 9})

        assert exc.message == "q too large"
        assert exc.details == {"q": 9}
        assert str(exc) == "q too large"
        assert DomainError("bare").details == {}

    def test_require_same_degree(self):
        require_same_degree(3, 3, "compose")
        with pytest.raises(DegreeMismatchError) as exc_info:
            require_same_degree(3, 4, "compose")

        assert exc_info.value.details == {"operation": "compose", "left": 3, "right": 4}
