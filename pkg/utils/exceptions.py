"""
Centralized exception handling and custom exceptions
"""

from typing import Any, Dict, Optional


class PermStatsError(Exception):
    """Base exception for the permstats engine"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)


class ConfigurationError(PermStatsError):
    """Configuration or setup error"""
    pass


class PermutationFormatError(PermStatsError):
    """Text or payload does not describe a permutation"""
    pass


class DegreeMismatchError(PermStatsError):
    """Operands live in symmetric groups of incompatible degree"""
    pass


class ParityError(PermStatsError):
    """An odd permutation was given where an element of A_{n+1} is required"""
    pass


class DomainError(PermStatsError):
    """Argument outside the domain of an operation (q range, empty word, ...)"""
    pass


class WordFormatError(PermStatsError):
    """Malformed generator word"""
    pass


class ResourceCapError(PermStatsError):
    """Requested population exceeds the configured degree cap"""
    pass


class InvariantViolation(PermStatsError):
    """Internal invariant failed; indicates a bug, never bad input"""
    pass


def require_same_degree(a_degree: int, b_degree: int, operation: str) -> None:
    """Raise DegreeMismatchError unless both degrees agree"""
    if a_degree != b_degree:
        raise DegreeMismatchError(
            f"{operation}: degree mismatch ({a_degree} vs {b_degree})",
            {"operation": operation, "left": a_degree, "right": b_degree},
        )
