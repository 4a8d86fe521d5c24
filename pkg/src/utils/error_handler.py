"""
Error types and exit-code classification for the verification toolkit.
"""

import logging
from typing import Any, Dict, Optional

logger = logging.getLogger(__name__)


class ZetaVerifyError(Exception):
    """Base exception for the toolkit."""
    exit_code = 2


class InvalidParameterError(ZetaVerifyError, ValueError):
    """Raised when an operation's precondition is violated."""
    pass


class UnknownIdentityError(ZetaVerifyError, KeyError):
    """Raised when an identity id is not registered."""

    def __str__(self) -> str:
        # KeyError quotes its argument; keep the plain message
        return str(self.args[0]) if self.args else ""


class DomainError(ZetaVerifyError, ValueError):
    """Raised when a Bracket leaves the domain of a function (ln, real powers, division)."""
    pass


class PrecisionShortfallError(ZetaVerifyError):
    """
    Raised when a requested accuracy cannot be met within the configured resource caps.
    The best result obtained is kept on the exception.
    """
    exit_code = 3

    def __init__(self, message: str, partial: Optional[Any] = None):
        super().__init__(message)
        self.partial = partial


class ErrorHandler:
    """
    Maps toolkit errors onto command-line exit codes.
    """

    def classify_error(self, error: Exception) -> Dict[str, Any]:
        """
        Classify the type of error and the exit status it implies.

        Args:
            error: The exception that occurred

        Returns:
            Dictionary with error classification
        """
        if isinstance(error, PrecisionShortfallError):
            return {
                "type": "precision_shortfall",
                "exit_code": error.exit_code,
                "message": str(error),
                "partial": error.partial,
            }
        elif isinstance(error, UnknownIdentityError):
            return {"type": "unknown_identity", "exit_code": error.exit_code, "message": str(error)}
        elif isinstance(error, DomainError):
            return {"type": "domain", "exit_code": error.exit_code, "message": str(error)}
        elif isinstance(error, ZetaVerifyError):
            return {"type": "invalid_parameter", "exit_code": error.exit_code, "message": str(error)}

        # Anything else is a bug, not a usage problem
        raise error

    def handle(self, error: Exception) -> int:
        """
        Log a classified error and return its exit code.

        Args:
            error: The exception that occurred

        Returns:
            Process exit code
        """
        info = self.classify_error(error)
        if info["type"] == "precision_shortfall":
            logger.warning(f"Target accuracy not reached: {info['message']}")
        else:
            logger.error(f"{info['type']}: {info['message']}")
        return info["exit_code"]
