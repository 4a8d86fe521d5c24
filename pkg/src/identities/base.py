"""
Shared plumbing for identity verifiers: parameter records, timing and report logging.
"""

import logging
import time
from fractions import Fraction
from typing import Any, Dict, Optional

from mpmath import mpf
from mpmath.libmp import to_rational

from src.config.constants import Constants
from src.kernel.bracket import Bracket
from src.models.verification_report import VerificationReport
from src.utils.error_handler import InvalidParameterError

logger = logging.getLogger(__name__)


def require_k(k: int) -> int:
    if not isinstance(k, int) or k < 1:
        raise InvalidParameterError(f"k must be a positive integer, got {k!r}")
    return k


def require_terms(n_terms: int, name: str = "N") -> int:
    if not isinstance(n_terms, int) or n_terms < 1:
        raise InvalidParameterError(f"{name} must be a positive integer, got {n_terms!r}")
    return n_terms


def resolve_precision(precision: Optional[int]) -> int:
    """Explicit bits, or the default working precision."""
    return precision or Constants.DEFAULT_PRECISION_BITS


class Stopwatch:
    """Wall-clock timer started at construction."""

    def __init__(self):
        self.started = time.perf_counter()

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self.started


def log_report(report: VerificationReport) -> VerificationReport:
    """Log one line per verifier outcome and hand the report back."""
    outcome = "pass" if report.passed else "FAIL"
    if report.expect_failure:
        outcome += " (negative control)"
    params = ", ".join(f"{key}={value}" for key, value in report.parameters.items())
    logger.info(f"{report.identity_id}[{params}]: {outcome}, residual {report.residual} "
                f"tolerance {report.tolerance}")
    return report


def side_report(identity_id: str, parameters: Dict[str, Any], lhs: Bracket, rhs: Bracket,
                terms_used: int, watch: Stopwatch, expect_failure: bool = False,
                notes: str = "") -> VerificationReport:
    """Report comparing two enclosures."""
    if expect_failure:
        logger.warning(f"Running negative control {identity_id} {parameters}")
    return log_report(VerificationReport.from_sides(identity_id, parameters, lhs, rhs, terms_used=terms_used,
                                                    elapsed=watch.elapsed, expect_failure=expect_failure,
                                                    notes=notes))


def exact_report(identity_id: str, parameters: Dict[str, Any], lhs: Fraction, rhs: Fraction,
                 terms_used: int, watch: Stopwatch, notes: str = "") -> VerificationReport:
    """Report comparing two exact rationals."""
    return log_report(VerificationReport.from_exact(identity_id, parameters, lhs, rhs, terms_used=terms_used,
                                                    elapsed=watch.elapsed, notes=notes))


def shortfall_note(*values) -> str:
    """Note naming evaluations whose accuracy target was not met; empty when all were met."""
    missed = [value.method.value for value in values if not value.target_met]
    return f"accuracy target not met: {', '.join(missed)}" if missed else ""


def shifted_exponent(s, shift: int) -> Bracket:
    """
    Enclosure of s + shift that stays exact when s is exact, so integer exponents keep the
    exact-power path.
    """
    if isinstance(s, Bracket):
        if s.rad:
            return s + shift
        s = s.mid
    if isinstance(s, mpf):
        s = Fraction(*to_rational(s._mpf_))
    return Bracket.exact(Fraction(s) + shift)
