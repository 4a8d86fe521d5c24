"""
Module for the VerificationReport class that records the outcome of one identity check.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional

import mpmath
from mpmath import mpf

from src.kernel.bracket import Bracket, up_add
from src.utils.text_utils import decimal_string


@dataclass(frozen=True)
class VerificationReport:
    """
    Outcome of checking one identity at one parameter point.

    The pass flag is never stored independently: it is residual <= tolerance, and the
    tolerance is the sum of the two radii.

    Attributes:
        identity_id: Registered identity id, e.g. "lemma1"
        parameters: Parameter point (k, s, N, precision, ...)
        lhs: Enclosure of the left-hand side
        rhs: Enclosure of the right-hand side
        residual: |lhs.mid - rhs.mid| (the exact difference for exact checks)
        tolerance: lhs.rad + rhs.rad
        terms_used: Total explicit series terms summed on both sides
        elapsed: Wall-clock seconds
        exact: True when both sides were compared in exact rational arithmetic
        expect_failure: True for negative controls, which are meant to fail
    """

    identity_id: str
    parameters: Dict[str, Any]
    lhs: Bracket
    rhs: Bracket
    residual: mpf
    tolerance: mpf
    terms_used: int = 0
    elapsed: float = 0.0
    exact: bool = False
    expect_failure: bool = False
    notes: str = ""

    @classmethod
    def from_sides(cls, identity_id: str, parameters: Dict[str, Any], lhs: Bracket, rhs: Bracket,
                   terms_used: int = 0, elapsed: float = 0.0, expect_failure: bool = False,
                   notes: str = "") -> 'VerificationReport':
        """
        Build a report from two enclosures.

        Args:
            identity_id: Identity id
            parameters: Parameter point
            lhs: Left-hand side enclosure
            rhs: Right-hand side enclosure
            terms_used: Explicit terms summed
            elapsed: Seconds spent
            expect_failure: Whether this is a negative control
            notes: Free-form remark carried into the output

        Returns:
            VerificationReport instance
        """
        residual = abs(lhs.mid - rhs.mid)
        tolerance = up_add(lhs.rad, rhs.rad)
        return cls(identity_id, dict(parameters), lhs, rhs, residual, tolerance, terms_used, elapsed,
                   False, expect_failure, notes)

    @classmethod
    def from_exact(cls, identity_id: str, parameters: Dict[str, Any], lhs: Fraction, rhs: Fraction,
                   terms_used: int = 0, elapsed: float = 0.0, notes: str = "") -> 'VerificationReport':
        """
        Build a report from two exact rationals; the tolerance is zero.
        """
        difference = abs(Fraction(lhs) - Fraction(rhs))
        residual = mpf(difference.numerator) / difference.denominator
        if difference and residual == 0:
            residual = mpmath.ldexp(mpf(1), -mpmath.mp.prec)
        return cls(identity_id, dict(parameters), Bracket(mpf(lhs.numerator) / lhs.denominator),
                   Bracket(mpf(rhs.numerator) / rhs.denominator), residual, mpf(0), terms_used,
                   elapsed, True, False, notes)

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance

    @property
    def as_expected(self) -> bool:
        """True when a regular check passes or a negative control fails."""
        return self.passed != self.expect_failure

    def to_dict(self, digits: Optional[int] = None) -> Dict[str, Any]:
        """
        Convert the report to the JSON schema used by the command line.

        Args:
            digits: Significant digits for decimal strings (None: full precision)

        Returns:
            Dictionary representation
        """
        return {
            'identity_id': self.identity_id,
            'params': {key: str(value) for key, value in self.parameters.items()},
            'lhs': self.lhs.to_dict(digits),
            'rhs': self.rhs.to_dict(digits),
            'residual': decimal_string(self.residual, digits),
            'tolerance': decimal_string(self.tolerance, digits),
            'pass': self.passed,
            'expect_failure': self.expect_failure,
            'exact': self.exact,
            'terms_used': self.terms_used,
            'elapsed_ms': int(round(self.elapsed * 1000)),
            'notes': self.notes,
        }

    @staticmethod
    def pass_from_dict(data: Dict[str, Any]) -> bool:
        """Recompute the pass flag from a serialized report's residual and tolerance."""
        return mpmath.mpf(data['residual']) <= mpmath.mpf(data['tolerance'])

    def sort_key(self):
        """(identity_id, parameters) with numeric parameters ordered numerically."""
        def ordered(value):
            try:
                return (0, Fraction(str(value)), "")
            except (ValueError, ZeroDivisionError):
                return (1, Fraction(0), str(value))
        return (self.identity_id, [(key, ordered(value)) for key, value in sorted(self.parameters.items())])
