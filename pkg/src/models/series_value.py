"""
Module for the SeriesValue class returned by every series evaluator.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict

from mpmath import mpf

from src.kernel.bracket import Bracket
from src.utils.text_utils import certified_string, decimal_string


class SeriesMethod(Enum):
    DIRECT_PARTIAL_SUM = "direct_partial_sum"
    EULER_MACLAURIN = "euler_maclaurin"
    FUNCTIONAL_EQUATION = "functional_equation"
    CLOSED_FORM = "closed_form"


@dataclass(frozen=True)
class SeriesValue:
    """
    An enclosed series value together with how it was obtained.

    Attributes:
        value: Enclosure of the series; its radius already includes tail_bound
        terms_used: Number of series terms summed explicitly
        tail_bound: Bound on the omitted remainder
        method: Evaluation method
        target_met: False when a requested accuracy could not be reached within resource caps
        details: Method-specific parameters (e.g. Euler-Maclaurin N and J)
    """

    value: Bracket
    terms_used: int
    tail_bound: mpf
    method: SeriesMethod
    target_met: bool = True
    details: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.tail_bound < 0:
            raise ValueError(f"tail_bound must be nonnegative, got {self.tail_bound}")
        if self.terms_used < 0:
            raise ValueError(f"terms_used must be nonnegative, got {self.terms_used}")

    def to_dict(self) -> Dict[str, Any]:
        """
        Convert the SeriesValue to a dictionary of strings and integers.

        Returns:
            Dictionary representation with decimal-string numbers
        """
        return {
            'value': certified_string(self.value.mid, self.value.rad),
            'mid': decimal_string(self.value.mid),
            'rad': decimal_string(self.value.rad, 6),
            'terms_used': self.terms_used,
            'tail_bound': decimal_string(self.tail_bound, 6),
            'method': self.method.value,
            'target_met': self.target_met,
            'details': {key: str(value) for key, value in self.details.items()},
        }
