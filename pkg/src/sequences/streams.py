"""
Exact Dirichlet coefficient streams built from the Thue-Morse and paperfolding sequences.

A stream is an immutable description (kind plus optional integer parameter k); coefficients
are computed on demand by index, so a stream carries no cursor and can be shared freely.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional

from src.sequences.automatic import paperfolding, thue_morse
from src.utils.error_handler import InvalidParameterError

logger = logging.getLogger(__name__)


class StreamKind(Enum):
    """Coefficient stream kinds. Kinds marked parameterized need a positive integer k."""

    PM_PAPERFOLDING = "pm_paperfolding"        # 2 b_n - 1
    PAPERFOLDING_RAW = "paperfolding_raw"      # b_n
    TM_SIGNED = "tm_signed"                    # eps_n
    TM_SIGNED_SHIFTED = "tm_signed_shifted"    # eps_{n-1}
    TM_COMBO = "tm_combo"                      # (2^{2k+1}+1) t_{n-1} + (2^{2k+1}-1) t_n
    THEOREM1_N = "theorem1_N"                  # N(n;k)
    TM_RAW = "tm_raw"                          # t_n
    TM_RAW_SHIFTED = "tm_raw_shifted"          # t_{n-1}
    BETA_SIGNED = "beta_signed"                # beta_n
    BETA_LITERAL = "beta_literal"              # beta_{n-1}, with b_0 := 0
    LEMMA4_R = "lemma4_R"                      # R(n;k)

    @property
    def parameterized(self) -> bool:
        return self in _PARAMETERIZED


_PARAMETERIZED = {StreamKind.TM_COMBO, StreamKind.THEOREM1_N, StreamKind.LEMMA4_R}


def lemma4_factor(k: int) -> int:
    """2^{4k+1} - 2^{2k}; kept here so streams do not depend on the exact-number tables."""
    return 2 ** (4 * k + 1) - 2 ** (2 * k)


@dataclass(frozen=True)
class CoefficientStream:
    """
    Deterministic generator of exact Rational coefficients a_1, a_2, ...

    Attributes:
        kind: Which coefficient formula to use
        k: Integer parameter for the parameterized kinds, None otherwise
    """

    kind: StreamKind
    k: Optional[int] = None

    def __post_init__(self):
        if self.kind.parameterized:
            if not isinstance(self.k, int) or self.k < 1:
                raise InvalidParameterError(f"{self.kind.value} needs a positive integer k, got {self.k!r}")
        elif self.k is not None:
            raise InvalidParameterError(f"{self.kind.value} takes no parameter k")

    @classmethod
    def from_name(cls, name: str, k: Optional[int] = None) -> 'CoefficientStream':
        """
        Create a stream from its kind name.

        Args:
            name: StreamKind value, e.g. "theorem1_N"
            k: Parameter for parameterized kinds

        Returns:
            CoefficientStream instance
        """
        try:
            kind = StreamKind(name)
        except ValueError:
            valid = ", ".join(kind.value for kind in StreamKind)
            raise InvalidParameterError(f"Unknown stream: {name!r}. Valid streams are: {valid}")
        return cls(kind, k if kind.parameterized else None)

    @property
    def name(self) -> str:
        if self.k is None:
            return self.kind.value
        return f"{self.kind.value}({self.k})"

    @property
    def bound(self) -> Fraction:
        """Uniform bound on |a_n| over all n >= 1."""
        kind = self.kind
        if kind == StreamKind.TM_COMBO:
            return Fraction(2 ** (2 * self.k + 2))
        if kind == StreamKind.THEOREM1_N:
            return Fraction(lemma4_factor(self.k) + 2)
        if kind == StreamKind.LEMMA4_R:
            return Fraction(lemma4_factor(self.k))
        return Fraction(1)

    def coefficient(self, n: int) -> Fraction:
        """
        Return the exact coefficient a_n.

        Args:
            n: Positive index

        Returns:
            a_n as a Fraction
        """
        if not isinstance(n, int) or n < 1:
            raise InvalidParameterError(f"coefficient index must be a positive integer, got {n!r}")

        kind = self.kind
        if kind == StreamKind.PM_PAPERFOLDING:
            return Fraction(2 * paperfolding(n) - 1)
        if kind == StreamKind.PAPERFOLDING_RAW:
            return Fraction(paperfolding(n))
        if kind == StreamKind.TM_SIGNED:
            return Fraction(1 - 2 * thue_morse(n))
        if kind == StreamKind.TM_SIGNED_SHIFTED:
            return Fraction(1 - 2 * thue_morse(n - 1))
        if kind == StreamKind.TM_RAW:
            return Fraction(thue_morse(n))
        if kind == StreamKind.TM_RAW_SHIFTED:
            return Fraction(thue_morse(n - 1))
        if kind == StreamKind.BETA_SIGNED:
            return Fraction(1 - 2 * paperfolding(n))
        if kind == StreamKind.BETA_LITERAL:
            return Fraction(1 if n == 1 else 1 - 2 * paperfolding(n - 1))
        if kind == StreamKind.TM_COMBO:
            return Fraction(_tm_combo(self.k, n))
        if kind == StreamKind.THEOREM1_N:
            tm_part = Fraction(_tm_combo(self.k, n), 2 ** (2 * self.k + 1))
            return lemma4_factor(self.k) * (2 * paperfolding(n) - 1) + tm_part
        if kind == StreamKind.LEMMA4_R:
            # Unsimplified form: 4^{2k+1} (1 - 2^{-(2k+1)}) b_n - 2^{2k} (2^{2k+1} - 1)
            s = 2 * self.k + 1
            return 4 ** s * (1 - Fraction(1, 2 ** s)) * paperfolding(n) - 2 ** (2 * self.k) * (2 ** s - 1)
        raise InvalidParameterError(f"Unhandled stream kind {kind}")

    def coefficients(self, start: int, stop: int) -> List[Fraction]:
        """Coefficients a_start .. a_{stop-1}."""
        return [self.coefficient(n) for n in range(start, stop)]

    def to_dict(self) -> Dict[str, object]:
        return {"kind": self.kind.value, "k": self.k, "bound": str(self.bound)}


def _tm_combo(k: int, n: int) -> int:
    power = 2 ** (2 * k + 1)
    return (power + 1) * thue_morse(n - 1) + (power - 1) * thue_morse(n)


def stream_coefficient(stream: CoefficientStream, n: int) -> Fraction:
    """
    Return the exact coefficient a_n of a stream.

    Args:
        stream: The coefficient stream
        n: Positive index

    Returns:
        a_n as a Fraction
    """
    return stream.coefficient(n)
