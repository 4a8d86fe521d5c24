"""
Exact integer and rational number tables: binomials, Euler numbers, Bernoulli numbers.

Tables are built with exact recurrences and cached; every call returns an immutable view,
so callers can share results across threads.
"""

import logging
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List, Tuple

from src.utils.error_handler import InvalidParameterError

logger = logging.getLogger(__name__)

_lock = threading.Lock()
_euler_even: List[int] = [1]            # E_0, E_2, E_4, ...
_bernoulli: List[Fraction] = [Fraction(1)]  # B_0, B_1, B_2, ...


def binomial(n: int, k: int) -> int:
    """
    Exact binomial coefficient C(n, k); zero when k > n.

    Args:
        n: Nonnegative integer
        k: Nonnegative integer

    Returns:
        C(n, k)
    """
    if n < 0 or k < 0:
        raise InvalidParameterError(f"binomial needs nonnegative arguments, got ({n}, {k})")
    return comb(n, k)


@dataclass(frozen=True)
class EulerTable:
    """
    Even-index Euler numbers E_0, E_2, ..., E_{2 max_k}.

    Odd-index Euler numbers vanish (1/cosh is even) and are not stored.
    """

    max_k: int
    values: Tuple[int, ...]

    @property
    def max_index(self) -> int:
        return 2 * self.max_k

    def __getitem__(self, index: int) -> int:
        """E_index for any index up to max_index (zero for odd index)."""
        if index < 0 or index > self.max_index:
            raise IndexError(f"Euler number E_{index} outside table bound {self.max_index}")
        if index % 2:
            return 0
        return self.values[index // 2]

    def absolute(self, k: int) -> int:
        """|E_{2k}|."""
        return abs(self[2 * k])


def euler_numbers(max_k: int) -> EulerTable:
    """
    Compute E_0, E_2, ..., E_{2 max_k} exactly.

    Uses sum_{i=0}^{n} C(2n, 2i) E_{2i} = 0 for n >= 1, which is 1/cosh(t) * cosh(t) = 1
    read off coefficient by coefficient.

    Args:
        max_k: Number of nonzero entries beyond E_0

    Returns:
        EulerTable
    """
    if not isinstance(max_k, int) or max_k < 0:
        raise InvalidParameterError(f"max_k must be a nonnegative integer, got {max_k!r}")
    with _lock:
        while len(_euler_even) <= max_k:
            n = len(_euler_even)
            total = sum(comb(2 * n, 2 * i) * _euler_even[i] for i in range(n))
            _euler_even.append(-total)
        values = tuple(_euler_even[:max_k + 1])
    return EulerTable(max_k=max_k, values=values)


def bernoulli_numbers(max_n: int) -> Tuple[Fraction, ...]:
    """
    Compute B_0..B_max_n exactly, with the convention B_1 = -1/2.

    Uses sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1. Odd entries beyond B_1 are zero and
    are filled in directly.

    Args:
        max_n: Largest index

    Returns:
        Tuple of Fractions indexed by n
    """
    if not isinstance(max_n, int) or max_n < 0:
        raise InvalidParameterError(f"max_n must be a nonnegative integer, got {max_n!r}")
    with _lock:
        while len(_bernoulli) <= max_n:
            m = len(_bernoulli)
            if m > 1 and m % 2 == 1:
                _bernoulli.append(Fraction(0))
                continue
            total = sum((comb(m + 1, j) * _bernoulli[j] for j in range(m) if _bernoulli[j]), Fraction(0))
            _bernoulli.append(-total / (m + 1))
        values = tuple(_bernoulli[:max_n + 1])
    logger.debug(f"Bernoulli table served up to B_{max_n}")
    return values
