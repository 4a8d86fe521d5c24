"""
The Thue-Morse and paperfolding sequences and their +/-1 variants.

Both sequences are defined by recurrences on the binary digits of n:

    t_0 = 0,  t_{2n} = t_n,  t_{2n+1} = 1 - t_n
    b_{2n} = b_n,  b_{4n+1} = 0,  b_{4n+3} = 1      (n >= 1)

The public functions use closed forms over the binary expansion; the ``*_table`` builders
follow the recurrences literally and exist to validate them.
"""

import logging
from typing import List

from src.config.constants import Constants
from src.utils.error_handler import InvalidParameterError

logger = logging.getLogger(__name__)

# A sequence value, always 0 or 1
Bit = int

EPSILON = "epsilon"
BETA = "beta"


def _require_nonnegative(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise InvalidParameterError(f"index must be a nonnegative integer, got {n!r}")


def _require_positive(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise InvalidParameterError(f"index must be a positive integer, got {n!r}")
    if n == 0:
        raise InvalidParameterError(Constants.ERROR_UNDEFINED_B0)


def thue_morse(n: int) -> Bit:
    """
    Return t_n, the parity of the number of ones in the binary expansion of n.

    Args:
        n: Nonnegative index

    Returns:
        0 or 1
    """
    _require_nonnegative(n)
    return bin(n).count("1") & 1


def paperfolding(n: int) -> Bit:
    """
    Return b_n for n >= 1.

    Trailing zero bits are stripped (b_{2n} = b_n); the remaining odd m decides the value:
    0 when m = 1 (mod 4), 1 when m = 3 (mod 4).

    Args:
        n: Positive index

    Returns:
        0 or 1

    Raises:
        InvalidParameterError: for n = 0, where the recurrence says nothing
    """
    _require_positive(n)
    m = n >> ((n & -n).bit_length() - 1)
    return 0 if m & 3 == 1 else 1


def thue_morse_table(limit: int) -> List[Bit]:
    """
    Build t_0..t_limit bottom-up from the recurrence alone.

    Args:
        limit: Largest index to include

    Returns:
        List whose n-th entry is t_n
    """
    _require_nonnegative(limit)
    table = [0] * (limit + 1)
    for n in range(1, limit + 1):
        half = table[n >> 1]
        table[n] = half if n % 2 == 0 else 1 - half
    return table


def paperfolding_table(limit: int) -> List[Bit]:
    """
    Build b_1..b_limit bottom-up from the recurrence alone.

    Entry 0 is a placeholder (b_0 is undefined) and holds -1.

    Args:
        limit: Largest index to include

    Returns:
        List whose n-th entry is b_n for n >= 1
    """
    _require_nonnegative(limit)
    table = [-1] * (limit + 1)
    for n in range(1, limit + 1):
        if n % 2 == 0:
            table[n] = table[n >> 1]
        else:
            table[n] = 0 if n % 4 == 1 else 1
    return table


def signed_value(kind: str, n: int) -> int:
    """
    Return (-1)^{t_n} for kind "epsilon" or (-1)^{b_n} for kind "beta".

    Args:
        kind: "epsilon" or "beta"
        n: Index (n >= 0 for epsilon, n >= 1 for beta)

    Returns:
        -1 or +1
    """
    if kind == EPSILON:
        return 1 - 2 * thue_morse(n)
    if kind == BETA:
        return 1 - 2 * paperfolding(n)
    raise InvalidParameterError(f"Unknown signed sequence: {kind!r} (expected '{EPSILON}' or '{BETA}')")


def sequence_value(name: str, n: int) -> int:
    """
    Look up a sequence by its command-line name.

    Args:
        name: One of Constants.SEQUENCE_NAMES
        n: Index

    Returns:
        The sequence value at n
    """
    if name == "thue-morse":
        return thue_morse(n)
    if name == "paperfolding":
        return paperfolding(n)
    if name in (EPSILON, BETA):
        return signed_value(name, n)
    raise InvalidParameterError(
        f"Unknown sequence: {name!r}. Valid sequences are: {', '.join(Constants.SEQUENCE_NAMES)}")


def first_index(name: str) -> int:
    """Smallest valid index for the named sequence."""
    return 1 if name in ("paperfolding", BETA) else 0
