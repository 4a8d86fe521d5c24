"""
Midpoint-radius enclosures ("brackets") over mpmath's binary floating point.

A Bracket [mid +/- rad] encloses a real number. Midpoints are rounded to nearest at the
current mpmath precision; every midpoint operation charges one unit in the last place to the
radius, and radii themselves are always rounded upward through mpmath.libmp's directed
rounding primitives.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Optional, Union

import mpmath
from mpmath import mp, mpf
from mpmath.libmp import (mpf_add, mpf_div, mpf_mul, mpf_sub, round_ceiling, round_floor)

from src.config.constants import Constants
from src.utils.error_handler import DomainError
from src.utils.text_utils import decimal_string

logger = logging.getLogger(__name__)

Number = Union[int, Fraction, str, mpf, 'Bracket']

ZERO = mpf(0)


def _raw(x: mpf):
    return mpf(x)._mpf_


def up_add(a: mpf, b: mpf) -> mpf:
    return mp.make_mpf(mpf_add(_raw(a), _raw(b), mp.prec, round_ceiling))


def up_mul(a: mpf, b: mpf) -> mpf:
    return mp.make_mpf(mpf_mul(_raw(a), _raw(b), mp.prec, round_ceiling))


def up_div(a: mpf, b: mpf) -> mpf:
    return mp.make_mpf(mpf_div(_raw(a), _raw(b), mp.prec, round_ceiling))


def down_sub(a: mpf, b: mpf) -> mpf:
    return mp.make_mpf(mpf_sub(_raw(a), _raw(b), mp.prec, round_floor))


def down_mul(a: mpf, b: mpf) -> mpf:
    return mp.make_mpf(mpf_mul(_raw(a), _raw(b), mp.prec, round_floor))


def ulp(x: mpf) -> mpf:
    """Upper bound on one unit in the last place of x at the current precision (exact scaling)."""
    return mpmath.ldexp(abs(mpf(x)), 1 - mp.prec)


def inflate(x: mpf, ulps: int = 16) -> mpf:
    """x * (1 + ulps * 2^{-P}), rounded up; absorbs the error of a nearest-rounded bound."""
    return up_add(x, up_mul(mpf(ulps), mpmath.ldexp(abs(mpf(x)), -mp.prec)))


@dataclass(frozen=True)
class Bracket:
    """
    Enclosure [mid - rad, mid + rad] of a real number.

    Attributes:
        mid: Midpoint
        rad: Radius, never negative
    """

    mid: mpf
    rad: mpf = ZERO

    def __post_init__(self):
        if self.rad < 0:
            raise DomainError(f"Bracket radius must be nonnegative, got {self.rad}")

    # Construction

    @classmethod
    def exact(cls, value: Number) -> 'Bracket':
        """
        Enclose an exact value (int, Fraction, decimal string or mpf).

        Integers and dyadic rationals that fit the precision get a zero radius; anything
        that needs rounding gets one ulp.
        """
        if isinstance(value, Bracket):
            return value
        if isinstance(value, mpf):
            return cls(value, ZERO)
        if isinstance(value, float):
            return cls(mpf(value), ZERO)
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, int):
            mid = mpf(value)
            return cls(mid, ZERO if mid == value else ulp(mid))
        if isinstance(value, Fraction):
            num, den = value.numerator, value.denominator
            mid = mpf(num) / den
            dyadic = den & (den - 1) == 0 and abs(num).bit_length() <= mp.prec
            return cls(mid, ZERO if dyadic else ulp(mid))
        raise TypeError(f"Cannot enclose value of type {type(value).__name__}")

    # Edges and predicates

    def lower(self) -> mpf:
        return mp.make_mpf(mpf_sub(_raw(self.mid), _raw(self.rad), mp.prec, round_floor))

    def upper(self) -> mpf:
        return up_add(self.mid, self.rad)

    def magnitude(self) -> mpf:
        """Upper bound on |x| over the enclosure."""
        return up_add(abs(self.mid), self.rad)

    def is_positive(self) -> bool:
        return self.lower() > 0

    def excludes_zero(self) -> bool:
        return abs(self.mid) > self.rad

    def contains(self, value: Number) -> bool:
        """True if the enclosure of value lies inside this bracket's interval (edges included)."""
        other = to_bracket(value)
        return self.lower() <= other.lower() and other.upper() <= self.upper()

    def intersects(self, other: Number) -> bool:
        """Two brackets agree iff their intervals intersect."""
        other = to_bracket(other)
        return self.lower() <= other.upper() and other.lower() <= self.upper()

    # Arithmetic

    def __neg__(self) -> 'Bracket':
        return Bracket(-self.mid, self.rad)

    def __add__(self, other: Number) -> 'Bracket':
        other = to_bracket(other)
        mid = self.mid + other.mid
        return Bracket(mid, up_add(up_add(self.rad, other.rad), ulp(mid)))

    __radd__ = __add__

    def __sub__(self, other: Number) -> 'Bracket':
        return self + (-to_bracket(other))

    def __rsub__(self, other: Number) -> 'Bracket':
        return to_bracket(other) - self

    def __mul__(self, other: Number) -> 'Bracket':
        other = to_bracket(other)
        mid = self.mid * other.mid
        rad = up_mul(abs(self.mid), other.rad)
        rad = up_add(rad, up_mul(abs(other.mid), self.rad))
        rad = up_add(rad, up_mul(self.rad, other.rad))
        return Bracket(mid, up_add(rad, ulp(mid)))

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> 'Bracket':
        other = to_bracket(other)
        if not other.excludes_zero():
            raise DomainError(f"Division by a bracket containing zero: {other}")
        mid = self.mid / other.mid
        bm = abs(other.mid)
        numerator = up_add(up_mul(abs(self.mid), other.rad), up_mul(bm, self.rad))
        denominator = down_mul(bm, down_sub(bm, other.rad))
        rad = up_div(numerator, denominator) if numerator else ZERO
        return Bracket(mid, up_add(rad, ulp(mid)))

    def __rtruediv__(self, other: Number) -> 'Bracket':
        return to_bracket(other) / self

    def pow_int(self, exponent: int) -> 'Bracket':
        """Integer power by repeated squaring; negative exponents go through one division."""
        if exponent < 0:
            return Bracket.exact(1) / self.pow_int(-exponent)
        result = Bracket.exact(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def scale2(self, exponent: int) -> 'Bracket':
        """Exact multiplication by 2^exponent."""
        return Bracket(mpmath.ldexp(self.mid, exponent), mpmath.ldexp(self.rad, exponent))

    def widen(self, extra: mpf) -> 'Bracket':
        """Add a nonnegative allowance to the radius."""
        return Bracket(self.mid, up_add(self.rad, abs(mpf(extra))))

    def sqrt(self) -> 'Bracket':
        low = self.lower()
        if low <= 0:
            raise DomainError(f"sqrt needs a strictly positive bracket, got {self}")
        mid = mpmath.sqrt(self.mid)
        rad = up_div(up_mul(mpf(2), self.rad), mid) if self.rad else ZERO
        return Bracket(mid, up_add(rad, ulp(mid)))

    # Rendering

    def to_dict(self, digits: Optional[int] = None) -> Dict[str, str]:
        """Decimal strings for the midpoint and radius; never binary floats."""
        return {"mid": decimal_string(self.mid, digits), "rad": decimal_string(self.rad, digits)}

    def __repr__(self) -> str:
        return f"Bracket({mpmath.nstr(self.mid, 20)} +/- {mpmath.nstr(self.rad, 3)})"


def to_bracket(value: Number) -> Bracket:
    """Coerce ints, Fractions, decimal strings and mpfs into an exact Bracket."""
    if isinstance(value, Bracket):
        return value
    return Bracket.exact(value)


def bracket_sum(terms: Iterable[Bracket], extra_tail: Optional[Bracket] = None,
                chunk_size: int = Constants.DEFAULT_CHUNK_SIZE) -> Bracket:
    """
    Enclose the sum of a finite sequence of brackets plus a tail enclosure.

    The order of operations is fixed: terms are added in ascending order within consecutive
    chunks of chunk_size, then chunk results are added in ascending order, then the tail.
    Any caller that splits work along the same chunk boundaries gets identical bits.

    Args:
        terms: Brackets to add
        extra_tail: Enclosure of the omitted remainder, if any
        chunk_size: Fixed chunk length

    Returns:
        Bracket enclosing the total
    """
    chunk_totals = []
    current = None
    count = 0
    for term in terms:
        current = term if current is None else current + term
        count += 1
        if count == chunk_size:
            chunk_totals.append(current)
            current, count = None, 0
    if current is not None:
        chunk_totals.append(current)

    total = Bracket.exact(0)
    for chunk_total in chunk_totals:
        total = total + chunk_total
    if extra_tail is not None:
        total = total + extra_tail
    return total
