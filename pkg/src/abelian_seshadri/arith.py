"""Exact integer and rational helpers.

Python's ``int`` is already arbitrary precision and ``fractions.Fraction``
keeps itself in lowest terms with a positive denominator, so both are used
directly as the scalar types of the package.
"""

from __future__ import annotations

import math
import re
from decimal import Context, Decimal
from fractions import Fraction
from typing import Iterable, Optional, Union

Integer = int
Rational = Fraction

RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")


def reduce(num: int, den: int) -> Fraction:
    """Return ``num/den`` in lowest terms with a positive denominator."""
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    return Fraction(num, den)


def isqrt_exact(n: int) -> Optional[int]:
    """Integer square root of ``n`` if ``n`` is a perfect square, else None."""
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def is_perfect_square(v: RationalLike) -> Optional[Fraction]:
    """Exact square root of a non-negative rational, or None if it is not a square.

    >>> is_perfect_square(Fraction(9, 4))
    Fraction(3, 2)
    >>> is_perfect_square(Fraction(1, 2)) is None
    True
    """
    v = to_rational(v)
    if v < 0:
        raise ValueError(f"negative input {v}")
    p = isqrt_exact(v.numerator)
    if p is None:
        return None
    q = isqrt_exact(v.denominator)
    if q is None:
        return None
    return Fraction(p, q)


def lcm_of_denominators(values: Iterable[RationalLike]) -> int:
    """Least positive integer ``n`` such that ``n*v`` is integral for every ``v``."""
    n = 1
    for v in values:
        n = math.lcm(n, to_rational(v).denominator)
    return n


def to_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"``, ``"-p"`` or ``"p/q"``. Floats and exponents are rejected."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"malformed rational {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q: RationalLike) -> str:
    """Render as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    q = to_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def to_decimal_string(q: RationalLike, digits: int = 12) -> str:
    """Display-only decimal rendering with ``digits`` significant digits."""
    q = to_rational(q)
    ctx = Context(prec=digits)
    return str(ctx.divide(Decimal(q.numerator), Decimal(q.denominator)))
