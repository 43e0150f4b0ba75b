"""Fundamental solutions of ``l^2 - D k^2 = 1`` via the continued fraction of sqrt(D)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .arith import isqrt_exact


class SquareDiscriminantError(ValueError):
    """Raised when the Pell discriminant is a perfect square."""


@dataclass(frozen=True)
class ContinuedFraction:
    """Periodic expansion ``sqrt(D) = [a0; period, period, ...]``."""

    a0: int
    period: Tuple[int, ...]

    def terms(self, count: int) -> List[int]:
        """The first ``count`` partial quotients, starting with ``a0``."""
        out = [self.a0]
        i = 0
        while len(out) < count:
            out.append(self.period[i % len(self.period)])
            i += 1
        return out[:count]

    def convergents(self, count: int) -> List[Tuple[int, int]]:
        """The first ``count`` convergents ``(p_i, q_i)``."""
        p_prev, p = 0, 1
        q_prev, q = 1, 0
        out = []
        for a in self.terms(count):
            p_prev, p = p, a * p + p_prev
            q_prev, q = q, a * q + q_prev
            out.append((p, q))
        return out


@dataclass(frozen=True)
class PellSolution:
    D: int
    l0: int
    k0: int

    def __post_init__(self):
        if self.l0 * self.l0 - self.D * self.k0 * self.k0 != 1:
            raise ValueError(f"({self.l0}, {self.k0}) does not solve l^2 - {self.D} k^2 = 1")

    def as_dict(self) -> dict:
        return {"D": str(self.D), "l0": str(self.l0), "k0": str(self.k0)}


def _check_discriminant(D: int) -> int:
    if D < 2:
        raise ValueError(f"Pell discriminant must be >= 2, got {D}")
    if isqrt_exact(D) is not None:
        raise SquareDiscriminantError(f"square discriminant {D}")
    return math.isqrt(D)


def cf_expand(D: int) -> ContinuedFraction:
    """Continued fraction expansion of sqrt(D) for non-square ``D >= 2``.

    >>> cf_expand(6)
    ContinuedFraction(a0=2, period=(2, 4))
    """
    a0 = _check_discriminant(D)
    m, den, a = 0, 1, a0
    period = []
    while a != 2 * a0:
        m = den * a - m
        den = (D - m * m) // den
        a = (a0 + m) // den
        period.append(a)
    return ContinuedFraction(a0, tuple(period))


def fundamental_solution(D: int) -> PellSolution:
    """Minimal positive solution of ``l^2 - D k^2 = 1``.

    Uses the convergent ``p_{L-1}/q_{L-1}`` where ``L`` is the period length,
    running through the period twice when ``L`` is odd (the first pass then
    lands on the negative equation).
    """
    cf = cf_expand(D)
    length = len(cf.period)
    count = length if length % 2 == 0 else 2 * length
    p, q = cf.convergents(count)[-1]
    return PellSolution(D, p, q)


def pell_bruteforce(D: int, k_max: int) -> Optional[PellSolution]:
    """Smallest ``k`` in ``[1, k_max]`` making ``1 + D k^2`` a square, or None."""
    _check_discriminant(D)
    for k in range(1, k_max + 1):
        l = isqrt_exact(1 + D * k * k)
        if l is not None:
            return PellSolution(D, l, k)
    return None
