"""Descent of multiples of L along the isogeny q: X -> X/G.

A line bundle with alternating form E' descends to X/G = V/Lambda' exactly
when E' is integer valued on Lambda' x Lambda'. For ``nL`` this means
``n * Gram`` is integral, where ``Gram`` is E restricted to a basis of
Lambda'.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .arith import lcm_of_denominators
from .lattice import (
    PolarizedSurface,
    SubgroupInvariants,
    SuperlatticeBasis,
    gram_matrix,
    quotient_invariants,
)
from .normalforms import smith_diagonal


class DescentInvariantError(RuntimeError):
    """An internal consistency check on the descended form failed."""


class NonPrimitiveDescentError(DescentInvariantError):
    """The descended bundle M has type (d1, d2) with d1 > 1."""


@dataclass(frozen=True)
class DescentData:
    n: int
    type_of_M: Tuple[int, int]
    d_prime: int
    primitive: bool


def _is_integral(matrix, scale: int) -> bool:
    return all((scale * x).denominator == 1 for row in matrix for x in row)


def minimal_descent_multiple(s: PolarizedSurface, b: SuperlatticeBasis) -> int:
    """Least ``n >= 1`` such that ``nL`` descends to X/G."""
    return lcm_of_denominators(x for row in gram_matrix(s, b) for x in row)


def minimal_n_bruteforce(s: PolarizedSurface, b: SuperlatticeBasis) -> int:
    """Scan ``n = 1 .. exp(G)^2`` for the first multiple whose form is integral on Lambda'."""
    gram = gram_matrix(s, b)
    bound = quotient_invariants(b).exponent ** 2
    for n in range(1, bound + 1):
        if _is_integral(gram, n):
            return n
    raise DescentInvariantError(f"no multiple up to exp(G)^2 = {bound} descends")


def descended_type(s: PolarizedSurface, b: SuperlatticeBasis, n: int) -> Tuple[int, int]:
    """Elementary divisors (d1, d2) of the integral form ``n * Gram`` on Lambda'."""
    gram = gram_matrix(s, b)
    if not _is_integral(gram, n):
        raise ValueError(f"{n}L does not descend along this quotient")
    diag = smith_diagonal([[int(n * x) for x in row] for row in gram])
    if len(diag) != 4 or diag[0] != diag[1] or diag[2] != diag[3] or diag[0] == 0:
        raise DescentInvariantError(f"Smith diagonal {diag} is not of alternating shape (a, a, b, b)")
    return diag[0], diag[2]


def exp_squared_bound_check(inv: SubgroupInvariants, n: int) -> bool:
    """Whether ``n`` divides exp(G)^2."""
    return (inv.exponent ** 2) % n == 0


def descend(s: PolarizedSurface, b: SuperlatticeBasis, g: int) -> DescentData:
    """Minimal descending multiple and the type of the descended bundle.

    ``g`` is the order of G. The Pfaffian identity ``d1 * d2 = n^2 d / g`` is
    checked, not assumed.
    """
    n = minimal_descent_multiple(s, b)
    d1, d2 = descended_type(s, b, n)
    pfaffian = Fraction(n * n * s.d, g)
    if pfaffian != d1 * d2:
        raise DescentInvariantError(f"Pfaffian mismatch: d1*d2 = {d1 * d2}, n^2 d/g = {pfaffian}")
    return DescentData(n=n, type_of_M=(d1, d2), d_prime=d2, primitive=d1 == 1)
