"""Closed-form Seshadri constants on (1,d)-polarized abelian surfaces of Picard number one.

The multi-point constant at a coset ``x + G`` is reduced to a single-point
constant on the quotient: if ``nL = q^*M`` with ``n`` minimal then

    eps(L; x + G) = eps(M; q(x)) / n,

and ``M`` is primitive of type ``(1, d')`` with ``d' = n^2 d / g``. Bauer's
formula then gives ``eps(M)`` either as ``sqrt(2d')`` (when that is an
integer) or through the fundamental solution of ``l^2 - 2d' k^2 = 1``.

Every constant returned here is an exact ``Fraction``. None of the functions
take a base point: translations act transitively, so the constant does not
depend on ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Tuple, Union

from .arith import is_perfect_square, isqrt_exact
from .descent import NonPrimitiveDescentError, descend
from .lattice import (
    LatticeVector,
    PolarizedSurface,
    RationalMatrix,
    SubgroupPresentation,
    SuperlatticeBasis,
    gram_matrix,
    k_of_L_contains,
    quotient_invariants,
    superlattice,
)
from .pell import PellSolution, fundamental_solution

CASE_SQUARE = "square"
CASE_PELL = "pell"


class HypothesisError(ValueError):
    """The inputs violate a hypothesis of the closed-form statement being applied."""


@dataclass(frozen=True)
class SeshadriTrace:
    d: int
    g: int
    exponent: int
    invariant_factors: Tuple[int, ...]
    n: int
    d_prime: int
    type_of_M: Tuple[int, int]
    pell: Optional[PellSolution]
    upper_bound_squared: Fraction
    is_lower_bound: bool = False
    basis: Optional[SuperlatticeBasis] = field(default=None, compare=False, repr=False)
    gram: Optional[RationalMatrix] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class SeshadriResult:
    epsilon: Fraction
    case_tag: str
    trace: SeshadriTrace

    def __post_init__(self):
        if not isinstance(self.epsilon, Fraction) or self.epsilon <= 0:
            raise ValueError(f"epsilon must be a positive Fraction, got {self.epsilon!r}")
        if self.case_tag not in (CASE_SQUARE, CASE_PELL):
            raise ValueError(f"unknown case tag {self.case_tag!r}")


@dataclass(frozen=True)
class HalfPeriodPair:
    """Two distinct half periods, given by lifts with coordinates in {0, 1/2}."""

    e1: LatticeVector
    e2: LatticeVector

    def __post_init__(self):
        half = Fraction(1, 2)
        for name in ("e1", "e2"):
            v = getattr(self, name)
            if not isinstance(v, LatticeVector):
                v = LatticeVector(v)
            v = v.mod_lattice()
            if any(c not in (0, half) for c in v.coords):
                raise ValueError(f"{name} is not a half period: {v.as_strings()}")
            object.__setattr__(self, name, v)
        if self.e1 == self.e2:
            raise ValueError("e1 and e2 must be distinct half periods")

    @property
    def difference(self) -> LatticeVector:
        return (self.e1 - self.e2).mod_lattice()


@dataclass(frozen=True)
class UpperBound:
    """The bound sqrt(L^2 / r), kept as its exact square plus the root when rational."""

    squared: Fraction

    @property
    def root(self) -> Optional[Fraction]:
        return is_perfect_square(self.squared)

    def __float__(self) -> float:
        return float(self.squared) ** 0.5


def _closed_form(d: int, g: int, n: int, d_prime: int):
    """Apply the two-case formula; returns (epsilon, case_tag, pell)."""
    if Fraction(n * n * d, g) != d_prime:
        raise ValueError(f"inconsistent data: d'={d_prime} but n^2 d/g = {Fraction(n * n * d, g)}")
    root = is_perfect_square(Fraction(2 * d, g))
    if root is not None:
        return root, CASE_SQUARE, None
    pell = fundamental_solution(2 * d_prime)
    return Fraction(pell.k0 * 2 * d * n, pell.l0 * g), CASE_PELL, pell


def _factors(order: int, rank: int) -> Tuple[int, ...]:
    return (order,) * rank if order > 1 else ()


def bauer_simple(d_prime: int) -> SeshadriResult:
    """Single-point constant of a primitive (1, d') polarization with Picard number one."""
    if d_prime < 1:
        raise ValueError(f"d' must be >= 1, got {d_prime}")
    eps, case, pell = _closed_form(d_prime, 1, 1, d_prime)
    trace = SeshadriTrace(
        d=d_prime, g=1, exponent=1, invariant_factors=(), n=1, d_prime=d_prime,
        type_of_M=(1, d_prime), pell=pell, upper_bound_squared=Fraction(2 * d_prime),
    )
    return SeshadriResult(eps, case, trace)


def multi_at_subgroup(
    s: PolarizedSurface,
    subgroup: Union[SubgroupPresentation, Iterable[LatticeVector]] = (),
) -> SeshadriResult:
    """Seshadri constant of L at the points of a coset of the finite subgroup G.

    Runs the full reduction: Lambda', the invariants of G, the minimal
    descending multiple n, the type of M, then the closed form.
    """
    if isinstance(subgroup, SubgroupPresentation):
        if subgroup.surface != s:
            raise ValueError("subgroup presentation belongs to a different surface")
        pres = subgroup
    else:
        pres = SubgroupPresentation(s, tuple(subgroup))
    basis = superlattice(pres)
    inv = quotient_invariants(basis)
    data = descend(s, basis, inv.order)
    if not data.primitive:
        raise NonPrimitiveDescentError(
            f"descended bundle has type {data.type_of_M}; the closed form needs type (1, d')"
        )
    eps, case, pell = _closed_form(s.d, inv.order, data.n, data.d_prime)
    trace = SeshadriTrace(
        d=s.d,
        g=inv.order,
        exponent=inv.exponent,
        invariant_factors=inv.invariant_factors,
        n=data.n,
        d_prime=data.d_prime,
        type_of_M=data.type_of_M,
        pell=pell,
        upper_bound_squared=Fraction(2 * s.d, inv.order),
        basis=basis,
        gram=gram_matrix(s, basis),
    )
    return SeshadriResult(eps, case, trace)


def torsion_constant(s: PolarizedSurface, m: int) -> SeshadriResult:
    """Constant at a coset of the m-torsion subgroup X_m (order m^4, n = m^2, d' = d)."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    d, m2 = s.d, m * m
    root = isqrt_exact(2 * d)
    if root is not None:
        eps, case, pell = Fraction(root, m2), CASE_SQUARE, None
    else:
        pell = fundamental_solution(2 * d)
        eps, case = Fraction(2 * d * pell.k0, m2 * pell.l0), CASE_PELL
    trace = SeshadriTrace(
        d=d, g=m2 * m2, exponent=m, invariant_factors=_factors(m, 4), n=m2, d_prime=d,
        type_of_M=(1, d), pell=pell, upper_bound_squared=Fraction(2 * d, m2 * m2),
    )
    return SeshadriResult(eps, case, trace)


def half_period_pair(s: PolarizedSurface, p: HalfPeriodPair) -> SeshadriResult:
    """Two-point constant at distinct half periods e1, e2 (requires d not a square).

    G = <e1 - e2> has order two; L itself descends iff e1 - e2 lies in K(L).
    """
    d = s.d
    if isqrt_exact(d) is not None:
        raise HypothesisError(f"corollary hypothesis violated: sqrt(d) is an integer for d={d}")
    if k_of_L_contains(s, p.difference):
        n, d_prime = 1, d // 2
        pell = fundamental_solution(d)
        eps = Fraction(d * pell.k0, pell.l0)
    else:
        n, d_prime = 2, 2 * d
        pell = fundamental_solution(4 * d)
        eps = Fraction(2 * d * pell.k0, pell.l0)
    trace = SeshadriTrace(
        d=d, g=2, exponent=2, invariant_factors=(2,), n=n, d_prime=d_prime,
        type_of_M=(1, d_prime), pell=pell, upper_bound_squared=Fraction(d),
    )
    return SeshadriResult(eps, CASE_PELL, trace)


def general_points_lower_bound(s: PolarizedSurface, r: int) -> SeshadriResult:
    """Lower bound for the constant at r very general points.

    Obtained from the cyclic subgroup <lambda1 / r> by semicontinuity. When
    2d/r is a rational square the value is exact (it meets the upper bound);
    otherwise ``trace.is_lower_bound`` is set.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    d = s.d
    root = is_perfect_square(Fraction(2 * d, r))
    if root is not None:
        eps, case, pell = root, CASE_SQUARE, None
    else:
        pell = fundamental_solution(2 * r * d)
        eps, case = Fraction(2 * d * pell.k0, pell.l0), CASE_PELL
    trace = SeshadriTrace(
        d=d, g=r, exponent=r, invariant_factors=_factors(r, 1), n=r, d_prime=r * d,
        type_of_M=(1, r * d), pell=pell, upper_bound_squared=Fraction(2 * d, r),
        is_lower_bound=case == CASE_PELL,
    )
    return SeshadriResult(eps, case, trace)


def upper_bound(s: PolarizedSurface, r: int) -> UpperBound:
    """The general bound eps(L; r points) <= sqrt(L^2 / r)."""
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    return UpperBound(Fraction(s.self_intersection, r))


def tg_half_period_bound(s: PolarizedSurface) -> Fraction:
    """Older upper bound at the sixteen half periods, built on ``l^2 - 32 d k^2 = 1``.

    Evaluates ``2 sqrt(1 - 1/l0^2) sqrt(L^2 / 16)``, which simplifies to
    ``4 d k0 / l0``. Kept for comparison with ``torsion_constant(s, 2)``.
    """
    if isqrt_exact(2 * s.d) is not None:
        raise HypothesisError(f"2d = {2 * s.d} is a perfect square; the bound's Pell equation degenerates")
    pell = fundamental_solution(32 * s.d)
    return Fraction(4 * s.d * pell.k0, pell.l0)
