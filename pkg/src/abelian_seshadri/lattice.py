"""Period lattice of a (1,d)-polarized abelian surface and its finite-index superlattices.

Coordinates are always taken in the symplectic basis (lambda1, lambda2, mu1, mu2)
of the period lattice ``Lambda = Z^4``. In that basis the alternating form
``E = Im H`` has matrix ``[[0, D], [-D, 0]]`` with ``D = diag(1, d)``. The
complex structure never enters: every computation here factors through the
pair (Lambda, E).

A finite subgroup ``G`` of ``X = V/Lambda`` is given by rational lifts of its
generators; ``Lambda' = pi^{-1}(G)`` is the lattice spanned by Lambda and
those lifts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .arith import RationalLike, format_rational, lcm_of_denominators, to_rational
from .normalforms import hermite_normal_form, smith_diagonal

RationalMatrix = Tuple[Tuple[Fraction, ...], ...]

BASIS_NAMES = ("lambda1", "lambda2", "mu1", "mu2")


class EnumerationCapExceeded(ValueError):
    """The subgroup has more elements than the enumeration cap allows."""


@dataclass(frozen=True)
class LatticeVector:
    """A vector of V written in the basis (lambda1, lambda2, mu1, mu2)."""

    coords: Tuple[Fraction, Fraction, Fraction, Fraction]

    def __init__(self, coords: Iterable[RationalLike]):
        c = tuple(to_rational(x) for x in coords)
        if len(c) != 4:
            raise ValueError(f"expected 4 coordinates, got {len(c)}")
        object.__setattr__(self, "coords", c)

    @classmethod
    def zero(cls) -> "LatticeVector":
        return cls((0, 0, 0, 0))

    @classmethod
    def basis(cls, i: int) -> "LatticeVector":
        return cls(tuple(1 if j == i else 0 for j in range(4)))

    @classmethod
    def parse(cls, text: str) -> "LatticeVector":
        """Parse ``"a,b,c,e"`` with each entry an integer or ``p/q``."""
        return cls(text.split(","))

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        return LatticeVector(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        return LatticeVector(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(-a for a in self.coords)

    def __rmul__(self, scalar: RationalLike) -> "LatticeVector":
        s = to_rational(scalar)
        return LatticeVector(s * a for a in self.coords)

    def mod_lattice(self) -> "LatticeVector":
        """Canonical representative of the class mod Lambda, coordinates in [0, 1)."""
        return LatticeVector(a % 1 for a in self.coords)

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.coords)

    def order(self) -> int:
        """Order of the image point in X = V/Lambda."""
        return lcm_of_denominators(self.coords)

    def as_strings(self) -> List[str]:
        return [format_rational(a) for a in self.coords]


@dataclass(frozen=True)
class PolarizedSurface:
    """An abelian surface with a polarization of type (1, d).

    The Picard number one hypothesis needed by the closed-form constants is
    an analytic property of the period matrix and cannot be checked from
    (Lambda, E); it is recorded in ``assumptions`` instead.
    """

    d: int
    assumptions: Tuple[str, ...] = field(default=("rho=1",), compare=False)

    def __post_init__(self):
        if isinstance(self.d, bool) or not isinstance(self.d, int):
            raise TypeError("d must be an int")
        if self.d < 1:
            raise ValueError(f"d must be >= 1, got {self.d}")

    @property
    def self_intersection(self) -> int:
        """L^2 = 2d."""
        return 2 * self.d

    def form_matrix(self) -> RationalMatrix:
        d = Fraction(self.d)
        z, one = Fraction(0), Fraction(1)
        return (
            (z, z, one, z),
            (z, z, z, d),
            (-one, z, z, z),
            (z, -d, z, z),
        )

    def form_value(self, v: LatticeVector, w: LatticeVector) -> Fraction:
        return form_value(self, v, w)


def form_value(s: PolarizedSurface, v: LatticeVector, w: LatticeVector) -> Fraction:
    """E(v, w) for the type (1, d) form."""
    a, b, c, e = v.coords
    a2, b2, c2, e2 = w.coords
    return a * c2 - c * a2 + s.d * (b * e2 - e * b2)


def k_of_L_contains(s: PolarizedSurface, v: LatticeVector) -> bool:
    """Whether the point of X represented by ``v`` lies in K(L).

    K(L) is the set of points whose lifts pair integrally with all of Lambda.
    """
    return all(form_value(s, v, LatticeVector.basis(i)).denominator == 1 for i in range(4))


@dataclass(frozen=True)
class SubgroupPresentation:
    """Generators of a finite subgroup G of X, as lifts with coordinates in [0, 1)."""

    surface: PolarizedSurface
    generators: Tuple[LatticeVector, ...] = ()

    def __post_init__(self):
        gens = tuple(
            (g if isinstance(g, LatticeVector) else LatticeVector(g)).mod_lattice()
            for g in self.generators
        )
        object.__setattr__(self, "generators", gens)

    @classmethod
    def full_torsion(cls, surface: PolarizedSurface, m: int) -> "SubgroupPresentation":
        """The m-torsion subgroup X_m, generated by lambda_i/m and mu_i/m."""
        if m < 1:
            raise ValueError(f"m must be >= 1, got {m}")
        step = Fraction(1, m)
        return cls(surface, tuple(step * LatticeVector.basis(i) for i in range(4)))

    @classmethod
    def cyclic(cls, surface: PolarizedSurface, v: Iterable[RationalLike]) -> "SubgroupPresentation":
        return cls(surface, (LatticeVector(v),))

    @property
    def common_denominator(self) -> int:
        return lcm_of_denominators(a for g in self.generators for a in g.coords)


@dataclass(frozen=True)
class SuperlatticeBasis:
    """Basis rows of Lambda' in (lambda, mu) coordinates, in Hermite normal form."""

    rows: RationalMatrix

    @property
    def vectors(self) -> Tuple[LatticeVector, ...]:
        return tuple(LatticeVector(r) for r in self.rows)

    def det(self) -> Fraction:
        """Determinant; the rows are upper triangular so this is the pivot product."""
        return math.prod((self.rows[i][i] for i in range(4)), start=Fraction(1))

    def inverse(self) -> RationalMatrix:
        return _invert(self.rows)

    def as_strings(self) -> List[List[str]]:
        return [LatticeVector(r).as_strings() for r in self.rows]


@dataclass(frozen=True)
class SubgroupInvariants:
    order: int
    exponent: int
    invariant_factors: Tuple[int, ...]

    def __post_init__(self):
        assert self.order == math.prod(self.invariant_factors)
        assert self.exponent == (self.invariant_factors[-1] if self.invariant_factors else 1)


def superlattice(g: SubgroupPresentation) -> SuperlatticeBasis:
    """Basis of Lambda' = Lambda + span(generators).

    Works on ``N * Lambda'`` where ``N`` clears all denominators, so the row
    reduction happens over the integers; the result is divided back by ``N``.
    """
    N = g.common_denominator
    rows = [[N if i == j else 0 for j in range(4)] for i in range(4)]
    rows += [[int(N * a) for a in gen.coords] for gen in g.generators]
    hnf = hermite_normal_form(rows)
    assert len(hnf) == 4, "superlattice must have full rank"
    return SuperlatticeBasis(tuple(tuple(Fraction(x, N) for x in r) for r in hnf))


def quotient_invariants(b: SuperlatticeBasis) -> SubgroupInvariants:
    """Invariant factors of Lambda'/Lambda, which is isomorphic to G.

    The rows of the inverse basis matrix express lambda1..mu2 in the basis of
    Lambda'; that integer matrix presents Lambda'/Lambda.
    """
    inv = b.inverse()
    if any(x.denominator != 1 for r in inv for x in r):
        raise ValueError("basis does not contain the period lattice")
    diag = smith_diagonal([[int(x) for x in r] for r in inv])
    factors = tuple(x for x in diag if x != 1)
    return SubgroupInvariants(
        order=math.prod(factors),
        exponent=factors[-1] if factors else 1,
        invariant_factors=factors,
    )


def enumerate_subgroup(g: SubgroupPresentation, cap: int = 10_000) -> List[LatticeVector]:
    """All elements of G by closure under adding generators mod Lambda.

    Raises EnumerationCapExceeded once more than ``cap`` elements are found.
    """
    zero = LatticeVector.zero()
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for x in frontier:
            for gen in g.generators:
                y = (x + gen).mod_lattice()
                if y not in seen:
                    seen.add(y)
                    if len(seen) > cap:
                        raise EnumerationCapExceeded(
                            f"subgroup too large for enumeration (more than {cap} elements)"
                        )
                    nxt.append(y)
        frontier = nxt
    return sorted(seen, key=lambda v: v.coords)


def gram_matrix(s: PolarizedSurface, b: SuperlatticeBasis) -> RationalMatrix:
    """E restricted to Lambda': the matrix B J B^T."""
    vecs = b.vectors
    return tuple(tuple(form_value(s, v, w) for w in vecs) for v in vecs)


def _invert(rows: Sequence[Sequence[Fraction]]) -> RationalMatrix:
    n = len(rows)
    A = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        A[c], A[p] = A[p], A[c]
        piv = A[c][c]
        A[c] = [x / piv for x in A[c]]
        for i in range(n):
            if i != c and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return tuple(tuple(r[n:]) for r in A)
