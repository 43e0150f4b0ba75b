"""Exact multiple Seshadri constants of (1,d)-polarized abelian surfaces.

The constant of L at the points of a coset ``x + G`` of a finite subgroup is
computed by passing to the quotient ``X/G``: the minimal multiple ``nL`` that
descends is found from the period lattice, and the single-point constant of
the descended bundle is evaluated in closed form, via a Pell equation when
necessary. All arithmetic is exact.

>>> from abelian_seshadri import PolarizedSurface, torsion_constant
>>> torsion_constant(PolarizedSurface(3), 2).epsilon
Fraction(3, 5)
"""

from .arith import format_rational, is_perfect_square, lcm_of_denominators, parse_rational, reduce
from .descent import (
    DescentData,
    descend,
    descended_type,
    exp_squared_bound_check,
    minimal_descent_multiple,
    minimal_n_bruteforce,
)
from .lattice import (
    LatticeVector,
    PolarizedSurface,
    SubgroupInvariants,
    SubgroupPresentation,
    SuperlatticeBasis,
    enumerate_subgroup,
    form_value,
    gram_matrix,
    k_of_L_contains,
    quotient_invariants,
    superlattice,
)
from .oracle import VerificationReport, randomized_suite, verify_pipeline
from .pell import ContinuedFraction, PellSolution, cf_expand, fundamental_solution, pell_bruteforce
from .seshadri import (
    HalfPeriodPair,
    HypothesisError,
    SeshadriResult,
    SeshadriTrace,
    UpperBound,
    bauer_simple,
    general_points_lower_bound,
    half_period_pair,
    multi_at_subgroup,
    torsion_constant,
    tg_half_period_bound,
    upper_bound,
)

__version__ = "0.1.0"
