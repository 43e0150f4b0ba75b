"""Independent cross-checks of the reduction pipeline.

Each check recomputes a quantity along a different path from the one used
by :func:`abelian_seshadri.seshadri.multi_at_subgroup`: brute-force Pell
search against the continued fraction, a scan for the minimal descending
multiple against the lcm of Gram denominators, explicit enumeration of G
against determinants and Smith forms, and algebraic identities between the
outputs.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple

from .arith import is_perfect_square
from .descent import exp_squared_bound_check, minimal_n_bruteforce
from .lattice import (
    EnumerationCapExceeded,
    LatticeVector,
    PolarizedSurface,
    SubgroupInvariants,
    SubgroupPresentation,
    enumerate_subgroup,
)
from .pell import pell_bruteforce
from .seshadri import CASE_PELL, CASE_SQUARE, bauer_simple, multi_at_subgroup

DEFAULT_ENUMERATION_CAP = 10_000
PELL_SEARCH_LIMIT = 100_000

PASS, FAIL, SKIP = "pass", "fail", "skipped"


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status != FAIL


@dataclass
class VerificationReport:
    checks: List[Check] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(name, PASS if ok else FAIL, detail))

    def skip(self, name: str, detail: str = "") -> None:
        self.checks.append(Check(name, SKIP, detail))

    def extend(self, other: "VerificationReport", prefix: str = "") -> None:
        self.checks.extend(Check(prefix + c.name, c.status, c.detail) for c in other.checks)

    def failures(self) -> List[Check]:
        return [c for c in self.checks if c.status == FAIL]

    def counts(self) -> Tuple[int, int, int]:
        return tuple(sum(c.status == s for c in self.checks) for s in (PASS, FAIL, SKIP))


def verify_pipeline(
    s: PolarizedSurface,
    g: SubgroupPresentation,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> VerificationReport:
    """Run the pipeline on (s, G) and cross-check every intermediate value.

    Failures are recorded in the report; exceptions from the pipeline itself
    are reported as a failed ``pipeline`` check.
    """
    report = VerificationReport()
    try:
        res = multi_at_subgroup(s, g)
    except Exception as exc:  # noqa: BLE001 - any crash is a verification failure
        report.add("pipeline", False, f"{type(exc).__name__}: {exc}")
        return report
    report.add("pipeline", True)
    t = res.trace
    eps = res.epsilon

    report.add("rational_output", isinstance(eps, Fraction), repr(eps))

    if t.pell is not None:
        D, l0, k0 = t.pell.D, t.pell.l0, t.pell.k0
        report.add("pell_identity", l0 * l0 - D * k0 * k0 == 1, f"D={D} l0={l0} k0={k0}")
        report.add("pell_discriminant", D == 2 * t.d_prime, f"D={D} d'={t.d_prime}")
        if k0 <= PELL_SEARCH_LIMIT:
            brute = pell_bruteforce(D, k0)
            report.add("pell_bruteforce", brute == t.pell, f"brute={brute}")
        else:
            brute = pell_bruteforce(D, PELL_SEARCH_LIMIT)
            report.add("pell_bruteforce", brute is None, f"k0={k0} beyond search limit")

    n_scan = minimal_n_bruteforce(s, t.basis)
    report.add("minimal_n_scan", n_scan == t.n, f"lcm={t.n} scan={n_scan}")

    n_divisors_fail = all(
        any((k * x).denominator != 1 for row in t.gram for x in row)
        for k in range(1, t.n) if t.n % k == 0
    )
    report.add("minimal_n_proper_divisors", n_divisors_fail, f"n={t.n}")

    inv = SubgroupInvariants(t.g, t.exponent, t.invariant_factors)
    report.add("exp_squared_bound", exp_squared_bound_check(inv, t.n), f"n={t.n} exp={t.exponent}")

    report.add("determinant_order", t.basis.det() == Fraction(1, t.g), f"det={t.basis.det()} g={t.g}")

    try:
        elems = enumerate_subgroup(g, cap)
    except EnumerationCapExceeded:
        report.skip("enumeration_order", f"order {t.g} exceeds cap {cap}")
        report.skip("enumeration_exponent", f"order {t.g} exceeds cap {cap}")
    else:
        report.add("enumeration_order", len(elems) == t.g, f"enumerated={len(elems)} g={t.g}")
        exp_enum = math.lcm(*(v.order() for v in elems))
        report.add("enumeration_exponent", exp_enum == t.exponent, f"enumerated={exp_enum} exp={t.exponent}")

    d1, d2 = t.type_of_M
    pf = Fraction(t.n ** 2 * t.d, t.g)
    report.add("pfaffian", d1 * d2 == pf, f"d1*d2={d1 * d2} n^2 d/g={pf}")
    report.add("primitive_descent", d1 == 1, f"type={t.type_of_M}")

    bound_sq = Fraction(2 * t.d, t.g)
    if res.case_tag == CASE_PELL:
        # eps^2 * l0^2 * g == (l0^2 - 1) * 2d, cross-multiplied to stay in integers
        l0 = t.pell.l0
        lhs = eps.numerator ** 2 * l0 * l0 * t.g
        rhs = (l0 * l0 - 1) * 2 * t.d * eps.denominator ** 2
        report.add("form_identity", lhs == rhs, f"eps={eps}")
        report.add("upper_bound", eps * eps < bound_sq, f"eps^2={eps * eps} 2d/g={bound_sq}")
        report.add("case_split", is_perfect_square(bound_sq) is None, "pell case needs 2d/g non-square")
    else:
        report.add("upper_bound", eps * eps == bound_sq, f"eps^2={eps * eps} 2d/g={bound_sq}")
        report.add("case_split", res.case_tag == CASE_SQUARE)

    simple = bauer_simple(t.d_prime)
    report.add("scaling_coherence", eps * t.n == simple.epsilon, f"eps*n={eps * t.n} eps(M)={simple.epsilon}")
    return report


def _divisors(n: int) -> List[int]:
    return [k for k in range(1, n + 1) if n % k == 0]


def random_presentation(rng: random.Random, d_max: int, exp_max: int) -> SubgroupPresentation:
    """A random subgroup presentation whose exponent is at most ``exp_max``.

    A target exponent ``e <= exp_max`` is drawn first; each coordinate then
    gets a denominator dividing ``e`` and a uniform numerator below it.
    """
    d = rng.randint(1, d_max)
    e = rng.randint(1, exp_max)
    dens = _divisors(e)
    gens = []
    for _ in range(rng.randint(0, 3)):
        coords = []
        for _ in range(4):
            q = rng.choice(dens)
            coords.append(Fraction(rng.randrange(q), q))
        gens.append(LatticeVector(coords))
    return SubgroupPresentation(PolarizedSurface(d), tuple(gens))


def randomized_suite(
    seed: int = 0,
    trials: int = 100,
    d_max: int = 12,
    exp_max: int = 6,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> VerificationReport:
    """Verify the pipeline on ``trials`` seeded random subgroups."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    report = VerificationReport()
    for i in range(trials):
        pres = random_presentation(rng, d_max, exp_max)
        report.extend(verify_pipeline(pres.surface, pres, cap), prefix=f"trial{i}.")
    return report
