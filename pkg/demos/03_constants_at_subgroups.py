"""Seshadri constants at torsion points, half periods and general points.

Each closed form is checked against the general subgroup pipeline, and the
2-torsion constant is compared with the older bound built on
``l^2 - 32 d k^2 = 1``.
"""

from fractions import Fraction

from abelian_seshadri import (
    HalfPeriodPair,
    PolarizedSurface,
    SubgroupPresentation,
    general_points_lower_bound,
    half_period_pair,
    multi_at_subgroup,
    tg_half_period_bound,
    torsion_constant,
    upper_bound,
)

half = Fraction(1, 2)

print("m-torsion points")
for d in (1, 2, 3, 5):
    s = PolarizedSurface(d)
    for m in (1, 2, 3):
        res = torsion_constant(s, m)
        same = res == multi_at_subgroup(s, SubgroupPresentation.full_torsion(s, m))
        ub = upper_bound(s, m ** 4)
        print(f"  d={d} m={m}: eps={res.epsilon} ({res.case_tag}), bound^2={ub.squared}, pipeline agrees: {same}")

print("two half periods")
for d in (2, 3, 6):
    s = PolarizedSurface(d)
    for diff in ((0, half, 0, 0), (half, 0, 0, 0)):
        res = half_period_pair(s, HalfPeriodPair((0, 0, 0, 0), diff))
        print(f"  d={d} e1-e2={[str(x) for x in diff]}: eps={res.epsilon}, n={res.trace.n}")

print("r general points (lower bounds)")
for r in range(1, 7):
    res = general_points_lower_bound(PolarizedSurface(2), r)
    kind = ">=" if res.trace.is_lower_bound else "="
    print(f"  d=2 r={r}: eps {kind} {res.epsilon}")

print("older half-period bound vs exact 2-torsion constant")
for d in (1, 3, 5):
    s = PolarizedSurface(d)
    print(f"  d={d}: bound {tg_half_period_bound(s)}  exact {torsion_constant(s, 2).epsilon}")
