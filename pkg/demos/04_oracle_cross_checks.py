"""Cross-checking the pipeline against brute force.

``verify_pipeline`` recomputes every intermediate quantity by an independent
route; ``randomized_suite`` does so over seeded random subgroups.
"""

from fractions import Fraction

from abelian_seshadri import PolarizedSurface, SubgroupPresentation, randomized_suite, verify_pipeline

s = PolarizedSurface(5)
pres = SubgroupPresentation(s, [(Fraction(1, 6), Fraction(1, 2), 0, Fraction(1, 3)), (0, 0, Fraction(1, 2), 0)])
for check in verify_pipeline(s, pres).checks:
    print(f"{check.status:8} {check.name:28} {check.detail}")

report = randomized_suite(seed=1, trials=200, d_max=12, exp_max=6)
passed, failed, skipped = report.counts()
print(f"\n200 random subgroups: {passed} checks passed, {failed} failed, {skipped} skipped")
