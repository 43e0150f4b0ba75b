"""Exit criteria. Every check is exact: zero tolerance throughout."""

import io
import json
import math
import random
from fractions import Fraction as F
from itertools import product
from pathlib import Path

from abelian_seshadri import oracle
from abelian_seshadri.arith import is_perfect_square
from abelian_seshadri.cli import EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED, main
from abelian_seshadri.descent import minimal_n_bruteforce
from abelian_seshadri.lattice import PolarizedSurface, SubgroupPresentation
from abelian_seshadri.oracle import PASS, random_presentation, randomized_suite
from abelian_seshadri.pell import fundamental_solution, pell_bruteforce
from abelian_seshadri.seshadri import (
    CASE_PELL,
    CASE_SQUARE,
    HalfPeriodPair,
    bauer_simple,
    general_points_lower_bound,
    half_period_pair,
    multi_at_subgroup,
    tg_half_period_bound,
    torsion_constant,
)
from conftest import criterion
from oracles import brute_pell

GOLDEN = Path(__file__).parent / "golden"
S = PolarizedSurface
HALF = F(1, 2)
SUITE_SEED, SUITE_TRIALS, D_MAX, EXP_MAX = 0, 150, 12, 6


@criterion(1, "minimal descent multiples of the two contrasting subgroups")
def test_criterion_1_remark():
    for d in range(2, 11):
        res = multi_at_subgroup(S(d), [(0, F(1, d), 0, 0)])
        t = res.trace
        assert (t.g, t.n, t.type_of_M) == (d, 1, (1, 1)), f"d={d}: {t}"
    for k in (2, 3, 4):
        for d in (1, 2, 3, 5):
            res = multi_at_subgroup(S(d), [(F(1, k), 0, 0, 0), (0, 0, F(1, k), 0)])
            t = res.trace
            assert (t.g, t.exponent, t.n) == (k * k, k, k * k), f"k={k} d={d}: {t}"
            assert t.n == t.exponent ** 2


@criterion(2, "Pell continued fraction vs exhaustive search, D <= 200")
def test_criterion_2_pell():
    limit = 10**6
    for D in range(2, 201):
        if math.isqrt(D) ** 2 == D:
            continue
        sol = fundamental_solution(D)
        assert sol.l0 ** 2 - D * sol.k0 ** 2 == 1
        if sol.k0 <= limit:
            brute = pell_bruteforce(D, sol.k0)
            assert brute == sol, f"D={D}: brute {brute} vs cf {sol}"
        else:
            assert pell_bruteforce(D, limit) is None, f"D={D}: search found a smaller solution"
    l0, k0 = 1766319049, 226153980
    assert l0 * l0 - 61 * k0 * k0 == 1
    sol = fundamental_solution(61)
    assert (sol.l0, sol.k0) == (l0, k0)


@criterion(3, "main-theorem identities on seeded random subgroups")
def test_criterion_3_identity_suite():
    report = randomized_suite(SUITE_SEED, SUITE_TRIALS, D_MAX, EXP_MAX)
    assert report.all_passed, report.failures()[:3]
    by_trial = {}
    for c in report.checks:
        trial, name = c.name.split(".", 1)
        by_trial.setdefault(trial, {})[name] = c.status
    assert len(by_trial) == SUITE_TRIALS >= 100
    required = ("scaling_coherence", "upper_bound", "case_split", "pfaffian", "minimal_n_scan")
    for trial, checks in by_trial.items():
        for name in required:
            assert checks.get(name) == PASS, f"{trial}.{name}: {checks.get(name)}"
        if "pell_identity" in checks:
            assert checks["form_identity"] == PASS

    # the same quantities again, asserted directly
    rng = random.Random(SUITE_SEED)
    for _ in range(SUITE_TRIALS):
        pres = random_presentation(rng, D_MAX, EXP_MAX)
        d = pres.surface.d
        res = multi_at_subgroup(pres.surface, pres)
        t, eps = res.trace, res.epsilon
        assert t.exponent <= EXP_MAX
        assert eps * t.n == bauer_simple(t.d_prime).epsilon
        bound = F(2 * d, t.g)
        if res.case_tag == CASE_PELL:
            l0 = t.pell.l0
            assert eps.numerator ** 2 * l0 ** 2 * t.g == (l0 ** 2 - 1) * 2 * d * eps.denominator ** 2
            assert eps * eps < bound
        else:
            assert eps * eps == bound
        assert t.type_of_M[0] * t.type_of_M[1] * t.g == t.n ** 2 * d
        assert minimal_n_bruteforce(pres.surface, t.basis) == t.n


@criterion(4, "corollaries agree with the subgroup pipeline")
def test_criterion_4_coherence():
    for d in range(1, 7):
        s = S(d)
        for m in range(1, 4):
            closed = torsion_constant(s, m)
            piped = multi_at_subgroup(s, SubgroupPresentation.full_torsion(s, m))
            assert closed == piped, f"torsion d={d} m={m}"
        for r in range(1, 9):
            low = general_points_lower_bound(s, r)
            piped = multi_at_subgroup(s, [(F(1, r), 0, 0, 0)])
            assert (low.epsilon, low.case_tag) == (piped.epsilon, piped.case_tag), f"points d={d} r={r}"
            assert (piped.trace.g, piped.trace.n, piped.trace.d_prime) == (r, r, r * d)
    diffs = [v for v in product((0, HALF), repeat=4) if any(v)]
    assert len(diffs) == 15
    for d in (2, 3, 5):
        s = S(d)
        for diff in diffs:
            closed = half_period_pair(s, HalfPeriodPair((0, 0, 0, 0), diff))
            piped = multi_at_subgroup(s, [diff])
            assert closed == piped, f"half periods d={d} diff={diff}"


def _theorem(d, g, n):
    """eps from brute-force Pell and the two-case formula."""
    q = F(2 * d, g)
    a, b = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return F(a, b)
    l0, k0 = brute_pell(2 * n * n * d // g)
    return F(k0, l0) * F(2 * d * n, g)


@criterion(5, "desk values as exact rationals")
def test_criterion_5_desk_values():
    # trivial G, d=1: g=1, n=1
    assert _theorem(1, 1, 1) == F(4, 3) == multi_at_subgroup(S(1)).epsilon
    # 2-torsion, d=3: g=16, n=4
    assert _theorem(3, 16, 4) == F(3, 5) == torsion_constant(S(3), 2).epsilon
    # half periods, difference outside K(L), d=3: g=2, n=2
    assert _theorem(3, 2, 2) == F(12, 7)
    assert half_period_pair(S(3), HalfPeriodPair((0, 0, 0, 0), (HALF, 0, 0, 0))).epsilon == F(12, 7)
    # half periods, difference (0,1/2,0,0) in K(L), d=2: g=2, n=1
    assert _theorem(2, 2, 1) == F(4, 3)
    assert half_period_pair(S(2), HalfPeriodPair((0, 0, 0, 0), (0, HALF, 0, 0))).epsilon == F(4, 3)
    # trivial G, d=2: square case
    res = multi_at_subgroup(S(2))
    assert _theorem(2, 1, 1) == F(2) == res.epsilon and res.case_tag == CASE_SQUARE


@criterion(6, "every constant is an exact rational, square cases included")
def test_criterion_6_rationality():
    rng = random.Random(SUITE_SEED)
    square_hits = 0
    for _ in range(SUITE_TRIALS):
        pres = random_presentation(rng, D_MAX, EXP_MAX)
        res = multi_at_subgroup(pres.surface, pres)
        assert type(res.epsilon) is F
        if res.case_tag == CASE_SQUARE:
            square_hits += 1
            root = is_perfect_square(res.trace.upper_bound_squared)
            assert root is not None and root == res.epsilon
    assert square_hits > 0


@criterion(7, "older half-period bound exceeds the exact 2-torsion constant")
def test_criterion_7_comparison():
    for d in (1, 3):
        bound = tg_half_period_bound(S(d))
        exact = torsion_constant(S(d), 2)
        assert exact.trace.pell.D == 2 * d
        assert bound > exact.epsilon, f"d={d}: {bound} <= {exact.epsilon}"
    assert tg_half_period_bound(S(1)) == F(12, 17)
    assert torsion_constant(S(1), 2).epsilon == F(1, 3)


def _run(*argv):
    out, err = io.StringIO(), io.StringIO()
    return main(list(argv), out=out, err=err), out.getvalue(), err.getvalue()


GOLDEN_CASES = {
    "simple_d1": ["seshadri", "--d", "1"],
    "simple_d2": ["seshadri", "--d", "2"],
    "torsion_d3_m2": ["seshadri", "--d", "3", "--torsion", "2"],
    "half_periods_d3": ["seshadri", "--d", "3", "--half-periods", "0,0,0,0", "1/2,0,0,0"],
    "half_periods_d2": ["seshadri", "--d", "2", "--half-periods", "0,0,0,0", "0,1/2,0,0"],
    "pell_2": ["pell", "2"],
    "pell_6": ["pell", "6"],
}


@criterion(8, "CLI golden files and exit-code contract")
def test_criterion_8_cli(tmp_path, monkeypatch):
    for name, argv in GOLDEN_CASES.items():
        code, out, _ = _run(*argv)
        assert code == EXIT_OK, name
        assert out.encode() == (GOLDEN / f"{name}.json").read_bytes(), name
    expected = {"simple_d1": "4/3", "simple_d2": "2", "torsion_d3_m2": "3/5",
                "half_periods_d3": "12/7", "half_periods_d2": "4/3"}
    for name, eps in expected.items():
        assert json.loads((GOLDEN / f"{name}.json").read_text())["epsilon"] == eps

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"d": 2, "generators": [["0", "1/", "0", "0"]]}), encoding="utf-8")
    code, out, err = _run("seshadri", str(bad))
    assert code == EXIT_USAGE and out == "" and "$.generators[0][1]" in err

    monkeypatch.setattr(oracle, "minimal_n_bruteforce", lambda s, b: -1)
    code, out, err = _run("seshadri", "--d", "3", "--torsion", "2", "--verify")
    assert code == EXIT_VERIFY_FAILED and "FAIL minimal_n_scan" in err
