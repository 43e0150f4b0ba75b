"""Command-line front end.

Subcommands::

    abelian-seshadri seshadri [SPEC.json] [--d D] [--gen a,b,c,e ...]
                              [--torsion M | --half-periods E1 E2 | --points R]
                              [--verify] [--output json|text]
    abelian-seshadri pell D
    abelian-seshadri verify [--seed S] [--trials T] [--d-max D] [--exp-max E]

Exit codes: 0 success, 1 verification failure, 2 usage or validation error.
All exact numbers are written as strings so that large Pell solutions
survive JSON readers with 64-bit integers.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional, Sequence, TextIO, Tuple

from .arith import format_rational, parse_rational, to_decimal_string
from .lattice import LatticeVector, PolarizedSurface, SubgroupPresentation
from .oracle import VerificationReport, randomized_suite, verify_pipeline
from .pell import cf_expand, fundamental_solution
from .seshadri import (
    CASE_PELL,
    HalfPeriodPair,
    SeshadriResult,
    general_points_lower_bound,
    half_period_pair,
    multi_at_subgroup,
    torsion_constant,
)

EXIT_OK, EXIT_VERIFY_FAILED, EXIT_USAGE = 0, 1, 2

MODES = ("simple", "subgroup", "torsion", "half_periods", "general_points")
_SPEC_KEYS = {"d", "mode", "generators", "m", "e1", "e2", "r", "verify", "output"}


class SpecError(ValueError):
    """A problem description failed validation; the message starts with the field path."""


@dataclass(frozen=True)
class ProblemSpec:
    d: int
    mode: str
    generators: Tuple[LatticeVector, ...] = ()
    m: Optional[int] = None
    e1: Optional[LatticeVector] = None
    e2: Optional[LatticeVector] = None
    r: Optional[int] = None
    verify: bool = False
    output: str = "json"

    @property
    def surface(self) -> PolarizedSurface:
        return PolarizedSurface(self.d)

    def presentation(self) -> SubgroupPresentation:
        """The subgroup whose coset the requested constant lives on."""
        s = self.surface
        if self.mode == "simple":
            return SubgroupPresentation(s)
        if self.mode == "subgroup":
            return SubgroupPresentation(s, self.generators)
        if self.mode == "torsion":
            return SubgroupPresentation.full_torsion(s, self.m)
        if self.mode == "half_periods":
            return SubgroupPresentation(s, (self.e1 - self.e2,))
        return SubgroupPresentation.cyclic(s, (Fraction(1, self.r), 0, 0, 0))

    def to_dict(self) -> Dict[str, Any]:
        """Canonical JSON form; ``problem_from_dict`` inverts it."""
        out: Dict[str, Any] = {"d": self.d, "mode": self.mode}
        if self.mode == "subgroup":
            out["generators"] = [g.as_strings() for g in self.generators]
        elif self.mode == "torsion":
            out["m"] = self.m
        elif self.mode == "half_periods":
            out["e1"] = self.e1.as_strings()
            out["e2"] = self.e2.as_strings()
        elif self.mode == "general_points":
            out["r"] = self.r
        return out


def _positive_int(obj: Dict[str, Any], key: str) -> int:
    v = obj.get(key)
    if isinstance(v, bool) or not isinstance(v, int):
        raise SpecError(f"$.{key}: expected an integer, got {v!r}")
    if v < 1:
        raise SpecError(f"$.{key}: must be >= 1, got {v}")
    return v


def _vector(value: Any, path: str) -> LatticeVector:
    if not isinstance(value, list) or len(value) != 4:
        raise SpecError(f"{path}: expected a list of 4 rationals")
    coords = []
    for i, x in enumerate(value):
        if isinstance(x, bool) or not isinstance(x, (str, int)):
            raise SpecError(f"{path}[{i}]: expected a rational string, got {x!r}")
        try:
            coords.append(Fraction(x) if isinstance(x, int) else parse_rational(x))
        except ValueError as exc:
            raise SpecError(f"{path}[{i}]: {exc}") from None
    return LatticeVector(coords).mod_lattice()


def problem_from_dict(obj: Any) -> ProblemSpec:
    """Validate a decoded JSON problem description."""
    if not isinstance(obj, dict):
        raise SpecError("$: expected a JSON object")
    unknown = sorted(set(obj) - _SPEC_KEYS)
    if unknown:
        raise SpecError(f"$.{unknown[0]}: unknown field")
    d = _positive_int(obj, "d")

    mode = obj.get("mode")
    if mode is None:
        for key, implied in (("generators", "subgroup"), ("m", "torsion"), ("e1", "half_periods"),
                             ("r", "general_points")):
            if key in obj:
                mode = implied
                break
        else:
            mode = "simple"
    if mode not in MODES:
        raise SpecError(f"$.mode: expected one of {', '.join(MODES)}, got {mode!r}")

    kwargs: Dict[str, Any] = {}
    if mode == "subgroup":
        gens = obj.get("generators", [])
        if not isinstance(gens, list):
            raise SpecError("$.generators: expected a list")
        kwargs["generators"] = tuple(_vector(g, f"$.generators[{i}]") for i, g in enumerate(gens))
    elif mode == "torsion":
        kwargs["m"] = _positive_int(obj, "m")
    elif mode == "half_periods":
        for key in ("e1", "e2"):
            if key not in obj:
                raise SpecError(f"$.{key}: required in half_periods mode")
            kwargs[key] = _vector(obj[key], f"$.{key}")
        try:
            HalfPeriodPair(kwargs["e1"], kwargs["e2"])
        except ValueError as exc:
            raise SpecError(f"$.e1/e2: {exc}") from None
    elif mode == "general_points":
        kwargs["r"] = _positive_int(obj, "r")

    verify = obj.get("verify", False)
    if not isinstance(verify, bool):
        raise SpecError(f"$.verify: expected a boolean, got {verify!r}")
    output = obj.get("output", "json")
    if output not in ("json", "text"):
        raise SpecError(f"$.output: expected 'json' or 'text', got {output!r}")
    return ProblemSpec(d=d, mode=mode, verify=verify, output=output, **kwargs)


def parse_spec(path: str) -> ProblemSpec:
    with open(path, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SpecError(f"$: invalid JSON ({exc})") from None
    return problem_from_dict(obj)


def solve(problem: ProblemSpec) -> SeshadriResult:
    s = problem.surface
    if problem.mode == "torsion":
        return torsion_constant(s, problem.m)
    if problem.mode == "half_periods":
        return half_period_pair(s, HalfPeriodPair(problem.e1, problem.e2))
    if problem.mode == "general_points":
        return general_points_lower_bound(s, problem.r)
    return multi_at_subgroup(s, problem.presentation())


def verify_problem(problem: ProblemSpec, result: SeshadriResult) -> VerificationReport:
    """Oracle checks on the equivalent subgroup, plus agreement with the closed form used."""
    pres = problem.presentation()
    report = verify_pipeline(pres.surface, pres)
    if problem.mode in ("torsion", "half_periods", "general_points"):
        reference = multi_at_subgroup(pres.surface, pres)
        report.add("corollary_coherence", reference.epsilon == result.epsilon,
                   f"closed form {result.epsilon}, pipeline {reference.epsilon}")
    return report


def result_to_json(problem: ProblemSpec, res: SeshadriResult) -> Dict[str, Any]:
    t = res.trace
    return {
        "problem": problem.to_dict(),
        "d": str(t.d),
        "mode": problem.mode,
        "g": str(t.g),
        "exponent": str(t.exponent),
        "invariant_factors": [str(x) for x in t.invariant_factors],
        "n": str(t.n),
        "d_prime": str(t.d_prime),
        "type_of_M": [str(x) for x in t.type_of_M],
        "case": res.case_tag,
        "pell": t.pell.as_dict() if t.pell is not None else None,
        "epsilon": format_rational(res.epsilon),
        "epsilon_decimal": to_decimal_string(res.epsilon, 12),
        "upper_bound_squared": format_rational(t.upper_bound_squared),
        "is_lower_bound": t.is_lower_bound,
        "assumptions": list(problem.surface.assumptions),
    }


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def render_text(problem: ProblemSpec, res: SeshadriResult) -> str:
    t = res.trace
    lines = [f"Polarization of type (1,{t.d}), L^2 = {2 * t.d}; assuming Picard number 1.", ""]
    if t.basis is not None:
        lines.append("Lattice Lambda' = pi^-1(G), basis rows in (lambda1, lambda2, mu1, mu2):")
        lines += ["  [" + ", ".join(r) + "]" for r in t.basis.as_strings()]
        lines.append("Gram matrix of E on Lambda':")
        lines += ["  [" + ", ".join(format_rational(x) for x in r) + "]" for r in t.gram]
    else:
        lines.append(f"Closed-form {problem.mode.replace('_', ' ')} statement; Lambda' not built.")
    factors = " x ".join(f"Z/{f}" for f in t.invariant_factors) or "trivial"
    lines += [
        f"G = {factors}: order g = {t.g}, exponent {t.exponent}",
        f"Minimal n with nL = q^*M: n = {t.n}",
        f"M has type ({t.type_of_M[0]},{t.type_of_M[1]}), d' = n^2 d / g = {t.d_prime}",
        f"Upper bound squared 2d/g = {format_rational(t.upper_bound_squared)}",
    ]
    if res.case_tag == CASE_PELL:
        cf = cf_expand(t.pell.D)
        lines += [
            f"2d/g is not a rational square: solve l^2 - {t.pell.D} k^2 = 1",
            f"  sqrt({t.pell.D}) = [{cf.a0}; ({', '.join(map(str, cf.period))})]",
            f"  fundamental solution (l0, k0) = ({t.pell.l0}, {t.pell.k0})",
        ]
        if problem.mode == "half_periods":
            lines.append(f"eps = {format_rational(res.epsilon)} via the half-period formula")
        else:
            lines.append(
                f"eps = (k0/l0) * (2 d n / g) = ({t.pell.k0}/{t.pell.l0}) * ({2 * t.d * t.n}/{t.g})"
                f" = {format_rational(res.epsilon)}"
            )
    else:
        lines.append(f"2d/g is a rational square: eps = sqrt(2d/g) = {format_rational(res.epsilon)}")
    kind = "lower bound" if t.is_lower_bound else "value"
    lines.append(f"Seshadri constant ({kind}): {format_rational(res.epsilon)} ~ {to_decimal_string(res.epsilon)}")
    return "\n".join(lines) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="abelian-seshadri", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seshadri", help="Seshadri constant at a coset of a finite subgroup")
    p.add_argument("spec", nargs="?", help="JSON problem file")
    p.add_argument("--d", type=int, help="polarization type (1,d)")
    p.add_argument("--gen", action="append", default=[], metavar="a,b,c,e",
                   help="subgroup generator in lambda/mu coordinates (repeatable)")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--torsion", type=int, metavar="M", help="the m-torsion subgroup")
    group.add_argument("--half-periods", nargs=2, metavar=("E1", "E2"), help="two half periods")
    group.add_argument("--points", type=int, metavar="R", help="lower bound at R general points")
    p.add_argument("--verify", action="store_true", help="run oracle cross-checks")
    p.add_argument("--output", choices=("json", "text"), default=None)

    p = sub.add_parser("pell", help="fundamental solution of l^2 - D k^2 = 1")
    p.add_argument("D")

    p = sub.add_parser("verify", help="randomized oracle suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--d-max", type=int, default=12)
    p.add_argument("--exp-max", type=int, default=6)
    return parser


def _problem_from_args(args: argparse.Namespace) -> ProblemSpec:
    if args.spec is not None:
        if args.d is not None or args.gen or args.torsion or args.half_periods or args.points:
            raise SpecError("give either a spec file or inline flags, not both")
        problem = parse_spec(args.spec)
    else:
        if args.d is None:
            raise SpecError("--d is required without a spec file")
        obj: Dict[str, Any] = {"d": args.d}
        if args.gen and (args.torsion or args.half_periods or args.points):
            raise SpecError("--gen cannot be combined with another mode")
        if args.gen:
            obj["generators"] = [g.split(",") for g in args.gen]
        elif args.torsion is not None:
            obj["m"] = args.torsion
        elif args.half_periods:
            obj["e1"], obj["e2"] = (e.split(",") for e in args.half_periods)
        elif args.points is not None:
            obj["r"] = args.points
        problem = problem_from_dict(obj)
    overrides = {}
    if args.verify:
        overrides["verify"] = True
    if args.output is not None:
        overrides["output"] = args.output
    if overrides:
        problem = ProblemSpec(**{**problem.__dict__, **overrides})
    return problem


def _cmd_seshadri(args, out: TextIO, err: TextIO) -> int:
    problem = _problem_from_args(args)
    res = solve(problem)
    if problem.output == "text":
        out.write(render_text(problem, res))
    else:
        out.write(dumps(result_to_json(problem, res)))
    if problem.verify:
        report = verify_problem(problem, res)
        passed, failed, skipped = report.counts()
        err.write(f"verification: {passed} passed, {failed} failed, {skipped} skipped\n")
        for c in report.failures():
            err.write(f"  FAIL {c.name}: {c.detail}\n")
        if not report.all_passed:
            return EXIT_VERIFY_FAILED
    return EXIT_OK


def _cmd_pell(args, out: TextIO, err: TextIO) -> int:
    try:
        D = int(args.D)
    except ValueError:
        raise SpecError(f"D: expected an integer, got {args.D!r}") from None
    out.write(json.dumps(fundamental_solution(D).as_dict(), separators=(",", ":")) + "\n")
    return EXIT_OK


def _cmd_verify(args, out: TextIO, err: TextIO) -> int:
    report = randomized_suite(args.seed, args.trials, args.d_max, args.exp_max)
    passed, failed, skipped = report.counts()
    summary = {
        "seed": args.seed,
        "trials": args.trials,
        "d_max": args.d_max,
        "exp_max": args.exp_max,
        "passed": passed,
        "failed": failed,
        "skipped": skipped,
        "all_passed": report.all_passed,
        "failures": [{"name": c.name, "detail": c.detail} for c in report.failures()],
    }
    out.write(dumps(summary))
    return EXIT_OK if report.all_passed else EXIT_VERIFY_FAILED


def main(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    handler = {"seshadri": _cmd_seshadri, "pell": _cmd_pell, "verify": _cmd_verify}[args.command]
    try:
        return handler(args, out, err)
    except (ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
