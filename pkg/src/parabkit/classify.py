"""End-to-end classification pipelines and the command-line interface.

Two pipelines reproduce classification arguments for the real quadratic
family f_c(z) = z^2 + c as machine-checked transcripts:

* ``prop1_pipeline`` shows that the totally real postcritically finite
  parameters are exactly -2, -1 and 0.
* ``prop2_pipeline`` shows that the totally real parameters with a parabolic
  cycle are exactly 1/4, -3/4, -5/4 and -7/4.

Both share the same skeleton.  A Kronecker-style argument turns "algebraic
integer with all conjugates in a short real interval" into "root of a trace
polynomial T_n for an admissible order n", which produces a finite candidate
list; every candidate is then confirmed or eliminated by an exact certificate
(the single numeric elimination carries an interval-certified multiplier
bound instead).  The resulting ``ClassificationReport`` serializes to a
versioned JSON schema and back.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import mpmath

from .algebraic import (
    NotSquarefreeError,
    RealAlgebraic,
    affine_transform,
    all_conjugates_in,
    from_rational,
    is_totally_real,
    make_real_algebraic,
)
from .cyclotomic import NotMonicError, admissible_orders, is_cyclotomic_product, trace_polynomial
from .dynamics import (
    DISCRIMINANT_CAP,
    CapExceededError,
    DegreeMismatchError,
    MultiplierMismatchError,
    NoConvergenceError,
    NotAFactorError,
    PrecisionInsufficientError,
    cycle_multiplier,
    discriminant_Pn,
    find_attracting_cycle_numeric,
    is_parabolic_up_to,
    is_pcf_rational,
    parity_certificate,
    real_behavior,
    verify_cycle,
)
from .polyring import (
    IntegerPoly,
    ParabkitError,
    ParseError,
    Rat,
    RationalInterval,
    content_and_primitive,
    format_poly,
    isolate_real_roots,
    parse_poly,
)

__all__ = [
    "PipelineMismatchError",
    "Certificate",
    "Environment",
    "ClassificationReport",
    "SCHEMA_ID",
    "PROP2_CAVEAT",
    "prop1_pipeline",
    "prop2_pipeline",
    "report_to_json",
    "report_from_json",
    "parse_parameter",
    "cli_main",
    "main",
]

SCHEMA_ID = "parab-kit/1"

PROP2_CAVEAT = (
    "Bounded checks cover n <= nmax only; the congruence P_n(-6) = P_n(0) (mod 2) "
    "with P_n(0) odd extends the -3/2 elimination to every period, and a strictly "
    "preperiodic critical orbit rules out parabolic cycles of any period at -2."
)


class PipelineMismatchError(ParabkitError):
    """A pipeline step disagreed with its recorded expectation."""


@dataclass(frozen=True, slots=True)
class Certificate:
    """Per-candidate verdict with its machine-checked reason.

    ``verdict`` is "confirmed" or "eliminated".  ``checked_up_to`` records
    the period bound of any bounded search involved (0 when none was).
    ``modulus_bound`` carries the exact rational upper bound on a cycle
    multiplier modulus for numeric eliminations.
    """

    candidate: RealAlgebraic
    verdict: str
    reason: str
    checked_up_to: int
    modulus_bound: Optional[Fraction] = None

    def __str__(self) -> str:
        tail = f" (checked up to n={self.checked_up_to})" if self.checked_up_to else ""
        return f"{self.candidate}: {self.verdict} [{self.reason}]{tail}"


@dataclass(frozen=True, slots=True)
class Environment:
    nmax: int
    precision: int
    runtime_ms: int


@dataclass(frozen=True, slots=True)
class ClassificationReport:
    """Outcome of one pipeline run: final parameters plus all certificates."""

    proposition: str
    parameters: tuple
    certificates: tuple
    environment: Environment


def _mpf_to_fraction(x) -> Fraction:
    """Exact rational value of a finite mpf."""
    m = mpmath.mpf(x)
    if not mpmath.isfinite(m):
        raise ValueError(f"cannot convert {m} to a fraction")
    sign, man, exp, _ = m._mpf_
    value = Fraction(man) * Fraction(2) ** exp
    return -value if sign else value


PROP1_EXPECTED = (Fraction(-2), Fraction(-1), Fraction(0))
PROP2_EXPECTED = (Fraction(-7, 4), Fraction(-5, 4), Fraction(-3, 4), Fraction(1, 4))

# Landmark parameters inside [-5/4, 1/4] with their cycle data: parameter,
# cycle polynomial, cycle period, exact multiplier.
_PROP2_LANDMARKS = (
    (Fraction(1, 4), IntegerPoly((-1, 2)), 1, Fraction(1)),
    (Fraction(-3, 4), IntegerPoly((1, 2)), 1, Fraction(-1)),
    (Fraction(-5, 4), IntegerPoly((-1, 4, 4)), 2, Fraction(-1)),
)

_PROP2_PERIOD3 = (Fraction(-7, 4), IntegerPoly((-1, -18, 4, 8)), 3, Fraction(1))


def prop1_pipeline(
    threshold: Rat = Fraction(0), strict: bool = False, order_cap: int = 64
) -> ClassificationReport:
    """Classify totally real postcritically finite parameters.

    A totally real PCF parameter is an algebraic integer all of whose
    conjugates lie in [-2, 2t] with t = 0 (positive parameters have infinite
    critical orbits).  Writing c = a + 1/a then forces every conjugate of a
    onto the unit circle, so a is a root of unity and c is a root of a trace
    polynomial of admissible order.  Each candidate root is confirmed or
    eliminated by the exact orbit test and conjugate location.

    ``threshold`` and ``strict`` expose the interval endpoint as a
    diagnostic knob; the classification itself is the default call.  The
    default run must come out to exactly {-2, -1, 0}, otherwise
    PipelineMismatchError is raised.
    """
    start = time.monotonic()
    threshold = Fraction(threshold)
    orders = admissible_orders(threshold, strict, scan_cap=order_cap)
    window = RationalInterval(Fraction(-2), 2 * threshold)
    certificates = []
    confirmed = []
    for n in orders:
        tn = trace_polynomial(n)
        for isolation in isolate_real_roots(tn):
            candidate = make_real_algebraic(tn, isolation)
            if candidate.is_rational:
                c = candidate.to_rational()
                finite, preperiod, period = is_pcf_rational(c)
                if not finite:
                    certificates.append(
                        Certificate(
                            candidate,
                            "eliminated",
                            "NotPostcriticallyFinite(is_pcf_rational: critical orbit is infinite)",
                            0,
                        )
                    )
                    continue
                if not all_conjugates_in(candidate.minpoly, window):
                    certificates.append(
                        Certificate(
                            candidate,
                            "eliminated",
                            f"ConjugateOutsideInterval([-2, {2 * threshold}])",
                            0,
                        )
                    )
                    continue
                certificates.append(
                    Certificate(
                        candidate,
                        "confirmed",
                        f"PostcriticallyFinite(preperiod {preperiod}, period {period}); "
                        f"conjugates in [-2, {2 * threshold}]",
                        0,
                    )
                )
                confirmed.append(c)
            elif not all_conjugates_in(candidate.minpoly, window):
                certificates.append(
                    Certificate(
                        candidate,
                        "eliminated",
                        f"ConjugateOutsideInterval([-2, {2 * threshold}])",
                        0,
                    )
                )
            else:
                # Only reachable with a diagnostic threshold: the exact orbit
                # test covers rational parameters, so an irrational candidate
                # cannot be confirmed and is excluded from the final set.
                certificates.append(
                    Certificate(
                        candidate,
                        "eliminated",
                        "PcfUndecidedIrrational(exact orbit test requires a rational parameter)",
                        0,
                    )
                )
    confirmed.sort()
    if threshold == 0 and not strict:
        if tuple(orders) != (2, 3, 4):
            raise PipelineMismatchError(f"expected orders (2, 3, 4), got {tuple(orders)}")
        if tuple(confirmed) != PROP1_EXPECTED:
            raise PipelineMismatchError(f"expected parameters {{-2, -1, 0}}, got {confirmed}")
    runtime_ms = int((time.monotonic() - start) * 1000)
    return ClassificationReport(
        proposition="prop1",
        parameters=tuple(confirmed),
        certificates=tuple(certificates),
        environment=Environment(nmax=0, precision=0, runtime_ms=runtime_ms),
    )


def _prop2_candidates() -> list:
    """Kronecker stage: candidates c = (b - 6)/4 for roots b of admissible T_n."""
    orders = admissible_orders(Fraction(1, 2), True)
    if tuple(orders) != (2, 3, 4, 5):
        raise PipelineMismatchError(f"expected orders (2, 3, 4, 5), got {tuple(orders)}")
    candidates = []
    for n in orders:
        tn = trace_polynomial(n)
        for isolation in isolate_real_roots(tn):
            b = make_real_algebraic(tn, isolation)
            candidates.append(affine_transform(b, Fraction(1, 4), Fraction(-3, 2)))
    candidates.sort()
    return candidates


def prop2_pipeline(nmax: int = 5, precision: int = 64) -> ClassificationReport:
    """Classify totally real parameters carrying a parabolic cycle.

    Stage one confirms the landmarks 1/4, -3/4 and -5/4 through vanishing
    discriminant polynomials and exact cycle certificates.  Stage two covers
    the remaining interval [-2, -5/4): a totally real parabolic parameter
    there has 4c + 6 an algebraic integer with every conjugate in [-2, 1),
    hence a root of an admissible trace polynomial; the five resulting
    candidates are confirmed (-7/4) or eliminated one by one.  The final set
    must be exactly {1/4, -3/4, -5/4, -7/4}.

    Raises PipelineMismatchError when a recorded expectation fails and
    propagates PrecisionInsufficientError from the numeric elimination.
    """
    start = time.monotonic()
    if nmax < 1:
        raise ValueError("nmax must be at least 1")
    if nmax > DISCRIMINANT_CAP:
        raise CapExceededError(f"discriminant cap is {DISCRIMINANT_CAP}, got nmax={nmax}")
    certificates = []
    confirmed = []

    for c, g, n, lam in _PROP2_LANDMARKS:
        verdict = is_parabolic_up_to(c, nmax)
        if not verdict.is_parabolic:
            raise PipelineMismatchError(f"landmark {c} is not parabolic up to nmax={nmax}")
        verify_cycle(c, g, n, lam)
        certificates.append(
            Certificate(
                from_rational(c),
                "confirmed",
                f"{verdict}; cycle period {n} multiplier {lam}",
                nmax,
            )
        )
        confirmed.append(c)

    candidates = _prop2_candidates()
    rationals = [cand.to_rational() for cand in candidates if cand.is_rational]
    quadratics = [cand for cand in candidates if not cand.is_rational]
    if rationals != [Fraction(-2), Fraction(-7, 4), Fraction(-3, 2)] or len(quadratics) != 2:
        raise PipelineMismatchError(f"unexpected candidate list {candidates}")
    golden_low, golden_high = quadratics  # (-13 - sqrt5)/8 < (-13 + sqrt5)/8

    # The one numeric elimination: the larger quadratic candidate carries an
    # attracting cycle of period 4, so no cycle multiplier is a root of unity.
    numeric = find_attracting_cycle_numeric(golden_high, 4, precision=precision)
    bound = _mpf_to_fraction(numeric.modulus_upper)
    if not numeric.exact_period:
        raise PipelineMismatchError("period-4 boxes were not pairwise disjoint")

    for candidate in candidates:
        if candidate.is_rational and candidate.to_rational() == Fraction(-2):
            finite, preperiod, period = is_pcf_rational(Fraction(-2))
            if not (finite and preperiod >= 1):
                raise PipelineMismatchError("-2 is no longer strictly preperiodic")
            for n in range(1, nmax + 1):
                if discriminant_Pn(n).evaluate(-8) == 0:
                    raise PipelineMismatchError(f"P_{n}(-8) vanished")
            certificates.append(
                Certificate(
                    candidate,
                    "eliminated",
                    f"PreperiodicPCF(preperiod {preperiod}, period {period}; "
                    f"a strictly preperiodic critical orbit lands on a repelling cycle, "
                    f"while a parabolic cycle must attract it; P_n(-8) != 0 for n <= {nmax})",
                    nmax,
                )
            )
        elif candidate.is_rational and candidate.to_rational() == Fraction(-7, 4):
            verdict = is_parabolic_up_to(Fraction(-7, 4), nmax)
            if not (verdict.is_parabolic and verdict.n == 3):
                raise PipelineMismatchError(f"-7/4 verdict {verdict}, expected Parabolic(3)")
            c, g, n, lam = _PROP2_PERIOD3
            verify_cycle(c, g, n, lam)
            certificates.append(
                Certificate(
                    candidate,
                    "confirmed",
                    f"{verdict}; cycle period {n} multiplier {lam}",
                    nmax,
                )
            )
            confirmed.append(Fraction(-7, 4))
        elif candidate.is_rational and candidate.to_rational() == Fraction(-3, 2):
            for n in range(1, nmax + 1):
                if not parity_certificate(n).is_valid:
                    raise PipelineMismatchError(f"parity certificate failed at n={n}")
            certificates.append(
                Certificate(
                    candidate,
                    "eliminated",
                    f"ParityOdd(P_n(-6) odd, hence nonzero, for n <= {nmax})",
                    nmax,
                )
            )
        elif candidate == golden_high:
            certificates.append(
                Certificate(
                    candidate,
                    "eliminated",
                    f"AttractingCycle(period {numeric.period}, "
                    f"|multiplier| <= {mpmath.nstr(numeric.modulus_upper, 8)})",
                    nmax,
                    modulus_bound=bound,
                )
            )
        elif candidate == golden_low:
            certificates.append(
                Certificate(
                    candidate,
                    "eliminated",
                    f"GaloisConjugateEliminated(conjugate {golden_high} has an attracting "
                    f"cycle of period 4; a totally real parabolic parameter needs every "
                    f"conjugate parabolic)",
                    nmax,
                )
            )
        else:
            raise PipelineMismatchError(f"unplaced candidate {candidate}")

    confirmed.sort()
    if tuple(confirmed) != PROP2_EXPECTED:
        raise PipelineMismatchError(
            f"expected parameters {{1/4, -3/4, -5/4, -7/4}}, got {confirmed}"
        )
    runtime_ms = int((time.monotonic() - start) * 1000)
    return ClassificationReport(
        proposition="prop2",
        parameters=tuple(confirmed),
        certificates=tuple(certificates),
        environment=Environment(nmax=nmax, precision=precision, runtime_ms=runtime_ms),
    )


def report_to_json(report: ClassificationReport) -> str:
    """Serialize a report with deterministic key order and exact rationals."""
    certificates = []
    for cert in report.certificates:
        entry = {
            "candidate": str(cert.candidate),
            "verdict": cert.verdict,
            "reason": cert.reason,
            "checked_up_to": cert.checked_up_to,
        }
        if cert.modulus_bound is not None:
            entry["modulus_bound"] = str(cert.modulus_bound)
        certificates.append(entry)
    payload = {
        "schema": SCHEMA_ID,
        "proposition": report.proposition,
        "parameters": [str(p) for p in report.parameters],
        "certificates": certificates,
        "environment": {
            "nmax": report.environment.nmax,
            "precision": report.environment.precision,
            "runtime_ms": report.environment.runtime_ms,
        },
    }
    return json.dumps(payload, indent=2)


def report_from_json(text: str) -> ClassificationReport:
    """Inverse of report_to_json; candidates are re-validated on the way in."""
    payload = json.loads(text)
    if payload.get("schema") != SCHEMA_ID:
        raise ValueError(f"unknown schema {payload.get('schema')!r}")
    certificates = []
    for entry in payload["certificates"]:
        bound = entry.get("modulus_bound")
        certificates.append(
            Certificate(
                candidate=parse_parameter(entry["candidate"]),
                verdict=entry["verdict"],
                reason=entry["reason"],
                checked_up_to=entry["checked_up_to"],
                modulus_bound=None if bound is None else Fraction(bound),
            )
        )
    env = payload["environment"]
    return ClassificationReport(
        proposition=payload["proposition"],
        parameters=tuple(Fraction(p) for p in payload["parameters"]),
        certificates=tuple(certificates),
        environment=Environment(
            nmax=env["nmax"], precision=env["precision"], runtime_ms=env["runtime_ms"]
        ),
    )


def parse_parameter(text: str) -> RealAlgebraic:
    """Parse "p/q" or "minpoly@[lo,hi]" into a validated real algebraic number."""
    text = text.strip()
    if "@" not in text:
        try:
            return from_rational(Fraction(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational parameter: {text!r}", 0) from exc
    poly_text, _, interval_text = text.partition("@")
    interval_text = interval_text.strip()
    if not (interval_text.startswith("[") and interval_text.endswith("]")):
        raise ParseError(f"expected [lo,hi] after '@' in {text!r}", 0)
    lo_text, comma, hi_text = interval_text[1:-1].partition(",")
    if not comma:
        raise ParseError(f"expected two comma-separated endpoints in {text!r}", 0)
    try:
        lo, hi = Fraction(lo_text.strip()), Fraction(hi_text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad interval endpoint in {text!r}", 0) from exc
    _, prim = content_and_primitive(parse_poly(poly_text))
    return make_real_algebraic(prim, RationalInterval(lo, hi))


_USAGE_ERRORS = (ParseError,)
_VERIFICATION_ERRORS = (
    PipelineMismatchError,
    PrecisionInsufficientError,
    NoConvergenceError,
    NotAFactorError,
    MultiplierMismatchError,
    DegreeMismatchError,
    NotMonicError,
    NotSquarefreeError,
    CapExceededError,
)


def _emit(args, text: str) -> None:
    if not args.quiet:
        print(text)


def _emit_json(args, payload) -> None:
    if not args.quiet:
        print(json.dumps(payload, indent=2))


def _run_verify(args) -> int:
    if args.proposition == "prop1":
        report = prop1_pipeline()
    else:
        report = prop2_pipeline(nmax=args.nmax, precision=args.precision)
    if getattr(args, "json", False):
        if not args.quiet:
            print(report_to_json(report))
        return 0
    _emit(args, f"{args.proposition}: parameters {{{', '.join(str(p) for p in report.parameters)}}}")
    for cert in report.certificates:
        _emit(args, f"  {cert}")
    if args.proposition == "prop2":
        _emit(args, f"note: {PROP2_CAVEAT}")
    _emit(args, f"verified in {report.environment.runtime_ms} ms")
    return 0


def _run_pn(args) -> int:
    pn = discriminant_Pn(args.n)
    parity = parity_certificate(args.n) if args.check_parity else None
    if getattr(args, "json", False):
        payload = {"n": args.n, "pn": format_poly(pn.to_rational(), "b")}
        if parity is not None:
            payload["parity"] = {
                "value_at_0_mod2": parity.value_at_0_mod2,
                "value_at_minus6_mod2": parity.value_at_minus6_mod2,
                "cross_check_disc_z2n": parity.cross_check_disc_z2n,
            }
        _emit_json(args, payload)
    else:
        _emit(args, format_poly(pn.to_rational(), "b"))
        if parity is not None:
            _emit(
                args,
                f"parity: P_{args.n}(0) mod 2 = {parity.value_at_0_mod2}, "
                f"P_{args.n}(-6) mod 2 = {parity.value_at_minus6_mod2}, "
                f"disc(z^(2^{args.n}) - z) cross-check = {parity.cross_check_disc_z2n}",
            )
    if parity is not None and not parity.is_valid:
        return 1
    return 0


def _run_kronecker(args) -> int:
    _, prim = content_and_primitive(parse_poly(args.poly))
    witness = is_cyclotomic_product(prim)
    if getattr(args, "json", False):
        _emit_json(args, {"is_product": witness.is_product, "orders": list(witness.orders)})
    elif witness.is_product:
        orders = ", ".join(str(n) for n in witness.orders)
        _emit(args, f"product of cyclotomics of orders [{orders}]")
    else:
        _emit(args, "not a product of cyclotomics")
    return 0


def _run_classify(args) -> int:
    parameter = parse_parameter(args.c)
    if parameter.is_rational:
        behavior = real_behavior(parameter.to_rational())
        detail = f" {behavior.detail}" if behavior.detail else ""
        if getattr(args, "json", False):
            _emit_json(args, {"c": str(parameter), "tag": behavior.tag, "detail": list(behavior.detail)})
        else:
            _emit(args, f"{parameter}: {behavior.tag}{detail}")
        return 0
    verdict = is_parabolic_up_to(parameter, DISCRIMINANT_CAP)
    if getattr(args, "json", False):
        _emit_json(args, {"c": str(parameter), "parabolic": str(verdict)})
    else:
        _emit(args, f"{parameter}: {verdict}")
    return 0


def _run_multiplier(args) -> int:
    c = Fraction(args.c)
    _, g = content_and_primitive(parse_poly(args.cycle_poly))
    lam = cycle_multiplier(g, args.period)
    verify_cycle(c, g, args.period, lam)
    if getattr(args, "json", False):
        _emit_json(args, {"c": str(c), "period": args.period, "multiplier": str(lam)})
    else:
        _emit(args, f"multiplier {lam}")
    return 0


def _run_totally_real(args) -> int:
    _, prim = content_and_primitive(parse_poly(args.poly))
    answer = is_totally_real(prim)
    if getattr(args, "json", False):
        _emit_json(args, {"totally_real": answer})
    else:
        _emit(args, "totally real" if answer else "not totally real")
    return 0


def _run_isolate(args) -> int:
    intervals = isolate_real_roots(parse_poly(args.poly))
    if getattr(args, "json", False):
        _emit_json(
            args,
            [
                {"lo": str(iv.lo), "hi": str(iv.hi), "point": iv.is_point}
                for iv in intervals
            ],
        )
    else:
        if not intervals:
            _emit(args, "no real roots")
        for iv in intervals:
            _emit(args, str(iv.lo) if iv.is_point else f"({iv.lo}, {iv.hi})")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON output"
    )
    common.add_argument(
        "--quiet", action="store_true", default=argparse.SUPPRESS, help="suppress output"
    )
    parser = argparse.ArgumentParser(
        prog="parabkit",
        parents=[common],
        description="Exact classification toolkit for the quadratic family z^2 + c.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", parents=[common], help="run a classification pipeline")
    verify.add_argument("proposition", choices=("prop1", "prop2"))
    verify.add_argument("--nmax", type=int, default=5, help="bounded-search period cap")
    verify.add_argument("--precision", type=int, default=64, help="numeric decimal digits")
    verify.set_defaults(run=_run_verify)

    pn = sub.add_parser("pn", parents=[common], help="print the discriminant polynomial P_n")
    pn.add_argument("--n", type=int, required=True)
    pn.add_argument("--check-parity", action="store_true")
    pn.set_defaults(run=_run_pn)

    kronecker = sub.add_parser(
        "kronecker", parents=[common], help="test for a product of cyclotomic polynomials"
    )
    kronecker.add_argument("--poly", required=True)
    kronecker.set_defaults(run=_run_kronecker)

    classify = sub.add_parser(
        "classify", parents=[common], help="classify the real behavior of one parameter"
    )
    classify.add_argument("--c", required=True, help='rational "p/q" or "minpoly@[lo,hi]"')
    classify.set_defaults(run=_run_classify)

    multiplier = sub.add_parser(
        "multiplier", parents=[common], help="verify a cycle and print its multiplier"
    )
    multiplier.add_argument("--c", required=True)
    multiplier.add_argument("--period", type=int, required=True)
    multiplier.add_argument("--cycle-poly", required=True)
    multiplier.set_defaults(run=_run_multiplier)

    totally_real = sub.add_parser(
        "totally-real", parents=[common], help="test whether all roots are real"
    )
    totally_real.add_argument("--poly", required=True)
    totally_real.set_defaults(run=_run_totally_real)

    isolate = sub.add_parser(
        "isolate", parents=[common], help="print isolating intervals for the real roots"
    )
    isolate.add_argument("--poly", required=True)
    isolate.set_defaults(run=_run_isolate)
    return parser


# Flags whose values may start with '-' (negative rationals, polynomials);
# merging them into --flag=value form keeps argparse from eating the value.
_VALUE_FLAGS = frozenset(
    {"--c", "--poly", "--cycle-poly", "--n", "--nmax", "--period", "--precision"}
)


def _normalize_argv(argv) -> list:
    out = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
        else:
            out.append(token)
            i += 1
    return out


def cli_main(argv=None) -> int:
    """Entry point; returns 0 (verified), 1 (verification failed), or 2 (usage)."""
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_normalize_argv(list(argv)))
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    if not hasattr(args, "json"):
        args.json = False
    if not hasattr(args, "quiet"):
        args.quiet = False
    try:
        return args.run(args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _VERIFICATION_ERRORS as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    raise SystemExit(cli_main())


if __name__ == "__main__":
    main()
