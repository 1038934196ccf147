"""Shared property-check routines used by the module tests and the acceptance gate.

Each checker raises AssertionError on the first violation.  Family sizes are
parameters so the acceptance tests can run the identical code at full strength
without duplicating it.
"""

from __future__ import annotations

import random
from fractions import Fraction

import mpmath

from parabkit.cyclotomic import cyclotomic_poly, euler_phi, trace_polynomial
from parabkit.dynamics import cycle_multiplier, discriminant_Pn, dynatomic_poly, period_poly
from parabkit.polyring import (
    IntegerPoly,
    RationalInterval,
    RationalPoly,
    cauchy_bound,
    discriminant,
    format_poly,
    parse_poly,
    resultant,
    squarefree_part,
    sturm_count,
)

PAPER_CYCLES = (
    (Fraction(1, 4), IntegerPoly((-1, 2)), 1, Fraction(1)),
    (Fraction(-3, 4), IntegerPoly((1, 2)), 1, Fraction(-1)),
    (Fraction(-5, 4), IntegerPoly((-1, 4, 4)), 2, Fraction(-1)),
    (Fraction(-7, 4), IntegerPoly((-1, -18, 4, 8)), 3, Fraction(1)),
)


def random_integer_poly(rng: random.Random, max_degree: int = 5, bound: int = 20) -> IntegerPoly:
    degree = rng.randint(1, max_degree)
    coeffs = [rng.randint(-bound, bound) for _ in range(degree)]
    lead = 0
    while lead == 0:
        lead = rng.randint(-bound, bound)
    return IntegerPoly(tuple(coeffs + [lead]))


def random_rational_poly(rng: random.Random, max_degree: int = 6, bound: int = 30) -> RationalPoly:
    degree = rng.randint(0, max_degree)
    coeffs = [Fraction(rng.randint(-bound, bound), rng.randint(1, 12)) for _ in range(degree + 1)]
    return RationalPoly(tuple(coeffs))


def check_cyclotomic_product(upto: int = 100) -> None:
    # prod over d | n of Phi_d equals x^n - 1
    for n in range(1, upto + 1):
        prod = RationalPoly.one()
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic_poly(d).to_rational()
        expected = [Fraction(0)] * (n + 1)
        expected[0] = Fraction(-1)
        expected[n] = Fraction(1)
        assert prod == RationalPoly(tuple(expected)), n


def check_trace_identity(upto: int = 50) -> None:
    # Phi_n(x) = x^(phi(n)/2) T_n(x + 1/x) for n >= 3; at n = 1, 2 the square
    # of Phi_n satisfies the same shape.  Checking degree+1 points proves the
    # polynomial identity exactly.
    for n in range(3, upto + 1):
        phi = cyclotomic_poly(n).to_rational()
        tn = trace_polynomial(n).to_rational()
        m = euler_phi(n) // 2
        assert phi.degree == 2 * m, n
        for k in range(1, 2 * m + 2):
            t = Fraction(k)
            assert phi.evaluate(t) == t**m * tn.evaluate(t + 1 / t), (n, k)
    for n in (1, 2):
        phi = cyclotomic_poly(n).to_rational()
        tn = trace_polynomial(n).to_rational()
        for k in range(1, 4):
            t = Fraction(k)
            assert phi.evaluate(t) ** 2 == t * tn.evaluate(t + 1 / t), (n, k)


def _numeric_roots(p: IntegerPoly) -> list:
    coeffs = [mpmath.mpf(a) for a in reversed(p.coeffs)]
    return mpmath.polyroots(coeffs, maxsteps=200, extraprec=160)


def check_resultant_numeric(seed: int = 2026, cases: int = 30, tol: float = 1e-6) -> float:
    """Exact resultants and discriminants against root-product numerics."""
    rng = random.Random(seed)
    worst = 0.0
    done = 0
    with mpmath.workdps(50):
        while done < cases:
            p = random_integer_poly(rng, 5, 12)
            q = random_integer_poly(rng, 5, 12)
            res = resultant(p.to_rational(), q.to_rational())
            if res == 0:
                continue
            acc = mpmath.mpc(1)
            for root in _numeric_roots(p):
                acc *= mpmath.polyval([mpmath.mpf(a) for a in reversed(q.coeffs)], root)
            approx = mpmath.mpf(p.leading) ** q.degree * acc
            exact = mpmath.mpf(res.numerator) / res.denominator
            rel = abs(approx - exact) / max(1, abs(exact))
            assert rel < tol, (p.coeffs, q.coeffs, float(rel))
            worst = max(worst, float(rel))

            disc = discriminant(p.to_rational())
            if disc != 0:
                roots = _numeric_roots(p)
                acc = mpmath.mpc(1)
                for i in range(len(roots)):
                    for j in range(i + 1, len(roots)):
                        acc *= (roots[i] - roots[j]) ** 2
                approx = mpmath.mpf(p.leading) ** (2 * p.degree - 2) * acc
                exact = mpmath.mpf(disc.numerator) / disc.denominator
                rel = abs(approx - exact) / max(1, abs(exact))
                assert rel < tol, (p.coeffs, float(rel))
                worst = max(worst, float(rel))
            done += 1
    return worst


def check_sturm_numeric(seed: int = 7, cases: int = 40) -> None:
    """Sturm root counts against mpmath root classification."""
    rng = random.Random(seed)
    done = 0
    while done < cases:
        p = random_integer_poly(rng, 6, 15)
        sf = squarefree_part(p.to_rational())
        if sf.degree < 1:
            continue
        bound = cauchy_bound(sf) + 1
        exact = sturm_count(sf, RationalInterval(-bound, bound))
        with mpmath.workdps(40):
            coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(sf.coeffs)]
            roots = mpmath.polyroots(coeffs, maxsteps=300, extraprec=200)
            numeric = sum(1 for r in roots if abs(mpmath.im(r)) < mpmath.mpf("1e-12") * (1 + abs(r)))
        assert exact == numeric, (p.coeffs, exact, numeric)
        done += 1


def check_sturm_constructed(seed: int = 11, cases: int = 20) -> None:
    """Root counts on products of known linear and complex quadratic factors."""
    rng = random.Random(seed)
    for _ in range(cases):
        real_roots = rng.sample(range(-12, 13), rng.randint(0, 4))
        p = RationalPoly.one()
        for r in real_roots:
            p = p * RationalPoly((Fraction(-r), Fraction(1)))
        for _ in range(rng.randint(0, 2)):
            a = rng.randint(-6, 6)
            b = rng.randint(a * a // 4 + 1, a * a // 4 + 20)  # forces a^2 - 4b < 0
            p = p * RationalPoly((Fraction(b), Fraction(a), Fraction(1)))
        if p.degree < 1:
            continue
        bound = cauchy_bound(p) + 1
        assert sturm_count(p, RationalInterval(-bound, bound)) == len(real_roots), (
            p.coeffs,
            real_roots,
        )


def check_parser_roundtrip(seed: int = 5, cases: int = 60) -> None:
    rng = random.Random(seed)
    variables = ("x", "b", "z")
    for i in range(cases):
        p = random_rational_poly(rng)
        var = variables[i % len(variables)]
        assert parse_poly(format_poly(p, var), var=var) == p, p.coeffs


def check_subres_vs_interp(upto: int = 4) -> None:
    for n in range(1, upto + 1):
        assert discriminant_Pn(n, method="interpolate") == discriminant_Pn(n), n


def check_dynatomic_product(nmax: int = 6, seed: int = 7, trials: int = 3) -> None:
    rng = random.Random(seed)
    for _ in range(trials):
        c = Fraction(rng.randint(-8, 8), rng.randint(1, 5))
        for n in range(1, nmax + 1):
            prod = RationalPoly.one()
            for d in range(1, n + 1):
                if n % d == 0:
                    prod = prod * dynatomic_poly(d, c)
            assert prod == period_poly(n).evaluate_at_c(c), (c, n)


def check_multiplier_numeric(tol: float = 1e-9) -> float:
    """Exact cycle multipliers against products of 2 z_i over numeric roots."""
    worst = 0.0
    with mpmath.workdps(40):
        for _, g, n, lam in PAPER_CYCLES:
            assert cycle_multiplier(g, n) == lam
            acc = mpmath.mpc(1)
            for root in _numeric_roots(g):
                acc *= 2 * root
            exact = mpmath.mpf(lam.numerator) / lam.denominator
            rel = abs(acc - exact) / max(1, abs(exact))
            assert rel < tol, (g.coeffs, float(rel))
            worst = max(worst, float(rel))
    return worst
