"""Exact real algebraic numbers and totally-real tests.

A ``RealAlgebraic`` is a primitive integer polynomial (its minimal
polynomial, irreducibility supplied by the caller) together with a rational
interval isolating exactly one of its real roots. All queries reduce to
Sturm counts and exact rational evaluation; nothing is approximated unless
explicitly asked for through ``approx``.

There is deliberately no field arithmetic here: the classification
pipelines only ever need linear maps of a single value (``affine_transform``)
and signs of integer polynomials at a value (``sign_at``).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polyring import (
    IntegerPoly,
    ParabkitError,
    Rat,
    RationalInterval,
    RationalPoly,
    cauchy_bound,
    content_and_primitive,
    format_poly,
    squarefree_part,
    sturm_count,
)

__all__ = [
    "NotIsolatingError",
    "NotSquarefreeError",
    "ZeroScaleError",
    "RealAlgebraic",
    "make_real_algebraic",
    "from_rational",
    "is_totally_real",
    "all_conjugates_in",
    "affine_transform",
    "sign_at",
]


class NotIsolatingError(ParabkitError):
    pass


class NotSquarefreeError(ParabkitError):
    pass


class ZeroScaleError(ParabkitError):
    pass


_REFINE_CAP = 4096


def _ensure_squarefree(p: IntegerPoly) -> None:
    if p.is_zero:
        raise NotSquarefreeError("the zero polynomial is not squarefree")
    if p.degree >= 1 and squarefree_part(p).degree != p.degree:
        raise NotSquarefreeError(f"{p} has a repeated root")


@dataclass(frozen=True, slots=True, eq=False)
class RealAlgebraic:
    """One real root of an integer polynomial, pinned by an interval.

    Build through make_real_algebraic or from_rational; the constructor does
    not validate. The isolation interval is kept either degenerate (a known
    rational value) or open with endpoints that are not roots of minpoly.
    """

    minpoly: IntegerPoly
    isolation: RationalInterval

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    @property
    def is_rational(self) -> bool:
        return self.isolation.is_point or self.minpoly.degree == 1

    def to_rational(self) -> Fraction:
        if self.isolation.is_point:
            return self.isolation.lo
        if self.minpoly.degree == 1:
            return Fraction(-self.minpoly.coeff(0), self.minpoly.coeff(1))
        raise ParabkitError(f"{self} is not rational")

    def refined(self, max_width: Fraction) -> "RealAlgebraic":
        """Same number with isolation width at most max_width."""
        iv = self.isolation
        if iv.is_point:
            return self
        max_width = Fraction(max_width)
        steps = 0
        while iv.width > max_width:
            steps += 1
            if steps > _REFINE_CAP:
                raise ParabkitError("isolation refinement did not converge")
            mid = iv.midpoint
            if self.minpoly.evaluate(mid) == 0:
                iv = RationalInterval(mid, mid)
                break
            half = RationalInterval(iv.lo, mid, True, True)
            if sturm_count(self.minpoly, half) == 1:
                iv = half
            else:
                iv = RationalInterval(mid, iv.hi, True, True)
        return RealAlgebraic(self.minpoly, iv)

    def approx(self, digits: int = 12) -> Fraction:
        """Rational approximation within 10**-digits of the true value."""
        return self.refined(Fraction(1, 10**digits)).isolation.midpoint

    def _compare_rational(self, q: Rat) -> int:
        q = Fraction(q)
        if self.is_rational:
            v = self.to_rational()
            return (v > q) - (v < q)
        if self.minpoly.evaluate(q) == 0 and self.isolation.contains(q):
            return 0
        iv = self.isolation
        steps = 0
        while iv.contains(q):
            steps += 1
            if steps > _REFINE_CAP:
                raise ParabkitError("comparison did not converge")
            iv = RealAlgebraic(self.minpoly, iv).refined(iv.width / 2).isolation
            if iv.is_point:
                v = iv.lo
                return (v > q) - (v < q)
        return 1 if iv.lo >= q else -1

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self._compare_rational(other) == 0
        if not isinstance(other, RealAlgebraic):
            return NotImplemented
        if self.minpoly != other.minpoly:
            return False
        shared = self.isolation.intersect(other.isolation)
        if shared is None:
            return False
        return sturm_count(self.minpoly, shared) == 1

    def __hash__(self) -> int:
        return hash(self.minpoly.coeffs)

    def __lt__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self._compare_rational(other) < 0
        if not isinstance(other, RealAlgebraic):
            return NotImplemented
        if self == other:
            return False
        a, b = self, other
        steps = 0
        while a.isolation.intersect(b.isolation) is not None:
            steps += 1
            if steps > _REFINE_CAP:
                raise ParabkitError("ordering did not converge")
            a = a.refined(a.isolation.width / 2) if not a.isolation.is_point else a
            b = b.refined(b.isolation.width / 2) if not b.isolation.is_point else b
            if a.isolation.is_point and b.isolation.is_point:
                break
        return (a.isolation.lo, a.isolation.hi) < (b.isolation.lo, b.isolation.hi)

    def __le__(self, other) -> bool:
        return self == other or self < other

    def __gt__(self, other) -> bool:
        return not self <= other

    def __ge__(self, other) -> bool:
        return not self < other

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.to_rational())
        iv = self.isolation
        return f"{format_poly(self.minpoly, 'x')}@[{iv.lo},{iv.hi}]"

    def __repr__(self) -> str:
        return f"RealAlgebraic({self})"


def make_real_algebraic(p: IntegerPoly, interval: RationalInterval) -> RealAlgebraic:
    """Validated constructor: p squarefree, interval isolating exactly one root.

    The stored polynomial is the primitive part with positive leading
    coefficient; the interval is refined to width at most 1. Irreducibility
    of p is a caller-supplied precondition (there is no factorization engine
    here); every polynomial the pipelines construct has degree at most 2,
    where squarefree plus no rational root settles it.
    """
    if isinstance(p, RationalPoly):
        _, p = content_and_primitive(p)
    if p.is_zero:
        raise NotSquarefreeError("the zero polynomial isolates nothing")
    _ensure_squarefree(p)
    p = p.primitive()
    hits = sturm_count(p, interval)
    if hits != 1:
        raise NotIsolatingError(f"{interval} contains {hits} roots of {p}, expected 1")
    # pin rational endpoint roots to a degenerate interval
    for endpoint in (interval.lo, interval.hi):
        if interval.contains(endpoint) and p.evaluate(endpoint) == 0:
            return RealAlgebraic(p, RationalInterval(endpoint, endpoint))
    if p.degree == 1:
        root = Fraction(-p.coeff(0), p.coeff(1))
        return RealAlgebraic(p, RationalInterval(root, root))
    value = RealAlgebraic(p, RationalInterval(interval.lo, interval.hi, True, True))
    return value.refined(Fraction(1))


def from_rational(q: Rat) -> RealAlgebraic:
    """Exact rational embedded as a RealAlgebraic.

    >>> str(from_rational(Fraction(-7, 4)))
    '-7/4'
    """
    q = Fraction(q)
    p = IntegerPoly((-q.numerator, q.denominator))
    return RealAlgebraic(p, RationalInterval(q, q))


def is_totally_real(p: IntegerPoly) -> bool:
    """True when every root of p is real: deg p distinct real roots.

    >>> is_totally_real(IntegerPoly((41, 52, 16)))
    True
    >>> is_totally_real(IntegerPoly((1, 0, 1)))
    False
    """
    _ensure_squarefree(p)
    if p.degree < 1:
        raise ParabkitError("totally-real test needs degree >= 1")
    bound = cauchy_bound(p)
    return sturm_count(p, RationalInterval(-bound, bound)) == p.degree


def all_conjugates_in(p: IntegerPoly, interval: RationalInterval) -> bool:
    """True when p is totally real and every root lies in the interval."""
    _ensure_squarefree(p)
    if p.degree < 1:
        raise ParabkitError("conjugate location needs degree >= 1")
    return is_totally_real(p) and sturm_count(p, interval) == p.degree


def affine_transform(alpha: RealAlgebraic, s: Rat, t: Rat) -> RealAlgebraic:
    """The number s*alpha + t, with minpoly from the substitution x -> (x-t)/s."""
    s, t = Fraction(s), Fraction(t)
    if s == 0:
        raise ZeroScaleError("scale factor must be nonzero")
    if alpha.is_rational:
        return from_rational(s * alpha.to_rational() + t)
    d = alpha.minpoly.degree
    inner = RationalPoly((-t / s, 1 / s))  # (x - t)/s
    moved = alpha.minpoly.to_rational().compose(inner) * s**d
    _, prim = content_and_primitive(moved)
    iv = alpha.isolation
    lo, hi = s * iv.lo + t, s * iv.hi + t
    lo_s, hi_s = iv.lo_strict, iv.hi_strict
    if s < 0:
        lo, hi = hi, lo
        lo_s, hi_s = hi_s, lo_s
    return make_real_algebraic(prim, RationalInterval(lo, hi, lo_s, hi_s))


def sign_at(p: IntegerPoly, alpha: RealAlgebraic) -> int:
    """Exact sign of p(alpha): -1, 0, or +1.

    Zero is decided by divisibility (minpoly | p, using irreducibility);
    otherwise the isolating interval is bisected until p has no root inside,
    at which point the sign at any interior rational is the answer.
    """
    if p.is_zero:
        return 0
    if alpha.is_rational:
        v = p.to_rational().evaluate(alpha.to_rational())
        return (v > 0) - (v < 0)
    r = p.to_rational()
    if r.degree >= alpha.minpoly.degree:
        _, r = r.divmod_poly(alpha.minpoly.to_rational())
        if r.is_zero:
            return 0
    iv = alpha.isolation
    value = RealAlgebraic(alpha.minpoly, iv)
    for _ in range(_REFINE_CAP):
        if sturm_count(r, iv) == 0:
            v = r.evaluate(iv.midpoint)
            return (v > 0) - (v < 0)
        value = value.refined(iv.width / 2)
        iv = value.isolation
        if iv.is_point:
            v = r.evaluate(iv.lo)
            return (v > 0) - (v < 0)
    raise ParabkitError("sign refinement did not converge")
