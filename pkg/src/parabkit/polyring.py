"""Exact univariate and bivariate polynomial arithmetic.

Coefficients are arbitrary-precision rationals or integers; nothing in this
module ever rounds. Three coefficient shapes appear:

* ``RationalPoly``: dense polynomial over ``fractions.Fraction``.
* ``IntegerPoly``: dense polynomial over ``int``; supports content and
  primitive-part extraction.
* ``IteratedMapPoly``: polynomial in ``z`` whose z-coefficients are
  ``IntegerPoly`` values in a parameter ``c``, i.e. an element of Z[c][z].

Coefficients are stored low-to-high (``coeffs[i]`` multiplies ``x**i``) and
rendered high-to-low. Resultants use the subresultant polynomial remainder
sequence, which stays in the coefficient ring with exact divisions only.
Real-root counting uses Sturm chains built from sign-corrected primitive
pseudo-remainders; root isolation is Sturm-guided bisection.
"""
from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence, Union

Rat = Union[int, Fraction]

__all__ = [
    "ParabkitError",
    "ZeroPolynomialError",
    "ConstantPolynomialError",
    "NotDivisibleError",
    "ParseError",
    "UnknownVariableError",
    "RationalPoly",
    "IntegerPoly",
    "IteratedMapPoly",
    "RationalInterval",
    "content_and_primitive",
    "resultant",
    "discriminant",
    "resultant_in_z",
    "discriminant_in_z",
    "sturm_count",
    "isolate_real_roots",
    "squarefree_part",
    "cauchy_bound",
    "parse_poly",
    "format_poly",
]


class ParabkitError(Exception):
    """Base class for every error raised by this package."""


class ZeroPolynomialError(ParabkitError):
    pass


class ConstantPolynomialError(ParabkitError):
    pass


class NotDivisibleError(ParabkitError):
    pass


class ParseError(ParabkitError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariableError(ParseError):
    pass


# ---------------------------------------------------------------------------
# univariate polynomials


@dataclass(frozen=True, slots=True)
class RationalPoly:
    """Dense univariate polynomial over Fraction, low-to-high coefficients."""

    coeffs: tuple = ()

    def __post_init__(self):
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def zero(cls) -> "RationalPoly":
        return cls(())

    @classmethod
    def one(cls) -> "RationalPoly":
        return cls((Fraction(1),))

    @classmethod
    def x(cls) -> "RationalPoly":
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def constant(cls, value: Rat) -> "RationalPoly":
        return cls((Fraction(value),))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPoly(out)

    def __neg__(self) -> "RationalPoly":
        return RationalPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "RationalPoly") -> "RationalPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, RationalPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RationalPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RationalPoly":
        if n < 0:
            raise ValueError("negative power")
        result = RationalPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, x: Rat) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "RationalPoly":
        return RationalPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def compose(self, other: "RationalPoly") -> "RationalPoly":
        """Return self(other(x))."""
        acc = RationalPoly.zero()
        for c in reversed(self.coeffs):
            acc = acc * other + RationalPoly.constant(c)
        return acc

    def divmod_poly(self, other: "RationalPoly"):
        """Euclidean division: return (q, r) with self = q*other + r, deg r < deg other."""
        if other.is_zero:
            raise ZeroPolynomialError("division by the zero polynomial")
        rem = list(self.coeffs)
        d = other.degree
        lc = other.leading
        quo = [Fraction(0)] * max(len(rem) - d, 0)
        while len(rem) - 1 >= d and rem:
            k = len(rem) - 1 - d
            t = rem[-1] / lc
            quo[k] = t
            for i, oc in enumerate(other.coeffs):
                rem[k + i] -= t * oc
            while rem and rem[-1] == 0:
                rem.pop()
        return RationalPoly(quo), RationalPoly(rem)

    def divide_exact(self, other: "RationalPoly") -> "RationalPoly":
        q, r = self.divmod_poly(other)
        if not r.is_zero:
            raise NotDivisibleError(f"{self} is not divisible by {other}")
        return q

    def monic(self) -> "RationalPoly":
        if self.is_zero:
            raise ZeroPolynomialError("cannot normalize the zero polynomial")
        return self * (1 / self.leading)

    def __str__(self) -> str:
        return format_poly(self, "x")


@dataclass(frozen=True, slots=True)
class IntegerPoly:
    """Dense univariate polynomial over int, low-to-high coefficients."""

    coeffs: tuple = ()

    def __post_init__(self):
        cs = [operator.index(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def zero(cls) -> "IntegerPoly":
        return cls(())

    @classmethod
    def one(cls) -> "IntegerPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "IntegerPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, value: int) -> "IntegerPoly":
        return cls((value,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def is_primitive(self) -> bool:
        return self.content() == 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "IntegerPoly") -> "IntegerPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntegerPoly(out)

    def __neg__(self) -> "IntegerPoly":
        return IntegerPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntegerPoly") -> "IntegerPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntegerPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, IntegerPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return IntegerPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntegerPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntegerPoly":
        if n < 0:
            raise ValueError("negative power")
        result = IntegerPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, x: Rat):
        acc = x - x  # 0 of the argument's type
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntegerPoly":
        return IntegerPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def compose(self, other: "IntegerPoly") -> "IntegerPoly":
        acc = IntegerPoly.zero()
        for c in reversed(self.coeffs):
            acc = acc * other + IntegerPoly.constant(c)
        return acc

    def content(self) -> int:
        """gcd of all coefficients, signed to match the leading coefficient."""
        if self.is_zero:
            raise ZeroPolynomialError("zero polynomial has no content")
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, abs(c))
        return g if self.leading > 0 else -g

    def primitive(self) -> "IntegerPoly":
        """Primitive part with positive leading coefficient."""
        g = self.content()
        return IntegerPoly(tuple(c // g for c in self.coeffs))

    def divide_exact(self, other) -> "IntegerPoly":
        """Exact division in Z[x]; raises NotDivisibleError otherwise."""
        if isinstance(other, int):
            if other == 0:
                raise ZeroPolynomialError("division by zero")
            out = []
            for c in self.coeffs:
                q, r = divmod(c, other)
                if r:
                    raise NotDivisibleError(f"coefficient {c} not divisible by {other}")
                out.append(q)
            return IntegerPoly(out)
        if other.is_zero:
            raise ZeroPolynomialError("division by the zero polynomial")
        rem = list(self.coeffs)
        d = other.degree
        lc = other.leading
        quo = [0] * max(len(rem) - d, 0)
        while rem and len(rem) - 1 >= d:
            t, r = divmod(rem[-1], lc)
            if r:
                raise NotDivisibleError(f"{self} is not divisible by {other}")
            quo[len(rem) - 1 - d] = t
            for i, oc in enumerate(other.coeffs):
                rem[len(rem) - 1 - d + i] -= t * oc
            while rem and rem[-1] == 0:
                rem.pop()
        if rem:
            raise NotDivisibleError(f"{self} is not divisible by {other}")
        return IntegerPoly(quo)

    def to_rational(self) -> RationalPoly:
        return RationalPoly(tuple(Fraction(c) for c in self.coeffs))

    def __str__(self) -> str:
        return format_poly(self, "x")


# ---------------------------------------------------------------------------
# intervals


@dataclass(frozen=True, slots=True)
class RationalInterval:
    """Interval with rational endpoints and per-endpoint strictness flags."""

    lo: Fraction
    hi: Fraction
    lo_strict: bool = False
    hi_strict: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"interval bounds out of order: {self.lo} > {self.hi}")
        if self.lo == self.hi and (self.lo_strict or self.hi_strict):
            raise ValueError("a degenerate interval cannot have strict endpoints")

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: Rat) -> bool:
        x = Fraction(x)
        if x < self.lo or (x == self.lo and self.lo_strict):
            return False
        if x > self.hi or (x == self.hi and self.hi_strict):
            return False
        return True

    def intersect(self, other: "RationalInterval"):
        """Intersection, or None when empty."""
        if self.lo > other.lo or (self.lo == other.lo and self.lo_strict):
            lo, lo_strict = self.lo, self.lo_strict
        else:
            lo, lo_strict = other.lo, other.lo_strict
        if self.hi < other.hi or (self.hi == other.hi and self.hi_strict):
            hi, hi_strict = self.hi, self.hi_strict
        else:
            hi, hi_strict = other.hi, other.hi_strict
        if lo > hi:
            return None
        if lo == hi and (lo_strict or hi_strict):
            return None
        return RationalInterval(lo, hi, lo_strict, hi_strict)

    def __str__(self) -> str:
        left = "(" if self.lo_strict else "["
        right = ")" if self.hi_strict else "]"
        return f"{left}{self.lo}, {self.hi}{right}"


# ---------------------------------------------------------------------------
# content and primitive part


def content_and_primitive(p: RationalPoly):
    """Split p = gamma * q with q a primitive IntegerPoly, lc(q) > 0.

    >>> gamma, q = content_and_primitive(RationalPoly((Fraction(-1, 4), 1, 1)))
    >>> gamma, q.coeffs
    (Fraction(1, 4), (-1, 4, 4))
    """
    if isinstance(p, IntegerPoly):
        p = p.to_rational()
    if p.is_zero:
        raise ZeroPolynomialError("zero polynomial has no content")
    den_lcm = 1
    for c in p.coeffs:
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    ints = [int(c * den_lcm) for c in p.coeffs]
    num_gcd = 0
    for c in ints:
        num_gcd = math.gcd(num_gcd, abs(c))
    if ints[-1] < 0:
        num_gcd = -num_gcd
    return Fraction(num_gcd, den_lcm), IntegerPoly(tuple(c // num_gcd for c in ints))


# ---------------------------------------------------------------------------
# subresultant PRS resultant, generic over the coefficient ring


class _Ring:
    __slots__ = ("zero", "one", "exact_div")

    def __init__(self, zero, one, exact_div: Callable):
        self.zero = zero
        self.one = one
        self.exact_div = exact_div


def _int_exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise NotDivisibleError(f"inexact division {a} / {b} inside PRS")
    return q


_INT_RING = _Ring(0, 1, _int_exact_div)
_IPOLY_RING = _Ring(IntegerPoly.zero(), IntegerPoly.one(), lambda a, b: a.divide_exact(b))


def _ring_pow(x, n: int, ring: _Ring):
    result = ring.one
    base = x
    while n:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result


def _prem(f: list, g: list, ring: _Ring) -> list:
    # Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f == q*g + result.
    dg = len(g) - 1
    d = g[-1]
    r = list(f)
    e = len(f) - len(g) + 1
    while r and len(r) - 1 >= dg:
        s = r[-1]
        shift = len(r) - 1 - dg
        new = [d * ri for ri in r]
        for i, gi in enumerate(g):
            new[shift + i] = new[shift + i] - s * gi
        new.pop()
        while new and new[-1] == ring.zero:
            new.pop()
        r = new
        e -= 1
    for _ in range(e):
        r = [d * ri for ri in r]
    return r


def _resultant_lists(A: list, B: list, ring: _Ring):
    """Resultant of two nonzero coefficient lists via the subresultant PRS."""
    sign = 1
    if len(A) < len(B):
        if ((len(A) - 1) * (len(B) - 1)) % 2 == 1:
            sign = -sign
        A, B = B, A
    if len(B) == 1:
        res = _ring_pow(B[0], len(A) - 1, ring)
        return res if sign == 1 else -res
    g = ring.one
    h = ring.one
    while True:
        dA, dB = len(A) - 1, len(B) - 1
        delta = dA - dB
        if (dA % 2 == 1) and (dB % 2 == 1):
            sign = -sign
        R = _prem(A, B, ring)
        if not R:
            return ring.zero  # common factor of positive degree
        denom = g * _ring_pow(h, delta, ring)
        A = B
        B = [ring.exact_div(ri, denom) for ri in R]
        g = A[-1]
        if delta == 0:
            pass  # h unchanged
        elif delta == 1:
            h = g
        else:
            h = ring.exact_div(_ring_pow(g, delta, ring), _ring_pow(h, delta - 1, ring))
        if len(B) == 1:
            break
    dA = len(A) - 1
    if dA == 1:
        res = B[0]
    else:
        res = ring.exact_div(_ring_pow(B[0], dA, ring), _ring_pow(h, dA - 1, ring))
    return res if sign == 1 else -res


def resultant(p, q):
    """res(p, q) = lc(p)^deg(q) * prod q(alpha_i) over the roots alpha_i of p.

    Accepts RationalPoly (Fraction result) or IntegerPoly (int result).

    >>> resultant(RationalPoly((-2, 1)), RationalPoly((-3, 1)))
    Fraction(-1, 1)
    """
    if isinstance(p, IntegerPoly) and isinstance(q, IntegerPoly):
        if p.is_zero or q.is_zero:
            raise ZeroPolynomialError("resultant of the zero polynomial")
        return _resultant_lists(list(p.coeffs), list(q.coeffs), _INT_RING)
    if isinstance(p, IntegerPoly):
        p = p.to_rational()
    if isinstance(q, IntegerPoly):
        q = q.to_rational()
    if p.is_zero or q.is_zero:
        raise ZeroPolynomialError("resultant of the zero polynomial")
    cp, ip = content_and_primitive(p)
    cq, iq = content_and_primitive(q)
    core = _resultant_lists(list(ip.coeffs), list(iq.coeffs), _INT_RING)
    return cp**iq.degree * cq**ip.degree * Fraction(core)


def discriminant(p):
    """disc(p) = (-1)^(d(d-1)/2) * res(p, p') / lc(p) with d = deg p."""
    if isinstance(p, IntegerPoly):
        if p.is_zero:
            raise ZeroPolynomialError("discriminant of the zero polynomial")
        if p.degree == 0:
            raise ConstantPolynomialError("discriminant needs degree >= 1")
        r = resultant(p, p.derivative())
        s = -1 if (p.degree * (p.degree - 1) // 2) % 2 else 1
        return _int_exact_div(s * r, p.leading)
    if p.is_zero:
        raise ZeroPolynomialError("discriminant of the zero polynomial")
    if p.degree == 0:
        raise ConstantPolynomialError("discriminant needs degree >= 1")
    r = resultant(p, p.derivative())
    s = -1 if (p.degree * (p.degree - 1) // 2) % 2 else 1
    return s * r / p.leading


def _sylvester_resultant(p: RationalPoly, q: RationalPoly) -> Fraction:
    # Independent O(n^3) oracle: determinant of the Sylvester matrix.
    if p.is_zero or q.is_zero:
        raise ZeroPolynomialError("resultant of the zero polynomial")
    m, n = p.degree, q.degree
    if m == 0:
        return p.coeffs[0] ** n
    if n == 0:
        return q.coeffs[0] ** m
    size = m + n
    rows = []
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    for i in range(n):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in pc] + [Fraction(0)] * (size - i - m - 1))
    for i in range(m):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in qc] + [Fraction(0)] * (size - i - n - 1))
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, size):
            factor = rows[r][col] * inv
            if factor:
                for cc in range(col, size):
                    rows[r][cc] -= factor * rows[col][cc]
    return det


# ---------------------------------------------------------------------------
# bivariate layer: polynomials in z over Z[c]


@dataclass(frozen=True, slots=True)
class IteratedMapPoly:
    """Polynomial in z whose z-coefficients are IntegerPoly values in c."""

    coeffs_in_z: tuple = ()

    def __post_init__(self):
        cs = []
        for c in self.coeffs_in_z:
            if isinstance(c, int):
                c = IntegerPoly.constant(c)
            cs.append(c)
        while cs and cs[-1].is_zero:
            cs.pop()
        object.__setattr__(self, "coeffs_in_z", tuple(cs))

    @classmethod
    def zero(cls) -> "IteratedMapPoly":
        return cls(())

    @classmethod
    def z(cls) -> "IteratedMapPoly":
        return cls((IntegerPoly.zero(), IntegerPoly.one()))

    @classmethod
    def c(cls) -> "IteratedMapPoly":
        return cls((IntegerPoly.x(),))

    @classmethod
    def constant(cls, value) -> "IteratedMapPoly":
        if isinstance(value, int):
            value = IntegerPoly.constant(value)
        return cls((value,))

    @property
    def degree_in_z(self) -> int:
        return len(self.coeffs_in_z) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs_in_z

    @property
    def leading_in_z(self) -> IntegerPoly:
        if not self.coeffs_in_z:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs_in_z[-1]

    def __add__(self, other: "IteratedMapPoly") -> "IteratedMapPoly":
        a, b = self.coeffs_in_z, other.coeffs_in_z
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return IteratedMapPoly(out)

    def __neg__(self) -> "IteratedMapPoly":
        return IteratedMapPoly(tuple(-c for c in self.coeffs_in_z))

    def __sub__(self, other: "IteratedMapPoly") -> "IteratedMapPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, IntegerPoly)):
            if isinstance(other, int):
                other = IntegerPoly.constant(other)
            return IteratedMapPoly(tuple(c * other for c in self.coeffs_in_z))
        if not isinstance(other, IteratedMapPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return IteratedMapPoly.zero()
        out = [IntegerPoly.zero()] * (len(self.coeffs_in_z) + len(other.coeffs_in_z) - 1)
        for i, a in enumerate(self.coeffs_in_z):
            if not a.is_zero:
                for j, b in enumerate(other.coeffs_in_z):
                    out[i + j] = out[i + j] + a * b
        return IteratedMapPoly(out)

    __rmul__ = __mul__

    def derivative_z(self) -> "IteratedMapPoly":
        return IteratedMapPoly(tuple(c * i for i, c in enumerate(self.coeffs_in_z) if i))

    def compose(self, other: "IteratedMapPoly") -> "IteratedMapPoly":
        """Substitute other for z: return self(other(z))."""
        acc = IteratedMapPoly.zero()
        for c in reversed(self.coeffs_in_z):
            acc = acc * other + IteratedMapPoly((c,))
        return acc

    def evaluate_at_c(self, value: Rat) -> RationalPoly:
        """Specialize the parameter c to an exact rational."""
        return RationalPoly(tuple(Fraction(p.evaluate(Fraction(value))) for p in self.coeffs_in_z))

    def evaluate_at_c_int(self, value: int) -> IntegerPoly:
        return IntegerPoly(tuple(p.evaluate(value) for p in self.coeffs_in_z))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree_in_z, -1, -1):
            ci = self.coeffs_in_z[i]
            if ci.is_zero:
                continue
            body = format_poly(ci, "c")
            if i == 0:
                parts.append(f"({body})")
            elif i == 1:
                parts.append(f"({body})*z")
            else:
                parts.append(f"({body})*z^{i}")
        return " + ".join(parts)


def resultant_in_z(P: IteratedMapPoly, Q: IteratedMapPoly) -> IntegerPoly:
    """Resultant with respect to z; the result is an IntegerPoly in c."""
    if P.is_zero or Q.is_zero:
        raise ZeroPolynomialError("resultant of the zero polynomial")
    return _resultant_lists(list(P.coeffs_in_z), list(Q.coeffs_in_z), _IPOLY_RING)


def _disc_sign(d: int) -> int:
    return -1 if (d * (d - 1) // 2) % 2 else 1


def _int_poly_discriminant(p: IntegerPoly) -> int:
    r = _resultant_lists(list(p.coeffs), list(p.derivative().coeffs), _INT_RING)
    return _int_exact_div(_disc_sign(p.degree) * r, p.leading)


def _resultant_in_z_interpolated(P: IteratedMapPoly, Q: IteratedMapPoly, bound: int) -> IntegerPoly:
    # Evaluate c at integer nodes, take exact integer resultants, interpolate.
    # Nodes where either leading z-coefficient vanishes are skipped: there the
    # specialized resultant would no longer equal the specialization.
    nodes = []
    values = []
    k = 0
    lcP, lcQ = P.leading_in_z, Q.leading_in_z
    while len(nodes) < bound + 1:
        if lcP.evaluate(k) != 0 and lcQ.evaluate(k) != 0:
            pk = P.evaluate_at_c_int(k)
            qk = Q.evaluate_at_c_int(k)
            nodes.append(k)
            values.append(_resultant_lists(list(pk.coeffs), list(qk.coeffs), _INT_RING))
        k += 1
    # Newton divided differences over exact rationals.
    dd = [Fraction(v) for v in values]
    n = len(nodes)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level])
    poly = RationalPoly.zero()
    for i in range(n - 1, -1, -1):
        poly = poly * RationalPoly((Fraction(-nodes[i]), Fraction(1))) + RationalPoly.constant(dd[i])
    for c in poly.coeffs:
        if c.denominator != 1:
            raise NotDivisibleError("interpolated resultant has a non-integer coefficient")
    return IntegerPoly(tuple(int(c) for c in poly.coeffs))


def discriminant_in_z(P: IteratedMapPoly, method: str = "subresultant", degree_bound=None) -> IntegerPoly:
    """Discriminant with respect to z, exact in Z[c].

    method "subresultant" runs the PRS over Z[c]; method "interpolate"
    evaluates c at degree_bound + 1 integer nodes and interpolates. The two
    are independent implementations and serve as mutual cross-checks.
    """
    d = P.degree_in_z
    if P.is_zero:
        raise ZeroPolynomialError("discriminant of the zero polynomial")
    if d < 1:
        raise ConstantPolynomialError("discriminant needs degree >= 1 in z")
    dP = P.derivative_z()
    if method == "subresultant":
        res = resultant_in_z(P, dP)
    elif method == "interpolate":
        if degree_bound is None:
            cdeg = max((c.degree for c in P.coeffs_in_z), default=0)
            cdeg_d = max((c.degree for c in dP.coeffs_in_z), default=0)
            degree_bound = (d - 1) * max(cdeg, 0) + d * max(cdeg_d, 0)
        res = _resultant_in_z_interpolated(P, dP, degree_bound)
    else:
        raise ValueError(f"unknown method {method!r}")
    signed = res if _disc_sign(d) == 1 else -res
    return signed.divide_exact(P.leading_in_z)


# ---------------------------------------------------------------------------
# Sturm chains, root counting, root isolation


def _int_primitive_keep_sign(cs: list) -> tuple:
    g = 0
    for c in cs:
        g = math.gcd(g, abs(c))
    if g in (0, 1):
        return tuple(cs)
    return tuple(c // g for c in cs)


@lru_cache(maxsize=512)
def _sturm_chain(coeffs: tuple) -> tuple:
    """Sturm chain of a squarefree integer polynomial, primitive at every step."""
    f0 = list(coeffs)
    f1 = [i * c for i, c in enumerate(f0)][1:]
    while f1 and f1[-1] == 0:
        f1.pop()
    chain = [_int_primitive_keep_sign(f0)]
    if not f1:
        return tuple(chain)
    chain.append(_int_primitive_keep_sign(f1))
    while len(chain[-1]) > 1:
        f, g = chain[-2], chain[-1]
        delta = len(f) - len(g)
        r = _prem(list(f), list(g), _INT_RING)
        if not r:
            break  # non-squarefree input; callers normalize first
        # _prem multiplies by lc(g)^(delta+1); flip when that factor is negative
        # so the entry stays a positive multiple of the true remainder, negated.
        if g[-1] < 0 and (delta + 1) % 2 == 1:
            r = [ri for ri in r]
        else:
            r = [-ri for ri in r]
        chain.append(_int_primitive_keep_sign(r))
    return tuple(chain)


def _sign_changes(chain: tuple, x: Fraction) -> int:
    signs = []
    for cs in chain:
        acc = Fraction(0)
        for c in reversed(cs):
            acc = acc * x + c
        if acc:
            signs.append(1 if acc > 0 else -1)
    flips = 0
    for a, b in zip(signs, signs[1:]):
        if a != b:
            flips += 1
    return flips


def squarefree_part(p) -> RationalPoly:
    """p / gcd(p, p'), monic.

    >>> squarefree_part(RationalPoly((0, 0, 0, 1))).coeffs
    (Fraction(0, 1), Fraction(1, 1))
    """
    if isinstance(p, IntegerPoly):
        p = p.to_rational()
    if p.is_zero:
        raise ZeroPolynomialError("squarefree part of the zero polynomial")
    if p.degree == 0:
        return RationalPoly.one()
    a, b = p, p.derivative()
    while not b.is_zero:
        _, r = a.divmod_poly(b)
        a, b = b, r
    g = a.monic()
    return p.divide_exact(g).monic()


def _squarefree_int_model(p) -> IntegerPoly:
    sf = squarefree_part(p)
    _, prim = content_and_primitive(sf)
    return prim


def cauchy_bound(p) -> Fraction:
    """B with every real root of p strictly inside (-B, B)."""
    if isinstance(p, IntegerPoly):
        p = p.to_rational()
    if p.is_zero:
        raise ZeroPolynomialError("root bound of the zero polynomial")
    if p.degree == 0:
        return Fraction(1)
    lead = abs(p.leading)
    top = max((abs(c) for c in p.coeffs[:-1]), default=Fraction(0))
    return Fraction(1) + top / lead


def _divide_out_root(q: IntegerPoly, r: Fraction) -> IntegerPoly:
    quo = q.to_rational().divide_exact(RationalPoly((-r, Fraction(1))))
    _, prim = content_and_primitive(quo)
    return prim


def _sturm_count_int(q: IntegerPoly, interval: RationalInterval) -> int:
    # q must be squarefree and primitive. Endpoints that are roots are divided
    # out first, so the classical open-interval sign-change theorem applies.
    if q.degree <= 0:
        return 0
    if interval.is_point:
        return 1 if q.evaluate(interval.lo) == 0 else 0
    total = 0
    for endpoint, strict in ((interval.lo, interval.lo_strict), (interval.hi, interval.hi_strict)):
        if q.degree > 0 and q.evaluate(endpoint) == 0:
            if not strict:
                total += 1
            q = _divide_out_root(q, endpoint)
    if q.degree <= 0:
        return total
    chain = _sturm_chain(q.coeffs)
    total += _sign_changes(chain, interval.lo) - _sign_changes(chain, interval.hi)
    return total


def sturm_count(p, interval: RationalInterval) -> int:
    """Number of distinct real roots of p in the interval.

    Works on the squarefree primitive model internally, so repeated roots are
    counted once; endpoint membership follows the strictness flags exactly.

    >>> sturm_count(RationalPoly((-2, 0, 1)), RationalInterval(0, 2))
    1
    """
    if isinstance(p, IntegerPoly):
        p = p.to_rational()
    if p.is_zero:
        raise ZeroPolynomialError("root counting needs a nonzero polynomial")
    return _sturm_count_int(_squarefree_int_model(p), interval)


def _count_open(q: IntegerPoly, lo: Fraction, hi: Fraction) -> int:
    return _sturm_count_int(q, RationalInterval(lo, hi, True, True))


_ISOLATION_WIDTH = Fraction(1, 4)


def isolate_real_roots(p):
    """Disjoint rational intervals, each isolating one real root of p.

    Rational roots found during bisection come back as degenerate point
    intervals; every open interval is refined to width <= 1/4. Intervals are
    returned in ascending root order.
    """
    if isinstance(p, IntegerPoly):
        p = p.to_rational()
    if p.is_zero:
        raise ZeroPolynomialError("cannot isolate roots of the zero polynomial")
    q = _squarefree_int_model(p)
    if q.degree <= 0:
        return ()
    bound = cauchy_bound(q)
    found = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        k = _count_open(q, lo, hi)
        if k == 0:
            continue
        if k == 1:
            found.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if q.evaluate(mid) == 0:
            found.append((mid, mid))
        stack.append((lo, mid))
        stack.append((mid, hi))
    intervals = []
    for lo, hi in found:
        if lo == hi:
            intervals.append(RationalInterval(lo, hi))
            continue
        while hi - lo > _ISOLATION_WIDTH:
            mid = (lo + hi) / 2
            if q.evaluate(mid) == 0:
                lo = hi = mid
                break
            if _count_open(q, lo, mid) == 1:
                hi = mid
            else:
                lo = mid
        if lo == hi:
            intervals.append(RationalInterval(lo, hi))
        else:
            intervals.append(RationalInterval(lo, hi, True, True))
    intervals.sort(key=lambda iv: (iv.lo, iv.hi))
    return tuple(intervals)


# ---------------------------------------------------------------------------
# text grammar
#
#   expr     := ('+'|'-')? term (('+'|'-') term)*
#   term     := factor ('*'? factor)*
#   factor   := base ('^' uint)?
#   base     := '(' expr ')' | rational | var
#   rational := uint ('/' uint)?
#   var      := single letter
#
# The optional leading sign extends the published grammar; without it the
# canonical rendering of polynomials with negative leading coefficient would
# not re-parse.

_MAX_EXPONENT = 4096


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        if self.pos >= len(self.text):
            return None, self.pos
        return self.text[self.pos], self.pos

    def take(self):
        ch, pos = self.peek()
        if ch is not None:
            self.pos += 1
        return ch, pos

    def take_uint(self):
        ch, pos = self.peek()
        if ch is None or not ch.isdigit():
            raise ParseError("expected a number", pos)
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return int(self.text[start : self.pos]), start


class _Parser:
    def __init__(self, text: str, var):
        self.toks = _Tokenizer(text)
        self.var = var

    def parse(self) -> RationalPoly:
        poly = self.parse_expr()
        ch, pos = self.toks.peek()
        if ch is not None:
            raise ParseError(f"unexpected {ch!r}", pos)
        return poly

    def parse_expr(self) -> RationalPoly:
        ch, _ = self.toks.peek()
        negate = False
        if ch in ("+", "-"):
            self.toks.take()
            negate = ch == "-"
        acc = self.parse_term()
        if negate:
            acc = -acc
        while True:
            ch, _ = self.toks.peek()
            if ch == "+":
                self.toks.take()
                acc = acc + self.parse_term()
            elif ch == "-":
                self.toks.take()
                acc = acc - self.parse_term()
            else:
                return acc

    def parse_term(self) -> RationalPoly:
        acc = self.parse_factor()
        while True:
            ch, _ = self.toks.peek()
            if ch == "*":
                self.toks.take()
                acc = acc * self.parse_factor()
            elif ch is not None and (ch.isdigit() or ch.isalpha() or ch == "("):
                acc = acc * self.parse_factor()
            else:
                return acc

    def parse_factor(self) -> RationalPoly:
        base = self.parse_base()
        ch, _ = self.toks.peek()
        if ch == "^":
            self.toks.take()
            exponent, pos = self.toks.take_uint()
            if exponent > _MAX_EXPONENT:
                raise ParseError(f"exponent {exponent} exceeds the cap {_MAX_EXPONENT}", pos)
            return base**exponent
        return base

    def parse_base(self) -> RationalPoly:
        ch, pos = self.toks.peek()
        if ch is None:
            raise ParseError("unexpected end of input", pos)
        if ch == "(":
            self.toks.take()
            inner = self.parse_expr()
            ch2, pos2 = self.toks.take()
            if ch2 != ")":
                raise ParseError("expected ')'", pos2)
            return inner
        if ch.isdigit():
            num, _ = self.toks.take_uint()
            ch2, _ = self.toks.peek()
            if ch2 == "/":
                self.toks.take()
                den, dpos = self.toks.take_uint()
                if den == 0:
                    raise ParseError("zero denominator", dpos)
                return RationalPoly.constant(Fraction(num, den))
            return RationalPoly.constant(num)
        if ch.isalpha():
            self.toks.take()
            if self.var is None:
                self.var = ch
            elif ch != self.var:
                raise UnknownVariableError(f"unknown variable {ch!r}, expected {self.var!r}", pos)
            return RationalPoly.x()
        raise ParseError(f"unexpected {ch!r}", pos)


def parse_poly(text: str, var=None) -> RationalPoly:
    """Parse polynomial text like "8z^3+4z^2-18z-1" or "(b-1)*(b+3)^3".

    When var is None the first letter encountered names the variable; any
    second letter raises UnknownVariableError.

    >>> parse_poly("8z^3+4z^2-18z-1", "z").coeffs
    (Fraction(-1, 1), Fraction(-18, 1), Fraction(4, 1), Fraction(8, 1))
    """
    return _Parser(text, var).parse()


def format_poly(p, var: str = "x") -> str:
    """Canonical descending-power rendering; parse_poly inverts it exactly."""
    if isinstance(p, IntegerPoly):
        coeffs = tuple(Fraction(c) for c in p.coeffs)
    else:
        coeffs = p.coeffs
    if not coeffs:
        return "0"
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if i == 0:
            body = str(mag)
        else:
            stem = var if i == 1 else f"{var}^{i}"
            body = stem if mag == 1 else f"{mag}{stem}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = (first_sign if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += sign + body
    return text
