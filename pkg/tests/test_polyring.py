"""Exact polynomial arithmetic, resultants, Sturm counts, isolation, parsing."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import helpers
from parabkit.polyring import (
    ConstantPolynomialError,
    IntegerPoly,
    NotDivisibleError,
    ParseError,
    RationalInterval,
    RationalPoly,
    UnknownVariableError,
    ZeroPolynomialError,
    cauchy_bound,
    content_and_primitive,
    discriminant,
    discriminant_in_z,
    format_poly,
    isolate_real_roots,
    parse_poly,
    resultant,
    squarefree_part,
    sturm_count,
)
from parabkit.polyring import _sylvester_resultant

rational = st.fractions(min_value=-30, max_value=30, max_denominator=12)
rational_polys = st.lists(rational, min_size=1, max_size=7).map(lambda cs: RationalPoly(tuple(cs)))
small_int_polys = st.lists(
    st.integers(min_value=-9, max_value=9), min_size=2, max_size=5
).map(lambda cs: IntegerPoly(tuple(cs)))


def test_normalization_strips_trailing_zeros():
    p = RationalPoly((F(1), F(2), F(0), F(0)))
    assert p.coeffs == (F(1), F(2))
    assert p.degree == 1
    assert RationalPoly((F(0), F(0))).is_zero
    assert RationalPoly.zero().degree == -1


def test_arithmetic_identities():
    p = parse_poly("x^3-2x+1")
    q = parse_poly("x^2+x")
    assert p + q - q == p
    assert p * RationalPoly.one() == p
    assert p * RationalPoly.zero() == RationalPoly.zero()
    assert (p * q).degree == p.degree + q.degree
    assert (p * q).evaluate(F(3, 2)) == p.evaluate(F(3, 2)) * q.evaluate(F(3, 2))


def test_compose_and_derivative():
    p = parse_poly("x^2+1")
    shift = parse_poly("x+1")
    assert p.compose(shift) == parse_poly("x^2+2x+2")
    # product rule on a fixed pair
    q = parse_poly("x^3-x")
    lhs = (p * q).derivative()
    rhs = p.derivative() * q + p * q.derivative()
    assert lhs == rhs


def test_divmod_and_divide_exact():
    p = parse_poly("x^3-1")
    quo, rem = p.divmod_poly(parse_poly("x-1"))
    assert quo == parse_poly("x^2+x+1") and rem.is_zero
    assert p.divide_exact(parse_poly("x-1")) == quo
    with pytest.raises(NotDivisibleError):
        p.divide_exact(parse_poly("x-2"))
    with pytest.raises(ZeroPolynomialError):
        p.divmod_poly(RationalPoly.zero())


def test_monic_and_leading():
    p = parse_poly("3x^2-6")
    assert p.monic() == parse_poly("x^2-2")
    assert p.leading == 3
    with pytest.raises(ZeroPolynomialError):
        RationalPoly.zero().monic()


def test_integer_poly_content_and_primitive():
    p = IntegerPoly((-4, 0, -6))
    assert p.content() == -2  # content carries the sign of the leading term
    assert p.primitive() == IntegerPoly((2, 0, 3))
    gamma, prim = content_and_primitive(parse_poly("4/3x^2-2/3"))
    assert gamma == F(2, 3) and prim == IntegerPoly((-1, 0, 2))
    assert prim.is_primitive and not prim.is_monic


def test_integer_poly_divide_exact():
    p = IntegerPoly((-1, 0, 1))
    q = IntegerPoly((1, 1))
    assert (p * q).divide_exact(q) == p
    with pytest.raises(NotDivisibleError):
        IntegerPoly((1, 1, 1)).divide_exact(IntegerPoly((1, 1)))


@given(p=rational_polys, q=rational_polys)
@settings(max_examples=60, deadline=None)
def test_product_division_roundtrip(p, q):
    if q.is_zero:
        return
    assert (p * q).divide_exact(q) == p


@given(p=small_int_polys, q=small_int_polys, r=small_int_polys)
@settings(max_examples=40, deadline=None)
def test_resultant_multiplicative_and_swap(p, q, r):
    pr, qr, rr = p.to_rational(), q.to_rational(), r.to_rational()
    if pr.degree < 1 or qr.degree < 1 or rr.degree < 1:
        return
    assert resultant(pr * qr, rr) == resultant(pr, rr) * resultant(qr, rr)
    sign = F(-1) ** (pr.degree * qr.degree)
    assert resultant(pr, qr) == sign * resultant(qr, pr)


@given(p=small_int_polys, q=small_int_polys)
@settings(max_examples=60, deadline=None)
def test_resultant_matches_sylvester(p, q):
    pr, qr = p.to_rational(), q.to_rational()
    if pr.degree < 1 or qr.degree < 1:
        return
    assert resultant(pr, qr) == _sylvester_resultant(pr, qr)


def test_resultant_numeric_oracle():
    helpers.check_resultant_numeric(cases=30, tol=1e-6)


def test_discriminant_known_values():
    # disc(x^2 + bx + c) = b^2 - 4c
    assert discriminant(parse_poly("x^2+3x+1")) == 5
    assert discriminant(parse_poly("x^2-2")) == 8
    assert discriminant(parse_poly("x^3-x")) == 4
    assert discriminant(parse_poly("(x-1)^2")) == 0
    with pytest.raises(ConstantPolynomialError):
        discriminant(parse_poly("5"))


def test_discriminant_in_z_matches_direct():
    # bivariate wrapper agrees with direct discriminants after specialization
    from parabkit.dynamics import iterate_map, period_poly

    pn = period_poly(2)
    direct = discriminant(pn.evaluate_at_c(F(-1, 3)))
    via_poly = discriminant_in_z(pn).to_rational().evaluate(F(-1, 3))
    assert via_poly == direct


def test_squarefree_part():
    p = parse_poly("(x-1)^2*(x+2)")
    sf = squarefree_part(p)
    assert sf.monic() == parse_poly("(x-1)(x+2)").monic()
    q = parse_poly("x^2-2")
    assert squarefree_part(q).monic() == q.monic()


def test_cauchy_bound_contains_roots():
    p = parse_poly("x^2-10x+1")
    bound = cauchy_bound(p)
    assert sturm_count(p, RationalInterval(-bound, bound)) == 2


def test_sturm_count_endpoints():
    p = parse_poly("x^2-1")
    assert sturm_count(p, RationalInterval(F(-1), F(1))) == 2  # closed endpoints count
    assert sturm_count(p, RationalInterval(F(-1), F(0))) == 1
    assert sturm_count(p, RationalInterval(F(1), F(1))) == 1
    assert sturm_count(p, RationalInterval(F(-1, 2), F(1, 2))) == 0
    assert sturm_count(parse_poly("x^2-2"), RationalInterval(F(0), F(2))) == 1


def test_sturm_vs_numeric_and_constructed():
    helpers.check_sturm_numeric(cases=40)
    helpers.check_sturm_constructed(cases=20)


def test_isolate_real_roots_invariants():
    p = parse_poly("x^4-5x^2+2")
    intervals = isolate_real_roots(p)
    assert len(intervals) == 4
    for prev, cur in zip(intervals, intervals[1:]):
        assert prev.hi <= cur.lo  # disjoint and ascending
    for iv in intervals:
        assert sturm_count(p, RationalInterval(iv.lo, iv.hi)) == 1
        assert iv.is_point or iv.width <= F(1, 4)


def test_isolate_rational_roots_become_points():
    intervals = isolate_real_roots(parse_poly("x^2-3x+2"))
    assert [(iv.lo, iv.is_point) for iv in intervals] == [(F(1), True), (F(2), True)]
    assert isolate_real_roots(parse_poly("x^2+1")) == ()


def test_isolate_accepts_integer_poly():
    intervals = isolate_real_roots(IntegerPoly((41, 52, 16)))
    assert len(intervals) == 2
    assert intervals[0].hi <= intervals[1].lo


def test_interval_semantics():
    iv = RationalInterval(F(0), F(1), lo_strict=True)
    assert not iv.contains(F(0)) and iv.contains(F(1))
    assert iv.width == 1 and iv.midpoint == F(1, 2)
    assert str(iv) == "(0, 1]"
    point = RationalInterval(F(1, 3), F(1, 3))
    assert point.is_point and str(point) == "[1/3, 1/3]"
    with pytest.raises(ValueError):
        RationalInterval(F(2), F(1))


def test_parse_poly_grammar():
    assert parse_poly("-b+1", var="b") == RationalPoly((F(1), F(-1)))
    assert parse_poly("(b-1)(b+3)^3", var="b") == parse_poly("(b-1)*(b+3)^3", var="b")
    assert format_poly(parse_poly("(b-1)(b+3)^3", var="b"), "b") == "b^4+8b^3+18b^2-27"
    assert parse_poly("z^2 + z - 1/4", var="z") == parse_poly("z^2+z-1/4", var="z")
    assert parse_poly("2^3") == RationalPoly((F(8),))


def test_parse_poly_errors():
    with pytest.raises(ParseError) as err:
        parse_poly("x++1")
    assert err.value.position >= 0
    with pytest.raises(UnknownVariableError):
        parse_poly("x+y")
    with pytest.raises(ParseError):
        parse_poly("3/0")
    with pytest.raises(ParseError):
        parse_poly("x^5000")
    with pytest.raises(ParseError):
        parse_poly("")


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_format_parse_roundtrip(data):
    coeffs = data.draw(st.lists(rational, min_size=1, max_size=7))
    var = data.draw(st.sampled_from(("x", "b", "z")))
    p = RationalPoly(tuple(coeffs))
    assert parse_poly(format_poly(p, var), var=var) == p


def test_parser_roundtrip_family():
    helpers.check_parser_roundtrip(cases=60)


def test_doctests():
    import doctest

    from parabkit import polyring

    failures, _ = doctest.testmod(polyring)
    assert failures == 0
