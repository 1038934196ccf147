"""Real algebraic numbers: construction, ordering, conjugates, transforms."""

from fractions import Fraction as F

import mpmath
import pytest

from parabkit.algebraic import (
    NotIsolatingError,
    NotSquarefreeError,
    ZeroScaleError,
    affine_transform,
    all_conjugates_in,
    from_rational,
    is_totally_real,
    make_real_algebraic,
    sign_at,
)
from parabkit.polyring import IntegerPoly, RationalInterval, isolate_real_roots

SQRT2_POLY = IntegerPoly((-2, 0, 1))
GOLDEN_POLY = IntegerPoly((-1, 1, 1))  # roots (-1 +- sqrt5)/2
CANDIDATE_POLY = IntegerPoly((41, 52, 16))  # roots (-13 +- sqrt5)/8


def _root(p, index):
    return make_real_algebraic(p, isolate_real_roots(p)[index])


def test_construction_from_isolating_interval():
    alpha = _root(SQRT2_POLY, 1)
    assert not alpha.is_rational
    assert alpha.degree == 2
    assert alpha.minpoly == SQRT2_POLY
    assert alpha.isolation.contains(alpha.approx(30))


def test_construction_rejects_bad_intervals():
    with pytest.raises(NotIsolatingError):
        make_real_algebraic(SQRT2_POLY, RationalInterval(F(-3), F(3)))  # two roots
    with pytest.raises(NotIsolatingError):
        make_real_algebraic(SQRT2_POLY, RationalInterval(F(3), F(4)))  # no roots


def test_construction_rejects_repeated_roots():
    with pytest.raises(NotSquarefreeError):
        make_real_algebraic(IntegerPoly((1, -2, 1)), RationalInterval(F(0), F(2)))


def test_degree_one_input_collapses_to_rational():
    alpha = make_real_algebraic(IntegerPoly((7, 4)), RationalInterval(F(-2), F(-1)))
    assert alpha.is_rational and alpha.to_rational() == F(-7, 4)


def test_from_rational():
    alpha = from_rational(F(-7, 4))
    assert alpha.is_rational and alpha.to_rational() == F(-7, 4)
    assert alpha.minpoly == IntegerPoly((7, 4))
    assert alpha.degree == 1
    assert str(alpha) == "-7/4"
    assert str(from_rational(3)) == "3"


def test_equality_is_semantic():
    sqrt2_a = _root(SQRT2_POLY, 1)
    sqrt2_b = make_real_algebraic(SQRT2_POLY, RationalInterval(F(1), F(2)))
    assert sqrt2_a == sqrt2_b
    assert hash(sqrt2_a) == hash(sqrt2_b)
    assert sqrt2_a != _root(SQRT2_POLY, 0)
    assert from_rational(F(1, 2)) == from_rational(F(2, 4))


def test_ordering():
    neg_sqrt2, sqrt2 = _root(SQRT2_POLY, 0), _root(SQRT2_POLY, 1)
    golden = _root(GOLDEN_POLY, 1)
    assert neg_sqrt2 < golden < sqrt2
    assert golden < from_rational(F(2, 3))
    assert from_rational(F(3, 5)) < golden
    assert sorted([sqrt2, golden, neg_sqrt2]) == [neg_sqrt2, golden, sqrt2]


def test_approx_accuracy():
    sqrt2 = _root(SQRT2_POLY, 1)
    approx = sqrt2.approx(25)
    with mpmath.workdps(40):
        err = abs(mpmath.mpf(approx.numerator) / approx.denominator - mpmath.sqrt(2))
        assert err < mpmath.mpf(10) ** -24


def test_refined_preserves_identity():
    sqrt2 = _root(SQRT2_POLY, 1)
    tight = sqrt2.refined(F(1, 10**12))
    assert tight == sqrt2
    assert tight.isolation.width <= F(1, 10**12)


def test_str_forms():
    assert str(_root(SQRT2_POLY, 1)).startswith("x^2-2@[")
    assert str(_root(CANDIDATE_POLY, 0)).startswith("16x^2+52x+41@[")


def test_is_totally_real():
    assert is_totally_real(SQRT2_POLY)
    assert is_totally_real(CANDIDATE_POLY)
    assert not is_totally_real(IntegerPoly((1, 0, 1)))  # x^2+1
    assert not is_totally_real(IntegerPoly((-2, 0, 0, 1)))  # x^3-2
    from parabkit.cyclotomic import trace_polynomial

    assert is_totally_real(trace_polynomial(7))
    with pytest.raises(NotSquarefreeError):
        is_totally_real(IntegerPoly((1, -2, 1)))


def test_all_conjugates_in():
    assert all_conjugates_in(GOLDEN_POLY, RationalInterval(F(-2), F(1)))
    assert not all_conjugates_in(GOLDEN_POLY, RationalInterval(F(0), F(2)))
    assert all_conjugates_in(CANDIDATE_POLY, RationalInterval(F(-2), F(-5, 4)))
    assert not all_conjugates_in(CANDIDATE_POLY, RationalInterval(F(-2), F(-3, 2)))
    # complex conjugates disqualify regardless of the window
    assert not all_conjugates_in(IntegerPoly((1, 0, 1)), RationalInterval(F(-9), F(9)))


def test_affine_transform_rational():
    alpha = from_rational(F(-7, 4))
    image = affine_transform(alpha, F(4), F(6))  # b = 4c + 6
    assert image.is_rational and image.to_rational() == F(-1)


def test_affine_transform_quadratic_and_inverse():
    golden = _root(GOLDEN_POLY, 1)
    c = affine_transform(golden, F(1, 4), F(-3, 2))  # c = (b - 6)/4
    assert c.minpoly == CANDIDATE_POLY
    back = affine_transform(c, F(4), F(6))
    assert back == golden
    with pytest.raises(ZeroScaleError):
        affine_transform(golden, F(0), F(1))


def test_sign_at():
    sqrt2 = _root(SQRT2_POLY, 1)
    assert sign_at(SQRT2_POLY, sqrt2) == 0
    assert sign_at(IntegerPoly((-2, 1)), sqrt2) == -1  # x - 2 < 0 at sqrt2
    assert sign_at(IntegerPoly((0, 1)), sqrt2) == 1
    assert sign_at(IntegerPoly((-3, 0, 1)), sqrt2) == -1  # x^2 - 3 < 0 at sqrt2
    assert sign_at(IntegerPoly((5,)), sqrt2) == 1
    assert sign_at(IntegerPoly(()), sqrt2) == 0


def test_sign_at_rational_point():
    half = from_rational(F(1, 2))
    assert sign_at(IntegerPoly((-1, 2)), half) == 0
    assert sign_at(IntegerPoly((-1, 4)), half) == 1


def test_doctests():
    import doctest

    from parabkit import algebraic

    failures, _ = doctest.testmod(algebraic)
    assert failures == 0
