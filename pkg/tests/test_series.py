from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from betamoments.closed_forms import closed_forms
from betamoments.exact import catalan
from betamoments.moments import BetaParams, MomentSpec, moment_sequence, shift_basepoint
from betamoments.series import PowerSeries, SeriesError, gf_of_moments, gf_param_shift, substitute_shift

H = F(1, 2)
x = sympy.symbols("x")


def sympy_coeffs(expr, order):
    s = sympy.series(expr, x, 0, order + 1).removeO()
    return [F(str(s.coeff(x, n))) for n in range(order + 1)]


def test_sqrt_and_friends():
    r = PowerSeries.polynomial([1, -4], 10).sqrt()
    assert list(r)[:5] == [1, -2, -2, -4, -10]
    assert list(PowerSeries.polynomial([1, -1], 8).reciprocal()) == [1] * 9
    sq = r * r
    assert list(sq) == [1, -4] + [0] * 9


def test_sqrt_against_sympy():
    g = PowerSeries.polynomial([1, -6, 5], 15).sqrt()
    assert list(g) == sympy_coeffs(sympy.sqrt(1 - 6 * x + 5 * x**2), 15)


def test_power():
    g = PowerSeries.polynomial([1, -4], 12).power(F(-3, 2))
    assert list(g) == sympy_coeffs((1 - 4 * x) ** sympy.Rational(-3, 2), 12)


def test_sqrt_requires_unit_constant():
    with pytest.raises(SeriesError):
        PowerSeries.polynomial([4, 1], 5).sqrt()


def test_divide_by_x():
    g = PowerSeries.polynomial([0, 0, 3, 1], 6)
    assert list(g.divide_by_x(2))[:2] == [3, 1]
    with pytest.raises(SeriesError):
        PowerSeries.polynomial([1, 1], 4).divide_by_x(1)


def test_gf_of_moments():
    assert list(gf_of_moments(MomentSpec.of(0, H, H), 3)) == [1, 2, 6, 20]
    assert list(gf_of_moments(MomentSpec.of(0, H, 3 * H), 4)) == [catalan(n) for n in range(5)]
    assert list(gf_of_moments(BetaParams(H, H), 3)) == [1, H, F(3, 8), F(5, 16)]


def test_substitute_shift():
    cat = gf_of_moments(MomentSpec.of(0, H, 3 * H), 4)
    assert list(substitute_shift(cat, 1)) == [1, 2, 5, 15, 51]
    assert substitute_shift(cat, 0) == cat
    g = substitute_shift(gf_of_moments(MomentSpec.of(0, H, H), 12), F(-3, 4)).scale_variable(4)
    assert list(g) == sympy_coeffs(1 / sympy.sqrt((1 - 13 * x) * (1 + 3 * x)), 12)


def test_param_shift():
    g = gf_of_moments(BetaParams(H, H), 12)
    assert gf_param_shift(g, BetaParams(H, H), "alpha") == gf_of_moments(BetaParams(3 * H, H), 11)
    assert gf_param_shift(g, BetaParams(H, H), "beta") == gf_of_moments(BetaParams(H, 3 * H), 11)
    assert gf_param_shift(gf_of_moments(BetaParams(H, H), 1), BetaParams(H, H), "alpha").order == 0
    with pytest.raises(ValueError):
        gf_param_shift(g, BetaParams(H, H), "gamma")


def test_closed_form_examples():
    forms = closed_forms()
    assert list(forms["G(0,3/2,3/2)"].series(3)) == [1, 2, 5, 14]
    assert list(forms["bc-10"].series(3)) == [1, 3, 11, 45]


def test_catalan_3_self_consistency():
    a = closed_forms()["catalan-3"].series(25)
    one_plus_x = PowerSeries.polynomial([1, 1], 25)
    rhs = one_plus_x.reciprocal() + PowerSeries.x(25) * a * a * 2
    assert a == rhs


orders = st.integers(1, 20)
coeffs = st.lists(st.fractions(-5, 5, max_denominator=6), min_size=2, max_size=6)


@settings(max_examples=30, deadline=None)
@given(coeffs, st.fractions(-3, 3, max_denominator=5))
def test_substitute_shift_inverse(cs, c):
    g = PowerSeries.polynomial(cs, 15)
    assert substitute_shift(substitute_shift(g, c), -c) == g


@settings(max_examples=30, deadline=None)
@given(st.lists(st.fractions(-5, 5, max_denominator=6), min_size=1, max_size=5))
def test_sqrt_squares_back(tail):
    g = PowerSeries.polynomial([1] + tail, 15)
    r = g.sqrt()
    assert r * r == g


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 7).map(lambda k: F(k, 2)), st.integers(1, 7).map(lambda k: F(k, 2)),
       st.fractions(-2, 2, max_denominator=4), st.fractions(-2, 2, max_denominator=4))
def test_shift_linearity(a, b, c, d):
    spec = MomentSpec.of(c, a, b)
    seq = moment_sequence(spec, 16)
    lhs = PowerSeries(shift_basepoint(seq, d).terms)
    assert lhs == substitute_shift(PowerSeries(seq.terms), d - c)
