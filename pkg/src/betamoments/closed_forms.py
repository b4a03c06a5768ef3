"""Hand-transcribed closed-form generating functions for moment sequences.

Each entry builds an exact truncated series from radicals and rational
functions.  Forms with a power of x in the denominator are resolved by exact
division, so a transcription slip shows up as a ``SeriesError`` rather than as
silently wrong coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from .exact import as_rational
from .moments import BetaParams, MomentSpec, beta_moments, moments
from .series import PowerSeries, SeriesError, substitute_shift
from .transforms import ShiftRight, TransformSpec, apply

__all__ = [
    "ClosedForm",
    "closed_form_gf",
    "closed_forms",
    "integer_sum_gf",
    "reference_terms",
]

# spare coefficients so that dividing by x^k still leaves the requested order
_PAD = 4


@dataclass(frozen=True)
class ClosedForm:
    """A named generating function and the sequence it is claimed to generate.

    The coefficient sequence should equal ``transform`` applied to
    ``factor * scale**n * M_n(spec)`` (or to m_n when ``spec`` is BetaParams).
    """

    key: str
    formula: str
    spec: Union[MomentSpec, BetaParams]
    build: Callable[[int], PowerSeries]
    scale: Fraction = Fraction(1)
    factor: Fraction = Fraction(1)
    transform: TransformSpec = TransformSpec()

    def series(self, order: int) -> PowerSeries:
        return self.build(order + _PAD).truncate(order)


def reference_terms(form: ClosedForm, order: int) -> list[Fraction]:
    """The moment-side sequence a closed form must reproduce, to ``order``."""
    count = order + 1
    if isinstance(form.spec, BetaParams):
        raw = beta_moments(form.spec, count)
    else:
        raw = moments(form.spec, count)
    seq = [form.factor * form.scale**n * t for n, t in enumerate(raw)]
    return apply(form.transform, seq)[:count]


# -- building blocks ---------------------------------------------------------

def _poly(order: int, *coeffs) -> PowerSeries:
    return PowerSeries.polynomial([as_rational(c) for c in coeffs], order)


def _root(order: int, *coeffs) -> PowerSeries:
    return _poly(order, *coeffs).sqrt()


def _root_ratio(order: int, num: tuple, den: tuple) -> PowerSeries:
    return (_poly(order, *num) / _poly(order, *den)).sqrt()


def integer_sum_gf(params: BetaParams, order: int) -> PowerSeries:
    """g(t) = sum t^j m_j for alpha + beta in {1, 2, 3, 4}.

    alpha must avoid the integers where the formula's denominator vanishes.
    """
    a, b = params.alpha, params.beta
    s = a + b
    n = order + 3
    one_minus_t = _poly(n, 1, -1)
    t = PowerSeries.x(n)
    if s == 1:
        return one_minus_t.power(-a).truncate(order)
    if s == 2:
        if a == 1:
            raise SeriesError("alpha = 1 is a removable case of this formula")
        return ((1 - one_minus_t.power(1 - a)).divide_by_x(1) / (1 - a)).truncate(order)
    if s == 3:
        if a in (1, 2):
            raise SeriesError("alpha in {1, 2} is a removable case of this formula")
        num = one_minus_t.power(2 - a) + t * (2 - a) - 1
        return (num.divide_by_x(2) * (2 / ((1 - a) * (2 - a)))).truncate(order)
    if s == 4:
        if a in (1, 2, 3):
            raise SeriesError("alpha in {1, 2, 3} is a removable case of this formula")
        quad = _poly(n, 2, 2 * a - 6, a * a - 5 * a + 6)
        num = one_minus_t.power(3 - a) * 6 - quad * 3
        return (num.divide_by_x(3) / ((a - 1) * (a - 2) * (a - 3))).truncate(order)
    raise SeriesError(f"alpha + beta = {s} is not one of 1, 2, 3, 4")


def _gen_i(alpha: str, beta: str) -> Callable[[int], PowerSeries]:
    params = BetaParams(alpha, beta)
    return lambda n: integer_sum_gf(params, n)


# G(x; 0, alpha, beta) with s = sqrt(1 - 4x)

def _g_a(n):
    return _root(n, 1, -4).reciprocal()


def _g_b(n):
    s = _root(n, 1, -4)
    return (1 - s).divide_by_x(1) / (s * 2)


def _g_c(n):
    return (1 - _root(n, 1, -4)).divide_by_x(1) * Fraction(1, 2)


def _g_d(n):
    s = _root(n, 1, -4)
    return (s**3 + _poly(n, -1, 6)).divide_by_x(2) * Fraction(1, 6)


def _g_e(n):
    return (_poly(n, 1, -2) - _root(n, 1, -4)).divide_by_x(2) * Fraction(1, 2)


def _g_f(n):
    s = _root(n, 1, -4)
    return (1 - s * _poly(n, 1, 2)).divide_by_x(2) / (s * 6)


def _g_g(n):
    s = _root(n, 1, -4)
    return (_poly(n, 1, -10, 30) - s**5).divide_by_x(3) * Fraction(1, 20)


def _g_g_wide(n):
    s = _root(n, 1, -4)
    return (_poly(n, 1, -10, 30, -20) - s**5).divide_by_x(4) * Fraction(1, 10)


def _g_h(n):
    s = _root(n, 1, -4)
    return (s**3 + _poly(n, -1, 6, -6)).divide_by_x(3) * Fraction(1, 4)


def _g_i(n):
    s = _root(n, 1, -4)
    return (_poly(n, 1, -2, -2) - s).divide_by_x(3) * Fraction(1, 4)


def _g_i_wide(n):
    s = _root(n, 1, -4)
    return (_poly(n, 1, -2, -2, -4) - s).divide_by_x(4) * Fraction(1, 10)


def _g_j(n):
    s = _root(n, 1, -4)
    return (1 - s * _poly(n, 1, 2, 6)).divide_by_x(3) / (s * 20)


def _inv_root(*coeffs):
    return lambda n: _root(n, *coeffs).reciprocal()


def _catalan_like(num: tuple, den: tuple, denom: int):
    # (1 - sqrt(num/den)) / (denom * x)
    return lambda n: (1 - _root_ratio(n, num, den)).divide_by_x(1) * Fraction(1, denom)


def _motzkin_like(lin: int, quad: tuple, denom: int):
    # (1 - lin*x - sqrt(quad)) / (denom * x^2)
    return lambda n: (_poly(n, 1, -lin) - _root(n, *quad)).divide_by_x(2) * Fraction(1, denom)


def _binomial_catalan(shift: int):
    def build(n):
        return substitute_shift(_g_c(n), shift)
    return build


def _cent_g(reflect: bool):
    # (4x - 1 + (1 - 2x) sqrt(1 - 4x^2)) / (2x), optionally at -x
    def build(n):
        g = (_poly(n, -1, 4) + _poly(n, 1, -2) * _root(n, 1, 0, -4)).divide_by_x(1) * Fraction(1, 2)
        return g.scale_variable(-1) if reflect else g
    return build


def _spec(c, a, b) -> MomentSpec:
    return MomentSpec.of(c, a, b)


_H = Fraction(1, 2)


def _build_catalog() -> dict[str, ClosedForm]:
    forms = [
        # alpha + beta integer, m-series in t
        ClosedForm("gen-i:1", "1/(1-t)^a", BetaParams("1/2", "1/2"), _gen_i("1/2", "1/2")),
        ClosedForm("gen-i:1b", "1/(1-t)^a", BetaParams("1/3", "2/3"), _gen_i("1/3", "2/3")),
        ClosedForm("gen-i:2", "(1-(1-t)^(1-a))/(t(1-a))", BetaParams("1/2", "3/2"), _gen_i("1/2", "3/2")),
        ClosedForm("gen-i:2b", "(1-(1-t)^(1-a))/(t(1-a))", BetaParams("5/3", "1/3"), _gen_i("5/3", "1/3")),
        ClosedForm("gen-i:3", "2((1-t)^(2-a)+t(2-a)-1)/(t^2(1-a)(2-a))", BetaParams("1/2", "5/2"),
                   _gen_i("1/2", "5/2")),
        ClosedForm("gen-i:3b", "2((1-t)^(2-a)+t(2-a)-1)/(t^2(1-a)(2-a))", BetaParams("7/4", "5/4"),
                   _gen_i("7/4", "5/4")),
        ClosedForm("gen-i:4", "(6(1-t)^(3-a)-3P(a,t))/(t^3(a-1)(a-2)(a-3))", BetaParams("3/2", "5/2"),
                   _gen_i("3/2", "5/2")),
        ClosedForm("gen-i:4b", "(6(1-t)^(3-a)-3P(a,t))/(t^3(a-1)(a-2)(a-3))", BetaParams("1/5", "19/5"),
                   _gen_i("1/5", "19/5")),
        # G(x; 0, alpha, beta)
        ClosedForm("G(0,1/2,1/2)", "1/sqrt(1-4x)", _spec(0, _H, _H), _g_a),
        ClosedForm("G(0,3/2,1/2)", "(1-sqrt(1-4x))/(2x sqrt(1-4x))", _spec(0, "3/2", _H), _g_b),
        ClosedForm("G(0,1/2,3/2)", "(1-sqrt(1-4x))/(2x)", _spec(0, _H, "3/2"), _g_c),
        ClosedForm("G(0,1/2,5/2)", "((1-4x)^(3/2)+6x-1)/(6x^2)", _spec(0, _H, "5/2"), _g_d),
        ClosedForm("G(0,3/2,3/2)", "(1-2x-sqrt(1-4x))/(2x^2)", _spec(0, "3/2", "3/2"), _g_e),
        ClosedForm("G(0,5/2,1/2)", "(1-sqrt(1-4x)-2x sqrt(1-4x))/(6x^2 sqrt(1-4x))", _spec(0, "5/2", _H), _g_f),
        ClosedForm("G(0,1/2,7/2)", "(1-(1-4x)^(5/2)-10x+30x^2)/(20x^3)", _spec(0, _H, "7/2"), _g_g),
        ClosedForm("G(0,3/2,7/2)", "(1-(1-4x)^(5/2)-10x+30x^2-20x^3)/(10x^4)", _spec(0, "3/2", "7/2"), _g_g_wide),
        ClosedForm("G(0,3/2,5/2)", "(-1+(1-4x)^(3/2)+6x-6x^2)/(4x^3)", _spec(0, "3/2", "5/2"), _g_h),
        ClosedForm("G(0,5/2,3/2)", "(1-(1-4x)^(1/2)-2x-2x^2)/(4x^3)", _spec(0, "5/2", "3/2"), _g_i),
        ClosedForm("G(0,7/2,3/2)", "(1-(1-4x)^(1/2)-2x-2x^2-4x^3)/(10x^4)", _spec(0, "7/2", "3/2"), _g_i_wide),
        ClosedForm("G(0,7/2,1/2)", "(1-(1-4x)^(1/2)(1+2x+6x^2))/(20x^3 sqrt(1-4x))", _spec(0, "7/2", _H), _g_j),
        # shifted arcsine laws, scaled
        ClosedForm("bc-1", "1/sqrt((1-13x)(1+3x))", _spec("-3/4", _H, _H), _inv_root(1, -10, -39), Fraction(4)),
        ClosedForm("bc-2", "1/sqrt(1-2x-63x^2)", _spec("-7/4", _H, _H), _inv_root(1, -2, -63), Fraction(4)),
        ClosedForm("bc-3", "1/sqrt(1-2x-15x^2)", _spec("-3/2", _H, _H), _inv_root(1, -2, -15), Fraction(2)),
        ClosedForm("bc-5", "1/sqrt(1-2x-3x^2)", _spec(-1, _H, _H), _inv_root(1, -2, -3)),
        ClosedForm("bc-6", "1/sqrt(1-6x-7x^2)", _spec("-1/2", _H, _H), _inv_root(1, -6, -7), Fraction(2)),
        ClosedForm("bc-7", "1/sqrt(1-14x-15x^2)", _spec("-1/4", _H, _H), _inv_root(1, -14, -15), Fraction(4)),
        ClosedForm("bc-8", "1/sqrt(1-18x+17x^2)", _spec("1/4", _H, _H), _inv_root(1, -18, 17), Fraction(4)),
        ClosedForm("bc-9", "1/sqrt(1-10x+9x^2)", _spec("1/2", _H, _H), _inv_root(1, -10, 9), Fraction(2)),
        ClosedForm("bc-10", "1/sqrt(1-6x+5x^2)", _spec(1, _H, _H), _inv_root(1, -6, 5)),
        ClosedForm("bc-11", "1/sqrt(1-26x+105x^2)", _spec("5/4", _H, _H), _inv_root(1, -26, 105), Fraction(4)),
        ClosedForm("bc-12", "1/sqrt(1-14x+33x^2)", _spec("3/2", _H, _H), _inv_root(1, -14, 33), Fraction(2)),
        ClosedForm("bc-13", "1/sqrt(1-8x+12x^2)", _spec(2, _H, _H), _inv_root(1, -8, 12)),
        ClosedForm("bc-14", "1/sqrt(1-18x+65x^2)", _spec("5/2", _H, _H), _inv_root(1, -18, 65), Fraction(2)),
        # shifted Catalan laws
        ClosedForm("catalan-1", "(1-sqrt((1-3x)/(1+x)))/(2x)", _spec(-1, _H, "3/2"),
                   _catalan_like((1, -3), (1, 1), 2)),
        ClosedForm("catalan-2", "(1-x-sqrt(1-2x-3x^2))/(2x^2)", _spec(-1, "3/2", "3/2"),
                   _motzkin_like(1, (1, -2, -3), 2)),
        ClosedForm("catalan-3", "(1-sqrt((1-7x)/(1+x)))/(4x)", _spec("-1/2", _H, "3/2"),
                   _catalan_like((1, -7), (1, 1), 4), Fraction(2)),
        ClosedForm("catalan-4", "(1-sqrt((1-5x)/(1+3x)))/(4x)", _spec("-3/2", _H, "3/2"),
                   _catalan_like((1, -5), (1, 3), 4), Fraction(2)),
        ClosedForm("catalan-5", "(1-sqrt((1-9x)/(1-x)))/(4x)", _spec("1/2", _H, "3/2"),
                   _catalan_like((1, -9), (1, -1), 4), Fraction(2)),
        ClosedForm("catalan-6", "C(x/(1-x))/(1-x), C the Catalan g.f.", _spec(1, _H, "3/2"), _binomial_catalan(1)),
        ClosedForm("catalan-7", "(1-sqrt((1-11x)/(1-3x)))/(4x)", _spec("3/2", _H, "3/2"),
                   _catalan_like((1, -11), (1, -3), 4), Fraction(2)),
        ClosedForm("catalan-8", "(1-sqrt((1-6x)/(1-2x)))/(2x)", _spec(2, _H, "3/2"),
                   _catalan_like((1, -6), (1, -2), 2)),
        # shifted semicircle laws
        ClosedForm("assorted-2", "(1-4x-sqrt(1-8x+12x^2))/(2x^2)", _spec(2, "3/2", "3/2"),
                   _motzkin_like(4, (1, -8, 12), 2)),
        ClosedForm("assorted-3", "(1-5x-sqrt(1-10x+21x^2))/(2x^2)", _spec(3, "3/2", "3/2"),
                   _motzkin_like(5, (1, -10, 21), 2)),
        ClosedForm("assorted-4", "(1-5x-sqrt(1-10x+9x^2))/(8x^2)", _spec("1/2", "3/2", "3/2"),
                   _motzkin_like(5, (1, -10, 9), 8), Fraction(2)),
        # symmetric family on [-2, 2]
        ClosedForm("cent-e", "(1-sqrt((1-2x)/(1+2x)))/(2x)", _spec(-2, _H, "3/2"),
                   _catalan_like((1, -2), (1, 2), 2)),
        ClosedForm("cent-g", "(4x-1+(1-2x)sqrt(1-4x^2))/(2x)", _spec(-2, "3/2", "5/2"), _cent_g(False),
                   factor=Fraction(2), transform=TransformSpec((ShiftRight((1, -1)),))),
        ClosedForm("cent-g-reflected", "(-4x-1+(1+2x)sqrt(1-4x^2))/(-2x)", _spec(-2, "5/2", "3/2"), _cent_g(True),
                   factor=Fraction(2), transform=TransformSpec((ShiftRight((1, 1)),))),
    ]
    return {f.key: f for f in forms}


_CATALOG = _build_catalog()


def closed_forms() -> dict[str, ClosedForm]:
    return dict(_CATALOG)


def closed_form_gf(key: str, order: int = 30) -> PowerSeries:
    """Exact series of the named closed form, to the given order."""
    try:
        form = _CATALOG[key]
    except KeyError:
        raise KeyError(f"unknown closed form {key!r}") from None
    return form.series(order)

