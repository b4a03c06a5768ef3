from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from betamoments.catalog import catalog
from betamoments.exact import catalan
from betamoments.moments import (
    BetaParams,
    M,
    MomentSequence,
    MomentSpec,
    S,
    half_integer_closed_form,
    lower_alpha_recurrence,
    m,
    moment_sequence,
    moments,
    param_recurrences,
    shift_basepoint,
)

H = F(1, 2)
halves = st.integers(1, 9).map(lambda k: F(k, 2))


def test_beta_moments():
    assert m(2, BetaParams(H, H)) == F(3, 8)
    assert m(0, BetaParams(F(7, 3), F(2))) == 1
    assert m(3, BetaParams(H, 3 * H)) == F(5, 64)
    assert 4**3 * m(3, BetaParams(H, 3 * H)) == 5


def test_shifted_moments():
    assert M(2, MomentSpec.of(0, H, H)) == 6
    assert moments(MomentSpec.of(-1, 3 * H, 3 * H), 6) == [1, 1, 2, 4, 9, 21]
    assert moments(MomentSpec.of(-1, H, H), 5) == [1, 1, 3, 7, 19]


def test_symmetric():
    assert [S(n, 3 * H, 3 * H) for n in range(7)] == [1, 0, 1, 0, 2, 0, 5]
    assert S(3, H, 3 * H) == -3
    assert S(2, 1, 1) == F(4, 3)


def test_invalid_params():
    with pytest.raises(ValueError):
        BetaParams(0, 1)
    with pytest.raises(ValueError):
        MomentSpec.of(0, 1, -1)
    with pytest.raises(ValueError):
        MomentSequence(MomentSpec.of(0, 1, 1), (2, 1))


def test_shift_basepoint():
    cat = moment_sequence(MomentSpec.of(0, H, 3 * H), 5)
    assert list(shift_basepoint(cat, 1).terms) == [1, 2, 5, 15, 51]
    assert shift_basepoint(cat, 0) == cat
    sym = shift_basepoint(moment_sequence(MomentSpec.of(0, 3 * H, 3 * H), 5), -2)
    assert sym[4] == 2
    with pytest.raises(ValueError):
        shift_basepoint(cat, 1, order=9)


def test_param_recurrences():
    spec = MomentSpec.of(0, H, 3 * H)
    up_a, up_b = param_recurrences(spec, 3)
    assert up_a == M(3, MomentSpec.of(0, 3 * H, 3 * H)) == catalan(4)
    assert up_b == M(3, MomentSpec.of(0, H, 5 * H))
    assert param_recurrences(MomentSpec.of(0, H, H), 1)[0] * 0 + 4 * H / 1 * M(0, MomentSpec.of(0, 3 * H, H)) == 2
    assert lower_alpha_recurrence(MomentSpec.of(0, H, H), 1) == 2
    with pytest.raises(ValueError):
        lower_alpha_recurrence(MomentSpec.of(1, H, H), 1)


@pytest.mark.parametrize("c", [F(-2), F(-1), F(1), F(3, 4)])
def test_param_recurrences_any_c(c):
    spec = MomentSpec.of(c, F(3, 2), F(5, 2))
    for n in range(6):
        up_a, up_b = param_recurrences(spec, n)
        assert up_a == M(n, MomentSpec.of(c, F(5, 2), F(5, 2)))
        assert up_b == M(n, MomentSpec.of(c, F(3, 2), F(7, 2)))


def test_half_integer_examples():
    assert [half_integer_closed_form(n, "ii", 1, 1) for n in range(5)] == [catalan(n + 1) for n in range(5)]
    assert half_integer_closed_form(2, "iii", 0, 1) == F(16, 5)
    assert half_integer_closed_form(1, "iv", 1, 0) == F(8, 3)
    with pytest.raises(ValueError):
        half_integer_closed_form(1, "v", 1, 1)


@pytest.mark.parametrize("family", ["ii", "iii", "iv"])
def test_half_integer_against_moments(family):
    for i in range(0, 5):
        for j in range(0, 5):
            if family == "ii":
                a, b = i + H, j + H
            elif family == "iii":
                if j < 1:
                    continue
                a, b = i + H, F(j)
            else:
                if i < 1:
                    continue
                a, b = F(i), j + H
            seq = moments(MomentSpec.of(0, a, b), 41)
            assert all(half_integer_closed_form(n, family, i, j) == seq[n] for n in range(41))


def test_bounds_for_catalog():
    for e in catalog():
        base = moments(e.spec.with_c(0), 61)
        assert all(abs(t) < 4**n for n, t in enumerate(base) if n)
        sym = moments(e.spec.with_c(-2), 61)
        assert all(abs(t) < 2**n for n, t in enumerate(sym) if n)


@settings(max_examples=30, deadline=None)
@given(halves, halves, st.integers(0, 40))
def test_symmetry(g, d, n):
    assert S(n, d, g) == (-1) ** n * S(n, g, d)


@pytest.mark.parametrize("g", [H, F(1), 3 * H, F(2)])
def test_odd_symmetric_vanish(g):
    seq = moments(MomentSpec.symmetric(g, g), 42)
    assert all(seq[2 * k + 1] == 0 for k in range(21))


@settings(max_examples=25, deadline=None)
@given(halves, halves, st.fractions(-3, 3, max_denominator=4), st.fractions(-3, 3, max_denominator=4))
def test_shift_round_trip(a, b, c, d):
    seq = moment_sequence(MomentSpec.of(c, a, b), 41)
    there = shift_basepoint(seq, d)
    assert shift_basepoint(there, c) == seq
    assert list(there.terms) == moments(MomentSpec.of(d, a, b), 41)


def test_catalan_quarter_sum_approaches_two():
    from betamoments.exact import central_binomial

    partial = F(0)
    for n in range(61):
        assert F(central_binomial(n), 4**n) == 1 - partial / 2
        assert partial < 2
        partial += F(catalan(n), 4**n)
