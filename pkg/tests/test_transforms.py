from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from betamoments.exact import catalan
from betamoments.moments import MomentSpec, moments
from betamoments.oeis import fetch
from betamoments.transforms import (
    BinomialTransform,
    ConstantScale,
    GeometricScale,
    InverseBinomialTransform,
    ShiftLeft,
    ShiftRight,
    SignChange,
    TransformError,
    TransformSpec,
    apply,
    inverse,
    match,
    match_all,
)

H = F(1, 2)
CAT = [F(catalan(n)) for n in range(20)]


def test_apply_examples():
    assert apply([BinomialTransform()], CAT)[:5] == [1, 2, 5, 15, 51]
    assert apply([SignChange()], [1, 1, 3, 6, 15]) == [1, -1, 3, -6, 15]
    seq = [2 * t for t in moments(MomentSpec.symmetric(3 * H, 5 * H), 20)]
    out = apply([SignChange(), ShiftRight((1, 1))], seq)
    assert out == [F(t) for t in fetch("A089408").terms[:22]]


def test_inverse_examples():
    assert inverse(TransformSpec((BinomialTransform(),))) == TransformSpec((InverseBinomialTransform(),))
    assert inverse(TransformSpec((GeometricScale(4),))) == TransformSpec((GeometricScale(F(1, 4)),))
    assert inverse(TransformSpec((ShiftRight((1, 3)),))) == TransformSpec((ShiftLeft((1, 3)),))


def test_shift_left_checks_prefix():
    assert ShiftLeft((1,))([1, 2, 3]) == [2, 3]
    with pytest.raises(TransformError):
        ShiftLeft((2,))([1, 2, 3])
    with pytest.raises(TransformError):
        ShiftLeft((1, 1, 1))([1, 1])


def test_match_examples():
    a = moments(MomentSpec.of(0, 3 * H, 3 * H), 15)
    t = match(a, CAT)
    assert str(t) == "l-s(1)"
    super_ballot = [F(v) for v in fetch("A007054").terms[:15]]
    t = match(moments(MomentSpec.of(0, H, 5 * H), 15), super_ballot)
    assert t == TransformSpec((ConstantScale(F(1, 3)),))
    assert match(CAT, CAT) == TransformSpec()


def test_match_reports_both_signs():
    a = moments(MomentSpec.symmetric(H, 3 * H), 15)
    b = moments(MomentSpec.symmetric(3 * H, H), 15)
    assert TransformSpec((SignChange(),)) in match_all(a, b)


def test_match_needs_terms():
    with pytest.raises(ValueError):
        match(CAT[:5], CAT)


seqs = st.lists(st.fractions(-50, 50, max_denominator=9), min_size=20, max_size=20)


@settings(max_examples=40)
@given(seqs)
def test_binomial_round_trip(s):
    assert apply([BinomialTransform(), InverseBinomialTransform()], s) == s
    assert apply([InverseBinomialTransform(), BinomialTransform()], s) == s


@settings(max_examples=40)
@given(seqs, st.lists(st.fractions(-3, 3, max_denominator=4), max_size=3))
def test_length_monotone(s, prefix):
    t = [SignChange(), ShiftRight(tuple(prefix)), GeometricScale(2)]
    assert len(apply(t, s)) == len(s) + len(prefix)


@pytest.mark.parametrize("b,c", [(1, 0), (0, -1), (2, 1)])
@pytest.mark.parametrize("params", [(H, H), (H, 3 * H), (3 * H, 3 * H), (1, 2)])
def test_scaled_binomial_relation(b, c, params):
    d = F(b - c)
    mc = moments(MomentSpec.of(c, *params), 21)
    mb = moments(MomentSpec.of(b, *params), 21)
    lhs = [t / d**n for n, t in enumerate(mb)]
    rhs = apply([BinomialTransform()], [t / d**n for n, t in enumerate(mc)])
    assert lhs == rhs
