from fractions import Fraction as F
from math import gcd

import pytest
from hypothesis import given, strategies as st

from betamoments.exact import central_binomial
from betamoments.integrality import (
    check_integrality,
    demo_nonintegral,
    minimality_probe,
    multiplier,
    product_form,
)


def test_multiplier_examples():
    assert multiplier(3, 3) == 81
    assert multiplier(2, 3) == 9
    assert multiplier(4, 6) == 1296 * 8 * 3
    with pytest.raises(ValueError):
        multiplier(3, 1)


def test_one_third():
    rep = check_integrality(1, 3, 3)
    assert rep.products[1:] == [1, 2, 14]


def test_one_eighth():
    assert check_integrality(1, 8, 10).ok


def test_one_half_is_central_binomial():
    # 2^n 2^{v2(n!)} (1/2)^(n)/n! = binomial(2n,n) * 2^{v2(n!)} / 2^n
    from betamoments.exact import legendre_valuation

    for row in check_integrality(1, 2, 40).rows:
        n = row.n
        assert row.product == F(central_binomial(n) * 2 ** legendre_valuation(n, 2), 2**n)
        assert row.is_integer


def test_preconditions():
    with pytest.raises(ValueError):
        check_integrality(2, 4, 5)
    with pytest.raises(ValueError):
        check_integrality(5, 3, 5)


def test_all_small_moduli():
    for r in range(2, 13):
        for p in range(1, r):
            if gcd(p, r) == 1:
                assert check_integrality(p, r, 100).ok, (p, r)


def test_demo():
    vals = demo_nonintegral(9)
    assert vals[:5] == [1, F(8, 7), 3, F(20, 3), F(26, 3)]
    assert vals[5:] == [F(832, 11), F(3952, 33), F(1216, 3), F(45600, 7)]
    assert 7 in {p for v in vals for p in (7, 11) if v.denominator % p == 0}


def test_minimality_probe():
    probe = minimality_probe(1, 3, 50)
    assert probe.breaks_somewhere
    assert probe.breaking_n


@given(st.integers(2, 12).flatmap(lambda r: st.tuples(st.integers(1, r - 1), st.just(r))), st.integers(0, 100))
def test_product_form(pr, n):
    p, r = pr
    if gcd(p, r) != 1:
        return
    assert check_integrality(p, r, n).rows[n].product == product_form(n, p, r)
