from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, strategies as st

from betamoments.exact import (
    as_rational,
    binomial,
    catalan,
    central_binomial,
    factorize,
    falling_factorial,
    format_rational,
    legendre_valuation,
    rising_factorial,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def test_rising_examples():
    assert rising_factorial(F(1, 2), 3) == F(15, 8)
    assert rising_factorial(F(7, 3), 0) == 1
    assert rising_factorial(F(3, 2), 2) == F(15, 4)


def test_falling_examples():
    assert falling_factorial(F(1, 2), 2) == F(-1, 4)
    assert falling_factorial(F(5, 2), 2) == F(15, 4)
    assert falling_factorial(F(-1, 2), 3) == F(-15, 8)


def test_counting_functions():
    assert [catalan(n) for n in range(5)] == [1, 1, 2, 5, 14]
    assert [central_binomial(n) for n in range(4)] == [1, 2, 6, 20]
    assert binomial(5, -1) == 0
    assert binomial(5, 6) == 0


def test_legendre_examples():
    assert legendre_valuation(10, 3) == 4
    assert legendre_valuation(0, 5) == 0
    assert legendre_valuation(100, 2) == 97


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_legendre_brute_force(p):
    fact = 1
    for n in range(0, 201):
        if n:
            fact *= n
        k, x = 0, fact
        while x % p == 0:
            x //= p
            k += 1
        assert legendre_valuation(n, p) == k


def test_as_rational():
    assert as_rational("3/2") == F(3, 2)
    assert as_rational("-1") == -1
    assert as_rational(4) == 4
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(ValueError):
        as_rational("0.5")
    with pytest.raises(TypeError):
        as_rational(True)
    assert format_rational(F(-6, 4)) == "-3/2"
    assert format_rational(F(4)) == "4"


def test_factorize():
    f = factorize(360)
    assert f.primes == (2, 3, 5)
    assert f.value == 360


@given(rationals, st.integers(0, 30))
def test_reflection(x, n):
    assert falling_factorial(x, n) == (-1) ** n * rising_factorial(-x, n)
    assert rising_factorial(x, n) == (-1) ** n * falling_factorial(-x, n)


@given(rationals, st.integers(0, 15))
def test_rising_matches_sympy(x, n):
    assert rising_factorial(x, n) == F(str(sympy.rf(sympy.Rational(x.numerator, x.denominator), n)))


@given(st.integers(1, 20), st.integers(0, 20))
def test_rising_integer(k, n):
    from math import factorial

    assert rising_factorial(k, n) == F(factorial(n + k - 1), factorial(k - 1))


@given(st.integers(0, 60), st.integers(-3, 63))
def test_binomial_matches_sympy(n, k):
    assert binomial(n, k) == int(sympy.binomial(n, k)) if 0 <= k <= n else binomial(n, k) == 0


@given(rationals, st.integers(0, 10))
def test_results_normalized(x, n):
    r = rising_factorial(x, n)
    assert r.denominator > 0
    from math import gcd

    assert gcd(r.numerator, r.denominator) == 1
