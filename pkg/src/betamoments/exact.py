"""Exact integer/rational kernels shared by every other module.

All scalars are :class:`fractions.Fraction`, which is kept in lowest terms
with a positive denominator, so equality between values is structural.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

RationalLike = Union[int, Fraction, str]

__all__ = [
    "PrimeFactorization",
    "as_rational",
    "binomial",
    "catalan",
    "central_binomial",
    "factorize",
    "falling_factorial",
    "format_rational",
    "legendre_valuation",
    "rising_factorial",
]


def as_rational(x: RationalLike) -> Fraction:
    """Coerce ``x`` to a Fraction.

    Strings use ``p/q`` syntax (``"3/2"``, ``"-1"``); floats are refused so
    that nothing inexact sneaks into a computation.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        s = x.strip()
        if not s or any(ch in s for ch in ".eE"):
            raise ValueError(f"not an exact rational: {x!r}")
        return Fraction(s)
    raise TypeError(f"cannot interpret {type(x).__name__} as an exact rational")


def format_rational(x: Fraction) -> str:
    """``p/q`` text form; integers print without a denominator."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rising_factorial(x: RationalLike, n: int) -> Fraction:
    """x (x+1) ... (x+n-1); the empty product is 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    x = as_rational(x)
    return _step_product(x.numerator, x.denominator, n, 1)


def falling_factorial(x: RationalLike, n: int) -> Fraction:
    """x (x-1) ... (x-n+1); the empty product is 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    x = as_rational(x)
    return _step_product(x.numerator, x.denominator, n, -1)


def _step_product(p: int, q: int, n: int, step: int) -> Fraction:
    # prod (p/q + step*i) = prod (p + step*i*q) / q^n, reduced once
    num = 1
    for i in range(n):
        num *= p + step * i * q
    return Fraction(num, q**n)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient for n >= 0, zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def central_binomial(n: int) -> int:
    return binomial(2 * n, n)


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return binomial(2 * n, n) // (n + 1)


def legendre_valuation(n: int, d: int) -> int:
    """Sum of floor(n / d**m) over m >= 1.

    For prime ``d`` this is the exponent of ``d`` in ``n!``.
    """
    if d < 2:
        raise ValueError("d must be >= 2")
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = 0
    power = d
    while power <= n:
        total += n // power
        power *= d
    return total


@dataclass(frozen=True)
class PrimeFactorization:
    """Prime decomposition ``prod(p**e for p, e in factors)``."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        primes = [p for p, _ in self.factors]
        if any(p < 2 for p in primes) or any(e < 1 for _, e in self.factors):
            raise ValueError("primes must be >= 2 and exponents >= 1")
        if primes != sorted(set(primes)):
            raise ValueError("primes must be strictly increasing")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out


def factorize(n: int) -> PrimeFactorization:
    """Trial-division factorization; fine for the small moduli used here."""
    if n < 1:
        raise ValueError("n must be positive")
    factors = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return PrimeFactorization(tuple(factors))
