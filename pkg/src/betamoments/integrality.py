"""Clearing denominators of m_n(p/r, 1 - p/r) = (p/r)^(n) / n!.

The multiplier is r^n times p_j^(v_{p_j}(n!)) over the primes p_j dividing r.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd, prod

from .exact import factorize, legendre_valuation

__all__ = [
    "IntegralityReport",
    "IntegralityRow",
    "MinimalityProbe",
    "check_integrality",
    "demo_nonintegral",
    "minimality_probe",
    "multiplier",
    "product_form",
]


def multiplier(n: int, r: int) -> int:
    if r < 2:
        raise ValueError("r must be at least 2")
    if n < 0:
        raise ValueError("n must be nonnegative")
    return r**n * prod(p ** legendre_valuation(n, p) for p in factorize(r).primes)


def _check_pr(p: int, r: int) -> None:
    if not (0 < p < r):
        raise ValueError(f"need 0 < p < r, got p={p}, r={r}")
    if gcd(p, r) != 1:
        raise ValueError(f"p={p} and r={r} are not coprime")


def _raw_moments(alpha: Fraction, N: int) -> list[Fraction]:
    # alpha + beta = 1, so m_{n+1} = m_n (alpha + n) / (n + 1)
    out = [Fraction(1)]
    for n in range(N):
        out.append(out[-1] * (alpha + n) / (n + 1))
    return out


def product_form(n: int, p: int, r: int) -> Fraction:
    """prod_{j<n} (jr + p) / n!, times the prime-power part of the multiplier."""
    cleared = prod(q ** legendre_valuation(n, q) for q in factorize(r).primes)
    return Fraction(prod(j * r + p for j in range(n)) * cleared, factorial(n))


@dataclass(frozen=True)
class IntegralityRow:
    n: int
    multiplier: int
    raw: Fraction
    product: Fraction

    @property
    def is_integer(self) -> bool:
        return self.product.denominator == 1


@dataclass(frozen=True)
class IntegralityReport:
    p: int
    r: int
    rows: tuple[IntegralityRow, ...]

    @property
    def ok(self) -> bool:
        return all(row.is_integer for row in self.rows)

    @property
    def failures(self) -> list[int]:
        return [row.n for row in self.rows if not row.is_integer]

    @property
    def products(self) -> list[Fraction]:
        return [row.product for row in self.rows]


def check_integrality(p: int, r: int, N: int) -> IntegralityReport:
    """Rows n = 0..N of multiplier(n, r) * m_n(p/r, 1 - p/r)."""
    _check_pr(p, r)
    raw = _raw_moments(Fraction(p, r), N)
    rows = []
    for n, m in enumerate(raw):
        k = multiplier(n, r)
        rows.append(IntegralityRow(n, k, m, k * m))
    return IntegralityReport(p, r, tuple(rows))


def demo_nonintegral(N: int) -> list[Fraction]:
    """6 * 3^(n + v_3(n!)) * 2^floor(n/2) * m_n(1/3, 6 - 1/3) for n = 1..N.

    Once beta is no longer 1 - alpha the denominators pick up primes that do
    not divide 3 (7 at n = 2, 11 at n = 6).
    """
    alpha, beta = Fraction(1, 3), Fraction(17, 3)
    out = []
    m = Fraction(1)
    for n in range(1, N + 1):
        m *= (alpha + n - 1) / (alpha + beta + n - 1)
        out.append(6 * 3 ** (n + legendre_valuation(n, 3)) * 2 ** (n // 2) * m)
    return out


@dataclass(frozen=True)
class MinimalityProbe:
    """For each n, whether multiplier/prime still clears the denominator."""

    p: int
    r: int
    prime: int
    still_integer: tuple[bool, ...]

    @property
    def breaks_somewhere(self) -> bool:
        return not all(self.still_integer)

    @property
    def breaking_n(self) -> list[int]:
        return [n for n, ok in enumerate(self.still_integer) if not ok]


def minimality_probe(p: int, r: int, N: int, prime: int | None = None) -> MinimalityProbe:
    """Divide the multiplier by one extra prime factor of r and see where integrality fails."""
    _check_pr(p, r)
    prime = prime or factorize(r).primes[0]
    if r % prime:
        raise ValueError(f"{prime} does not divide {r}")
    report = check_integrality(p, r, N)
    flags = tuple((row.product / prime).denominator == 1 for row in report.rows)
    return MinimalityProbe(p, r, prime, flags)
