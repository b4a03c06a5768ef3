"""Moments of the Beta law on [0, 1] and of its affine images on [c, c+4].

``m(n, params)`` is the n-th moment of Beta(alpha, beta); ``M(n, spec)`` is
the n-th moment of ``Y = 4X + c``; ``S(n, gamma, delta)`` is the symmetric
family on [-2, 2] (``c = -2``).  Everything is exact.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .exact import RationalLike, as_rational, binomial, format_rational, rising_factorial

__all__ = [
    "BetaParams",
    "MomentSequence",
    "MomentSpec",
    "M",
    "S",
    "beta_moments",
    "half_integer_closed_form",
    "lower_alpha_recurrence",
    "m",
    "moment_sequence",
    "moments",
    "param_recurrences",
    "shift_basepoint",
]


@dataclass(frozen=True)
class BetaParams:
    alpha: Fraction
    beta: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        object.__setattr__(self, "beta", as_rational(self.beta))
        if self.alpha <= 0 or self.beta <= 0:
            raise ValueError(f"Beta parameters must be positive, got ({self.alpha}, {self.beta})")

    def __str__(self) -> str:
        return f"({format_rational(self.alpha)},{format_rational(self.beta)})"


@dataclass(frozen=True)
class MomentSpec:
    """Modified Beta law: Y = 4X + c with X ~ Beta(alpha, beta), support [c, c+4]."""

    c: Fraction
    params: BetaParams

    def __post_init__(self) -> None:
        object.__setattr__(self, "c", as_rational(self.c))
        if not isinstance(self.params, BetaParams):
            raise TypeError("params must be BetaParams")

    @classmethod
    def of(cls, c: RationalLike, alpha: RationalLike, beta: RationalLike) -> "MomentSpec":
        return cls(as_rational(c), BetaParams(as_rational(alpha), as_rational(beta)))

    @classmethod
    def symmetric(cls, gamma: RationalLike, delta: RationalLike) -> "MomentSpec":
        return cls.of(-2, gamma, delta)

    @property
    def alpha(self) -> Fraction:
        return self.params.alpha

    @property
    def beta(self) -> Fraction:
        return self.params.beta

    def with_c(self, c: RationalLike) -> "MomentSpec":
        return MomentSpec(as_rational(c), self.params)

    def __str__(self) -> str:
        return f"({format_rational(self.c)},{format_rational(self.alpha)},{format_rational(self.beta)})"


@dataclass(frozen=True)
class MomentSequence:
    spec: MomentSpec
    terms: tuple[Fraction, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(as_rational(t) for t in self.terms))
        if self.terms and self.terms[0] != 1:
            raise ValueError("a probability moment sequence starts with 1")

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, n):
        return self.terms[n]


@lru_cache(maxsize=256)
def _beta_moments_cached(alpha: Fraction, beta: Fraction, count: int) -> tuple[Fraction, ...]:
    out = [Fraction(1)]
    s = alpha + beta
    for k in range(1, count):
        out.append(out[-1] * (alpha + k - 1) / (s + k - 1))
    return tuple(out[:count])


def beta_moments(params: BetaParams, count: int) -> list[Fraction]:
    """m_0 .. m_{count-1} of Beta(alpha, beta), by the ratio (alpha+k)/(alpha+beta+k)."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    return list(_beta_moments_cached(params.alpha, params.beta, count))


def m(n: int, params: BetaParams) -> Fraction:
    """n-th moment of Beta(alpha, beta): rising(alpha, n) / rising(alpha + beta, n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return rising_factorial(params.alpha, n) / rising_factorial(params.alpha + params.beta, n)


def _shift(terms: list[Fraction], delta: Fraction, count: int) -> list[Fraction]:
    # binomial re-centering: sum_j C(n, j) t_j delta^(n-j)
    if delta == 0:
        return list(terms[:count])
    powers = [Fraction(1)]
    for _ in range(count):
        powers.append(powers[-1] * delta)
    return [
        sum((binomial(n, j) * terms[j] * powers[n - j] for j in range(n + 1)), Fraction(0))
        for n in range(count)
    ]


def moments(spec: MomentSpec, count: int) -> list[Fraction]:
    """M_0 .. M_{count-1} for ``spec``: scaled Beta moments re-centred at c."""
    base = [Fraction(4) ** k * t for k, t in enumerate(beta_moments(spec.params, count))]
    return _shift(base, spec.c, count)


def moment_sequence(spec: MomentSpec, count: int) -> MomentSequence:
    return MomentSequence(spec, tuple(moments(spec, count)))


def M(n: int, spec: MomentSpec) -> Fraction:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return moments(spec, n + 1)[n]


def S(n: int, gamma: RationalLike, delta: RationalLike) -> Fraction:
    """Moments of the law on [-2, 2] with density proportional to (y+2)^(gamma-1) (2-y)^(delta-1)."""
    return M(n, MomentSpec.symmetric(gamma, delta))


def shift_basepoint(seq: MomentSequence, b: RationalLike, order: int | None = None) -> MomentSequence:
    """Re-centre a moment sequence from base c to base b.

    Only the supplied terms are used, so the result can never be longer than
    the input.
    """
    b = as_rational(b)
    count = len(seq) if order is None else order
    if count > len(seq):
        raise ValueError(f"requested {count} terms but only {len(seq)} are available")
    terms = _shift(list(seq.terms), b - seq.spec.c, count)
    return MomentSequence(seq.spec.with_c(b), tuple(terms))


def param_recurrences(spec: MomentSpec, n: int) -> tuple[Fraction, Fraction]:
    """(M_n(c, alpha+1, beta), M_n(c, alpha, beta+1)) from M_n, M_{n+1} at (c, alpha, beta)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b, c = spec.alpha, spec.beta, spec.c
    mn, mn1 = moments(spec, n + 2)[n:n + 2]
    up_alpha = (a + b) / (4 * a) * (mn1 - c * mn)
    up_beta = (a + b) / (4 * b) * ((4 + c) * mn - mn1)
    return up_alpha, up_beta


def lower_alpha_recurrence(spec: MomentSpec, n: int) -> Fraction:
    """M_n(0, alpha, beta) from M_{n-1}(0, alpha+1, beta); only valid at c = 0, n >= 1."""
    if spec.c != 0:
        raise ValueError("this recurrence holds only for c = 0")
    if n < 1:
        raise ValueError("n must be >= 1")
    a, b = spec.alpha, spec.beta
    raised = MomentSpec.of(0, a + 1, b)
    return 4 * a / (a + b) * M(n - 1, raised)


def half_integer_closed_form(n: int, family: str, i: int, j: int) -> Fraction:
    """Factorial closed forms of M_n(0, alpha, beta) for half-integer parameters.

    ``family``:
      * ``"ii"``  -- alpha = i + 1/2, beta = j + 1/2  (i, j >= 0)
      * ``"iii"`` -- alpha = i + 1/2, beta = j        (i >= 0, j >= 1)
      * ``"iv"``  -- alpha = i,       beta = j + 1/2  (i >= 1, j >= 0)
    """
    f = factorial
    if n < 0:
        raise ValueError("n must be nonnegative")
    if family == "ii":
        if i < 0 or j < 0:
            raise ValueError("need i, j >= 0")
        return Fraction(f(2 * n + 2 * i) * f(i) * f(i + j), f(i + n) * f(2 * i) * f(i + j + n))
    if family == "iii":
        if i < 0 or j < 1:
            raise ValueError("need i >= 0, j >= 1")
        num = binomial(i + j + n, n) * binomial(2 * i + 2 * j, 2 * j)
        den = binomial(2 * i + 2 * j + 2 * n, 2 * i + 2 * n) * binomial(i + n, n)
        return Fraction(4**n * num, den)
    if family == "iv":
        if i < 1 or j < 0:
            raise ValueError("need i >= 1, j >= 0")
        num = 16**n * f(i + n - 1) * f(i + j + n) * f(2 * i + 2 * j)
        den = f(2 * i + 2 * j + 2 * n) * f(i - 1) * f(i + j)
        return Fraction(num, den)
    raise ValueError(f"unknown family {family!r}")
