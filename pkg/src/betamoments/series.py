"""Truncated formal power series with exact rational coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .exact import RationalLike, as_rational, format_rational
from .moments import BetaParams, MomentSpec, beta_moments, moments

__all__ = [
    "PowerSeries",
    "SeriesError",
    "gf_of_moments",
    "gf_param_shift",
    "substitute_shift",
]


class SeriesError(ArithmeticError):
    pass


Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients c_0..c_N of a series known modulo x^(N+1)."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(as_rational(c) for c in self.coefficients)
        if not coeffs:
            raise SeriesError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coefficients", coeffs)

    # -- constructors -------------------------------------------------------
    @classmethod
    def from_terms(cls, terms: Iterable[RationalLike]) -> "PowerSeries":
        return cls(tuple(as_rational(t) for t in terms))

    @classmethod
    def constant(cls, value: RationalLike, order: int) -> "PowerSeries":
        return cls.polynomial([value], order)

    @classmethod
    def polynomial(cls, coeffs: Sequence[RationalLike], order: int) -> "PowerSeries":
        """Polynomial sum(coeffs[k] x^k) seen as a series of the given order."""
        out = [Fraction(0)] * (order + 1)
        for k, c in enumerate(coeffs):
            if k <= order:
                out[k] = as_rational(c)
        return cls(tuple(out))

    @classmethod
    def x(cls, order: int) -> "PowerSeries":
        return cls.polynomial([0, 1], order)

    # -- basic protocol -----------------------------------------------------
    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __len__(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, k):
        return self.coefficients[k]

    def __iter__(self):
        return iter(self.coefficients)

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise SeriesError(f"cannot extend a series of order {self.order} to {order}")
        return PowerSeries(self.coefficients[: order + 1])

    def __str__(self) -> str:
        parts = [format_rational(c) for c in self.coefficients]
        return "[" + ", ".join(parts) + f"] + O(x^{self.order + 1})"

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries.constant(as_rational(other), self.order)

    def __add__(self, other) -> "PowerSeries":
        other = self._coerce(other)
        n = min(self.order, other.order)
        return PowerSeries(tuple(a + b for a, b in zip(self.coefficients[: n + 1], other.coefficients[: n + 1])))

    __radd__ = __add__

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(tuple(-a for a in self.coefficients))

    def __sub__(self, other) -> "PowerSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "PowerSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            s = as_rational(other)
            return PowerSeries(tuple(s * a for a in self.coefficients))
        n = min(self.order, other.order)
        a, b = self.coefficients, other.coefficients
        return PowerSeries(
            tuple(sum((a[j] * b[k - j] for j in range(k + 1)), Fraction(0)) for k in range(n + 1))
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return self * other.reciprocal()
        return self * (1 / as_rational(other))

    def __rtruediv__(self, other) -> "PowerSeries":
        return self._coerce(other) * self.reciprocal()

    def __pow__(self, k: int) -> "PowerSeries":
        if not isinstance(k, int) or k < 0:
            raise SeriesError("integer powers only; use power() for rational exponents")
        out = PowerSeries.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def reciprocal(self) -> "PowerSeries":
        a = self.coefficients
        if a[0] == 0:
            raise SeriesError("reciprocal needs a nonzero constant term")
        inv0 = 1 / a[0]
        b = [inv0]
        for k in range(1, len(a)):
            b.append(-inv0 * sum((a[j] * b[k - j] for j in range(1, k + 1)), Fraction(0)))
        return PowerSeries(tuple(b))

    def sqrt(self) -> "PowerSeries":
        """Square root with constant term 1, by Newton iteration with doubling precision."""
        a = self.coefficients
        if a[0] == 0:
            raise SeriesError("sqrt needs a nonzero constant term")
        if a[0] != 1:
            raise SeriesError("sqrt is only defined here for constant term 1")
        y = PowerSeries((Fraction(1),))
        prec = 1
        while prec < len(a):
            prec = min(2 * prec, len(a))
            target = PowerSeries(a[:prec])
            y = PowerSeries(y.coefficients + (Fraction(0),) * (prec - len(y)))
            y = (y + target * y.reciprocal()) * Fraction(1, 2)
        return y

    def power(self, r: RationalLike) -> "PowerSeries":
        """(self)^r for rational r and constant term 1 (binomial series)."""
        r = as_rational(r)
        a = self.coefficients
        if a[0] != 1:
            raise SeriesError("rational powers need constant term 1")
        b = [Fraction(1)]
        for n in range(1, len(a)):
            acc = sum((((r + 1) * k - n) * a[k] * b[n - k] for k in range(1, n + 1)), Fraction(0))
            b.append(acc / n)
        return PowerSeries(tuple(b))

    def divide_by_x(self, k: int = 1) -> "PowerSeries":
        """Exact division by x^k; the low k coefficients must vanish."""
        if k < 0:
            raise SeriesError("k must be nonnegative")
        if k > self.order:
            raise SeriesError(f"order {self.order} series has no coefficients left after dividing by x^{k}")
        low = self.coefficients[:k]
        if any(c != 0 for c in low):
            first = next(i for i, c in enumerate(low) if c != 0)
            raise SeriesError(f"cannot divide by x^{k}: coefficient of x^{first} is {format_rational(low[first])}")
        return PowerSeries(self.coefficients[k:])

    def multiply_by_x(self, k: int = 1) -> "PowerSeries":
        return PowerSeries((Fraction(0),) * k + self.coefficients)

    def scale_variable(self, q: RationalLike) -> "PowerSeries":
        """Series in q*x, i.e. the n-th coefficient times q^n."""
        q = as_rational(q)
        return PowerSeries(tuple(c * q**n for n, c in enumerate(self.coefficients)))

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        """self(inner(x)) for inner with zero constant term (Horner)."""
        if inner[0] != 0:
            raise SeriesError("composition needs an inner series without constant term")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        out = PowerSeries.constant(self.coefficients[n], n)
        for c in reversed(self.coefficients[:n]):
            out = out * inner + c
        return out


def gf_of_moments(spec: Union[MomentSpec, BetaParams], order: int) -> PowerSeries:
    """Ordinary generating function of M_n(spec) (or m_n for bare Beta parameters)."""
    if isinstance(spec, BetaParams):
        return PowerSeries(tuple(beta_moments(spec, order + 1)))
    return PowerSeries(tuple(moments(spec, order + 1)))


def substitute_shift(g: PowerSeries, c: RationalLike) -> PowerSeries:
    """(1/(1-cx)) g(x/(1-cx)): the generating function of sum_j C(n,j) f_j c^(n-j)."""
    c = as_rational(c)
    if c == 0:
        return g
    n = g.order
    geometric = PowerSeries.polynomial([1, -c], n).reciprocal()
    inner = PowerSeries.x(n) * geometric
    return geometric * g.compose(inner)


def gf_param_shift(g: PowerSeries, params: BetaParams, direction: str) -> PowerSeries:
    """Generating function of Beta moments after raising alpha or beta by one.

    ``g`` is the m-series of ``params``; ``direction`` is ``"alpha"`` or ``"beta"``.
    The result has one order less than ``g``.
    """
    a, b = params.alpha, params.beta
    if direction == "alpha":
        return (g - 1).divide_by_x(1) * ((a + b) / a)
    if direction == "beta":
        one_minus_x = PowerSeries.polynomial([1, -1], g.order)
        return (1 - one_minus_x * g).divide_by_x(1) * ((a + b) / b)
    raise ValueError("direction must be 'alpha' or 'beta'")
