"""Certified remainders of hypergeometric series.

A series is stored as t_k = t0 * prod (u)_k / prod (l)_k * z^k, with the k!
written as a lower parameter 1.  Remainders sum_{k>=J} t_k are certified by

* ``Finite``: a nonpositive integer upper parameter ends the series before J;
* ``GaussClosedForm``: z = 1 and the series is a 2F1 with c - a - b > 0, so its
  total is Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b)); when one upper
  parameter is 1 the remainder t_J (J+c-1)/(c-a-1) is used directly;
* ``AlternatingBracket``: z < 0 and |t_{k+1}/t_k| <= 1 proven for k >= J.

Gamma values are kept exact for integer and half-integer arguments as a
rational times a power of sqrt(pi).  Whenever pi survives, the enclosure is an
``mpmath.iv`` interval at ``PRECISION`` bits.
"""
from __future__ import annotations

import threading
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Optional, Sequence

from mpmath import iv, mp

from .exact import RationalLike, as_rational, rising_factorial

__all__ = [
    "CertificationError",
    "Enclosure",
    "HypergeometricSeries",
    "PRECISION",
    "PiRational",
    "TailCertificate",
    "certify_tail",
    "gamma_value",
    "gauss_2f1",
]

PRECISION = 200

_iv_lock = threading.RLock()


@contextmanager
def interval_precision(bits: int = PRECISION):
    # mpmath's interval context is global; serialize changes to it
    with _iv_lock:
        old = iv.prec
        iv.prec = bits
        try:
            yield
        finally:
            iv.prec = old


class CertificationError(ArithmeticError):
    """No certificate applies to the series at the requested truncation."""


@dataclass(frozen=True)
class PiRational:
    """value * pi**(half_powers / 2)."""

    value: Fraction
    half_powers: int = 0

    def __mul__(self, other: "PiRational | RationalLike") -> "PiRational":
        if isinstance(other, PiRational):
            return PiRational(self.value * other.value, self.half_powers + other.half_powers)
        return PiRational(self.value * as_rational(other), self.half_powers)

    __rmul__ = __mul__

    def __truediv__(self, other: "PiRational | RationalLike") -> "PiRational":
        if isinstance(other, PiRational):
            return PiRational(self.value / other.value, self.half_powers - other.half_powers)
        return PiRational(self.value / as_rational(other), self.half_powers)

    @property
    def is_rational(self) -> bool:
        return self.half_powers == 0 or self.value == 0

    def interval(self):
        with interval_precision():
            x = _iv(self.value)
            if self.half_powers:
                x = x * iv.sqrt(iv.pi) ** self.half_powers
            return x

    def __str__(self) -> str:
        if self.half_powers == 0:
            return str(self.value)
        return f"{self.value}*pi^({self.half_powers}/2)"


def _iv(q: Fraction):
    return iv.mpf(q.numerator) / iv.mpf(q.denominator)


def gamma_value(x: RationalLike) -> Optional[PiRational]:
    """Gamma(x) for integer or half-integer x; None at the poles."""
    x = as_rational(x)
    if x.denominator == 1:
        n = x.numerator
        if n <= 0:
            return None
        return PiRational(Fraction(factorial(n - 1)))
    if x.denominator == 2:
        m = (x.numerator - 1) // 2  # x = m + 1/2
        if m >= 0:
            return PiRational(Fraction(factorial(2 * m), 4**m * factorial(m)), 1)
        k = -m
        return PiRational(Fraction((-4) ** k * factorial(k), factorial(2 * k)), 1)
    raise CertificationError(f"Gamma({x}) is not tracked exactly (only integers and half-integers)")


def gauss_2f1(a: Fraction, b: Fraction, c: Fraction) -> PiRational:
    """2F1(a, b; c; 1) by Gauss's theorem; needs c - a - b > 0."""
    if c - a - b <= 0:
        raise CertificationError(f"2F1({a},{b};{c};1) diverges: c-a-b = {c - a - b} <= 0")
    num_c, num_s = gamma_value(c), gamma_value(c - a - b)
    if num_c is None:
        raise CertificationError(f"2F1 lower parameter {c} is a pole")
    den_a, den_b = gamma_value(c - a), gamma_value(c - b)
    if den_a is None or den_b is None:
        return PiRational(Fraction(0))
    return num_c * num_s / (den_a * den_b)


@dataclass(frozen=True)
class Enclosure:
    """Either an exact rational interval [lo, hi] or an mpmath interval."""

    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    interval: object = None

    @classmethod
    def exact(cls, x: Fraction) -> "Enclosure":
        return cls(x, x)

    @property
    def is_rational(self) -> bool:
        return self.interval is None

    @property
    def is_exact(self) -> bool:
        return self.interval is None and self.lo == self.hi

    @property
    def value(self) -> Fraction:
        if not self.is_exact:
            raise ValueError("enclosure is not a single rational")
        return self.lo

    def as_interval(self):
        if self.interval is not None:
            return self.interval
        with interval_precision():
            return iv.mpf([_iv(self.lo).a, _iv(self.hi).b])

    def width(self):
        """Width as an exact Fraction, or as an upper bound (mpmath mpf)."""
        if self.interval is None:
            return self.hi - self.lo
        with interval_precision(), mp.workprec(PRECISION):
            return mp.mpf((self.interval.b - self.interval.a).b)

    def contains(self, x: RationalLike) -> bool:
        x = as_rational(x)
        if self.interval is None:
            return self.lo <= x <= self.hi
        with interval_precision():
            xi = _iv(x)
            return self.interval.a <= xi.a and xi.b <= self.interval.b

    def shift(self, q: Fraction) -> "Enclosure":
        if self.interval is None:
            return Enclosure(self.lo + q, self.hi + q)
        with interval_precision():
            return Enclosure(interval=self.interval + _iv(q))

    def scale(self, k: "PiRational | Fraction") -> "Enclosure":
        if not isinstance(k, PiRational):
            k = PiRational(as_rational(k))
        if self.interval is None and k.is_rational:
            a, b = self.lo * k.value, self.hi * k.value
            return Enclosure(min(a, b), max(a, b))
        with interval_precision():
            return Enclosure(interval=self.as_interval() * k.interval())

    def __str__(self) -> str:
        if self.is_exact:
            return str(self.lo)
        if self.interval is None:
            return f"[{self.lo}, {self.hi}]"
        return str(self.interval)


@dataclass(frozen=True)
class HypergeometricSeries:
    t0: Fraction
    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    z: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        object.__setattr__(self, "t0", as_rational(self.t0))
        object.__setattr__(self, "upper", tuple(as_rational(u) for u in self.upper))
        object.__setattr__(self, "lower", tuple(as_rational(v) for v in self.lower))
        object.__setattr__(self, "z", as_rational(self.z))
        if any(v <= 0 and v.denominator == 1 for v in self.lower):
            raise ValueError("lower parameters may not be nonpositive integers")

    def ratio(self, k: int) -> Fraction:
        r = self.z
        for u in self.upper:
            r *= u + k
        for v in self.lower:
            r /= v + k
        return r

    def term(self, k: int) -> Fraction:
        t = self.t0 * self.z**k
        for u in self.upper:
            t *= rising_factorial(u, k)
        for v in self.lower:
            t /= rising_factorial(v, k)
        return t

    def terms(self, count: int, start: int = 0) -> list[Fraction]:
        out = []
        t = self.term(start)
        for k in range(start, start + count):
            out.append(t)
            t *= self.ratio(k)
        return out

    def partial(self, J: int) -> Fraction:
        """sum_{k<J} t_k, accumulated over one running denominator."""
        if J <= 0:
            return Fraction(0)
        a, b = self.t0.numerator, self.t0.denominator  # current term a/b
        p = a  # partial sum is p/b
        for k in range(J - 1):
            r = self.ratio(k)
            a *= r.numerator
            b *= r.denominator
            p = p * r.denominator + a
        return Fraction(p, b)

    def reduced(self) -> tuple[list[Fraction], list[Fraction]]:
        """Upper/lower lists with common parameters cancelled."""
        up, low = list(self.upper), list(self.lower)
        for u in list(up):
            if u in low:
                up.remove(u)
                low.remove(u)
        return up, low

    def terminating_at(self) -> Optional[int]:
        """Index of the last possibly nonzero term, if the series is finite."""
        cut = [-u.numerator for u in self.upper if u.denominator == 1 and u <= 0]
        if self.t0 == 0:
            return -1
        return min(cut) if cut else None


@dataclass(frozen=True)
class TailCertificate:
    J: int
    method: str
    enclosure: Enclosure
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def exact(self) -> Optional[Fraction]:
        return self.enclosure.value if self.enclosure.is_exact else None


def _poly_mul(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _shifted_product(scale: Fraction, roots: Sequence[Fraction], J: int) -> list[Fraction]:
    # scale * prod (x + J + r) as coefficients in x
    p = [scale]
    for r in roots:
        p = _poly_mul(p, [J + r, Fraction(1)])
    return p


def _gauss_form(s: HypergeometricSeries) -> Optional[tuple[Fraction, Fraction, Fraction]]:
    up, low = s.reduced()
    if 1 not in low:
        up.append(Fraction(1))
        low.append(Fraction(1))
    if len(up) != 2 or len(low) != 2:
        return None
    low.remove(Fraction(1))
    return up[0], up[1], low[0]


def certify_tail(s: HypergeometricSeries, J: int) -> TailCertificate:
    """Enclose sum_{k >= J} t_k."""
    if J < 0:
        raise ValueError("J must be nonnegative")
    last = s.terminating_at()
    if last is not None:
        rest = sum(s.terms(last + 1 - J, J), Fraction(0)) if J <= last else Fraction(0)
        return TailCertificate(J, "Finite", Enclosure.exact(rest), (f"terms vanish beyond k = {last}",))
    if s.z == 1:
        return _gauss_tail(s, J)
    if s.z < 0:
        return _alternating_tail(s, J)
    raise CertificationError(f"no tail certificate for argument z = {s.z}")


def _gauss_tail(s: HypergeometricSeries, J: int) -> TailCertificate:
    form = _gauss_form(s)
    if form is None:
        raise CertificationError("series is not a unit-argument 2F1 after cancellation")
    a, b, c = form
    if c - a - b <= 0:
        raise CertificationError(f"unit-argument series diverges: c-a-b = {c - a - b}")
    one_signed_from = max([0] + [int(-p) + 1 for p in (a, b, c) if p <= 0])
    if J < one_signed_from:
        raise CertificationError(f"terms are not one-signed before k = {one_signed_from}; raise J")
    notes = [f"2F1({a},{b};{c};1), c-a-b = {c - a - b} > 0", f"terms one-signed for k >= {one_signed_from}"]
    if 1 in (a, b):
        # ratio (k+a')/(k+c): remainder t_J (J+c-1)/(c-a'-1), no total needed
        other = b if a == 1 else a
        tail = s.term(J) * (J + c - 1) / (c - other - 1)
        notes.append("local remainder t_J (J+c-1)/(c-a-1)")
        return TailCertificate(J, "GaussClosedForm", Enclosure.exact(tail), tuple(notes))
    total = gauss_2f1(a, b, c) * s.t0
    partial = s.partial(J)
    if total.is_rational:
        notes.append("remainder = Gauss total - partial sum")
        return TailCertificate(J, "GaussClosedForm", Enclosure.exact(total.value - partial), tuple(notes))
    notes.append(f"Gauss total {total} carries pi; remainder enclosed at {PRECISION} bits")
    with interval_precision():
        enc = Enclosure(interval=total.interval() - _iv(partial))
    return TailCertificate(J, "GaussInterval", enc, tuple(notes))


def _alternating_tail(s: HypergeometricSeries, J: int) -> TailCertificate:
    up, low = s.reduced()
    start = max([0] + [int(-p) + 1 for p in up + low if p <= 0])
    if J < start:
        raise CertificationError(f"sign pattern not settled before k = {start}; raise J")
    # |t_{k+1}/t_k| <= 1 for k >= J  <=>  D^2 - N^2 >= 0; nonnegative coefficients in (k - J) suffice
    zabs = abs(s.z)
    N = _shifted_product(Fraction(zabs.numerator), up, J)
    D = _shifted_product(Fraction(zabs.denominator), low, J)
    N2, D2 = _poly_mul(N, N), _poly_mul(D, D)
    size = max(len(N2), len(D2))
    diff = [(D2[i] if i < len(D2) else 0) - (N2[i] if i < len(N2) else 0) for i in range(size)]
    if any(c < 0 for c in diff):
        raise CertificationError(f"cannot prove |t_(k+1)/t_k| <= 1 for k >= {J}")
    decays = zabs < 1 or sum(low) - sum(up) > 0 and len(low) == len(up)
    if not decays:
        raise CertificationError("terms are not shown to tend to zero")
    tJ = s.term(J)
    lo, hi = (tJ, Fraction(0)) if tJ < 0 else (Fraction(0), tJ)
    notes = (f"alternating from k = {start}", f"|ratio| <= 1 for k >= {J}", "terms tend to zero")
    return TailCertificate(J, "AlternatingBracket", Enclosure(lo, hi), notes)
