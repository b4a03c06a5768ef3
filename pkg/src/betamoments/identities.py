"""Expansions of one Beta moment sequence in terms of another, and a registry
of the resulting finite and infinite identities.

Two expansions are implemented.

``ratio_expansion`` (laws on [0, 4]) writes the density ratio as
x^a (1-x)^(beta-delta) and expands the second factor, giving

    M_n(0,alpha,beta) = K * sum_k (delta-beta)^(k) / (k! 4^k) * M_{n+a+k}(0,gamma,delta)

with K = B(gamma,delta) / (B(alpha,beta) 4^a) and a = alpha - gamma a
nonnegative integer.

``symmetric_expansion`` (laws on [-2, 2]) expands (1+t)^a (1-t)^b with
a = alpha - gamma, b = beta - delta:

    S_n(alpha,beta) = K * sum_k c_k(a,b) / (k! 2^k) * S_{n+k}(gamma,delta)

with K = 2^-(a+b) B(gamma,delta) / B(alpha,beta).

Both sums are unit-argument hypergeometric series (the symmetric one when
gamma = delta and |a-b| <= 1), so their remainders are certified by
:mod:`betamoments.tails`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Optional, Union

from .exact import (
    RationalLike,
    as_rational,
    binomial,
    catalan,
    central_binomial,
    falling_factorial,
    rising_factorial,
)
from .moments import M, MomentSpec, S, moments
from .tails import (
    CertificationError,
    Enclosure,
    HypergeometricSeries,
    PiRational,
    TailCertificate,
    certify_tail,
    gamma_value,
    gauss_2f1,
)

__all__ = [
    "ExpansionCoefficients",
    "IdentityResult",
    "UnknownIdentity",
    "d",
    "expansion_c",
    "expansion_coefficients",
    "finite_ids",
    "infinite_ids",
    "ratio_expansion",
    "symmetric_expansion",
    "verify",
    "verify_finite",
    "verify_infinite",
]

DEFAULT_DEPTH = 40
LITERAL_CHECK_TERMS = 30


class UnknownIdentity(KeyError):
    pass


# --- expansion coefficients -------------------------------------------------


def expansion_c(k: int, a: RationalLike, b: RationalLike) -> Fraction:
    """k! times the x^k coefficient of (1+x)^a (1-x)^b."""
    a, b = as_rational(a), as_rational(b)
    return sum(
        (binomial(k, j) * (-1) ** (k - j) * falling_factorial(a, j) * falling_factorial(b, k - j)
         for j in range(k + 1)),
        Fraction(0),
    )


@lru_cache(maxsize=64)
def _c_table(a: Fraction, b: Fraction, count: int) -> tuple[Fraction, ...]:
    fa, fb = [Fraction(1)], [Fraction(1)]
    for j in range(1, count):
        fa.append(fa[-1] * (a - j + 1))
        fb.append(fb[-1] * (b - j + 1))
    return tuple(
        sum((binomial(k, j) * (-1) ** (k - j) * fa[j] * fb[k - j] for j in range(k + 1)), Fraction(0))
        for k in range(count)
    )


@dataclass(frozen=True)
class ExpansionCoefficients:
    a: Fraction
    b: Fraction
    values: tuple[Fraction, ...]


def expansion_coefficients(a: RationalLike, b: RationalLike, count: int) -> ExpansionCoefficients:
    a, b = as_rational(a), as_rational(b)
    return ExpansionCoefficients(a, b, _c_table(a, b, count))


def _catalan_ext(n: int) -> Fraction:
    # C_{-1} = -1/2 makes the d-formula uniform
    if n == -1:
        return Fraction(-1, 2)
    return Fraction(catalan(n))


def d(n: int) -> Fraction:
    """c_n(-1/2, 1/2); exponential generating function sqrt((1-x)/(1+x))."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return Fraction(1)
    s = sum(((1 if k % 2 else -1) * central_binomial(k) * _catalan_ext(n - k - 1) for k in range(n + 1)),
            Fraction(0))
    return Fraction(factorial(n), 2 * 4 ** (n - 1)) * s


# --- expansions -------------------------------------------------------------


def _beta_ratio(alpha: Fraction, beta: Fraction, gamma: Fraction, delta: Fraction) -> PiRational:
    """B(gamma,delta) / B(alpha,beta) with sqrt(pi) bookkeeping."""
    parts = [gamma_value(x) for x in (gamma, delta, alpha + beta, alpha, beta, gamma + delta)]
    if any(p is None for p in parts):
        raise ValueError("Beta parameters must be positive")
    g, dl, ab, a, b, gd = parts
    return g * dl * ab / (a * b * gd)


def _unit_sum(series: HypergeometricSeries, J: int) -> tuple[Enclosure, TailCertificate]:
    cert = certify_tail(series, J)
    return cert.enclosure.shift(series.partial(J)), cert


def _same(x: PiRational, y: PiRational) -> bool:
    if x.value == 0 or y.value == 0:
        return x.value == y.value
    return x.value == y.value and x.half_powers == y.half_powers


@dataclass(frozen=True)
class ExpansionValue:
    """Certified value of an expansion: ``enclosure`` already includes K."""

    enclosure: Enclosure
    certificate: TailCertificate
    constant: PiRational
    series: Optional[HypergeometricSeries]

    def __iter__(self):
        # allows `value, cert = ratio_expansion(...)`
        return iter((self.enclosure, self.certificate))


def ratio_expansion(n: int, alpha: RationalLike, beta: RationalLike, gamma: RationalLike,
                    delta: RationalLike, J: int = DEFAULT_DEPTH) -> ExpansionValue:
    """Certified value of K * sum_k (delta-beta)^(k)/(k! 4^k) M_{n+a+k}(0,gamma,delta)."""
    alpha, beta, gamma, delta = map(as_rational, (alpha, beta, gamma, delta))
    if min(alpha, beta, gamma, delta) <= 0:
        raise ValueError("Beta parameters must be positive")
    a = alpha - gamma
    if a.denominator != 1 or a < 0:
        raise ValueError(f"alpha - gamma = {a} must be a nonnegative integer")
    a = int(a)
    K = _beta_ratio(alpha, beta, gamma, delta) / Fraction(4**a)
    series = _ratio_series(n, a, beta, gamma, delta)
    _check_normalization(K, _ratio_series(0, a, beta, gamma, delta), "ratio expansion")
    value, cert = _unit_sum(series, J)
    return ExpansionValue(value.scale(K), cert, K, series)


def _ratio_series(n: int, a: int, beta: Fraction, gamma: Fraction, delta: Fraction) -> HypergeometricSeries:
    N = n + a
    t0 = Fraction(4**N) * rising_factorial(gamma, N) / rising_factorial(gamma + delta, N)
    return HypergeometricSeries(t0, (delta - beta, gamma + N), (gamma + delta + N, Fraction(1)))


def _series_total(series: HypergeometricSeries) -> PiRational:
    last = series.terminating_at()
    if last is not None:
        return PiRational(series.partial(last + 1))
    up, low = series.reduced()
    if 1 not in low:
        up, low = up + [Fraction(1)], low + [Fraction(1)]
    if len(up) != 2 or len(low) != 2:
        raise CertificationError("series is not a unit-argument 2F1")
    low.remove(Fraction(1))
    return gauss_2f1(up[0], up[1], low[0]) * series.t0


def _check_normalization(K: PiRational, series0: Optional[HypergeometricSeries], what: str) -> None:
    # the n = 0 instance must reproduce the zeroth moment, 1
    if series0 is None or series0.z != 1:
        return
    total = K * _series_total(series0)
    if not _same(total, PiRational(Fraction(1))):
        raise ArithmeticError(f"{what}: constant K = {K} fails normalization (n=0 gives {total})")


def _symmetric_class(a: Fraction, b: Fraction, gamma: Fraction, delta: Fraction) -> bool:
    return gamma == delta and abs(a - b) <= 1 and a - b in (-1, 0, 1)


def symmetric_expansion(n: int, alpha: RationalLike, beta: RationalLike, gamma: RationalLike,
                        delta: RationalLike, J: int = DEFAULT_DEPTH) -> ExpansionValue:
    """Certified value of K * sum_k c_k(a,b)/(k! 2^k) S_{n+k}(gamma,delta).

    ``J`` is the truncation index in k.  The remainder is certified when the
    series terminates (a, b nonnegative integers) or when gamma = delta and
    |a - b| <= 1, where only k of the parity of n contribute.
    """
    alpha, beta, gamma, delta = map(as_rational, (alpha, beta, gamma, delta))
    if min(alpha, beta, gamma, delta) <= 0:
        raise ValueError("Beta parameters must be positive")
    a, b = alpha - gamma, beta - delta
    if (a + b).denominator != 1:
        raise CertificationError(f"2^-(a+b) with a+b = {a + b} is not rational")
    K = _beta_ratio(alpha, beta, gamma, delta) * Fraction(2) ** int(-(a + b))

    finite = a.denominator == 1 and b.denominator == 1 and a >= 0 and b >= 0
    reach = int(a + b) + 1 if finite else J
    svals = moments(MomentSpec.symmetric(gamma, delta), n + max(reach, 1))
    ck = _c_table(a, b, max(reach, 1))

    def literal(k: int) -> Fraction:
        return ck[k] / (factorial(k) * 2**k) * svals[n + k]

    if finite:
        last = int(a + b)
        partial = sum((literal(k) for k in range(min(J, last + 1))), Fraction(0))
        if J > last:
            cert = TailCertificate(J, "Finite", Enclosure.exact(Fraction(0)),
                                   (f"c_k vanishes for k > {last}",))
        else:
            cert = TailCertificate(J, "Finite", Enclosure.exact(
                sum((literal(k) for k in range(J, last + 1)), Fraction(0))), (f"c_k vanishes for k > {last}",))
        return ExpansionValue(cert.enclosure.shift(partial).scale(K), cert, K, None)

    if not _symmetric_class(a, b, gamma, delta):
        raise CertificationError(
            f"no certificate for c_k({a},{b}) with gamma={gamma}, delta={delta}; need gamma = delta and |a-b| <= 1")
    series = _symmetric_series(n, a, b, gamma)
    _check_normalization(K, _symmetric_series(0, a, b, gamma), "symmetric expansion")
    partial = sum((literal(k) for k in range(J)), Fraction(0))
    if series is None:
        # odd n with a = b: every S_{n+k} with c_k != 0 vanishes
        cert = TailCertificate(J, "Finite", Enclosure.exact(Fraction(0)), ("odd moments of a symmetric law vanish",))
        return ExpansionValue(Enclosure.exact(partial).scale(K), cert, K, None)
    q = n % 2
    Js = (J - q + 1) // 2 if J > q else 0  # first s with 2s+q >= J
    # the literal partial sum and the hypergeometric one must agree
    if partial != series.partial(Js):
        raise ArithmeticError("hypergeometric form of the symmetric expansion disagrees with c_k terms")
    cert = certify_tail(series, Js)
    return ExpansionValue(cert.enclosure.shift(partial).scale(K), cert, K, series)


def _symmetric_series(n: int, a: Fraction, b: Fraction, gamma: Fraction) -> Optional[HypergeometricSeries]:
    """Series in s for the parity class k = 2s + (n mod 2); None when it is identically 0."""
    q = n % 2
    if a == b and q == 1:
        return None
    e = -min(a, b)
    sign = -1 if (q == 1 and a < b) else 1
    m1 = (n + q) // 2
    half = Fraction(1, 2)
    t0 = Fraction(sign * 4**m1, 2**q) * rising_factorial(half, m1) / rising_factorial(gamma + half, m1)
    return HypergeometricSeries(t0, (e, m1 + half), (m1 + gamma + half, Fraction(1)))


# --- identity registry ------------------------------------------------------


@dataclass(frozen=True)
class IdentityResult:
    """``status`` is ExactMatch, EnclosureContains or Fail."""

    identity: str
    n: int
    lhs: Fraction
    rhs: Union[Fraction, Enclosure]
    status: str
    method: str = "exact"
    width: Optional[object] = None
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return self.status != "Fail"


def _judge(identity: str, n: int, lhs: Fraction, rhs, method: str = "exact",
           notes: tuple[str, ...] = ()) -> IdentityResult:
    if isinstance(rhs, Enclosure):
        if rhs.is_exact:
            status = "ExactMatch" if rhs.value == lhs else "Fail"
            return IdentityResult(identity, n, lhs, rhs.value, status, method, Fraction(0), notes)
        status = "EnclosureContains" if rhs.contains(lhs) else "Fail"
        return IdentityResult(identity, n, lhs, rhs, status, method, rhs.width(), notes)
    status = "ExactMatch" if lhs == rhs else "Fail"
    return IdentityResult(identity, n, lhs, Fraction(rhs), status, method, Fraction(0), notes)


def _cat_quarter_sum(n: int) -> Fraction:
    return sum((Fraction(catalan(j), 4**j) for j in range(n)), Fraction(0))


def _motzkin(n: int) -> Fraction:
    return M(n, MomentSpec.of(-1, Fraction(3, 2), Fraction(3, 2)))


_B = binomial
_FINITE: dict[str, tuple[str, int, Callable[[int], Fraction], Callable[[int], Fraction]]] = {
    "c0-i": ("C_n = 2 binom(2n,n) - binom(2n+2,n+1)/2", 0,
             lambda n: Fraction(catalan(n)),
             lambda n: 2 * _B(2 * n, n) - Fraction(_B(2 * n + 2, n + 1), 2)),
    "c0-i-ballot": ("C_n = binom(2n,n) - binom(2n,n-1)", 0,
                    lambda n: Fraction(catalan(n)),
                    lambda n: Fraction(_B(2 * n, n) - (_B(2 * n, n - 1) if n >= 1 else 0))),
    "c0-ii-odd": ("C_{2n+1} = sum_i binom(2n,2i) 4^(n-i) C_i", 0,
                  lambda n: Fraction(catalan(2 * n + 1)),
                  lambda n: Fraction(sum(_B(2 * n, 2 * i) * 4 ** (n - i) * catalan(i) for i in range(n + 1)))),
    "c0-ii-even": ("C_{2n+2} = 2 sum_i binom(2n+1,2i) 4^(n-i) C_i", 0,
                   lambda n: Fraction(catalan(2 * n + 2)),
                   lambda n: Fraction(2 * sum(_B(2 * n + 1, 2 * i) * 4 ** (n - i) * catalan(i)
                                              for i in range(n + 1)))),
    "c0-v": ("binom(2n,n)/4^n = 1 - (1/2) sum_{j<n} C_j/4^j", 0,
             lambda n: Fraction(central_binomial(n), 4**n),
             lambda n: 1 - _cat_quarter_sum(n) / 2),
    "st-i": ("sum_i binom(n,2i) 2^(n-2i) binom(2i,i) = binom(2n,n)", 0,
             lambda n: Fraction(central_binomial(n)),
             lambda n: Fraction(sum(_B(n, 2 * i) * 2 ** (n - 2 * i) * central_binomial(i)
                                    for i in range(n // 2 + 1)))),
    "st-ii": ("binom(2n,n) = 2*4^(n-1) - 2^(n-1) sum_{j=1}^{n/2} binom(n,2j) sum_{s<j} C_s/4^s", 1,
              lambda n: Fraction(central_binomial(n)),
              lambda n: 2 * Fraction(4) ** (n - 1)
              - Fraction(2) ** (n - 1) * sum((_B(n, 2 * j) * _cat_quarter_sum(j) for j in range(1, n // 2 + 1)),
                                             Fraction(0))),
    "st-iii": ("C_{n+1} = 2 binom(2n,n) - (1/2) sum_j binom(n,2j) 2^(n-2j) binom(2j+2,j+1)", 0,
               lambda n: Fraction(catalan(n + 1)),
               lambda n: 2 * central_binomial(n)
               - Fraction(sum(_B(n, 2 * j) * 2 ** (n - 2 * j) * central_binomial(j + 1)
                              for j in range(n // 2 + 1)), 2)),
    "st-iv": ("C_n = sum_k (-1)^k binom(n,k) binom(k,floor(k/2)) 2^(n-k)", 0,
              lambda n: Fraction(catalan(n)),
              lambda n: Fraction(sum((-1) ** k * _B(n, k) * _B(k, k // 2) * 2 ** (n - k) for k in range(n + 1)))),
    "st-v": ("binom(n,floor(n/2))/2^(n-1) = 2 - sum_{j<=(n-1)/2} C_j/4^j", 0,
             lambda n: Fraction(_B(n, n // 2) * 2, 2**n),
             lambda n: 2 - _cat_quarter_sum((n - 1) // 2 + 1 if n >= 1 else 0)),
    "st-vi": ("S_n(3/2,3/2) = 2 binom(n,floor(n/2)) - binom(n+1,floor((n+1)/2))", 0,
              lambda n: S(n, Fraction(3, 2), Fraction(3, 2)),
              lambda n: Fraction(2 * _B(n, n // 2) - _B(n + 1, (n + 1) // 2))),
    "motz": ("Mo_n = sum_j binom(n,2j) C_j", 0,
             _motzkin,
             lambda n: Fraction(sum(_B(n, 2 * j) * catalan(j) for j in range(n // 2 + 1)))),
}


@dataclass(frozen=True)
class _Infinite:
    description: str
    lhs: Callable[[int], Fraction]
    expand: Callable[[int, int], ExpansionValue]
    # rational part of the k-th (or s-th) term in closed form, for cross-checking the series
    literal: Optional[Callable[[int, int], Fraction]] = None
    # False when the closed-form terms leave the constant K outside the sum
    literal_has_constant: bool = True


_H = Fraction(1, 2)


def _u(j: int) -> Fraction:
    return Fraction(central_binomial(j), 4**j)


def _st_vii_lhs(n: int) -> Fraction:
    j, odd = divmod(n, 2)
    return Fraction(-2 * 4**j, 2 * j + 3) if odd else Fraction(4**j, 2 * j + 1)


def _st_vii_literal(n: int, s: int) -> Fraction:
    j, odd = divmod(n, 2)
    if odd:
        return -catalan(j + s + 1) * _u(s) / (2 * 4**s)
    return catalan(j + s) * _u(s) / 4**s


_INFINITE: dict[str, _Infinite] = {
    "c0-iii": _Infinite(
        "C_n = (3/2) sum_i 4^-i (2n+2i)! / ((n+i)! (n+i+2)!)",
        lambda n: Fraction(catalan(n)),
        lambda n, J: ratio_expansion(n, _H, 3 * _H, _H, 5 * _H, J),
        lambda n, i: Fraction(3, 2) * Fraction(factorial(2 * n + 2 * i),
                                               4**i * factorial(n + i) * factorial(n + i + 2)),
    ),
    "c0-iv": _Infinite(
        "(n+1)!(n+2)!/(2n+4)! = 4^-(n+2) sum_j binom(2j,j) / (4^j (n+j+2))",
        lambda n: Fraction(factorial(n + 1) * factorial(n + 2), factorial(2 * n + 4)),
        # lhs = M_n(0,2,1/2) / (3 * 4^(2n+1))
        lambda n, J: _scaled(ratio_expansion(n, 2, _H, 2, 1, J), Fraction(1, 3 * 4 ** (2 * n + 1))),
        lambda n, j: Fraction(1, 4 ** (n + 2)) * _u(j) / (n + j + 2),
    ),
    "c0-vi": _Infinite(
        "n! n! / (2n+1)! = 4 sum_j 4^j (n+j)! (n+j+2)! / (2n+2j+4)!",
        lambda n: Fraction(factorial(n) ** 2, factorial(2 * n + 1)),
        # lhs = M_n(0,1,1/2) / 16^n
        lambda n, J: _scaled(ratio_expansion(n, 1, _H, 1, 3 * _H, J), Fraction(1, 16**n)),
        lambda n, j: Fraction(4 * 4**j * factorial(n + j) * factorial(n + j + 2), factorial(2 * n + 2 * j + 4)),
    ),
    "lemma-iiib": _Infinite(
        "M_n(0,1/2,1/2) = (1/2) sum_j M_{n+j}(0,1/2,3/2) / 4^j",
        lambda n: M(n, MomentSpec.of(0, _H, _H)),
        lambda n, J: ratio_expansion(n, _H, _H, _H, 3 * _H, J),
        lambda n, j: _H * M(n + j, MomentSpec.of(0, _H, 3 * _H)) / 4**j,
    ),
    "st-vii": _Infinite(
        "S_n(1,2) = (pi/4) sum_k d_k / (k! 2^k) S_{n+k}(3/2,3/2)",
        lambda n: S(n, 1, 2),
        lambda n, J: symmetric_expansion(n, 1, 2, 3 * _H, 3 * _H, J),
        _st_vii_literal,
        literal_has_constant=False,
    ),
    "exp3-ii": _Infinite(
        "S_n(1/2,1/2) = (1/2) sum_k c_k(-1,-1) / (k! 2^k) S_{n+k}(3/2,3/2)",
        lambda n: S(n, _H, _H),
        lambda n, J: symmetric_expansion(n, _H, _H, 3 * _H, 3 * _H, J),
    ),
    "eq2": _Infinite(
        "sum_n C_n / 4^n = 2; partial sum to N plus remainder 2 binom(2N,N)/4^N",
        lambda N: Fraction(2),
        lambda N, J: _catalan_quarter(N),
        lambda N, j: Fraction(catalan(j), 4**j),
    ),
}
_INFINITE["st-vii-even"] = _INFINITE["st-vii"]
_INFINITE["st-vii-odd"] = _INFINITE["st-vii"]


def _scaled(v: ExpansionValue, q: Fraction) -> ExpansionValue:
    return ExpansionValue(v.enclosure.scale(q), v.certificate, v.constant * q, v.series)


def _catalan_quarter(N: int) -> ExpansionValue:
    series = HypergeometricSeries(1, (_H,), (Fraction(2),))
    cert = certify_tail(series, N)
    if cert.exact != 2 * _u(N):
        raise ArithmeticError("remainder of sum C_n/4^n is not 2 binom(2N,N)/4^N")
    return ExpansionValue(cert.enclosure.shift(series.partial(N)), cert, PiRational(Fraction(1)), series)


def finite_ids() -> list[str]:
    return list(_FINITE)


def infinite_ids() -> list[str]:
    return list(_INFINITE)


def describe(identity: str) -> str:
    if identity in _FINITE:
        return _FINITE[identity][0]
    if identity in _INFINITE:
        return _INFINITE[identity].description
    raise UnknownIdentity(identity)


def verify_finite(identity: str, ns: Iterable[int]) -> list[IdentityResult]:
    """Exact check of a finite identity; n below its domain is skipped."""
    if identity not in _FINITE:
        raise UnknownIdentity(identity)
    _, lo, lhs, rhs = _FINITE[identity]
    return [_judge(identity, n, lhs(n), rhs(n)) for n in ns if n >= lo]


def _literal_notes(spec: _Infinite, identity: str, n: int, value: ExpansionValue) -> tuple[bool, str]:
    if spec.literal is None or value.series is None:
        return True, "no closed-form term to compare"
    # closed-form terms against the hypergeometric ones, K's rational part removed
    k = value.constant.value if spec.literal_has_constant else Fraction(1)
    ours = value.series.terms(LITERAL_CHECK_TERMS)
    good = all(k * t == spec.literal(n, i) for i, t in enumerate(ours))
    return good, f"term formula {'agree' if good else 'DISAGREE'} for k < {LITERAL_CHECK_TERMS}"


def verify_infinite(identity: str, ns: Iterable[int], J: int = DEFAULT_DEPTH) -> list[IdentityResult]:
    """Certified check: the enclosure of the series must contain the exact left side."""
    if identity not in _INFINITE:
        raise UnknownIdentity(identity)
    spec = _INFINITE[identity]
    ns = list(ns)
    if identity == "st-vii-even":
        ns = [n for n in ns if n % 2 == 0]
    elif identity == "st-vii-odd":
        ns = [n for n in ns if n % 2 == 1]
    out = []
    for n in ns:
        value = spec.expand(n, J)
        good, note = _literal_notes(spec, identity, n, value)
        cert = value.certificate
        notes = (note, *cert.notes)
        res = _judge(identity, n, spec.lhs(n), value.enclosure, cert.method, notes)
        if not good:
            res = IdentityResult(res.identity, n, res.lhs, res.rhs, "Fail", res.method, res.width, notes)
        out.append(res)
    return out


def verify(identity: str, ns: Iterable[int], J: int = DEFAULT_DEPTH) -> list[IdentityResult]:
    if identity in _FINITE:
        return verify_finite(identity, ns)
    return verify_infinite(identity, ns, J)
