"""Hankel determinant checks for (Stieltjes) moment sequences, to finite order."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .exact import as_rational
from .moments import MomentSpec, moments

__all__ = ["HankelReport", "bareiss_determinant", "check_pm", "check_sequence", "hankel_determinants"]

DEFAULT_ORDER = 8


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination over the integers."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _determinant(matrix: list[list[Fraction]]) -> Fraction:
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    d = lcm(*(x.denominator for row in matrix for x in row))
    ints = [[int(x * d) for x in row] for row in matrix]
    return Fraction(bareiss_determinant(ints), d**n)


def hankel_determinants(seq: Sequence, N: int, shift: int = 0) -> list[Fraction]:
    """det[s_{shift+i+j}]_{0<=i,j<=n} for n = 0..N."""
    if shift not in (0, 1):
        raise ValueError("shift must be 0 or 1")
    need = 2 * N + 1 + shift
    if len(seq) < need:
        raise ValueError(f"need {need} terms for order {N} (shift {shift}), got {len(seq)}")
    s = [as_rational(t) for t in seq]
    return [
        _determinant([[s[shift + i + j] for j in range(n + 1)] for i in range(n + 1)])
        for n in range(N + 1)
    ]


@dataclass(frozen=True)
class HankelReport:
    order: int
    determinants: tuple[Fraction, ...]
    shifted_determinants: tuple[Fraction, ...]
    stieltjes_meaningful: bool = True

    @property
    def pm(self) -> bool:
        """All Hankel determinants nonnegative (necessary condition up to the order)."""
        return all(d >= 0 for d in self.determinants)

    @property
    def stieltjes(self) -> bool:
        return all(d >= 0 for d in self.shifted_determinants)

    @property
    def strictly_positive(self) -> bool:
        return all(d > 0 for d in self.determinants)

    @property
    def shifted_strictly_positive(self) -> bool:
        return all(d > 0 for d in self.shifted_determinants)

    @property
    def first_failure(self) -> int | None:
        """Smallest order n with a negative Hankel determinant."""
        return next((n for n, d in enumerate(self.determinants) if d < 0), None)


def check_sequence(seq: Sequence, N: int = DEFAULT_ORDER, stieltjes_meaningful: bool = True) -> HankelReport:
    """Both determinant families for an explicit sequence of length >= 2N+2."""
    return HankelReport(
        order=N,
        determinants=tuple(hankel_determinants(seq, N, 0)),
        shifted_determinants=tuple(hankel_determinants(seq, N, 1)),
        stieltjes_meaningful=stieltjes_meaningful,
    )


def check_pm(spec: MomentSpec, N: int = DEFAULT_ORDER) -> HankelReport:
    """Hankel report for M_n(spec); the shifted family only means something when c >= 0."""
    return check_sequence(moments(spec, 2 * N + 2), N, stieltjes_meaningful=spec.c >= 0)
