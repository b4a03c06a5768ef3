"""Sequence transform vocabulary and a small exhaustive matcher.

Atoms compose left to right.  Shifts follow the OEIS-style reading used for
moment tables: ``ShiftRight(p)`` prepends the values ``p``; ``ShiftLeft(p)``
drops a prefix, but only after checking that it really equals ``p``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence, Union

from .exact import as_rational, binomial, format_rational

__all__ = [
    "BinomialTransform",
    "ConstantScale",
    "GeometricScale",
    "InverseBinomialTransform",
    "ShiftLeft",
    "ShiftRight",
    "SignChange",
    "TransformError",
    "TransformSpec",
    "apply",
    "inverse",
    "match",
    "match_all",
]


class TransformError(ValueError):
    """Raised when a transform cannot be applied to the given sequence."""


def _fmt(xs: Iterable[Fraction]) -> str:
    return ",".join(format_rational(x) for x in xs)


@dataclass(frozen=True)
class BinomialTransform:
    def __call__(self, seq: list[Fraction]) -> list[Fraction]:
        return [sum((binomial(n, j) * seq[j] for j in range(n + 1)), Fraction(0)) for n in range(len(seq))]

    def __str__(self) -> str:
        return "binomial"


@dataclass(frozen=True)
class InverseBinomialTransform:
    def __call__(self, seq: list[Fraction]) -> list[Fraction]:
        return [
            sum(((-1) ** (n - j) * binomial(n, j) * seq[j] for j in range(n + 1)), Fraction(0))
            for n in range(len(seq))
        ]

    def __str__(self) -> str:
        return "inverse-binomial"


@dataclass(frozen=True)
class GeometricScale:
    """n-th term multiplied by q**n."""

    q: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "q", as_rational(self.q))
        if self.q == 0:
            raise ValueError("geometric scale must be nonzero")

    def __call__(self, seq: list[Fraction]) -> list[Fraction]:
        return [t * self.q**n for n, t in enumerate(seq)]

    def __str__(self) -> str:
        return f"geometric({format_rational(self.q)})"


@dataclass(frozen=True)
class ConstantScale:
    s: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "s", as_rational(self.s))
        if self.s == 0:
            raise ValueError("constant scale must be nonzero")

    def __call__(self, seq: list[Fraction]) -> list[Fraction]:
        return [self.s * t for t in seq]

    def __str__(self) -> str:
        return f"scale({format_rational(self.s)})"


@dataclass(frozen=True)
class ShiftLeft:
    """Drop a prefix, which must equal ``prefix``."""

    prefix: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "prefix", tuple(as_rational(p) for p in self.prefix))

    def __call__(self, seq: list[Fraction]) -> list[Fraction]:
        k = len(self.prefix)
        if len(seq) < k:
            raise TransformError(f"sequence of length {len(seq)} is too short to drop {k} terms")
        if tuple(seq[:k]) != self.prefix:
            raise TransformError(f"prefix mismatch: expected [{_fmt(self.prefix)}], got [{_fmt(seq[:k])}]")
        return list(seq[k:])

    def __str__(self) -> str:
        return f"l-s({_fmt(self.prefix)})"


@dataclass(frozen=True)
class ShiftRight:
    """Prepend ``prefix``."""

    prefix: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "prefix", tuple(as_rational(p) for p in self.prefix))

    def __call__(self, seq: list[Fraction]) -> list[Fraction]:
        return list(self.prefix) + list(seq)

    def __str__(self) -> str:
        return f"r-s({_fmt(self.prefix)})"


@dataclass(frozen=True)
class SignChange:
    """Flip the sign of odd-indexed terms."""

    def __call__(self, seq: list[Fraction]) -> list[Fraction]:
        return [-t if n % 2 else t for n, t in enumerate(seq)]

    def __str__(self) -> str:
        return "sc"


Atom = Union[
    BinomialTransform,
    InverseBinomialTransform,
    GeometricScale,
    ConstantScale,
    ShiftLeft,
    ShiftRight,
    SignChange,
]


@dataclass(frozen=True)
class TransformSpec:
    atoms: tuple[Atom, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "atoms", tuple(self.atoms))

    def __len__(self) -> int:
        return len(self.atoms)

    def __iter__(self):
        return iter(self.atoms)

    def then(self, *atoms: Atom) -> "TransformSpec":
        return TransformSpec(self.atoms + tuple(atoms))

    def __str__(self) -> str:
        return " ; ".join(str(a) for a in self.atoms) if self.atoms else "identity"


def apply(t: TransformSpec | Sequence[Atom], seq: Sequence) -> list[Fraction]:
    out = [as_rational(x) for x in seq]
    for atom in t:
        out = atom(out)
    return out


def _invert_atom(atom: Atom) -> Atom:
    if isinstance(atom, BinomialTransform):
        return InverseBinomialTransform()
    if isinstance(atom, InverseBinomialTransform):
        return BinomialTransform()
    if isinstance(atom, GeometricScale):
        return GeometricScale(1 / atom.q)
    if isinstance(atom, ConstantScale):
        return ConstantScale(1 / atom.s)
    if isinstance(atom, ShiftLeft):
        return ShiftRight(atom.prefix)
    if isinstance(atom, ShiftRight):
        return ShiftLeft(atom.prefix)
    if isinstance(atom, SignChange):
        return SignChange()
    raise TypeError(f"not a transform atom: {atom!r}")


def inverse(t: TransformSpec) -> TransformSpec:
    return TransformSpec(tuple(_invert_atom(a) for a in reversed(t.atoms)))


# -- matching ---------------------------------------------------------------

GEOMETRIC_BASES = tuple(Fraction(q) for q in (-1, 2, -2, 4, -4, Fraction(1, 2), Fraction(1, 4)))
MAX_SHIFT = 3
MAX_SCALE_HEIGHT = 60
MIN_OVERLAP = 6


def _small(s: Fraction) -> bool:
    return abs(s.numerator) <= MAX_SCALE_HEIGHT and s.denominator <= MAX_SCALE_HEIGHT


def _candidate_atoms(b: list[Fraction], a: list[Fraction]) -> list[Atom]:
    # shift prefixes are read off the sequences themselves
    atoms: list[Atom] = [SignChange(), BinomialTransform(), InverseBinomialTransform()]
    atoms += [GeometricScale(q) for q in GEOMETRIC_BASES]
    for k in range(1, MAX_SHIFT + 1):
        atoms.append(ShiftLeft(tuple(b[:k])))
        atoms.append(ShiftRight(tuple(a[:k])))
    return atoms


def _agrees(x: list[Fraction], y: list[Fraction]) -> bool:
    k = min(len(x), len(y))
    return k >= MIN_OVERLAP and x[:k] == y[:k]


def _constant_ratio(x: list[Fraction], y: list[Fraction]) -> Fraction | None:
    # s with s * x == y on the common prefix
    k = min(len(x), len(y))
    if k < MIN_OVERLAP:
        return None
    s = None
    for xi, yi in zip(x[:k], y[:k]):
        if xi == 0:
            if yi != 0:
                return None
            continue
        r = yi / xi
        if s is None:
            s = r
        elif r != s:
            return None
    if s is None or s == 0 or s == 1 or not _small(s):
        return None
    return s


def _pipelines(a: list[Fraction], b: list[Fraction], depth: int):
    atoms = _candidate_atoms(b, a)
    for d in range(depth + 1):
        for combo in product(atoms, repeat=d):
            yield TransformSpec(combo)


def match_all(a: Sequence, b: Sequence, depth: int = 3) -> list[TransformSpec]:
    """All transforms ``t`` of minimal length with ``apply(t, b) == a`` on the common prefix."""
    a = [as_rational(x) for x in a]
    b = [as_rational(x) for x in b]
    if len(a) < 8 or len(b) < 8:
        raise ValueError("both sequences need at least 8 terms")
    found: dict[int, list[TransformSpec]] = {}
    for spec in _pipelines(a, b, depth):
        if found and len(spec) > min(found):
            break
        try:
            out = apply(spec, b)
        except TransformError:
            continue
        if _agrees(out, a):
            found.setdefault(len(spec), []).append(spec)
            continue
        if len(spec) < depth:
            s = _constant_ratio(out, a)
            if s is not None:
                found.setdefault(len(spec) + 1, []).append(spec.then(ConstantScale(s)))
    if not found:
        return []
    best = min(found)
    unique: list[TransformSpec] = []
    for spec in found[best]:
        if spec not in unique:
            unique.append(spec)
    return unique


def match(a: Sequence, b: Sequence, depth: int = 3) -> TransformSpec | None:
    """First (shortest) transform mapping ``b`` onto ``a``, or None."""
    hits = match_all(a, b, depth)
    return hits[0] if hits else None
