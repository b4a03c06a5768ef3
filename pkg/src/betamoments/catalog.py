"""Named moment sequences and the OEIS entries they are identified with."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .moments import MomentSpec, moments
from .transforms import ConstantScale, ShiftRight, SignChange, TransformSpec, apply

__all__ = ["NamedSequenceEntry", "catalog", "entry", "entry_terms"]


@dataclass(frozen=True)
class NamedSequenceEntry:
    """One identified row: ``transform`` applied to ``scale**n * M_n(spec)``.

    ``reference`` holds a frozen prefix for rows that have no OEIS entry; for
    the others the OEIS data itself is the reference.
    """

    label: str
    spec: MomentSpec
    scale: Fraction = Fraction(1)
    transform: TransformSpec = TransformSpec()
    oeis_id: Optional[str] = None
    reference: tuple[Fraction, ...] = ()

    @property
    def key(self) -> str:
        base = f"M{self.spec}"
        if self.scale != 1:
            base = f"{self.scale}^n*{base}"
        return base


def entry_terms(e: NamedSequenceEntry, count: int) -> list[Fraction]:
    """First ``count`` terms of the transformed, scaled moment sequence."""
    raw = moments(e.spec, count)
    seq = [e.scale**n * t for n, t in enumerate(raw)]
    return apply(e.transform, seq)[:count]


def _t(*atoms) -> TransformSpec:
    return TransformSpec(tuple(atoms))


def _rs(*prefix) -> ShiftRight:
    return ShiftRight(tuple(prefix))


def _cs(s) -> ConstantScale:
    return ConstantScale(Fraction(s))


def _row(label, c, a, b, oeis=None, scale=1, transform=(), reference=()):
    return NamedSequenceEntry(
        label=label,
        spec=MomentSpec.of(c, a, b),
        scale=Fraction(scale),
        transform=_t(*transform),
        oeis_id=oeis,
        reference=tuple(Fraction(r) for r in reference),
    )


_ROWS = (
    # c = 0, half-integer Beta parameters
    _row("central binomial", 0, "1/2", "1/2", "A000984"),
    _row("Catalan", 0, "1/2", "3/2", "A000108"),
    _row("binomial(2n+1,n+1)", 0, "3/2", "1/2", "A001700"),
    _row("super ballot / 3", 0, "1/2", "5/2", "A007054", transform=[_cs(3)]),
    _row("Catalan, first term dropped", 0, "3/2", "3/2", "A000108", transform=[_rs(1)]),
    _row("binomial(2n+4,n+2)/6", 0, "5/2", "1/2", "A001700", transform=[_cs(3), _rs(1)]),
    _row("super ballot 60(2n)!/(n!(n+3)!) / 10", 0, "1/2", "7/2", "A007272", transform=[_cs(10)]),
    _row("super ballot 6(2n)!/(n!(n+2)!), shifted", 0, "3/2", "5/2", "A007054", transform=[_cs(2), _rs(3)]),
    _row("Catalan, two terms dropped", 0, "5/2", "3/2", "A000108", transform=[_cs(2), _rs(1, 1)]),
    _row("binomial(2n+1,n+1), two terms dropped", 0, "7/2", "1/2", "A001700", transform=[_cs(10), _rs(1, 3)]),
    # arcsine law moved along the axis
    _row("arcsine at -3/4", "-3/4", "1/2", "1/2", "A322248", scale=4),
    _row("arcsine at -7/4", "-7/4", "1/2", "1/2", "A098441", scale=4),
    _row("arcsine at -3/2", "-3/2", "1/2", "1/2", "A084605", scale=2),
    _row("central trinomial", -1, "1/2", "1/2", "A002426"),
    _row("arcsine at -1/2", "-1/2", "1/2", "1/2", "A322242", scale=2),
    _row("arcsine at -1/4", "-1/4", "1/2", "1/2", scale=4,
         reference=[1, 7, 81, 1015, 13345, 180327, 2481009, 34571607, 486315585, 6891127495]),
    _row("arcsine at 1/4", "1/4", "1/2", "1/2", scale=4,
         reference=[1, 9, 113, 1593, 23649, 361449, 5628881, 88815897, 1415038657, 22713550281]),
    _row("arcsine at 1/2", "1/2", "1/2", "1/2", "A084771", scale=2),
    _row("arcsine at 1", 1, "1/2", "1/2", "A026375"),
    _row("arcsine at 5/4", "5/4", "1/2", "1/2", scale=4,
         reference=[1, 13, 201, 3445, 62545, 1174173, 22511769, 437822853, 8603663265, 170404265005]),
    _row("arcsine at 3/2", "3/2", "1/2", "1/2", "A248168", scale=2),
    _row("arcsine at 2", 2, "1/2", "1/2", "A081671"),
    _row("arcsine at 5/2", "5/2", "1/2", "1/2", scale=2,
         reference=[1, 9, 89, 945, 10545, 121689, 1436681, 17233281, 209100385, 2559005865]),
    # Catalan law moved along the axis
    _row("Riordan", -1, "1/2", "3/2", "A005043"),
    _row("Motzkin", -1, "3/2", "3/2", "A001006"),
    _row("Catalan law at -1/2", "-1/2", "1/2", "3/2", "A337168", scale=2),
    _row("Catalan law at -3/2", "-3/2", "1/2", "3/2", scale=2,
         reference=[1, -1, 5, -5, 41, -9, 429, 435, 5585, 13039]),
    _row("Catalan law at 1/2", "1/2", "1/2", "3/2", "A162326", scale=2, transform=[_rs(1)]),
    _row("binomial transform of Catalan", 1, "1/2", "3/2", "A007317"),
    _row("Catalan law at 3/2", "3/2", "1/2", "3/2", scale=2,
         reference=[1, 5, 29, 193, 1433, 11517, 97845, 864633, 7864241, 73117429]),
    _row("second binomial transform of Catalan", 2, "1/2", "3/2", "A064613"),
    # semicircle law moved along the axis
    _row("semicircle at 1, shifted", 1, "3/2", "3/2", "A002212", transform=[_rs(1)]),
    _row("semicircle at 2", 2, "3/2", "3/2", "A005572"),
    _row("semicircle at 3", 3, "3/2", "3/2", "A182401"),
    _row("semicircle at 1/2, shifted", "1/2", "3/2", "3/2", "A059231", scale=2, transform=[_rs(1)]),
    # symmetric family on [-2, 2]
    _row("S(1/2,1/2)", -2, "1/2", "1/2", "A126869"),
    _row("S(1,1)", -2, 1, 1, reference=[1, 0, "4/3", 0, "16/5", 0, "64/7", 0, "256/9", 0]),
    _row("S(3/2,3/2)", -2, "3/2", "3/2", "A126120"),
    _row("S(2,2)", -2, 2, 2, reference=[1, 0, "4/5", 0, "48/35", 0, "64/21", 0, "256/33", 0]),
    _row("S(1/2,3/2)", -2, "1/2", "3/2", "A126930"),
    _row("S(3/2,1/2)", -2, "3/2", "1/2", "A001405"),
    _row("S(1,2)", -2, 1, 2, reference=[1, "-2/3", "4/3", "-8/5", "16/5", "-32/7", "64/7", "-128/9", "256/9", "-512/11"]),
    _row("S(2,1)", -2, 2, 1, reference=[1, "2/3", "4/3", "8/5", "16/5", "32/7", "64/7", "128/9", "256/9", "512/11"]),
    _row("2S(3/2,5/2)", -2, "3/2", "5/2", "A089408", transform=[_cs(2), SignChange(), _rs(1, 1)]),
    _row("2S(5/2,3/2)", -2, "5/2", "3/2", "A089408", transform=[_cs(2), _rs(1, 1)]),
)


def catalog() -> list[NamedSequenceEntry]:
    return list(_ROWS)


def entry(label: str) -> NamedSequenceEntry:
    for e in _ROWS:
        if e.label == label:
            return e
    raise KeyError(f"no catalog entry labelled {label!r}")
