"""Regenerate the offline OEIS fixture files.

oeis.org is not reachable from the build environment, so each fixture is
computed with sympy from the formula or generating function documented for
that entry.  The formula used is written into the file header.

    python scripts/make_fixtures.py [--count 40]
"""
from __future__ import annotations

import argparse
from pathlib import Path

import sympy as sp
from sympy import binomial, catalan, factorial, floor, sqrt

x = sp.symbols("x")
OUT = Path(__file__).resolve().parents[1] / "src" / "betamoments" / "data" / "oeis"


def by_formula(f):
    return lambda count: [int(f(n)) for n in range(count)]


def by_gf(expr):
    def terms(count):
        s = sp.series(expr, x, 0, count).removeO()
        return [int(s.coeff(x, n)) for n in range(count)]
    return terms


def by_egf(expr):
    def terms(count):
        s = sp.series(expr, x, 0, count).removeO()
        return [int(s.coeff(x, n) * factorial(n)) for n in range(count)]
    return terms


def by_recurrence(a0, a1, step):
    def terms(count):
        out = [sp.Integer(a0), sp.Integer(a1)]
        for n in range(2, count):
            out.append(step(n, out[n - 1], out[n - 2]))
        return [int(t) for t in out[:count]]
    return terms


def narayana_4(n):
    if n == 0:
        return 1
    return sum(4**k * binomial(n, k + 1) * binomial(n, k) / n for k in range(n))


FIXTURES = {
    "A000984": ("binomial(2n,n)", by_formula(lambda n: binomial(2 * n, n))),
    "A000108": ("binomial(2n,n)/(n+1)", by_formula(catalan)),
    "A001700": ("binomial(2n+1,n+1)", by_formula(lambda n: binomial(2 * n + 1, n + 1))),
    "A007054": ("6(2n)!/(n!(n+2)!)", by_formula(lambda n: 6 * factorial(2 * n) / (factorial(n) * factorial(n + 2)))),
    "A007272": ("60(2n)!/(n!(n+3)!)", by_formula(lambda n: 60 * factorial(2 * n) / (factorial(n) * factorial(n + 3)))),
    "A322248": ("g.f. 1/sqrt((1-13x)(1+3x))", by_gf(1 / sqrt((1 - 13 * x) * (1 + 3 * x)))),
    "A098441": ("g.f. 1/sqrt((1+7x)(1-9x))", by_gf(1 / sqrt((1 + 7 * x) * (1 - 9 * x)))),
    "A084605": ("g.f. 1/sqrt(1-2x-15x^2)", by_gf(1 / sqrt(1 - 2 * x - 15 * x**2))),
    "A002426": ("sum_k binomial(n,2k) binomial(2k,k)",
                by_formula(lambda n: sum(binomial(n, 2 * k) * binomial(2 * k, k) for k in range(n // 2 + 1)))),
    "A322242": ("g.f. 1/sqrt(1-6x-7x^2)", by_gf(1 / sqrt(1 - 6 * x - 7 * x**2))),
    "A084771": ("g.f. 1/sqrt((1-x)(1-9x))", by_gf(1 / sqrt((1 - x) * (1 - 9 * x)))),
    "A026375": ("sum_k binomial(n,k) binomial(2k,k)",
                by_formula(lambda n: sum(binomial(n, k) * binomial(2 * k, k) for k in range(n + 1)))),
    "A248168": ("g.f. 1/sqrt((1-3x)(1-11x))", by_gf(1 / sqrt((1 - 3 * x) * (1 - 11 * x)))),
    "A081671": ("sum_k binomial(n,k) binomial(2k,k) 2^(n-k)",
                by_formula(lambda n: sum(binomial(n, k) * binomial(2 * k, k) * 2 ** (n - k) for k in range(n + 1)))),
    "A005043": ("a(n) = (n-1)(2a(n-1)+3a(n-2))/(n+1), a(0)=1, a(1)=0",
                by_recurrence(1, 0, lambda n, p, q: (n - 1) * (2 * p + 3 * q) / (n + 1))),
    "A001006": ("a(n) = ((2n+1)a(n-1)+3(n-1)a(n-2))/(n+2), a(0)=a(1)=1",
                by_recurrence(1, 1, lambda n, p, q: ((2 * n + 1) * p + 3 * (n - 1) * q) / (n + 2))),
    "A337168": ("g.f. A = 1/(1+x) + 2x A^2, i.e. (1-sqrt((1-7x)/(1+x)))/(4x)",
                by_gf((1 - sqrt((1 - 7 * x) / (1 + x))) / (4 * x))),
    "A162326": ("g.f. (5-sqrt((1-9x)/(1-x)))/4", by_gf((5 - sqrt((1 - 9 * x) / (1 - x))) / 4)),
    "A007317": ("sum_k binomial(n,k) C(k)", by_formula(lambda n: sum(binomial(n, k) * catalan(k) for k in range(n + 1)))),
    "A064613": ("sum_k binomial(n,k) 2^(n-k) C(k)",
                by_formula(lambda n: sum(binomial(n, k) * 2 ** (n - k) * catalan(k) for k in range(n + 1)))),
    "A002212": ("g.f. (1-x-sqrt(1-6x+5x^2))/(2x)", by_gf((1 - x - sqrt(1 - 6 * x + 5 * x**2)) / (2 * x))),
    "A005572": ("g.f. (1-4x-sqrt(1-8x+12x^2))/(2x^2)", by_gf((1 - 4 * x - sqrt(1 - 8 * x + 12 * x**2)) / (2 * x**2))),
    "A182401": ("g.f. (1-5x-sqrt(1-10x+21x^2))/(2x^2)",
                by_gf((1 - 5 * x - sqrt(1 - 10 * x + 21 * x**2)) / (2 * x**2))),
    "A059231": ("sum_k 4^k N(n,k+1), N the Narayana numbers", by_formula(narayana_4)),
    "A126869": ("binomial(n,n/2) for even n, else 0",
                by_formula(lambda n: binomial(n, n // 2) if n % 2 == 0 else 0)),
    "A126120": ("C(n/2) for even n, else 0", by_formula(lambda n: catalan(n // 2) if n % 2 == 0 else 0)),
    "A126930": ("(-1)^n binomial(n,floor(n/2))", by_formula(lambda n: (-1) ** n * binomial(n, floor(sp.Integer(n) / 2)))),
    "A001405": ("binomial(n,floor(n/2))", by_formula(lambda n: binomial(n, floor(sp.Integer(n) / 2)))),
    "A089408": ("g.f. (1+4x-(1+2x)sqrt(1-4x^2))/(2x)",
                by_gf((1 + 4 * x - (1 + 2 * x) * sqrt(1 - 4 * x**2)) / (2 * x))),
    "A000246": ("e.g.f. sqrt((1+x)/(1-x))", by_egf(sqrt((1 + x) / (1 - x)))),
}


def write_fixture(aid: str, provenance: str, terms: list[int], offset: int = 0) -> Path:
    path = OUT / f"{aid}.txt"
    lines = [f"# {aid}", f"# provenance: synthesized offline from {provenance}"]
    lines += [f"{offset + i} {t}" for i, t in enumerate(terms)]
    path.write_text("\n".join(lines) + "\n")
    return path


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=40)
    args = ap.parse_args()
    OUT.mkdir(parents=True, exist_ok=True)
    for aid, (provenance, make) in FIXTURES.items():
        write_fixture(aid, provenance, make(args.count))
        print(aid)


if __name__ == "__main__":
    main()
