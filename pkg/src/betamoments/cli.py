"""Command-line front end.

Every command builds one :class:`OutputRecord` and prints it as a table,
JSON or CSV.  Numbers are exact ``p/q`` strings.  The exit status is 0 when
every requested check passed, 1 when something failed or did not match,
and 2 for usage errors.
"""
from __future__ import annotations

import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

import click

from .exact import as_rational, format_rational

FORMAT_VERSION = 1
PASSING = {"ExactMatch", "EnclosureContains", "ExactPrefixMatch", "ok"}


@dataclass
class OutputRecord:
    command: str
    parameters: dict[str, Any]
    payload: list[dict[str, Any]]
    summary: dict[str, Any] = field(default_factory=dict)
    ok: bool = True
    format_version: int = FORMAT_VERSION

    def to_dict(self) -> dict[str, Any]:
        return {
            "format_version": self.format_version,
            "command": self.command,
            "parameters": self.parameters,
            "payload": self.payload,
            "summary": self.summary,
            "ok": self.ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        d = json.loads(text)
        return cls(d["command"], d["parameters"], d["payload"], d.get("summary", {}), d["ok"], d["format_version"])

    def to_csv(self) -> str:
        buf = io.StringIO()
        cols = _columns(self.payload)
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        for row in self.payload:
            w.writerow({k: _cell(row.get(k)) for k in cols})
        return buf.getvalue()

    def to_table(self) -> str:
        cols = _columns(self.payload)
        rows = [[_cell(r.get(k)) for k in cols] for r in self.payload]
        widths = [max([len(c)] + [len(r[i]) for r in rows]) for i, c in enumerate(cols)]
        lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
        lines += ["  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() for r in rows]
        for k, v in self.summary.items():
            lines.append(f"{k}: {_cell(v)}")
        lines.append("PASS" if self.ok else "FAIL")
        return "\n".join(lines)


def _columns(rows: list[dict[str, Any]]) -> list[str]:
    cols: list[str] = []
    for r in rows:
        for k in r:
            if k not in cols:
                cols.append(k)
    return cols


def _cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def q(x) -> str:
    """Exact number as a 'p/q' string."""
    return format_rational(Fraction(x))


class RationalType(click.ParamType):
    name = "rational"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return as_rational(value)
        except (ValueError, TypeError, ZeroDivisionError):
            self.fail(f"{value!r} is not an exact rational (use p/q)", param, ctx)


RATIONAL = RationalType()


def _positive(ctx, param, value):
    if value is not None and value <= 0:
        raise click.BadParameter("must be positive")
    return value


def _emit(ctx: click.Context, record: OutputRecord) -> None:
    fmt = ctx.obj["format"]
    if fmt == "json":
        click.echo(record.to_json())
    elif fmt == "csv":
        click.echo(record.to_csv(), nl=False)
    else:
        click.echo(record.to_table())
    ctx.exit(0 if record.ok else 1)


def _spec_options(f):
    f = click.option("-b", "--beta", type=RATIONAL, required=True, callback=_positive, help="beta > 0")(f)
    f = click.option("-a", "--alpha", type=RATIONAL, required=True, callback=_positive, help="alpha > 0")(f)
    f = click.option("-c", type=RATIONAL, default=Fraction(0), show_default=True, help="left end of the support")(f)
    return f


@click.group()
@click.option("-f", "--format", "fmt", type=click.Choice(["table", "json", "csv"]), default="table",
              show_default=True)
@click.option("--offline", is_flag=True, help="never touch the network for OEIS data")
@click.pass_context
def cli(ctx: click.Context, fmt: str, offline: bool) -> None:
    """Exact moments of Beta laws on [c, c+4] and the identities they satisfy."""
    ctx.ensure_object(dict)
    ctx.obj["format"] = fmt
    if offline:
        os.environ["BETAMOMENTS_OFFLINE"] = "1"


@cli.command()
@_spec_options
@click.option("-n", "--count", type=click.IntRange(1), default=10, show_default=True)
@click.option("-s", "--scale", type=RATIONAL, default=None, help="also print scale^n * M_n")
@click.pass_context
def moments(ctx, c, alpha, beta, count, scale):
    """M_n(c, alpha, beta) for n < COUNT."""
    from .moments import MomentSpec, moments as compute

    spec = MomentSpec.of(c, alpha, beta)
    rows = []
    for n, t in enumerate(compute(spec, count)):
        row = {"n": n, "M_n": q(t)}
        if scale is not None:
            row["scaled"] = q(scale**n * t)
        rows.append(row)
    params = {"c": q(c), "alpha": q(alpha), "beta": q(beta), "count": count}
    if scale is not None:
        params["scale"] = q(scale)
    _emit(ctx, OutputRecord("moments", params, rows))


@cli.command()
@click.argument("identity", default="all")
@click.option("--n-min", type=click.IntRange(0), default=0, show_default=True)
@click.option("--n-max", type=click.IntRange(0), default=30, show_default=True)
@click.option("-J", "--depth", "J", type=click.IntRange(1, 10_000), default=40, show_default=True,
              help="number of series terms summed before the certified remainder")
@click.option("--list", "list_only", is_flag=True, help="list identity ids and exit")
@click.pass_context
def verify(ctx, identity, n_min, n_max, J, list_only):
    """Check IDENTITY (or all) for n in [n-min, n-max]."""
    from . import identities as ids
    from .tails import CertificationError

    if list_only:
        rows = [{"identity": i, "kind": "finite", "statement": ids.describe(i)} for i in ids.finite_ids()]
        rows += [{"identity": i, "kind": "infinite", "statement": ids.describe(i)} for i in ids.infinite_ids()]
        _emit(ctx, OutputRecord("verify --list", {}, rows))
        return
    if identity == "all":
        wanted = ids.finite_ids() + [i for i in ids.infinite_ids() if i not in ("st-vii-even", "st-vii-odd")]
    elif identity in ids.finite_ids() or identity in ids.infinite_ids():
        wanted = [identity]
    else:
        raise click.BadParameter(f"unknown identity {identity!r}; try --list", param_hint="IDENTITY")
    rows = []
    ns = range(n_min, n_max + 1)
    for i in sorted(wanted):
        try:
            results = ids.verify(i, ns, J)
        except CertificationError as exc:
            rows.append({"identity": i, "n": "", "status": "CertificationError", "lhs": "", "rhs": "",
                         "method": "", "width": str(exc)})
            continue
        for r in results:
            rows.append({
                "identity": i,
                "n": r.n,
                "status": r.status,
                "lhs": q(r.lhs),
                "rhs": q(r.rhs) if isinstance(r.rhs, Fraction) else str(r.rhs),
                "method": r.method,
                "width": q(r.width) if isinstance(r.width, Fraction) else _sci(r.width),
            })
    counts: dict[str, int] = {}
    for r in rows:
        counts[r["status"]] = counts.get(r["status"], 0) + 1
    ok = all(r["status"] in PASSING for r in rows)
    params = {"identity": identity, "n_min": n_min, "n_max": n_max, "J": J}
    _emit(ctx, OutputRecord("verify", params, rows, dict(sorted(counts.items())), ok))


def _sci(x) -> str:
    from mpmath import mp, nstr

    return nstr(mp.mpf(x), 3) if x is not None else ""


@cli.command()
@click.option("-c", type=RATIONAL, default=None)
@click.option("-a", "--alpha", type=RATIONAL, default=None, callback=_positive)
@click.option("-b", "--beta", type=RATIONAL, default=None, callback=_positive)
@click.option("-N", "--order", "N", type=click.IntRange(0), default=8, show_default=True)
@click.option("--catalog", "use_catalog", is_flag=True, help="run every cataloged spec")
@click.pass_context
def hankel(ctx, c, alpha, beta, N, use_catalog):
    """Hankel determinants of M_n(c, alpha, beta) up to order N."""
    from .hankel import check_pm
    from .moments import MomentSpec

    if use_catalog:
        from .catalog import catalog

        specs = sorted({e.spec for e in catalog()}, key=str)
        rows = []
        ok = True
        for spec in specs:
            rep = check_pm(spec, N)
            good = rep.pm and (rep.stieltjes or not rep.stieltjes_meaningful)
            ok &= good
            rows.append({"spec": str(spec), "pm": rep.pm,
                         "stieltjes": rep.stieltjes if rep.stieltjes_meaningful else "n/a",
                         "status": "ok" if good else "Fail"})
        _emit(ctx, OutputRecord("hankel", {"catalog": True, "N": N}, rows, {"specs": len(rows)}, ok))
        return
    if alpha is None or beta is None:
        raise click.UsageError("give -a and -b, or --catalog")
    spec = MomentSpec.of(c if c is not None else 0, alpha, beta)
    rep = check_pm(spec, N)
    rows = []
    for n in range(N + 1):
        row = {"n": n, "det": q(rep.determinants[n])}
        if rep.stieltjes_meaningful:
            row["shifted_det"] = q(rep.shifted_determinants[n])
        rows.append(row)
    summary = {"pm": rep.pm, "strictly_positive": rep.strictly_positive}
    ok = rep.pm
    if rep.stieltjes_meaningful:
        summary["stieltjes"] = rep.stieltjes
        ok = ok and rep.stieltjes
    params = {"c": q(spec.c), "alpha": q(alpha), "beta": q(beta), "N": N}
    _emit(ctx, OutputRecord("hankel", params, rows, summary, ok))


@cli.command()
@click.argument("key", required=False)
@click.option("-c", type=RATIONAL, default=None)
@click.option("-a", "--alpha", type=RATIONAL, default=None, callback=_positive)
@click.option("-b", "--beta", type=RATIONAL, default=None, callback=_positive)
@click.option("--order", type=click.IntRange(0, 500), default=12, show_default=True)
@click.option("--list", "list_only", is_flag=True, help="list closed-form keys and exit")
@click.pass_context
def gf(ctx, key, c, alpha, beta, order, list_only):
    """Series coefficients of a cataloged closed form KEY, or of the moment g.f. of a spec."""
    from .closed_forms import closed_forms, reference_terms
    from .moments import MomentSpec
    from .series import gf_of_moments

    forms = closed_forms()
    if list_only:
        rows = [{"key": k, "spec": str(f.spec), "formula": f.formula} for k, f in forms.items()]
        _emit(ctx, OutputRecord("gf --list", {}, rows))
        return
    if key is not None:
        if key not in forms:
            raise click.BadParameter(f"unknown closed form {key!r}; try --list", param_hint="KEY")
        form = forms[key]
        coeffs = list(form.series(order))
        ref = reference_terms(form, order)
        rows = [{"n": n, "coefficient": q(x), "expected": q(y), "status": "ok" if x == y else "Mismatch"}
                for n, (x, y) in enumerate(zip(coeffs, ref))]
        ok = all(r["status"] == "ok" for r in rows)
        params = {"key": key, "formula": form.formula, "spec": str(form.spec), "order": order}
        _emit(ctx, OutputRecord("gf", params, rows, {"matches": ok}, ok))
        return
    if alpha is None or beta is None:
        raise click.UsageError("give a closed-form KEY or -a/-b")
    spec = MomentSpec.of(c if c is not None else 0, alpha, beta)
    s = gf_of_moments(spec, order)
    rows = [{"n": n, "coefficient": q(x)} for n, x in enumerate(s)]
    _emit(ctx, OutputRecord("gf", {"spec": str(spec), "order": order}, rows))


@cli.command()
@click.argument("label", required=False, default=None)
@click.option("-c", type=RATIONAL, default=None)
@click.option("-a", "--alpha", type=RATIONAL, default=None, callback=_positive)
@click.option("-b", "--beta", type=RATIONAL, default=None, callback=_positive)
@click.option("--oeis", "aid", default=None, help="A-number to search a transform against")
@click.option("--count", type=click.IntRange(20, 200), default=25, show_default=True)
@click.pass_context
def match(ctx, label, c, alpha, beta, aid, count):
    """Check catalog claims against OEIS data (LABEL or 'all'), or find a transform from a spec to --oeis."""
    from .catalog import catalog
    from .oeis import OeisError, fetch, verify_claim

    if alpha is not None or beta is not None:
        if alpha is None or beta is None or aid is None:
            raise click.UsageError("spec mode needs -a, -b and --oeis")
        from .moments import MomentSpec, moments as compute
        from .transforms import match as find

        spec = MomentSpec.of(c if c is not None else 0, alpha, beta)
        try:
            entry = fetch(aid)
        except OeisError as exc:
            row = {"oeis": aid, "status": "Unresolved", "transform": "", "cause": str(exc)}
            _emit(ctx, OutputRecord("match", {"spec": str(spec), "oeis": aid}, [row], ok=False))
            return
        target = list(entry.terms[:count])
        t = find(target, compute(spec, count + 8))
        row = {"oeis": aid, "status": "ExactPrefixMatch" if t is not None else "Mismatch",
               "transform": str(t) if t is not None else ""}
        params = {"spec": str(spec), "oeis": aid, "count": count}
        _emit(ctx, OutputRecord("match", params, [row], ok=t is not None))
        return

    rows_in = [e for e in catalog() if e.oeis_id]
    if label not in (None, "all"):
        rows_in = [e for e in rows_in if e.label == label]
        if not rows_in:
            raise click.BadParameter(f"no catalog row {label!r} with an OEIS id", param_hint="LABEL")
    rows = []
    for e in rows_in:
        rep = verify_claim(e, count)
        rows.append({"label": e.label, "sequence": e.key, "transform": str(e.transform), "oeis": e.oeis_id,
                     "status": rep.status, "shift": "" if rep.shift is None else rep.shift,
                     "index": "" if rep.index is None else rep.index, "cause": rep.cause})
    counts: dict[str, int] = {}
    for r in rows:
        counts[r["status"]] = counts.get(r["status"], 0) + 1
    ok = all(r["status"] != "Mismatch" for r in rows) and all(r["status"] == "ExactPrefixMatch" for r in rows)
    _emit(ctx, OutputRecord("match", {"label": label or "all", "count": count}, rows,
                            dict(sorted(counts.items())), ok))


@cli.command()
@click.argument("args", nargs=-1)
@click.option("-N", "N", type=click.IntRange(0), default=None, help="largest n (default 20, demo 9)")
@click.pass_context
def integrality(ctx, args, N):
    """'integrality P R' checks multiplier(n,R) m_n(P/R, 1-P/R); 'integrality demo' shows the non-integer case."""
    from .integrality import check_integrality, demo_nonintegral

    if args == ("demo",):
        N = 9 if N is None else N
        vals = demo_nonintegral(N)
        rows = [{"n": n, "value": q(v), "integer": v.denominator == 1} for n, v in enumerate(vals, 1)]
        _emit(ctx, OutputRecord("integrality demo", {"N": N}, rows))
        return
    if len(args) != 2:
        raise click.UsageError("expected 'demo' or two integers P R")
    try:
        p, r = int(args[0]), int(args[1])
    except ValueError:
        raise click.UsageError("P and R must be integers") from None
    N = 20 if N is None else N
    try:
        rep = check_integrality(p, r, N)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None
    rows = [{"n": row.n, "multiplier": row.multiplier, "m_n": q(row.raw), "product": q(row.product),
             "integer": row.is_integer} for row in rep.rows]
    _emit(ctx, OutputRecord("integrality", {"p": p, "r": r, "N": N}, rows, {"all_integer": rep.ok}, rep.ok))


def main(argv: Optional[list[str]] = None) -> None:
    cli.main(args=argv, prog_name="betamoments", obj={})


if __name__ == "__main__":
    main(sys.argv[1:])
