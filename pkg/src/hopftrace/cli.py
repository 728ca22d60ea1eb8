"""
Command-line front end.

    hopftrace table (uq|double) --n N [--exp E] [--format json|csv|pretty]
    hopftrace mu uq --i I --n N            (or --vqinv)
    hopftrace mu double --l L --r R --n N
    hopftrace inspect ...                  (same selectors as mu)
    hopftrace verify --n N [--suite all|core|uq|double|double-labels]

Exit codes: 0 success, 1 a verified property failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Optional, Sequence

from .errors import HopfTraceError, NotSelfDual
from .exactla import CMatrix
from .qarith import QContext
from .repcore import Rep, bilinear_form_checks, mu
from .taftdouble import (
    all_labels,
    build_Vlr,
    hn1q_presentation,
    mu_closed_form_double,
    vlr_label,
)
from .uqsl2 import UqLabel, build_uq, mu_closed_form, quantum_dim, uq_labels, uq_presentation
from .verify import SUITES, run_suite, suite_names

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
NO_CLOSED_FORM = "no closed form"


class UsageError(Exception):
    pass


def _context(n: int, e: int) -> QContext:
    if n < 2:
        raise UsageError(f"--n must be at least 2, got {n}")
    if math.gcd(e, n) != 1:
        raise UsageError(f"--exp {e} is not coprime to n={n}")
    return QContext(n, e)


def _uq_context(n: int, e: int) -> QContext:
    if n < 3 or n % 2 == 0:
        raise UsageError(f"u_q(sl2) needs odd n >= 3, got n={n}")
    return _context(n, e)


def _double_setup(n: int, e: int) -> tuple[QContext, QContext, str]:
    """(base context, context the algebra is built over, presentation name).

    For odd n the algebra is H_n(1,q^2) with q = zeta^e so that values are
    comparable with the closed form; for even n it is H_n(1,q).
    """
    base = _context(n, e)
    if n % 2:
        return base, base.squared(), "H_n(1,q^2)"
    return base, base, "H_n(1,q)"


def _cyc(x, e: int) -> dict:
    return {"value": x.to_json(), "pretty": x.pretty("q", e)}


# -- rows --------------------------------------------------------------------

def uq_row(ctx: QContext, label: UqLabel, hopf=None) -> dict:
    V = build_uq(ctx, label, hopf)
    report = mu(V)
    closed = mu_closed_form(ctx, label)
    row = {
        "label": label.to_json(),
        "dim": V.dim,
        "self_dual": report.self_dual,
        "mu": report.mu.to_json(),
        "mu_pretty": report.mu.pretty("q", ctx.e),
        "closed_form_match": report.mu == closed,
        "quantum_dim": quantum_dim(ctx, label).to_json(),
        "quantum_dim_pretty": quantum_dim(ctx, label).pretty("q", ctx.e),
        "lambda": report.pivot_scalar.to_json() if report.pivot_scalar is not None else None,
        "lambda_pretty": report.pivot_scalar.pretty("q", ctx.e) if report.pivot_scalar is not None else None,
    }
    return row


def double_row(base: QContext, alg: QContext, label, hopf=None) -> dict:
    V = build_Vlr(alg, label, hopf)
    report = mu(V)
    row = {
        "label": label.to_json(),
        "dim": V.dim,
        "self_dual": report.self_dual,
        "mu": report.mu.to_json(),
        "mu_pretty": report.mu.pretty("q", base.e),
    }
    if base.n % 2:
        row["closed_form_match"] = report.mu == mu_closed_form_double(base, label)
        row["note"] = ""
    else:
        row["closed_form_match"] = None
        row["note"] = NO_CLOSED_FORM if report.self_dual else ""
    return row


def table_data(algebra: str, n: int, e: int) -> dict:
    if algebra == "uq":
        ctx = _uq_context(n, e)
        hopf = uq_presentation(ctx)
        rows = [uq_row(ctx, lab, hopf) for lab in uq_labels(n)]
        presentation = "u_q(sl2)"
    else:
        base, alg, presentation = _double_setup(n, e)
        hopf = hn1q_presentation(alg)
        rows = [double_row(base, alg, lab, hopf) for lab in all_labels(n)]
    return {"algebra": algebra, "presentation": presentation, "n": n, "exponent": e % n, "rows": rows}


# -- formatting --------------------------------------------------------------

def _label_str(label: dict) -> str:
    fam = label["family"]
    if fam == "Vi":
        return f"V_{label['i']}"
    if fam == "Vqinv":
        return "V(q^-1)"
    return f"V({label['l']},{label['r']})"


def _columns(rows: list[dict]) -> list[str]:
    return list(rows[0].keys()) if rows else []


def to_csv(data: dict) -> str:
    rows = data["rows"]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    cols = _columns(rows)
    writer.writerow(cols)
    for row in rows:
        # structured cells are stored as compact JSON so the CSV round-trips
        writer.writerow([json.dumps(row[c], separators=(",", ":"), sort_keys=True) for c in cols])
    return buf.getvalue()


def from_csv(text: str) -> list[dict]:
    reader = csv.reader(io.StringIO(text))
    cols = next(reader)
    return [{c: json.loads(cell) for c, cell in zip(cols, rec)} for rec in reader]


def to_pretty(data: dict) -> str:
    header = f"{data['presentation']}  n={data['n']}  q=zeta^{data['exponent']}"
    table = []
    for row in data["rows"]:
        rec = [_label_str(row["label"]), str(row["dim"]), "yes" if row["self_dual"] else "no", row["mu_pretty"]]
        if data["algebra"] == "uq":
            rec += [row["quantum_dim_pretty"], row["lambda_pretty"] or "-"]
        else:
            rec.append(row["note"])
        table.append(rec)
    names = ["module", "dim", "self-dual", "mu"]
    names += ["dim_q", "lambda"] if data["algebra"] == "uq" else ["note"]
    widths = [max(len(r[k]) for r in table + [names]) for k in range(len(names))]
    lines = [header, "  ".join(h.ljust(w) for h, w in zip(names, widths)).rstrip()]
    for r in table:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


# -- single-module commands --------------------------------------------------

def _select(args) -> tuple[Rep, QContext, object]:
    """(module, base context, closed-form value or None)."""
    if args.algebra == "uq":
        ctx = _uq_context(args.n, args.exp)
        if args.vqinv == (args.i is not None):
            raise UsageError("give exactly one of --i I or --vqinv")
        label = UqLabel.Vqinv() if args.vqinv else UqLabel.Vi(args.i)
        try:
            label.validate(args.n)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        return build_uq(ctx, label), ctx, mu_closed_form(ctx, label)
    if args.l is None or args.r is None:
        raise UsageError("double needs --l and --r")
    base, alg, _ = _double_setup(args.n, args.exp)
    if not 1 <= args.l <= args.n:
        raise UsageError(f"--l must lie in 1..{args.n}")
    label = vlr_label(args.n, args.l, args.r)
    closed = mu_closed_form_double(base, label) if args.n % 2 else None
    return build_Vlr(alg, label), base, closed


def mu_data(args) -> dict:
    V, base, closed = _select(args)
    report = mu(V)
    out = {"algebra": args.algebra, "n": args.n, "exponent": base.e, "label": dict(V.label),
           "dim": V.dim, "self_dual": report.self_dual, "mu": report.mu.to_json(),
           "mu_pretty": report.mu.pretty("q", base.e)}
    out["closed_form_match"] = None if closed is None else report.mu == closed
    return out


def inspect_data(args) -> dict:
    V, base, closed = _select(args)
    e = base.e
    out = {
        "algebra": args.algebra,
        "n": args.n,
        "exponent": e,
        "label": dict(V.label),
        "dim": V.dim,
        "generators": {g: V[g].to_json() for g in V.hopf.generators},
    }
    report = mu(V, oracle=True)
    out["self_dual"] = report.self_dual
    out["mu"] = _cyc(report.mu, e)
    if not report.self_dual:
        out["status"] = NotSelfDual.__name__
        return out
    out["oracle_mu"] = _cyc(report.oracle_mu, e)
    out["Q"] = report.Q.to_json()
    out["U"] = report.U.to_json()
    if report.pivot_scalar is not None:
        out["lambda"] = _cyc(report.pivot_scalar, e)
    form = bilinear_form_checks(V, report.Q)
    out["bilinear_form"] = {"ok": form.ok, "violations": form.violations}
    out["closed_form_match"] = None if closed is None else report.mu == closed
    return out


def _pretty_inspect(data: dict, V_e: int) -> str:
    name = _label_str(data["label"]) if data["label"].get("family") in ("Vi", "Vqinv", "Vlr") else data["label"]
    lines = [f"{data['algebra']}  n={data['n']}  q=zeta^{V_e}  module={name}  dim={data['dim']}"]
    for g, m in data["generators"].items():
        lines.append(f"{g} =")
        lines.append(CMatrix.from_json(m).pretty("q", V_e))
    lines.append(f"self-dual: {data['self_dual']}")
    lines.append(f"mu = {data['mu']['pretty']}")
    if data["self_dual"]:
        lines.append(f"oracle mu = {data['oracle_mu']['pretty']}")
        lines.append("Q =")
        lines.append(CMatrix.from_json(data["Q"]).pretty("q", V_e))
        lines.append("U =")
        lines.append(CMatrix.from_json(data["U"]).pretty("q", V_e))
        if "lambda" in data:
            lines.append(f"lambda = {data['lambda']['pretty']}")
        bf = data["bilinear_form"]
        lines.append("bilinear form: " + ("ok" if bf["ok"] else "; ".join(bf["violations"])))
    return "\n".join(lines) + "\n"


# -- entry point -------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, required=True, help="order of the root of unity")
    p.add_argument("--exp", type=int, default=1, help="q = zeta_n^exp (default 1)")
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")


def _add_selector(p: argparse.ArgumentParser) -> None:
    p.add_argument("algebra", choices=("uq", "double"))
    _add_common(p)
    p.add_argument("--i", type=int, help="V_i of u_q(sl2)")
    p.add_argument("--vqinv", action="store_true", help="the n-dimensional V(q^-1)")
    p.add_argument("--l", type=int, help="dimension of V(l,r)")
    p.add_argument("--r", type=int, help="weight parameter of V(l,r)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hopftrace", description="Antipode trace invariants of simple Hopf modules.")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("table", help="one row per simple module")
    p.add_argument("algebra", choices=("uq", "double"))
    _add_common(p)
    _add_selector(sub.add_parser("mu", help="mu of one module"))
    _add_selector(sub.add_parser("inspect", help="matrices, Q, U and checks for one module"))
    p = sub.add_parser("verify", help="run property suites")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--format", choices=("json", "pretty"), default="pretty")
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "table":
            data = table_data(args.algebra, args.n, args.exp)
            if args.format == "json":
                out.write(_dump(data))
            elif args.format == "csv":
                out.write(to_csv(data))
            else:
                out.write(to_pretty(data))
            return EXIT_OK
        if args.command == "mu":
            data = mu_data(args)
            if args.format == "pretty":
                out.write(f"{_label_str(data['label'])}: self-dual={data['self_dual']} mu = {data['mu_pretty']}\n")
            else:
                out.write(_dump(data))
            return EXIT_OK
        if args.command == "inspect":
            data = inspect_data(args)
            out.write(_pretty_inspect(data, data["exponent"]) if args.format == "pretty" else _dump(data))
            return EXIT_OK
        if args.command == "verify":
            suite_names(args.n, args.suite)
            try:
                checks = run_suite(args.n, args.suite)
            except HopfTraceError as exc:
                print(f"hopftrace: property run aborted: {exc!r}", file=sys.stderr)
                return EXIT_FAIL
            failed = [c for c in checks if not c.passed]
            if args.format == "json":
                out.write(_dump({"n": args.n, "suite": args.suite, "passed": not failed,
                                 "checks": [c.to_json() for c in checks]}))
            else:
                for c in checks:
                    out.write(f"{'PASS' if c.passed else 'FAIL'}  {c.name}" + (f"  [{c.detail}]" if c.detail and not c.passed else "") + "\n")
                out.write(f"{len(checks) - len(failed)}/{len(checks)} checks passed\n")
            return EXIT_FAIL if failed else EXIT_OK
    except (UsageError, HopfTraceError, ValueError) as exc:
        print(f"hopftrace: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
