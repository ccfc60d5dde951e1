"""Command-line interface.

Subcommands:

* ``compute <object>`` evaluates one quantity (Stirling/Fubini/Bernoulli
  numbers, Fubini and Apostol-Bernoulli polynomials), optionally at a
  rational point via ``--at``.
* ``table <family>`` streams a value table.
* ``verify <identity-id>`` runs one catalog entry over its grid.
* ``verify-all --profile quick|full`` runs the whole catalog.
* ``list-identities`` prints the catalog.

Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage
error (unknown object/identity, missing or invalid parameters).  Output
is deterministic for a fixed command line except for the elapsed_us
field of verification reports.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Optional

from . import apostol as ap
from . import bernoulli_numbers as bn
from . import combinat as cb
from . import polynomials as fp
from . import registry as rg
from .exact import BiPoly, Poly, RatFunc, format_rational, parse_rational, poly_str, ratfunc_str

FORMATS = ("plain", "json", "csv")


class UsageError(Exception):
    pass


def _require(args, *names: str) -> list:
    values = []
    for name in names:
        value = getattr(args, name, None)
        if value is None:
            raise UsageError(f"--{name.replace('_', '-')} is required here")
        values.append(value)
    return values


def _json_value(value):
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    if isinstance(value, Poly):
        return value.to_strings()
    if isinstance(value, BiPoly):
        return value.to_strings()
    if isinstance(value, RatFunc):
        return value.to_strings()
    raise TypeError(type(value).__name__)


def _plain_value(value) -> str:
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    if isinstance(value, Poly):
        return poly_str(value, "y")
    if isinstance(value, BiPoly):
        return str(value)
    if isinstance(value, RatFunc):
        return ratfunc_str(value, "λ")
    raise TypeError(type(value).__name__)


def _csv_row(columns: list[str], row: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    writer.writerow(row)
    return buf.getvalue()


def _emit_compute(obj: str, params: dict, value, fmt: str) -> None:
    if fmt == "plain":
        print(_plain_value(value))
    elif fmt == "json":
        payload = {
            "object": obj,
            "params": {k: rg._param_json(v) for k, v in sorted(params.items())},
            "value": _json_value(value),
        }
        print(json.dumps(payload))
    else:
        names = sorted(params)
        cell = _json_value(value)
        if not isinstance(cell, str):
            cell = json.dumps(cell, separators=(",", ":"))
        row = [str(rg._param_json(params[k])) for k in names] + [cell]
        sys.stdout.write(_csv_row(names + ["value"], row))


def cmd_compute(args) -> int:
    obj = args.object
    fmt = args.format
    at: Optional[Fraction] = args.at
    if obj == "stirling1":
        (n, k) = _require(args, "n", "k")
        _emit_compute(obj, {"n": n, "k": k}, cb.stirling1_unsigned(n, k), fmt)
    elif obj == "stirling2":
        (n, k) = _require(args, "n", "k")
        _emit_compute(obj, {"n": n, "k": k}, cb.stirling2(n, k), fmt)
    elif obj == "binomial":
        (n, k) = _require(args, "n", "k")
        _emit_compute(obj, {"n": n, "k": k}, cb.binomial(n, k), fmt)
    elif obj == "fubini-number":
        (n,) = _require(args, "n")
        _emit_compute(obj, {"n": n}, fp.fubini_number(n), fmt)
    elif obj == "fubini-poly":
        (n,) = _require(args, "n")
        poly = fp.fubini_poly(n)
        if at is not None:
            _emit_compute(obj, {"n": n, "at": at}, poly(at), fmt)
        else:
            _emit_compute(obj, {"n": n}, poly, fmt)
    elif obj == "fubini-two-var":
        (n,) = _require(args, "n")
        _emit_compute(obj, {"n": n}, fp.fubini_two_var(n), fmt)
    elif obj == "bernoulli":
        (n,) = _require(args, "n")
        _emit_compute(obj, {"n": n}, bn.bernoulli(n), fmt)
    elif obj == "p-bernoulli":
        (n, p) = _require(args, "n", "p")
        _emit_compute(obj, {"n": n, "p": p}, bn.p_bernoulli(n, p), fmt)
    elif obj == "apostol":
        (n,) = _require(args, "n")
        func = ap.apostol_bernoulli(n)
        if at is not None:
            _emit_compute(obj, {"n": n, "at": at}, func(at), fmt)
        else:
            _emit_compute(obj, {"n": n}, func, fmt)
    else:  # pragma: no cover - argparse choices guard this
        raise UsageError(f"unknown object {obj!r}")
    return 0


def cmd_table(args) -> int:
    family = args.family
    fmt = args.format
    n_max = args.n_max
    if n_max is None:
        raise UsageError("--n-max is required here")
    if family == "bernoulli":
        values = [bn.bernoulli(n) for n in range(n_max + 1)]
        _emit_table(family, ["n", "value"],
                    [[str(n), format_rational(v)] for n, v in enumerate(values)], fmt)
    elif family == "fubini":
        values = [fp.fubini_number(n) for n in range(n_max + 1)]
        _emit_table(family, ["n", "value"],
                    [[str(n), str(v)] for n, v in enumerate(values)], fmt)
    elif family == "p-bernoulli":
        p_max = args.p_max
        if p_max is None:
            raise UsageError("--p-max is required here")
        rows = [
            [str(n), str(p), format_rational(bn.p_bernoulli(n, p))]
            for n in range(n_max + 1)
            for p in range(p_max + 1)
        ]
        _emit_table(family, ["n", "p", "value"], rows, fmt)
    else:  # pragma: no cover
        raise UsageError(f"unknown table {family!r}")
    return 0


def _emit_table(family: str, columns: list[str], rows: list[list[str]], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps({
            "object": family,
            "columns": columns,
            "rows": rows,
        }))
    elif fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(rows)
    else:
        width = max(len(c) for c in columns) + 2
        for row in rows:
            print("".join(cell.ljust(width) for cell in row).rstrip())


def _report_rows(reports) -> list[list[str]]:
    rows = []
    for r in reports:
        params = json.dumps(
            {k: rg._param_json(v) for k, v in sorted(r.params.items())},
            separators=(",", ":"),
        )
        rows.append([r.identity, params, r.status, r.lhs, r.rhs, str(r.elapsed_us)])
    return rows


def _emit_reports_csv(reports) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["identity", "params", "status", "lhs", "rhs", "elapsed_us"])
    writer.writerows(_report_rows(reports))


def _params_plain(params: dict) -> str:
    return " ".join(f"{k}={rg._param_json(v)}" for k, v in sorted(params.items()))


def _emit_reports_plain(reports) -> None:
    for r in reports:
        line = f"{r.status:<21} {r.identity} {_params_plain(r.params)}"
        if r.status == rg.FAIL:
            line += f"  lhs={r.lhs} rhs={r.rhs}"
        print(line)


def cmd_verify(args) -> int:
    identity = args.identity_id
    if identity not in rg.REGISTRY:
        raise UsageError(f"unknown identity {identity!r}; see list-identities")
    overrides = {
        "n_max": args.n_max,
        "m_max": args.m_max,
        "k_max": args.k_max,
        "p_max": args.p_max,
        "samples": args.samples,
    }
    reports = rg.verify(identity, profile=args.profile, overrides=overrides)
    failed = sum(1 for r in reports if r.status == rg.FAIL)
    if args.format == "json":
        payload = {
            "identity": identity,
            "total": len(reports),
            "passed": sum(1 for r in reports if r.status == rg.PASS),
            "failed": failed,
            "skipped": sum(1 for r in reports if r.status == rg.SKIP),
            "reports": [r.to_json_dict() for r in reports],
        }
        print(json.dumps(payload))
    elif args.format == "csv":
        _emit_reports_csv(reports)
    else:
        _emit_reports_plain(reports)
        print(f"{identity}: {len(reports)} cases, {failed} failed")
    return 1 if failed else 0


def cmd_verify_all(args) -> int:
    run = rg.verify_all(args.profile)
    if args.format == "json":
        print(json.dumps(run.to_json_dict()))
    elif args.format == "csv":
        _emit_reports_csv(run.reports)
    else:
        by_identity: dict[str, list] = {}
        for r in run.reports:
            by_identity.setdefault(r.identity, []).append(r)
        for identity in sorted(by_identity):
            group = by_identity[identity]
            counts = {
                status: sum(1 for r in group if r.status == status)
                for status in (rg.PASS, rg.FAIL, rg.SKIP)
            }
            print(
                f"{identity:<26} pass={counts[rg.PASS]:>5}"
                f" fail={counts[rg.FAIL]:>3} skip={counts[rg.SKIP]:>3}"
            )
            for r in group:
                if r.status == rg.FAIL:
                    print(f"  FAIL {_params_plain(r.params)} lhs={r.lhs} rhs={r.rhs}")
        print(
            f"total={len(run.reports)} passed={run.passed}"
            f" failed={run.failed} skipped={run.skipped}"
        )
        print("RESULT " + ("PASS" if run.ok else "FAIL"))
    return 0 if run.ok else 1


def cmd_list_identities(args) -> int:
    entries = rg.list_identities()
    if args.format == "json":
        payload = [
            {
                "identity": e.identity_id,
                "corrected": e.corrected,
                "statement": e.statement,
            }
            for e in entries
        ]
        print(json.dumps(payload))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["identity", "corrected", "statement"])
        for e in entries:
            writer.writerow([e.identity_id, str(e.corrected).lower(), e.statement])
    else:
        for e in entries:
            flag = " [corrected]" if e.corrected else ""
            print(f"{e.identity_id:<26}{flag}")
            print(f"    {e.statement}")
    return 0


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fubini",
        description="Exact Fubini/Bernoulli/Apostol-Bernoulli calculator and identity verifier.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="compute one value")
    compute.add_argument(
        "object",
        choices=[
            "stirling1", "stirling2", "binomial", "fubini-number", "fubini-poly",
            "fubini-two-var", "bernoulli", "p-bernoulli", "apostol",
        ],
    )
    compute.add_argument("--n", type=int)
    compute.add_argument("--k", type=int)
    compute.add_argument("--m", type=int)
    compute.add_argument("--p", type=int)
    compute.add_argument("--at", type=_rational, metavar="RAT",
                         help="evaluate at a rational point, e.g. -3/7")
    compute.add_argument("--format", choices=FORMATS, default="plain")
    compute.set_defaults(func=cmd_compute)

    table = sub.add_parser("table", help="stream a value table")
    table.add_argument("family", choices=["bernoulli", "fubini", "p-bernoulli"])
    table.add_argument("--n-max", type=int, dest="n_max")
    table.add_argument("--p-max", type=int, dest="p_max")
    table.add_argument("--format", choices=FORMATS, default="csv")
    table.set_defaults(func=cmd_table)

    verify = sub.add_parser("verify", help="verify one identity over its grid")
    verify.add_argument("identity_id")
    verify.add_argument("--profile", choices=rg.PROFILES, default="full")
    verify.add_argument("--n-max", type=int, dest="n_max")
    verify.add_argument("--m-max", type=int, dest="m_max")
    verify.add_argument("--k-max", type=int, dest="k_max")
    verify.add_argument("--p-max", type=int, dest="p_max")
    verify.add_argument(
        "--samples", type=int,
        help="number of rational grid points to use (the fixed grid has 25)",
    )
    verify.add_argument("--format", choices=FORMATS, default="plain")
    verify.set_defaults(func=cmd_verify)

    verify_all = sub.add_parser("verify-all", help="verify the whole catalog")
    verify_all.add_argument("--profile", choices=rg.PROFILES, required=True)
    verify_all.add_argument("--format", choices=FORMATS, default="plain")
    verify_all.set_defaults(func=cmd_verify_all)

    list_ids = sub.add_parser("list-identities", help="print the identity catalog")
    list_ids.add_argument("--format", choices=FORMATS, default="plain")
    list_ids.set_defaults(func=cmd_list_identities)

    return parser


def _merge_at_values(argv: list[str]) -> list[str]:
    # argparse reads "--at -3/7" as a missing value followed by an unknown
    # option; fold the pair into "--at=-3/7" so negative rationals work.
    merged = []
    i = 0
    while i < len(argv):
        if argv[i] == "--at" and i + 1 < len(argv):
            merged.append(f"--at={argv[i + 1]}")
            i += 2
        else:
            merged.append(argv[i])
            i += 1
    return merged


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_merge_at_values(list(argv)))
    try:
        return args.func(args)
    except UsageError as exc:
        parser.exit(2, f"{parser.prog}: error: {exc}\n")
    except (ValueError, ZeroDivisionError) as exc:
        parser.exit(2, f"{parser.prog}: error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
