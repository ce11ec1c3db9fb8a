"""Command-line front end.

Every rational is printed as an exact ``p/q`` string.  Exit codes: 0 on
success, 1 when a verification check fails, 2 on bad input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from fractions import Fraction
from typing import Any, Sequence

from .errors import HadamardCauchyError
from .exact import parse_rational
from .formulas import (
    CauchyInstance,
    TwistedRational,
    det_hadamard_closed,
    f0_direct,
    f0_recurrence,
    f0_series,
    f_k,
    minc_value,
    per_closed_forms,
    scott_historical,
    scott_minc,
)
from .matrix import DEFAULT_MAX_BRUTEFORCE

SCHEMA = "hadamard-cauchy/1"
EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2

_NEG_VALUE = re.compile(r"^-\d+(/\d+)?$")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def _glue_negative_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--a -1/3`` into ``--a=-1/3`` so argparse does not see an option."""
    out: list[str] = []
    it = iter(range(len(argv)))
    for i in it:
        tok = argv[i]
        if tok.startswith("--") and "=" not in tok and i + 1 < len(argv) and _NEG_VALUE.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            next(it, None)
        else:
            out.append(tok)
    return out


def load_config(path: str | None) -> dict[str, str]:
    """Read ``key = value`` lines; ``#`` starts a comment."""
    if not path:
        return {}
    cfg: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key = value")
            key, value = (s.strip() for s in line.split("=", 1))
            cfg[key.replace("-", "_")] = value
    unknown = set(cfg) - {"max_bruteforce", "format"}
    if unknown:
        raise UsageError(f"{path}: unknown keys {sorted(unknown)}")
    return cfg


def resolve_cap(flag: int | None, cfg: dict[str, str]) -> int:
    """Flag, then HC_MAX_BRUTEFORCE, then config file, then the default."""
    if flag is not None:
        return flag
    for source in (os.environ.get("HC_MAX_BRUTEFORCE"), cfg.get("max_bruteforce")):
        if source:
            try:
                return int(source)
            except ValueError:
                raise UsageError(f"brute-force cap must be an integer, got {source!r}") from None
    return DEFAULT_MAX_BRUTEFORCE


def _twisted(t: TwistedRational) -> dict[str, Any]:
    return {"rational": str(t.r), "alpha_exponent": t.e, "alpha_relation": f"alpha^{t.n} = {t.c}"}


def _params(**kw) -> dict[str, Any]:
    return {k: (str(v) if isinstance(v, Fraction) else v) for k, v in kw.items() if v is not None}


def _record(command: str, params: dict, **extra) -> dict[str, Any]:
    rec = {"schema": SCHEMA, "command": command, "params": params}
    rec.update(extra)
    rec.setdefault("checks", [])
    return rec


def _require(args, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"missing required option(s): {', '.join(missing)}")


def cmd_scott(args) -> tuple[dict, int]:
    if args.table is not None:
        if args.table < 1:
            raise UsageError("--table needs N >= 1")
        rows = [
            {
                "n": n,
                "value": str(scott_minc(n, args.a)),
                "minc": str(minc_value(n)),
                "scott_historical": str(scott_historical(n)),
            }
            for n in range(1, args.table + 1)
        ]
        note = "scott_historical is the unsigned historical value, shown for reference only"
        return _record("scott", _params(table=args.table, a=args.a), values=rows, note=note), EXIT_OK
    n = args.n_pos if args.n_pos is not None else args.n
    if n is None:
        raise UsageError("scott needs n (positional or --n) or --table N")
    return _record("scott", _params(n=n, a=args.a), value=str(scott_minc(n, args.a))), EXIT_OK


def cmd_permanent(args) -> tuple[dict, int]:
    _require(args, "n", "a", "b")
    inst = CauchyInstance(args.n, args.a, args.b)
    forms = per_closed_forms(inst.n, inst.a, inst.b)
    checks = [
        {"name": f"product_form_{i}", "status": "pass" if f == forms[0] else "fail", "lhs": str(f), "rhs": str(forms[0])}
        for i, f in enumerate(forms[1:], start=2)
    ]
    code = EXIT_OK if all(c["status"] == "pass" for c in checks) else EXIT_MISMATCH
    return _record("permanent", _params(n=inst.n, a=inst.a, b=inst.b), value=str(forms[0]), checks=checks), code


def cmd_det(args) -> tuple[dict, int]:
    _require(args, "n", "m", "a", "b")
    if args.m < 1:
        raise UsageError("--m must be >= 1")
    inst = CauchyInstance(args.n, args.a, args.b)
    value = det_hadamard_closed(inst, args.m)
    return _record("det", _params(n=inst.n, m=args.m, a=inst.a, b=inst.b, c=inst.c), value=_twisted(value)), EXIT_OK


def cmd_fnm(args) -> tuple[dict, int]:
    _require(args, "n", "m", "k", "c")
    n, m, k, c = args.n, args.m, args.k, args.c
    if n < 1 or m < 0:
        raise UsageError("need n >= 1 and m >= 0")
    params = _params(n=n, m=m, k=k, c=c)
    checks: list[dict] = []
    if m == 0:
        if c in (0, 1):
            raise UsageError("c must avoid 0 and 1")
        value = TwistedRational(n if k % n == 0 else 0, n=n, c=c)
    elif k % n == 0:
        routes = {
            "direct": f0_direct(n, m, c),
            "recurrence": f0_recurrence(n, m, c)[m],
            "series": f0_series(n, m, c)[m],
        }
        ref = routes["recurrence"]
        checks = [
            {"name": name, "status": "pass" if v == ref else "fail", "lhs": str(v), "rhs": str(ref)}
            for name, v in routes.items()
        ]
        value = TwistedRational(ref, n=n, c=c)
    else:
        value = f_k(n, m, k % n, c)
    code = EXIT_OK if all(ch["status"] == "pass" for ch in checks) else EXIT_MISMATCH
    return _record("fnm", params, value=_twisted(value), checks=checks), code


def cmd_verify(args) -> tuple[dict, int]:
    from .verify import verify_instance

    _require(args, "n", "beta", "gamma")
    m_max = 2 if args.m_max is None else args.m_max
    if m_max < 1:
        raise UsageError("--m-max must be >= 1")
    report = verify_instance(args.n, args.beta, args.gamma, m_max, max_bruteforce=args.cap)
    d = report.to_dict()
    rec = _record(
        "verify",
        _params(n=args.n, beta=args.beta, gamma=args.gamma, m_max=m_max),
        value=d["values"]["per"],
        values=d["values"],
        checks=d["checks"],
    )
    return rec, EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_selftest(args) -> tuple[dict, int]:
    from .acceptance import run_all

    results = run_all()
    checks = [
        {
            "name": f"criterion_{r.number}",
            "status": "pass" if r.passed else "fail",
            "lhs": r.detail,
            "rhs": f"{r.seconds:.2f}s",
        }
        for r in results
    ]
    code = EXIT_OK if all(r.passed for r in results) else EXIT_MISMATCH
    return _record("selftest", {}, checks=checks), code


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--m", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--a", type=_rational)
    common.add_argument("--b", type=_rational)
    common.add_argument("--c", type=_rational)
    common.add_argument("--beta", type=_rational)
    common.add_argument("--gamma", type=_rational)
    common.add_argument("--m-max", type=int)
    common.add_argument("--format", choices=("plain", "json", "csv"))
    common.add_argument("--max-bruteforce", type=int, help=f"brute-force size cap (default {DEFAULT_MAX_BRUTEFORCE})")
    common.add_argument("--config", help="key = value file with max_bruteforce and format")

    parser = _Parser(prog="hadamard-cauchy", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    scott = sub.add_parser("scott", parents=[common], help="permanent for x^n + a against y^n - a")
    scott.add_argument("n_pos", nargs="?", type=int, metavar="N")
    scott.add_argument("--table", type=int, metavar="N")
    scott.set_defaults(func=cmd_scott)
    for name, func, text in (
        ("permanent", cmd_permanent, "per of the Cauchy matrix in closed form"),
        ("det", cmd_det, "det of the m-th Hadamard power in closed form"),
        ("fnm", cmd_fnm, "the twisted sum f_{n,m}(k)"),
        ("verify", cmd_verify, "check closed forms against brute force"),
        ("selftest", cmd_selftest, "run the acceptance suite"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.set_defaults(func=func)
    return parser


def _flatten(rec: dict) -> list[tuple[str, str]]:
    rows: list[tuple[str, str]] = []

    def walk(prefix: str, v: Any) -> None:
        if isinstance(v, dict):
            for k, sub in v.items():
                walk(f"{prefix}.{k}" if prefix else k, sub)
        elif isinstance(v, list):
            for i, sub in enumerate(v):
                walk(f"{prefix}[{i}]", sub)
        else:
            rows.append((prefix, "" if v is None else str(v)))

    walk("", rec)
    return rows


def render(rec: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rec, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("field", "value"))
        w.writerows(_flatten(rec))
        return buf.getvalue().rstrip("\n")
    lines = []
    value = rec.get("value")
    if isinstance(value, dict) and "alpha_exponent" in value:
        e = value["alpha_exponent"]
        shown = value["rational"] if e == 0 else f"{value['rational']} * alpha^{e}"
        lines.append(f"{shown}    ({value['alpha_relation']})")
    elif value is not None:
        lines.append(str(value))
    if rec["command"] == "scott" and "values" in rec:
        lines.append(f"{'n':>3}  {'value':>24}  {'minc':>24}  {'scott (historical)':>24}")
        for row in rec["values"]:
            lines.append(f"{row['n']:>3}  {row['value']:>24}  {row['minc']:>24}  {row['scott_historical']:>24}")
        lines.append(rec["note"])
    elif rec["command"] == "verify":
        for k, v in rec["values"].items():
            lines.append(f"{k} = {v}")
    for ch in rec["checks"]:
        line = f"[{ch['status']}] {ch['name']}"
        if ch["status"] != "pass" or rec["command"] == "selftest":
            line += f": {ch['lhs']} | {ch['rhs']}"
        lines.append(line)
    return "\n".join(lines)


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_negative_values(argv))
        if args.command is None:
            raise UsageError("a subcommand is required")
        cfg = load_config(args.config)
        args.cap = resolve_cap(args.max_bruteforce, cfg)
        fmt = args.format or cfg.get("format", "plain")
        if fmt not in ("plain", "json", "csv"):
            raise UsageError(f"unknown format {fmt!r}")
        if args.command != "scott":
            args.table = None
        if args.command == "scott" and args.a is None:
            args.a = Fraction(-1)
        rec, code = args.func(args)
    except (UsageError, HadamardCauchyError, ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(render(rec, fmt))
    return code


if __name__ == "__main__":
    sys.exit(main())
