"""Command-line front end.

    bellpoly verify [--suite hoffman,xu12 | all] [--max-k N] [--order N]
                    [--epsilon 1,-1,1/2] [--format plain|json|csv] [--out PATH]
    bellpoly compute bernoulli 4
    bellpoly compute bell 1 3 20
    bellpoly table catalan 10 --format json

Exit status of ``verify``: 0 if every case passes, 1 if any fails, 2 on a
usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import bell, sequences
from .exact_arith import format_rational, parse_rational
from .identities import (
    DEFAULT_EPSILONS,
    DEFAULT_K_MAX,
    DEFAULT_ORDER,
    SUITES,
    RunConfig,
    VerificationReport,
    run_suites,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parse_int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {text!r}") from None


def _parse_rat(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse_epsilons(text: str):
    items = [t for t in text.split(",") if t.strip()]
    if not items:
        raise UsageError("empty epsilon list")
    return tuple(_parse_rat(t) for t in items)


def _parse_suites(text: str) -> list[str]:
    names = [t.strip() for t in text.split(",") if t.strip()]
    bad = [n for n in names if n != "all" and n not in SUITES]
    if bad or not names:
        choices = ", ".join(["all", *SUITES])
        raise UsageError(f"unknown suite {','.join(bad) or '<empty>'}; choose from: {choices}")
    return names


# --- compute ---------------------------------------------------------------

def _compute(selector: str, params: list[str]):
    def need(n):
        if len(params) != n:
            raise UsageError(f"{selector} takes {n} argument(s), got {len(params)}")

    if selector in ("bernoulli", "euler", "catalan"):
        need(1)
        n = _parse_int(params[0], "index")
        if n < 0:
            raise UsageError("index must be nonnegative")
        return getattr(sequences, selector)(n)
    if selector == "T":
        need(2)
        p, q = (_parse_int(x, "T argument") for x in params)
        if p < 0 or q < 0:
            raise UsageError("T(p, q) needs p, q >= 0")
        return sequences.central_factorial_T(p, q)
    if selector in ("genB", "genE"):
        need(3)
        k = _parse_int(params[0], "degree")
        if k < 0:
            raise UsageError("degree must be nonnegative")
        sigma, x = _parse_rat(params[1]), _parse_rat(params[2])
        fn = sequences.gen_bernoulli_poly if selector == "genB" else sequences.gen_euler_poly
        return fn(k, sigma, x)
    if selector == "bell":
        args = [_parse_rat(x) for x in params]
        return bell.complete_bell_sum(len(args), args)
    if selector == "partial-bell":
        if len(params) < 2:
            raise UsageError("partial-bell takes k j a_1 ... a_{k-j+1}")
        k, j = _parse_int(params[0], "k"), _parse_int(params[1], "j")
        if not 0 <= j <= k:
            raise UsageError("partial-bell needs k >= j >= 0")
        args = [_parse_rat(x) for x in params[2:]]
        if len(args) < k - j + 1 and not (k == 0 and j == 0):
            raise UsageError(f"partial-bell {k} {j} needs {k - j + 1} arguments, got {len(args)}")
        return bell.partial_bell_direct(k, j, args)
    raise UsageError(f"unknown value selector {selector!r}")


# --- output ----------------------------------------------------------------

def _report_text(report: VerificationReport, fmt: str, timing: bool) -> str:
    if fmt == "json":
        return report.to_json(timing) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "k", "epsilon", "extra", "lhs", "rhs", "pass"])
        for r in report.cases:
            d = r.to_dict()
            w.writerow([d["id"], d["k"], d["epsilon"] or "", d.get("extra", ""), d["lhs"] or "", d["rhs"] or "",
                        "true" if d["pass"] else "false"])
        return buf.getvalue()
    lines = []
    for r in report.failures():
        d = r.to_dict()
        lines.append(f"FAIL {d['id']} k={d['k']} eps={d['epsilon']} extra={d.get('extra')} "
                     f"lhs={d['lhs']} rhs={d['rhs']} {d.get('detail', '')}".rstrip())
    if len(report.cases) <= 20:
        for r in report.cases:
            if r.passed:
                d = r.to_dict()
                eps = f" eps={d['epsilon']}" if d["epsilon"] is not None else ""
                lines.append(f"ok   {d['id']} k={d['k']}{eps} lhs={d['lhs']} rhs={d['rhs']}")
    line = report.summary()
    if timing:
        line += f" in {report.wall_time * 1000:.0f} ms"
    lines.append(line)
    return "\n".join(lines) + "\n"


def _values_text(values, fmt: str) -> str:
    strs = [format_rational(v) for v in values]
    if fmt == "json":
        return json.dumps(strs) + "\n"
    return ",".join(strs) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bellpoly", description="Exact Bell-polynomial identities and number tables.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run identity verification suites")
    v.add_argument("--suite", default="all", help="comma-separated suite names (default: all)")
    v.add_argument("--max-k", type=int, default=DEFAULT_K_MAX)
    v.add_argument("--order", type=int, default=DEFAULT_ORDER, help="series truncation order (even, >= 4)")
    v.add_argument("--epsilon", default=",".join(format_rational(e) for e in DEFAULT_EPSILONS),
                   help="comma-separated exact rationals, e.g. 1,-1,1/2")
    v.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    v.add_argument("--out")
    v.add_argument("--timing", action="store_true", help="include wall time (output is then not reproducible)")

    c = sub.add_parser("compute", help="print one exact value")
    c.add_argument("selector", help="bernoulli | euler | catalan | T | genB | genE | bell | partial-bell")
    c.add_argument("--out")
    # REMAINDER so that negative rationals such as -1/2 are not read as options
    c.add_argument("params", nargs=argparse.REMAINDER)

    t = sub.add_parser("table", help="print a number sequence 0..N")
    t.add_argument("kind", choices=sequences.SEQUENCE_KINDS)
    t.add_argument("max_index", type=int)
    t.add_argument("--format", choices=("plain", "json", "csv"), default="csv")
    t.add_argument("--out")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        if ns.command == "verify":
            suites = _parse_suites(ns.suite)
            eps = _parse_epsilons(ns.epsilon)
            if ns.max_k < 0:
                raise UsageError("--max-k must be nonnegative")
            if ns.order < 4 or ns.order % 2:
                raise UsageError("--order must be an even integer >= 4")
            report = run_suites(suites, RunConfig(k_max=ns.max_k, order=ns.order, epsilons=eps))
            _emit(_report_text(report, ns.format, ns.timing), ns.out)
            return EXIT_OK if report.ok else EXIT_FAIL
        if ns.command == "compute":
            _emit(format_rational(_compute(ns.selector, ns.params)) + "\n", ns.out)
            return EXIT_OK
        if ns.max_index < 0:
            raise UsageError("max index must be nonnegative")
        _emit(_values_text(sequences.table(ns.kind, ns.max_index), ns.format), ns.out)
        return EXIT_OK
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
