"""Command-line interface.

Exit codes: 0 success, 1 verification failure or method disagreement,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import cf_core, digits, hermite, pade
from .exact_arith import unlimited_int_digits

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _s(v) -> str:
    """Big integers and rationals travel as decimal strings in JSON."""
    return str(v)


def _parse_terms(spec: str):
    if spec == "e":
        return cf_core.e_term
    try:
        terms = [int(t) for t in spec.split(",")]
    except ValueError:
        raise UsageError(f"malformed term list {spec!r}") from None
    if any(t < 0 for t in terms[1:]):
        raise UsageError(f"negative partial quotient in {spec!r}")
    return terms


def _table(rows: list[tuple], header: tuple) -> list[str]:
    cols = list(zip(header, *rows))
    widths = [max(len(str(v)) for v in col) for col in cols]
    fmt = lambda r: "  ".join(str(v).rjust(w) for v, w in zip(r, widths))
    return [fmt(header)] + [fmt(r) for r in rows]


def cmd_convergents(args):
    if args.count < 1:
        raise UsageError("count must be at least 1")
    terms = _parse_terms(args.terms)
    if not callable(terms) and len(terms) < args.count:
        raise UsageError(f"{len(terms)} terms given, {args.count} requested")
    pairs = cf_core.convergents(terms, args.count)
    term_at = terms if callable(terms) else terms.__getitem__
    rows = [(c.index, term_at(c.index), c.p, c.q) for c in pairs]
    params = {"count": args.count, "terms": args.terms}
    result = [{"i": i, "a": _s(a), "p": _s(p), "q": _s(q)} for i, a, p, q in rows]
    return params, result, _table(rows, ("i", "a_i", "p_i", "q_i")), EXIT_OK


def _form(name: str) -> str:
    return cf_core.UNIT_TAIL if name in ("unit-tail", "unit_tail") else cf_core.CANONICAL


def cmd_cf(args):
    if args.denominator == 0:
        raise UsageError("denominator must be nonzero")
    r = Fraction(args.numerator, args.denominator)
    ts = cf_core.cf_of_rational(r, _form(args.form))
    params = {"numerator": _s(args.numerator), "denominator": _s(args.denominator), "form": args.form}
    result = {"value": _s(r), "terms": [_s(a) for a in ts]}
    return params, result, [str(ts)], EXIT_OK


def cmd_pade(args):
    if args.m < 0 or args.n < 0:
        raise UsageError("m and n must be nonnegative")
    approx = pade.pade(args.m, args.n, args.method)
    p = [_s(c) for c in approx.numerator.coeffs] or ["0"]
    q = [_s(c) for c in approx.denominator.coeffs]
    params = {"m": args.m, "n": args.n, "method": args.method, "at_one": args.at_one}
    result = {"p": p, "q": q}
    lines = [f"p: {', '.join(p)}", f"q: {', '.join(q)}"]
    if args.at_one:
        v = pade.evaluate_at_one(approx)
        canon = cf_core.cf_of_rational(v, cf_core.CANONICAL)
        tail = cf_core.cf_of_rational(v, cf_core.UNIT_TAIL)
        result.update(value=_s(v), canonical=[_s(a) for a in canon], unit_tail=[_s(a) for a in tail])
        lines += [f"value: {v}", f"canonical: {canon}", f"unit-tail: {tail}"]
    return params, result, lines, EXIT_OK


def cmd_verify(args):
    reports = []
    if args.prop1 is not None:
        reports.append(("prop1", args.prop1, hermite.verify_prop1))
    if args.identities is not None:
        reports.append(("identities", args.identities, _identities))
    if args.correspondence is not None:
        reports.append(("correspondence", args.correspondence, pade.convergent_correspondence))
    if not reports:
        raise UsageError("one of --prop1, --identities, --correspondence is required")
    params, result, lines = {}, [], []
    for name, N, fn in reports:
        if N < 1:
            raise UsageError(f"--{name} must be at least 1")
        params[name] = N
    for name, N, fn in reports:
        rep = fn(N)
        result.append(rep.to_dict())
        lines += rep.lines()
    ok = all(r["passed"] for r in result)
    return params, result, lines, EXIT_OK if ok else EXIT_FAIL


def _identities(N: int) -> hermite.VerificationReport:
    report = hermite.VerificationReport(f"identities(N={N})")
    for n in range(1, N + 1):
        report.rows += hermite.verify_derivative_identities(n).rows
    return report


def cmd_e(args):
    D = args.digits
    if D < 1:
        raise UsageError("--digits must be at least 1")
    params = {"digits": D, "method": args.method, "bench": args.bench}
    if args.bench:
        rep = digits.benchmark(D)
        recs = [
            {
                "method": r.method,
                "terms": r.terms,
                "seconds": 0.0 if args.deterministic else r.seconds,
                "digits_agreed": r.digits_agreed,
            }
            for r in rep.records
        ]
        rows = [(r["method"], r["terms"], f"{r['seconds']:.6f}", r["digits_agreed"]) for r in recs]
        return params, {"records": recs}, _table(rows, ("method", "terms", "seconds", "digits_agreed")), EXIT_OK
    names = ["cf", "taylor"] if args.method == "both" else [args.method]
    res = {name: digits.METHODS[name](D) for name in names}
    strings = {r.digits for r in res.values()}
    if len(strings) != 1:
        raise digits.DigitMismatch("cf and taylor disagree")
    text = strings.pop()
    result = {
        "digits": text,
        "methods": {name: {"terms": r.terms_used, "bound": _s(r.bound)} for name, r in res.items()},
    }
    return params, result, [text], EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["plain", "json"], default="plain")
    common.add_argument("--deterministic", action="store_true", help="zero timing fields")

    parser = argparse.ArgumentParser(prog="efrac", description="Exact continued fractions, Pade approximants and digits of e.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convergents", parents=[common], help="table of i, a_i, p_i, q_i")
    p.add_argument("count", type=int)
    p.add_argument("--terms", default="e", help="'e' or a comma-separated list")
    p.set_defaults(func=cmd_convergents)

    p = sub.add_parser("cf", parents=[common], help="continued fraction of a rational")
    p.add_argument("numerator", type=int)
    p.add_argument("denominator", type=int)
    p.add_argument("--form", choices=["canonical", "unit-tail"], default="canonical")
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("pade", parents=[common], help="Pade approximant of e^z of type (m, n)")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=["lemma", "linsolve"], default="lemma")
    p.add_argument("--at-one", action="store_true")
    p.set_defaults(func=cmd_pade)

    p = sub.add_parser("verify", parents=[common], help="exact verification reports")
    p.add_argument("--prop1", type=int, metavar="N")
    p.add_argument("--identities", type=int, metavar="N")
    p.add_argument("--correspondence", type=int, metavar="N")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("e", parents=[common], help="decimal digits of e")
    p.add_argument("--digits", type=int, required=True)
    p.add_argument("--method", choices=["cf", "taylor", "both"], default="cf")
    p.add_argument("--bench", action="store_true")
    p.set_defaults(func=cmd_e)
    return parser


_PARSER = None


def _parser():
    global _PARSER
    if _PARSER is None:
        _PARSER = build_parser()
    return _PARSER


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = _parser().parse_args(argv)
    params, result, lines, code = {}, None, [], EXIT_OK
    error = None
    try:
        with unlimited_int_digits():
            params, result, lines, code = args.func(args)
    except UsageError as exc:
        error, code = str(exc), EXIT_USAGE
    except digits.DigitMismatch as exc:
        error, code = str(exc), EXIT_FAIL
    if code == EXIT_FAIL and error is None:
        error = "verification failed"

    if args.format == "json":
        envelope = {
            "command": args.command,
            "parameters": params,
            "result": result,
            "status": "ok" if error is None else "error",
            "error_message": error,
        }
        out.write(json.dumps(envelope) + "\n")
    else:
        if lines:
            out.write("\n".join(lines) + "\n")
        if error is not None:
            print(f"efrac {args.command}: error: {error}", file=sys.stderr)
    return code


def run() -> None:
    sys.exit(main())
