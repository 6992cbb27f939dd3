"""
Command line front end: ``qzeta <subcommand> ...``.

Exit status is 0 on success, 1 on domain errors and 2 on usage errors.
Every report is rendered completely before anything is printed.
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import QZetaError
from .oracles import (
    oracle_quasihomogeneous,
    oracle_semigroup_mu,
    polynomial_root_multiset,
)
from .parsing import germ_from_text, parse_space
from .qspace import group_order, is_normalized, make_faithful, normalize_cyclic
from .resolve import (
    PipelineResult,
    chi_complement_unicuspidal,
    pipeline_brieskorn,
    pipeline_curve,
    pipeline_two_pairs,
    pipeline_yomdin,
    two_pairs_N,
)
from .strata import StrataSet, report
from .zeta import expand, format_rational, series_check

SERIES_ORDER = 30


def _range(text: str) -> range:
    a, sep, b = text.partition("..")
    try:
        lo, hi = int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if not sep or lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"expected A..B with 0 <= A <= B, got {text!r}")
    return range(lo, hi + 1)


def _int_list(count: int):
    def parse(text: str) -> tuple[int, ...]:
        try:
            values = tuple(int(x) for x in text.split(","))
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected {count} comma-separated integers") from None
        if len(values) != count:
            raise argparse.ArgumentTypeError(f"expected {count} comma-separated integers")
        return values

    return parse


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _add_report_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--expand", action="store_true", help="expand Delta(t) into a polynomial")
    p.add_argument("--lefschetz", type=_range, metavar="A..B", help="tabulate Lambda(h^k) for k in A..B")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qzeta",
        description="Monodromy zeta functions from embedded Q-resolutions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="normalize a cyclic quotient type")
    p.add_argument("--space", required=True, help='type literal, e.g. "X(6;3,2)"')
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("strata", help="invariants of a strata file")
    p.add_argument("--input", required=True, help="strata JSON file, or - for stdin")
    _add_report_flags(p)

    p = sub.add_parser("curve", help="x^a y^b (x^alpha + c y^beta)^s on a cyclic quotient surface")
    p.add_argument("--space", default="C^2")
    p.add_argument("--germ", required=True)
    p.add_argument("--weights", type=_int_list(2), metavar="P,Q", help="override the blow-up weights")
    p.add_argument("--power", type=_positive, default=1, help="resolve f^k instead of f")
    _add_report_flags(p)

    p = sub.add_parser("puiseux2", help="plane branch with two Puiseux pairs")
    for name in ("--p1", "--q1", "--p2", "--q2"):
        p.add_argument(name, type=_positive, required=True)
    _add_report_flags(p)

    p = sub.add_parser("brieskorn", help="x^p + y^q + z^r")
    for name in ("--p", "--q", "--r"):
        p.add_argument(name, type=_positive, required=True)
    _add_report_flags(p)

    p = sub.add_parser("yomdin", help="z^(m+k) + h_m with one cusp x^q + y^p on h_m = 0")
    for name in ("--m", "--k", "--p", "--q"):
        p.add_argument(name, type=_positive, required=True)
    p.add_argument(
        "--chi-complement",
        type=int,
        help="chi(P^2 minus C); defaults to the value for a curve with no other singularity",
    )
    _add_report_flags(p)

    p = sub.add_parser("check", help="series check and brute-force oracle comparisons")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--input", help="strata JSON file, or - for stdin")
    group.add_argument("--brieskorn", type=_int_list(3), metavar="P,Q,R")
    group.add_argument("--puiseux2", type=_int_list(4), metavar="P1,Q1,P2,Q2")
    p.add_argument("--order", type=_positive, default=SERIES_ORDER, help="series truncation order")
    p.add_argument("--json", action="store_true")
    return parser


def _read_strata(path: str) -> StrataSet:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise QZetaError(f"cannot read {path}: {exc.strerror}") from None
    return StrataSet.loads(text)


def _report_kwargs(args) -> dict:
    return {"expand_delta": args.expand, "lefschetz_range": args.lefschetz}


def _render_strata(s: StrataSet, args) -> str:
    rep = report(s, **_report_kwargs(args))
    if args.json:
        return json.dumps({**s.to_json(), **rep.to_json()}, indent=2)
    lines = [f"n = {s.n}, {len(s)} strata"]
    lines.extend(
        f"  m={format_rational(st.m)} ell={st.ell} chi={st.chi}" + (f"  ({st.label})" if st.label else "")
        for st in s
    )
    lines.append(rep.to_text())
    return "\n".join(lines)


def _render_pipeline(res: PipelineResult, args, title: str) -> str:
    rep = report(res.strata, **_report_kwargs(args))
    if args.json:
        out = {"input": title, **res.to_json(), **rep.to_json()}
        return json.dumps(out, indent=2)
    lines = [title, _render_strata(res.strata, args)]
    if res.closed_form is not None:
        agree = "agrees" if res.closed_form_agrees() else "DISAGREES"
        lines.append(f"closed form: {res.closed_form} ({agree})")
    lines.extend(f"note: {n}" for n in res.notes)
    return "\n".join(lines)


def _cmd_normalize(args) -> str:
    q = parse_space(args.space)
    if not q.is_cyclic:
        raise QZetaError(f"normalize handles cyclic types only, got {q}")
    faithful = make_faithful(q)
    target, factors = normalize_cyclic(faithful)
    data = {
        "input": q.to_str(),
        "faithful": faithful.to_str(),
        "normalized": target.to_str(),
        "transport": [format_rational(f) for f in factors],
        "input_is_normalized": is_normalized(q),
        "order": group_order(target),
    }
    if args.json:
        return json.dumps(data, indent=2)
    return "\n".join(
        [
            f"input      {data['input']}",
            f"faithful   {data['faithful']}",
            f"normalized {data['normalized']}",
            f"transport  x_j -> x_j^({', '.join(data['transport'])})",
            f"group order {data['order']}",
        ]
    )


def _cmd_curve(args) -> str:
    space = parse_space(args.space)
    germ = germ_from_text(args.germ, space)
    if args.power > 1:
        germ = germ.power(args.power)
    res = pipeline_curve(space, germ, args.weights)
    return _render_pipeline(res, args, f"{germ} on {space}")


def _cmd_yomdin(args) -> str:
    chi = args.chi_complement
    if chi is None:
        chi = chi_complement_unicuspidal(args.m, args.p, args.q)
    res = pipeline_yomdin(args.m, args.k, args.p, args.q, chi)
    title = f"Yomdin-Le surface m={args.m} k={args.k} cusp ({args.p},{args.q}), chi(P^2 - C)={chi}"
    return _render_pipeline(res, args, title)


def _check_lines(args) -> list[tuple[str, bool, str]]:
    checks = []
    if args.input is not None:
        s = _read_strata(args.input)
        rep = report(s, series_order=args.order)
        if rep.series_ok is None:
            checks.append(("series", False, rep.absent.get("series_check", "skipped")))
        else:
            checks.append(("series", rep.series_ok, f"order {args.order}"))
        return checks
    if args.brieskorn is not None:
        p, q, r = args.brieskorn
        res = pipeline_brieskorn(p, q, r)
        delta = expand(res.delta)
        mu = (p - 1) * (q - 1) * (r - 1)
        checks.append(("degree", delta.degree == mu, f"deg Delta = {delta.degree}, (p-1)(q-1)(r-1) = {mu}"))
        checks.append(("closed form", bool(res.closed_form_agrees()), str(res.closed_form)))
        if min(p, q, r) >= 2 and p * q * r <= 10**5:
            roots, rest = polynomial_root_multiset(delta, p * q * r)
            oracle = oracle_quasihomogeneous((p, q, r))
            ok = rest.degree == 0 and roots == oracle
            checks.append(("eigenvalues", ok, "roots of Delta vs fractional index sums"))
        checks.append(("series", series_check(res.zeta, args.order), f"order {args.order}"))
        return checks
    p1, q1, p2, q2 = args.puiseux2
    res = pipeline_two_pairs(p1, q1, p2, q2)
    mu = report(res.strata).mu
    gens = (q1 * q2, p1 * q2, two_pairs_N(p1, q1, p2, q2))
    oracle = oracle_semigroup_mu(gens)
    checks.append(("semigroup", mu == oracle, f"mu = {mu}, 2 * #gaps<{','.join(map(str, gens))}> = {oracle}"))
    checks.append(("closed form", bool(res.closed_form_agrees()), str(res.closed_form)))
    checks.append(("series", series_check(res.zeta, args.order), f"order {args.order}"))
    return checks


def _cmd_check(args) -> tuple[str, int]:
    checks = _check_lines(args)
    ok = all(c[1] for c in checks)
    if args.json:
        text = json.dumps(
            {"ok": ok, "checks": [{"name": n, "ok": o, "detail": d} for n, o, d in checks]}, indent=2
        )
    else:
        text = "\n".join(f"{'PASS' if o else 'FAIL'} {n}: {d}" for n, o, d in checks)
    return text, 0 if ok else 1


def run(argv=None) -> tuple[int, str, str]:
    """Run the CLI and return (exit code, stdout text, stderr text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), "", ""
    code = 0
    try:
        if args.command == "normalize":
            out = _cmd_normalize(args)
        elif args.command == "strata":
            out = _render_strata(_read_strata(args.input), args)
        elif args.command == "curve":
            out = _cmd_curve(args)
        elif args.command == "puiseux2":
            res = pipeline_two_pairs(args.p1, args.q1, args.p2, args.q2)
            out = _render_pipeline(res, args, f"branch y = x^({args.p1}/{args.q1}) + x^({args.p2}/{args.q2})")
        elif args.command == "brieskorn":
            res = pipeline_brieskorn(args.p, args.q, args.r)
            out = _render_pipeline(res, args, f"x^{args.p} + y^{args.q} + z^{args.r}")
        elif args.command == "yomdin":
            out = _cmd_yomdin(args)
        else:
            out, code = _cmd_check(args)
    except QZetaError as exc:
        return 1, "", f"qzeta: error: {exc}\n"
    return code, out + "\n", ""


def main(argv=None) -> int:
    code, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
