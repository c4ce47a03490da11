"""Command-line front end.

Subcommands: stirling (one value), poly (P_n mod N), chern (classes of a
permutation representation), verify (named identity suites), table (residues
vs. the exact table). Exit codes: 0 success, 1 verification failure, 2 usage
error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .chern import CyclicGroup, PermutationGSet, chern_permutation
from .modring import PrimePower, factorize, vp
from .polyring import closed_form_even, closed_form_odd, pochhammer_poly
from .stirling import (
    ValuationKind,
    oracle_max,
    stirling_exact,
    stirling_mod_n,
    stirling_mod_pr,
    stirling_valuation,
)
from .suites import SUITE_ORDER, SUITES, VerificationReport, run_all, run_suite


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stirlingmod",
        description="Signless Stirling numbers of the first kind modulo prime "
        "powers, congruence verification, and Chern classes of cyclic-group "
        "permutation representations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_st = sub.add_parser("stirling", help="one Stirling number c(n,k)")
    p_st.add_argument("n", type=int)
    p_st.add_argument("k", type=int)
    mode = p_st.add_mutually_exclusive_group(required=True)
    mode.add_argument("--mod", type=int, metavar="N",
                      help="c(n,k) mod N (fast congruence path when N = n)")
    mode.add_argument("--mod-pr", type=int, metavar="P", dest="mod_pr",
                      help="c(n,k) mod p^(v_p(n)) with its branch tag")
    mode.add_argument("--exact", action="store_true", help="exact value from the table")
    mode.add_argument("--valuation", type=int, metavar="P",
                      help="closed-form v_p(c(n,k)) for n = p^r")
    p_st.set_defaults(func=cmd_stirling)

    p_poly = sub.add_parser("poly", help="P_n(t) mod N")
    p_poly.add_argument("n", type=int)
    p_poly.add_argument("--mod", type=int, required=True, metavar="N")
    p_poly.add_argument("--closed-form", action="store_true", dest="closed_form",
                        help="print the closed form instead (N must be p^(v_p(n)))")
    p_poly.set_defaults(func=cmd_poly)

    p_chern = sub.add_parser("chern", help="Chern classes of a permutation representation of C_n")
    p_chern.add_argument("n", type=int)
    p_chern.add_argument("--gset", default="1", metavar="D1,D2,...",
                         help="orbit stabilizer orders (default 1 = regular representation)")
    p_chern.set_defaults(func=cmd_chern)

    p_verify = sub.add_parser("verify", help="run an identity verification suite")
    p_verify.add_argument("suite", help="suite name or 'all': " + ", ".join(SUITE_ORDER))
    p_verify.add_argument("--max-n", type=int, default=None, dest="max_n",
                          help="cap the largest modulus/index swept by the suite")
    p_verify.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_verify.add_argument("--jobs", type=int, default=1,
                          help="run independent cases on this many threads")
    p_verify.set_defaults(func=cmd_verify)

    p_table = sub.add_parser("table", help="tabulate residues against the exact table")
    p_table.add_argument("what", choices=("stirling-mod",))
    p_table.add_argument("--n-range", required=True, metavar="A..B", dest="n_range")
    p_table.add_argument("--format", choices=("csv", "json"), default="csv")
    p_table.set_defaults(func=cmd_table)
    return parser


def cmd_stirling(args) -> int:
    n, k = args.n, args.k
    if args.exact:
        print(stirling_exact(n, k))
    elif args.mod_pr is not None:
        res = stirling_mod_pr(n, k, args.mod_pr)
        print(f"{int(res.value)} (mod {res.modulus.modulus}) [{res.branch.value}]")
    elif args.valuation is not None:
        p = args.valuation
        r = vp(n, p)
        if p**r != n:
            raise ValueError(f"--valuation needs n to be a power of {p}")
        out = stirling_valuation(PrimePower(p, r), k)
        rel = "=" if out.kind is ValuationKind.EXACT else ">="
        print(f"v_{p}(c({n},{k})) {rel} {out.value}")
    else:
        if args.mod == n:
            print(int(stirling_mod_n(n, k)))
        else:
            if args.mod < 2:
                raise ValueError("modulus must be >= 2")
            print(stirling_exact(n, k) % args.mod)
    return 0


def cmd_poly(args) -> int:
    if args.n < 1:
        raise ValueError("n must be >= 1")
    if args.closed_form:
        fac = factorize(args.mod)
        if len(fac) != 1:
            raise ValueError("closed form needs a prime-power modulus p^(v_p(n))")
        (p, r), = fac.items()
        if args.n % p or vp(args.n, p) != r:
            raise ValueError(f"closed form needs modulus {p}^(v_{p}({args.n}))")
        if p == 2:
            poly = closed_form_even(args.n)
        else:
            poly = closed_form_odd(PrimePower(p, r), args.n // p**r)
    else:
        poly = pochhammer_poly(args.n, args.mod)
    print(poly.render())
    return 0


def cmd_chern(args) -> int:
    try:
        orbits = [int(d) for d in args.gset.split(",") if d.strip()]
    except ValueError:
        raise ValueError(f"malformed --gset: {args.gset!r}")
    gset = PermutationGSet(CyclicGroup(args.n), orbits)
    total = chern_permutation(gset)
    for line in total.render_lines():
        print(line)
    if total.is_trivial():
        print("all higher Chern classes vanish")
    return 0


def _emit_text(reports: list[VerificationReport]) -> None:
    for report in reports:
        for case in report.cases:
            mark = "PASS" if case.passed else "FAIL"
            print(f"{mark} {case.case_id}  {case.detail}")
        print(f"{report.suite}: {report.passed} passed, {report.failed} failed "
              f"({report.duration:.2f}s)")
    if len(reports) > 1:
        total_pass = sum(r.passed for r in reports)
        total_fail = sum(r.failed for r in reports)
        duration = sum(r.duration for r in reports)
        print(f"total: {total_pass} passed, {total_fail} failed ({duration:.2f}s)")


def _emit_json(reports: list[VerificationReport]) -> None:
    for report in reports:
        for case in report.cases:
            print(json.dumps({
                "suite": case.suite,
                "case": case.case_id,
                "statement": case.statement,
                "passed": case.passed,
                "detail": case.detail,
            }))
    summary = {
        "passed": sum(r.passed for r in reports),
        "failed": sum(r.failed for r in reports),
        "total": sum(len(r.cases) for r in reports),
        "duration_s": round(sum(r.duration for r in reports), 6),
    }
    print(json.dumps({"summary": summary}))


def _emit_csv(reports: list[VerificationReport]) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["suite", "case", "statement", "passed", "detail"])
    for report in reports:
        for case in report.cases:
            writer.writerow([case.suite, case.case_id, case.statement,
                             "true" if case.passed else "false", case.detail])


def cmd_verify(args) -> int:
    if args.jobs < 1:
        raise ValueError("--jobs must be >= 1")
    if args.suite == "all":
        reports = run_all(args.max_n, args.jobs)
    elif args.suite in SUITES:
        reports = [run_suite(args.suite, args.max_n, args.jobs)]
    else:
        raise ValueError(f"unknown suite: {args.suite!r} (known: all, {', '.join(SUITE_ORDER)})")
    {"text": _emit_text, "json": _emit_json, "csv": _emit_csv}[args.format](reports)
    return 0 if all(r.all_passed for r in reports) else 1


def _parse_range(spec: str) -> tuple[int, int]:
    lo, sep, hi = spec.partition("..")
    if not sep:
        raise ValueError(f"malformed range {spec!r}, expected A..B")
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise ValueError(f"malformed range {spec!r}, expected A..B")
    if a < 2 or b < a:
        raise ValueError(f"range {spec!r} must satisfy 2 <= A <= B")
    return a, b


def _table_rows(lo: int, hi: int):
    for n in range(lo, hi + 1):
        primes = sorted(factorize(n))
        for k in range(0, n + 1):
            for p in primes:
                res = stirling_mod_pr(n, k, p)
                N = res.modulus.modulus
                oracle = stirling_exact(n, k) % N
                yield {
                    "n": n,
                    "k": k,
                    "p": p,
                    "r": res.modulus.r,
                    "branch": res.branch.value,
                    "value": int(res.value),
                    "oracle": oracle,
                    "match": int(res.value) == oracle,
                }


def cmd_table(args) -> int:
    lo, hi = _parse_range(args.n_range)
    if hi > oracle_max():
        raise ValueError(f"range end {hi} exceeds the oracle bound {oracle_max()}")
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["n", "k", "p", "r", "branch", "value", "oracle", "match"])
        for row in _table_rows(lo, hi):
            writer.writerow([row["n"], row["k"], row["p"], row["r"], row["branch"],
                             row["value"], row["oracle"],
                             "true" if row["match"] else "false"])
    else:
        for row in _table_rows(lo, hi):
            print(json.dumps(row))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
