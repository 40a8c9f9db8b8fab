"""Command-line surface: count, test, search, autocorr, verify.

Outputs render as an aligned table, JSON, or CSV (the three formats
carry the same numeric content).  Exit codes: 0 success, 1 failed
verification, 2 invalid input, 3 budget or ceiling exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import bounds, counting, deciders, polys, reference
from .cache import ResultCache, default_cache_path
from .config import BudgetError, DEFAULT_ENUM_CEILING, DEFAULT_OP_BUDGET
from .counting import CountRecord
from .fields import build_tower, prime_power

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _mid_level(q, ceiling):
    p, ell = prime_power(q)
    return build_tower(p, ell, 1, ceiling=ceiling).mid_level


def _render(rows, fmt, out):
    if fmt == "json":
        payload = rows[0] if len(rows) == 1 else rows
        json.dump(payload, out, indent=2, default=str)
        out.write("\n")
        return
    if fmt == "csv":
        keys = []
        for row in rows:
            for key in row:
                if key not in keys:
                    keys.append(key)
        writer = csv.DictWriter(out, fieldnames=keys)
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _cell(row.get(k)) for k in keys})
        return
    keys = []
    for row in rows:
        for key in row:
            if key not in keys:
                keys.append(key)
    cells = [[_cell(row.get(k)) for k in keys] for row in rows]
    widths = [max(len(k), *(len(c[i]) for c in cells)) for i, k in enumerate(keys)]
    out.write("  ".join(k.ljust(w) for k, w in zip(keys, widths)).rstrip() + "\n")
    for row_cells in cells:
        out.write("  ".join(c.ljust(w) for c, w in zip(row_cells, widths)).rstrip() + "\n")


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return "%.6g" % value
    if isinstance(value, (dict, list)):
        return json.dumps(value, default=str)
    return str(value)


def _count_moduli(q, d, method, ceiling):
    p, ell = prime_power(q)
    if method == "theorem_zero":
        return ()
    if method == "formula":
        out = []
        for e in counting.divisors(d):
            if (d // e) % 2 == 1 and counting.mobius(d // e) != 0:
                out.append(build_tower(p, ell, e, ceiling=ceiling).moduli_text())
        return tuple(out)
    if method == "roots":
        return (build_tower(p, ell, d, ceiling=ceiling).moduli_text(),)
    return (build_tower(p, ell, 1, ceiling=ceiling).moduli_text(),)


def cmd_count(args, out):
    if args.k == 1:
        import time

        start = time.perf_counter()
        value = counting.gauss_s1(args.q, args.d)
        record = CountRecord(1, args.q, args.d, "formula", value,
                             Fraction(args.q**args.d, args.d), (),
                             time.perf_counter() - start)
        _render([record.as_dict()], args.format, out)
        return EXIT_OK
    method = args.method
    if method == "auto":
        reason = counting._theorem_zero_reason(args.q, args.d)
        method = "theorem_zero" if reason else "formula"
    cache = None if args.no_cache else ResultCache(args.cache)
    moduli = _count_moduli(args.q, args.d, method, args.ceiling)
    if cache is not None:
        hit = cache.lookup(2, args.q, args.d, method, moduli)
        if hit is not None:
            print("cache hit: %s" % cache.path, file=sys.stderr)
            _render([hit], args.format, out)
            return EXIT_OK
    record = counting.s2(args.q, args.d, method=args.method,
                         workers=args.workers, budget=args.budget,
                         ceiling=args.ceiling)
    row = record.as_dict()
    if record.q % 2 == 1 and record.d % 2 == 0:
        radius = bounds.larged_error_bound(record.q, record.d)
        row["asymptotic_interval"] = "(%s, %s)" % (
            record.main_term - radius, record.main_term + radius)
    if cache is not None:
        cache.store(record.as_dict())
    _render([row], args.format, out)
    return EXIT_OK


def cmd_test(args, out):
    lvl = _mid_level(args.q, args.ceiling)
    f = polys.parse_poly(lvl, args.poly)
    verdict = deciders.test_weak_k(f, args.k, budget=args.budget)
    row = {"q": args.q, "poly": f.to_text(), "k": args.k}
    row.update(verdict.as_dict())
    _render([row], args.format, out)
    return EXIT_OK


def cmd_search(args, out):
    lvl = _mid_level(args.q, args.ceiling)
    if args.q**args.d > args.ceiling:
        raise BudgetError("search space exceeds the enumeration ceiling")
    rows = []
    for f in polys.enumerate_monic_irreducible(lvl, args.d):
        verdict = deciders.test_weak_k(f, args.k, budget=args.budget)
        if verdict.holds:
            rows.append({"q": args.q, "d": args.d, "k": args.k,
                         "poly": f.to_human(), "coeffs": f.to_text()})
    if not rows:
        rows = [{"q": args.q, "d": args.d, "k": args.k, "poly": "", "coeffs": ""}]
    _render(rows, args.format, out)
    return EXIT_OK


def cmd_autocorr(args, out):
    offsets = [token.strip() for token in args.offsets.split(",") if token.strip()]
    offsets = [int(tok) if not tok.startswith("[") else tok for tok in offsets]
    result = counting.autocorrelation(args.q, args.e, offsets,
                                      ceiling=args.ceiling)
    _render([result.as_dict()], args.format, out)
    return EXIT_OK


def cmd_verify(args, out):
    rows = []
    failed = 0
    if args.suite in ("paper", "all"):
        for report in reference.paper_suite(deep=not args.quick,
                                            workers=args.workers):
            rows.append(report.as_dict())
            failed += 0 if report.passed else 1
    if args.suite in ("bounds", "all"):
        for report in reference.bounds_suite():
            rows.append(report.as_dict())
            failed += 0 if report.holds else 1
    _render(rows, args.format, out)
    print("%d checks, %d failed" % (len(rows), failed), file=sys.stderr)
    return EXIT_OK if failed == 0 else EXIT_FAIL


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"),
                        default="table", help="output format")
    common.add_argument("--budget", type=int, default=DEFAULT_OP_BUDGET,
                        help="coefficient-operation budget for searches")
    common.add_argument("--ceiling", type=int, default=DEFAULT_ENUM_CEILING,
                        help="largest field/enumeration size")
    common.add_argument("--workers", type=int, default=1,
                        help="worker processes for brute-force counts")
    common.add_argument("--cache", default=None,
                        help="cache file (default $SUPERIRR_CACHE or %s)"
                             % default_cache_path())
    common.add_argument("--no-cache", action="store_true",
                        help="skip the result cache")

    parser = argparse.ArgumentParser(
        prog="superirr",
        description="weak k-superirreducibility over finite fields: "
                    "deciders, exact counts, bound checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", parents=[common],
                             help="count monic weakly k-superirreducible polynomials")
    p_count.add_argument("--q", type=int, required=True)
    p_count.add_argument("--d", type=int, required=True)
    p_count.add_argument("--k", type=int, choices=(1, 2), default=2)
    p_count.add_argument("--method", default="auto",
                         choices=("auto", "formula", "roots", "bruteforce"))
    p_count.set_defaults(handler=cmd_count)

    p_test = sub.add_parser("test", parents=[common],
                            help="test one polynomial for weak k-superirreducibility")
    p_test.add_argument("--q", type=int, required=True)
    p_test.add_argument("--poly", required=True,
                        help='e.g. "x^4-x^2-1" or "2,0,2,0,1"')
    p_test.add_argument("--k", type=int, default=2)
    p_test.set_defaults(handler=cmd_test)

    p_search = sub.add_parser("search", parents=[common],
                              help="list the weakly k-superirreducible polynomials "
                                   "of a given degree")
    p_search.add_argument("--q", type=int, required=True)
    p_search.add_argument("--d", type=int, required=True)
    p_search.add_argument("--k", type=int, required=True)
    p_search.set_defaults(handler=cmd_search)

    p_auto = sub.add_parser("autocorr", parents=[common],
                            help="autocorrelation of the quadratic character")
    p_auto.add_argument("--q", type=int, required=True)
    p_auto.add_argument("--e", type=int, required=True)
    p_auto.add_argument("--offsets", required=True,
                        help="comma-separated offsets in F_q, e.g. 0,1")
    p_auto.set_defaults(handler=cmd_autocorr)

    p_verify = sub.add_parser("verify", parents=[common],
                              help="run a verification suite")
    p_verify.add_argument("--suite", choices=("paper", "bounds", "all"),
                          default="all")
    p_verify.add_argument("--quick", action="store_true",
                          help="skip the slow zero-grid entries")
    p_verify.set_defaults(handler=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args, sys.stdout)
    except BudgetError as exc:
        print("budget exceeded: %s" % exc, file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        print("invalid input: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
