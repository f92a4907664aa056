# -*- coding: utf-8 -*-
"""Command line driver for hankelfq"""

from __future__ import print_function, division

import argparse as ap
import contextlib
import logging
import sys

from .version import __version__
from .constants import DEFAULT_BUDGET
from .structured import HankelMatrix, bezoutian, toeplitz_to_hankel
from .correspondence import PadePair, CoprimePair, pade_expand, hankel_of_pair, barnett_triple, \
        sigma, fiber, fiber_element
from .enumeration import count_coprime_tuples, count_hankel_by_rank, count_stratum, \
        count_stratum_rank, count_rank_at_most, brute_hankel_census, brute_coprime_census, \
        verify_sigma, verify_hankel, verify_coprime
from .formats import parse_field, parse_poly, parse_structured, parse_keyvals, render_poly, \
        render_elements, render_dense, render_structured, pair_as_dict, dense_as_dict, \
        structured_as_dict, field_label, dumps
from .exceptions import HankelFqError

from typing import Any, Callable, Dict, List, Optional

logger = logging.getLogger("hankelfq")

# operand keys for each counting flag, and the formula they feed
counters = {
        "coprime": (("degrees",), lambda q, o: count_coprime_tuples(q, o["degrees"])),
        "hankel_rank": (("n", "r"), lambda q, o: count_hankel_by_rank(q, o["n"], o["r"])),
        "stratum": (("n", "k"), lambda q, o: count_stratum(q, o["n"], o["k"])),
        "stratum_rank": (("n", "k", "r"), lambda q, o: count_stratum_rank(q, o["n"], o["k"], o["r"])),
        "rank_at_most": (("n", "r"), lambda q, o: count_rank_at_most(q, o["n"], o["r"]))
        }

def _which(args: ap.Namespace, names: List[str]) -> str:
    return [ x for x in names if getattr(args, x) is not None ][0]

def _output_format(args: ap.Namespace, default: str) -> str:
    return args.format if args.format is not None else default

def _options(args: ap.Namespace) -> Dict[str, Any]:
    return { "nprocs": args.jobs, "budget": args.budget }

def do_expand(args: ap.Namespace, file: Any) -> int:
    F = args.fieldspec
    a = pade_expand(PadePair(parse_poly(args.u, F), parse_poly(args.v, F)), args.terms)
    if _output_format(args, "text") == "json":
        print(dumps({ "q": field_label(F), "terms": list(a) }), file=file)
    else:
        print(render_elements(a), file=file)
    return 0

def do_bezout(args: ap.Namespace, file: Any) -> int:
    F = args.fieldspec
    B = bezoutian(parse_poly(args.u, F), parse_poly(args.v, F), args.n)
    if _output_format(args, "text") == "json":
        print(dumps(dense_as_dict(B)), file=file)
    else:
        print(render_dense(B), file=file)
    return 0

def do_hankel(args: ap.Namespace, file: Any) -> int:
    F = args.fieldspec
    p = PadePair(parse_poly(args.u, F), parse_poly(args.v, F))
    H = hankel_of_pair(p)
    out: Dict[str, Any] = structured_as_dict(H)
    if args.barnett:
        B_uv, B_u1, _ = barnett_triple(p)
        out["bezoutian"] = B_uv.tolist()
        out["bezoutian_u1"] = B_u1.tolist()
    if _output_format(args, "text") == "json":
        print(dumps(out), file=file)
    else:
        print(render_structured(H), file=file)
        if args.barnett:
            print("B(u,v) = {}".format(render_dense(B_uv)), file=file)
            print("B(u,1) = {}".format(render_dense(B_u1)), file=file)
    return 0

def do_sigma(args: ap.Namespace, file: Any) -> int:
    F = args.fieldspec
    T = sigma(CoprimePair(parse_poly(args.f, F), parse_poly(args.g, F)))
    if _output_format(args, "text") == "json":
        print(dumps(structured_as_dict(T)), file=file)
    else:
        print(render_structured(T), file=file)
    return 0

def do_fiber(args: ap.Namespace, file: Any) -> int:
    F = args.fieldspec
    M = parse_structured(args.hankel, F)
    B = M if isinstance(M, HankelMatrix) else toeplitz_to_hankel(M)
    fmt = _output_format(args, "json")
    if args.lam is not None:
        h = fiber_element(B, args.lam)
        if fmt == "json":
            print(dumps(pair_as_dict(h)), file=file)
        else:
            print("{} {}".format(render_poly(h.u), render_poly(h.v)), file=file)
        return 0

    pairs = fiber(B)
    if fmt == "json":
        print(dumps([ pair_as_dict(p) for p in pairs ]), file=file)
    else:
        for p in pairs:
            print("{} {}".format(render_poly(p.f), render_poly(p.g)), file=file)
    return 0

def do_count(args: ap.Namespace, file: Any) -> int:
    which = _which(args, list(counters))
    keys, formula = counters[which]
    operands = parse_keyvals(getattr(args, which), keys)
    value = formula(args.fieldspec.q, operands)
    if _output_format(args, "text") == "json":
        out: Dict[str, Any] = { "q": args.fieldspec.q }
        out.update(operands)
        out["count"] = value
        print(dumps(out), file=file)
    else:
        print(value, file=file)
    return 0

def do_census(args: ap.Namespace, file: Any) -> int:
    F = args.fieldspec
    if args.hankel is not None:
        table = brute_hankel_census(F, parse_keyvals(args.hankel, ("n",))["n"], **_options(args))
    else:
        table = brute_coprime_census(F, parse_keyvals(args.coprime, ("degrees",))["degrees"], **_options(args))
    if _output_format(args, "json") == "json":
        print(dumps(table.as_dict()), file=file)
    else:
        table.summarize(file=file)
    return 0

def do_verify(args: ap.Namespace, file: Any) -> int:
    F = args.fieldspec
    if args.sigma is not None:
        report = verify_sigma(F, parse_keyvals(args.sigma, ("n",))["n"], budget=args.budget)
    elif args.hankel is not None:
        report = verify_hankel(F, parse_keyvals(args.hankel, ("n",))["n"], **_options(args))
    else:
        report = verify_coprime(F, parse_keyvals(args.coprime, ("degrees",))["degrees"], **_options(args))
    if _output_format(args, "json") == "json":
        print(dumps(report.as_dict()), file=file)
    else:
        for key, value in report.items.items():
            if key in report.checks:
                value = "pass" if value else "FAIL"
            print("{:>20s}: {}".format(key, value), file=file)
        print("{:>20s}: {}".format("result", "pass" if report.passed else "FAIL"), file=file)
    return 0 if report.passed else 1

def build_parser() -> ap.ArgumentParser:
    common = ap.ArgumentParser(add_help=False)
    common.add_argument('-F', '--field', required=True, type=str, help="field, e.g. q=5, q=4 or q=2^2:1,1,1")
    common.add_argument('--format', default=None, choices=("text", "json"), help="output format (text for single values, json for tables)")
    common.add_argument('-j', '--jobs', default=1, type=int, help="number of worker processes (%(default)d)")
    common.add_argument('--budget', default=DEFAULT_BUDGET, type=int, help="largest enumeration allowed (%(default)d)")
    common.add_argument('-v', '--verbose', default=0, action="count", help="more logging; repeat for debug output")

    parser = ap.ArgumentParser(prog="hankelfq", description="Coprime polynomial pairs and Hankel matrices over finite fields")
    parser.add_argument('--version', action="version", version="%(prog)s {}".format(__version__))
    sub = parser.add_subparsers(dest="verb", metavar="verb")
    sub.required = True

    p = sub.add_parser("expand", parents=[common], help="coefficients a_1..a_N of v/u at infinity")
    p.add_argument('--u', required=True, help="monic denominator")
    p.add_argument('--v', required=True, help="numerator of lower degree")
    p.add_argument('--terms', required=True, type=int, help="number of coefficients")
    p.set_defaults(run=do_expand)

    p = sub.add_parser("bezout", parents=[common], help="Bezoutian B_n(u, v)")
    p.add_argument('--u', required=True)
    p.add_argument('--v', required=True)
    p.add_argument('--n', required=True, type=int, help="order of the Bezoutian")
    p.set_defaults(run=do_bezout)

    p = sub.add_parser("hankel", parents=[common], help="Hankel matrix H_n(u, v) of a Pade pair")
    p.add_argument('--u', required=True)
    p.add_argument('--v', required=True)
    p.add_argument('--barnett', action="store_true", help="also print B_n(u,v) and B_n(u,1), checking the factorization")
    p.set_defaults(run=do_hankel)

    p = sub.add_parser("sigma", parents=[common], help="Toeplitz matrix of a coprime pair")
    p.add_argument('--f', required=True)
    p.add_argument('--g', required=True)
    p.set_defaults(run=do_sigma)

    p = sub.add_parser("fiber", parents=[common], help="coprime pairs over a nonsingular Hankel matrix")
    p.add_argument('--hankel', required=True, help="H:... (or T:..., read through T E)")
    p.add_argument('--lambda', dest="lam", default=None, type=int, help="only the Hermite pair with a_2n = LAMBDA")
    p.set_defaults(run=do_fiber)

    p = sub.add_parser("count", parents=[common], help="closed-form counts")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument('--coprime', nargs='+', metavar="degrees=D,..", help="coprime monic tuples")
    g.add_argument('--hankel-rank', dest="hankel_rank", nargs='+', metavar="n=N r=R", help="Hankel matrices of rank r")
    g.add_argument('--stratum', nargs='+', metavar="n=N k=K", help="Hankel matrices with delta k")
    g.add_argument('--stratum-rank', dest="stratum_rank", nargs='+', metavar="n=N k=K r=R", help="delta k and rank <= r")
    g.add_argument('--rank-at-most', dest="rank_at_most", nargs='+', metavar="n=N r=R", help="rank <= r")
    p.set_defaults(run=do_count)

    p = sub.add_parser("census", parents=[common], help="exhaustive census")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument('--hankel', nargs='+', metavar="n=N", help="(rank, delta) census of Hankel matrices")
    g.add_argument('--coprime', nargs='+', metavar="degrees=D,..", help="GCD-degree census of monic tuples")
    p.set_defaults(run=do_census)

    p = sub.add_parser("verify", parents=[common], help="check closed forms against exhaustive enumeration")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument('--sigma', nargs='+', metavar="n=N", help="sigma is onto with fibers of size q")
    g.add_argument('--hankel', nargs='+', metavar="n=N", help="every Hankel count")
    g.add_argument('--coprime', nargs='+', metavar="degrees=D,..", help="coprime tuple count and GCD partition")
    p.set_defaults(run=do_verify)

    return parser

def main(argv: Optional[List[str]] = None, file: Any = sys.stdout, errfile: Any = sys.stderr) -> int:
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(file), contextlib.redirect_stderr(errfile):
            args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    level = logging.WARNING if args.verbose == 0 else (logging.INFO if args.verbose == 1 else logging.DEBUG)
    logging.basicConfig(stream=errfile, level=level, format="%(levelname)s: %(message)s", force=True)
    logger.setLevel(level)

    run: Callable[[ap.Namespace, Any], int] = args.run
    try:
        args.fieldspec = parse_field(args.field)
        return run(args, file)
    except HankelFqError as e:
        print("hankelfq {}: {}".format(args.verb, e), file=errfile)
        return 2

if __name__ == "__main__":
    sys.exit(main())
