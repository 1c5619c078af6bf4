"""Command-line surface.

Every subcommand maps onto one library operation so each object in the
pipeline is independently inspectable.  Exit codes: 0 success, 1 usage error,
2 computation error, 3 invariant violation detected during a scan.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arith import NotSquarefree, factor_squarefree
from .classgroup import class_number, fundamental_discriminant, genus_two_rank
from .criteria import CriterionReport, InvariantViolation, evaluate
from .descent import DivisorPair, find_witness, kernel_K
from .norms import parity_criterion, represent
from .redei import build_hypothesis, eight_rank_neg_n, eight_rank_neg_nq, four_rank, redei_matrix
from .scan import ClassNumberCache, emit, scan
from .selmer import monsky
from .tunnell import theta_counts

USAGE_ERROR = 1
COMPUTATION_ERROR = 2
INVARIANT_VIOLATION = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _matrix_lines(matrix) -> str:
    return "\n".join("  " + " ".join(str(e) for e in row) for row in matrix.to_rows())


def _print_report(report: CriterionReport, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report.to_dict(), indent=2))
        return
    print(f"n = {report.n}")
    if report.hypothesis is not None:
        h = report.hypothesis
        p_product = "·".join(str(p) for p in h.p_list)
        print(f"  q = {h.q}, p = {p_product}, t = {h.t}, n_q = {h.n_q}")
        print(f"  hypothesis: q residue mod all p_i: {h.qr_condition}, rank A = t-1: {h.rank_condition}")
    if report.s_n is not None:
        print(f"  s_n = {report.s_n}, r4 = {report.r4}, r8(-n) = {report.r8_n}, r8(-n_q) = {report.r8_nq}")
    if report.h_n is not None:
        rel = "=" if report.congruence_holds else "!="
        print(f"  h(-n) = {report.h_n} {rel} h(-n_q) = {report.h_nq}  (mod {report.modulus})")
    if report.tunnell_label is not None:
        print(f"  tunnell: {report.tunnell_label.value} (congruence side is BSD-conditional)")
    print(f"  verdict: {report.verdict.value}" + (f" ({report.reason})" if report.reason else ""))


def _cmd_check(args) -> int:
    report = evaluate(args.n)
    _print_report(report, args.json)
    return 0


def _cmd_scan(args) -> int:
    cache = ClassNumberCache(args.cache)
    rows = list(scan(args.max, t_filter=args.t, cache=cache))
    target = args.out if args.out is not None else sys.stdout
    emit(rows, args.format, target)
    if args.verbose:
        print(f"scan: {len(rows)} rows, {cache.hits} class-number cache hits", file=sys.stderr)
    return 0


def _cmd_classnum(args) -> int:
    d = fundamental_discriminant(args.m)
    result = class_number(d)
    print(f"m = {args.m}: D = {d.D}, h = {result.h}, v2 = {result.v2}, r2 = {genus_two_rank(d)}")
    return 0


def _cmd_monsky(args) -> int:
    dec = monsky(factor_squarefree(args.m))
    print(f"m = {args.m}, primes = {dec.m.primes}")
    print("M =")
    print(_matrix_lines(dec.M))
    print(f"s = {dec.s}")
    return 0


def _cmd_redei(args) -> int:
    h = build_hypothesis(args.n)
    r = redei_matrix(h)
    print(f"n = {args.n}: q = {h.q}, p = {h.p_list}")
    print("A_n =")
    print(_matrix_lines(h.A))
    print("R_n (Hilbert-symbol construction) =")
    print(_matrix_lines(r))
    print(f"equal: {r == h.A}, r4 = {four_rank(h)}")
    return 0


def _cmd_ranks(args) -> int:
    h = build_hypothesis(args.n)
    print(f"n = {args.n}: t = {h.t}, r4(-n) = {four_rank(h)}")
    if h.holds():
        print(f"r8(-n) = {eight_rank_neg_n(h)}")
    else:
        print("r8(-n): hypothesis conditions not met")
    if h.rank_condition:
        print(f"r8(-n_q) = {eight_rank_neg_nq(h)}")
    else:
        print("r8(-n_q): rank condition not met")
    return 0


def _cmd_represent(args) -> int:
    p = factor_squarefree(args.P)
    rep = represent(p)
    print(f"P = {args.P}: u = {rep.u}, v = {rep.v}, e = {rep.e}, f = {rep.f}")
    print(f"u^2 + 2v^2 = {rep.u**2 + 2 * rep.v**2}, 2e^2 - f^2 = {2 * rep.e**2 - rep.f**2}")
    print(f"(-1/e) = +1: {parity_criterion(p)}")
    return 0


def _cmd_descent(args) -> int:
    m = factor_squarefree(args.m)
    kernel = sorted(kernel_K(m))
    print(f"m = {args.m}: kernel of all phi_p has {len(kernel)} pairs: {[tuple(p) for p in kernel]}")
    if args.pair is not None:
        a, b = (int(x) for x in args.pair.split(","))
        witness = find_witness(m, DivisorPair(a, b), bound=args.bound)
        if witness is None:
            print(f"pair ({a},{b}): no witness with max(|x|,|y|) <= {args.bound} (proves nothing)")
        else:
            print(f"pair ({a},{b}): witness (x,y,z,w) = ({witness.x},{witness.y},{witness.z},{witness.w})")
    return 0


def _cmd_tunnell(args) -> int:
    counts = theta_counts(args.n)
    label = "congruent_under_bsd" if counts.congruent_consistent() else "non_congruent_unconditional"
    print(f"n = {args.n} ({counts.parity_form} branch): c32 = {counts.c32}, c8 = {counts.c8}")
    print(f"2*c32 {'=' if 2 * counts.c32 == counts.c8 else '!='} c8 -> {label}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="congruent", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="full criterion report for one n")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("scan", help="scan all hypothesis n up to a bound")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None)
    p.add_argument("--cache", default=None)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("classnum", help="class number of the field with sqrt(-m)")
    p.add_argument("-m", type=int, required=True)
    p.set_defaults(func=_cmd_classnum)

    p = sub.add_parser("monsky", help="Monsky matrix and 2-Selmer rank of odd m")
    p.add_argument("-m", type=int, required=True)
    p.set_defaults(func=_cmd_monsky)

    p = sub.add_parser("redei", help="A_n and the Hilbert-symbol matrix")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=_cmd_redei)

    p = sub.add_parser("ranks", help="4-rank and 8-ranks for a hypothesis n")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=_cmd_ranks)

    p = sub.add_parser("represent", help="norm representations of P")
    p.add_argument("-P", type=int, required=True)
    p.set_defaults(func=_cmd_represent)

    p = sub.add_parser("descent", help="kernel pairs and torsor witnesses")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--pair", default=None, help="a,b")
    p.add_argument("--bound", type=int, default=10000)
    p.set_defaults(func=_cmd_descent)

    p = sub.add_parser("tunnell", help="theta counts and classification")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=_cmd_tunnell)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else USAGE_ERROR
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"INVARIANT VIOLATION: {exc}", file=sys.stderr)
        return INVARIANT_VIOLATION
    except (ValueError, ArithmeticError, OSError, NotSquarefree) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return COMPUTATION_ERROR


if __name__ == "__main__":
    sys.exit(main())
