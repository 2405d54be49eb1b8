"""Command-line front end: ``liedims <subcommand> [options]``.

Exit codes: 0 success, 1 a verification failed, 2 usage error, 3 budget
exceeded (rows produced before the budget was hit are already written).
"""

import argparse
import csv
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import combinatorics as comb
from . import eigen
from .bounds import BoundParams, find_crossover
from .hall import bigrade_dims, generate_hall
from .oracle import PAIRINGS, BudgetExceeded, OracleBudget, format_monomial
from .quotients import check_lower_bound
from .verify import run_verification
from .zeros import (
    AnnihilatorProfile,
    ExponentMatrix,
    count_vanishing_indices,
    fiber_partition,
    prefix_count_bounds,
    vanishing_bound,
)

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def parse_range(text):
    """``"a..b"`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or a..b range, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def parse_rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational p/q, got {text!r}")


class Emitter:
    """Streams rows as TSV, or collects them and writes one JSON document."""

    def __init__(self, fmt, out):
        self.fmt = fmt
        self.out = out
        self.rows = []
        self.header = None

    def row(self, d):
        if self.fmt == "json":
            self.rows.append(d)
            return
        if self.header is None:
            self.header = list(d)
            self.out.write("\t".join(self.header) + "\n")
        self.out.write("\t".join(_cell(d[k]) for k in self.header) + "\n")
        self.out.flush()

    def finish(self):
        if self.fmt == "json":
            self.out.write(json.dumps(self.rows, indent=2) + "\n")
            self.out.flush()


def _cell(x):
    if isinstance(x, bool):
        return "true" if x else "false"
    if x is None:
        return ""
    return str(x)


def _dump(obj, out):
    out.write(json.dumps(obj, indent=2) + "\n")


# -- subcommands -------------------------------------------------------------

def cmd_hall(args, out):
    k = args.k if args.k is not None else 2 * args.g
    args.budget.check(k, args.max_degree)
    table = generate_hall(k, args.max_degree)
    if args.counts:
        em = Emitter(args.format, out)
        for r in bigrade_dims(k, args.max_degree, table).rows():
            em.row(r)
        em.finish()
    elif args.format == "json":
        _dump(table.as_records(), out)
    else:
        out.write("level\tdegree\tmonomial\n")
        for key in sorted(table.cells):
            for h in table.cells[key]:
                out.write(f"{h.level}\t{h.degree}\t{format_monomial(h.monomial)}\n")
    return EXIT_OK


def cmd_dims(args, out):
    if args.n.start < 2:
        raise UsageError("dims covers n >= 2")
    em = Emitter(args.format, out)
    status = EXIT_OK
    try:
        for n in args.n:
            rec = check_lower_bound(args.g, n, pairing=args.pairing, budget=args.budget)
            if rec.violations:
                status = EXIT_FAILED
            em.row(rec.as_dict())
    finally:
        em.finish()
    return status


def bounds_row(g, n):
    split = eigen.sym_eigen_dims(g, n - 2)
    return {
        "g": g, "n": n,
        "sym_plus": split.plus, "sym_minus": split.minus,
        "S_minus": eigen.sn_minus_dim(g, n),
        "K_bound": comb.kn_upper_bound(g, n),
        "F0_count": eigen.f0_count(g, n),
        "F0_bound": eigen.f0_upper_bound(g, n),
        "Zn_lower": comb.zn_n_lower_bound(g, n),
        "minus_sum_bound": eigen.minus_partial_sum_bound(g, n),
        "wdr_lower": eigen.wdr_lower_bound(g, n) if n >= 3 else eigen.wdr2_dim(g),
    }


def cmd_bounds(args, out):
    g = args.g
    if g < 2:
        raise UsageError("bounds needs g >= 2")
    if args.n.start < 2:
        raise UsageError("bounds covers n >= 2")
    em = Emitter(args.format, out)
    for n in args.n:
        em.row(bounds_row(g, n))
    em.finish()
    return EXIT_OK


def load_matrix(path, M=None):
    p = Path(path)
    text = p.read_text()
    if p.suffix.lower() == ".json":
        obj = json.loads(text)
        if isinstance(obj, dict):
            rows = obj["rows"]
            M = obj.get("M", M)
        else:
            rows = obj
    else:
        rows = [[c.strip() for c in r] for r in csv.reader(text.splitlines()) if r]
    if M is not None:
        return ExponentMatrix(tuple(tuple(int(x) for x in r) for r in rows), int(M))
    return ExponentMatrix.from_rationals([[str(x) for x in r] for r in rows])


def cmd_zeros(args, out):
    D = load_matrix(args.matrix, args.M)
    g = D.g
    report = fiber_partition(D, g, args.n)
    doc = {"g": g, "d": D.d, "M": D.M, "abs_D": str(D.abs_max)}
    doc.update(report.as_dict())
    exact, cube = prefix_count_bounds(g, D.d, D.M, D.abs_max, args.n)
    doc["prefix_simplex_count"] = exact
    doc["prefix_cube_count"] = cube
    status = EXIT_OK if not report.violations and exact <= cube else EXIT_FAILED
    if args.profile:
        profile = AnnihilatorProfile.from_json(Path(args.profile).read_text())
        count = count_vanishing_indices(D, profile, g, args.n)
        bound = vanishing_bound(D, profile, args.n)
        doc["vanishing_count"] = count
        doc["vanishing_bound"] = bound
        doc["hom_dimension_bound"] = profile.m * count
        if count > bound:
            status = EXIT_FAILED
    doc["violations"] = report.violations
    if args.format == "json":
        _dump(doc, out)
    else:
        out.write("delta\tcount\n")
        for key, v in doc["fibers"].items():
            out.write(f"{key}\t{v}\n")
        for key in ("total", "max_fiber", "kernel_box_count", "prefix_simplex_count",
                    "prefix_cube_count", "vanishing_count", "vanishing_bound"):
            if key in doc:
                out.write(f"# {key}\t{doc[key]}\n")
    return status


def cmd_crossover(args, out):
    if args.m is not None and args.A is None:
        raise UsageError("--m needs --A")
    params = BoundParams(g=args.g, B=args.B, c0=args.c0, horizon=args.horizon,
                         m=args.m, A=args.A, A_prime=args.A_prime)
    report = find_crossover(params)
    if args.format == "json":
        _dump(report.as_dict(), out)
    else:
        d = report.as_dict()
        out.write(f"# n0\t{'' if report.n0 is None else report.n0}\n")
        out.write(f"# leading_ok\t{_cell(report.leading_ok)}\n")
        out.write(f"# diagnostic\t{report.diagnostic}\n")
        out.write("n\tupper\tlower\tholds\n")
        for r in d["trace"]:
            out.write(f"{r['n']}\t{r['upper']}\t{r['lower']}\t{_cell(r['holds'])}\n")
    return EXIT_OK


def cmd_verify(args, out):
    em = Emitter(args.format, out)
    failed = False
    try:
        for check in run_verification(args.g, args.max_n, budget=args.budget):
            failed |= not check.ok
            em.row(check.as_dict())
    finally:
        em.finish()
    return EXIT_FAILED if failed else EXIT_OK


# -- parser ------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(prog="liedims", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--tsv", dest="format", action="store_const", const="tsv")
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    common.add_argument("--max-letters", type=int, default=6, help="oracle alphabet cap")
    common.add_argument("--max-degree-budget", type=int, default=8, help="oracle degree cap")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hall", parents=[common], help="dump the Hall basis")
    who = p.add_mutually_exclusive_group(required=True)
    who.add_argument("--k", type=int)
    who.add_argument("--g", type=int)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--counts", action="store_true", help="only |H_n(i)|")
    p.set_defaults(func=cmd_hall)

    p = sub.add_parser("dims", parents=[common], help="exact quotient dimensions")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=parse_range, required=True)
    p.add_argument("--pairing", choices=PAIRINGS, default="consecutive")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("bounds", parents=[common], help="eigenspace and F0 tables")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=parse_range, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("zeros", parents=[common], help="fibers and zero counts")
    p.add_argument("--matrix", required=True, help="CSV or JSON exponent matrix (2g x d)")
    p.add_argument("--M", type=int, help="common denominator when the file holds numerators")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--profile", help="annihilator profile JSON {l, m, roots}")
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("crossover", parents=[common], help="find the crossover degree")
    p.add_argument("--g", type=int, default=2)
    p.add_argument("--B", type=parse_rational, default=Fraction(0))
    p.add_argument("--c0", type=int, default=0)
    p.add_argument("--horizon", type=int, default=200)
    p.add_argument("--m", type=int)
    p.add_argument("--A", type=parse_rational)
    p.add_argument("--A-prime", dest="A_prime", type=parse_rational, default=Fraction(0))
    p.set_defaults(func=cmd_crossover)

    p = sub.add_parser("verify", parents=[common], help="formula-vs-oracle suite")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    args.format = args.format or "tsv"
    args.budget = OracleBudget(args.max_letters, args.max_degree_budget)
    try:
        if getattr(args, "g", None) is not None and args.g < 1:
            raise UsageError("g must be >= 1")
        return args.func(args, out)
    except BudgetExceeded as exc:
        print(f"liedims: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, ValueError, OSError) as exc:
        print(f"liedims: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
