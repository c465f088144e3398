"""Command-line interface: ``petalknots <subcommand> ...``.

Exit codes: 0 success, 2 usage error, 3 invalid input, 4 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys

from . import experiments
from .coloring import format_matrix, split_arcs
from .errors import InternalInconsistency, PetalError
from .exactdet import SURVEY_PRIMES, coloring_matrix, coloring_report
from .gausscode import format_code, sign_code, unsigned_code
from .permutation import canonical, format_permutation, parse_permutation, reduce_fully

EXIT_USAGE = 2
EXIT_INVALID = 3
EXIT_INTERNAL = 4

# Pollard-rho budget per composite for the det command; huge determinants
# keep an unfactored cofactor instead of running forever.
RHO_BUDGET = 2_000_000


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj))


def _parse_primes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}")


def cmd_det(args) -> int:
    perm = parse_permutation(args.permutation)
    report = coloring_report(perm, max_rho_iterations=RHO_BUDGET)
    if args.json:
        _emit(report.to_json())
        return 0
    det = report.determinant
    print(f"Petal permutation: ({format_permutation(perm)})")
    print(f"The knot's determinant is {det}.")
    for c in report.per_prime:
        print(f"Since {c.p} appears {c.ord} time(s) in the prime factorization of {det}, "
              f"there are {c.p}^({c.ord}+1) - {c.p} = {c.nontrivial} nontrivial {c.p}-colorings of the knot.")
        if c.exact_total is not None and c.exact_total != c.total:
            print(f"  (the coloring equations of this diagram have {c.exact_total} solutions mod {c.p}, "
                  f"i.e. {c.exact_total - c.p} nontrivial {c.p}-colorings)")
    if report.cofactor != 1:
        print(f"Unfactored cofactor: {report.cofactor}")
    if not report.per_prime and report.cofactor == 1:
        print("The knot is not p-colorable for any prime p.")
    else:
        print("There are also p trivial colorings for every prime p.")
    return 0


def cmd_gauss(args) -> int:
    if args.unsigned:
        try:
            p = int(args.target)
        except ValueError:
            raise UsageError(f"--unsigned expects a petal number, got {args.target!r}")
        code = unsigned_code(p)
        if args.json:
            _emit({"petal_number": p, "signed": False, "code": list(code)})
        else:
            print(format_code(code))
        return 0
    perm = parse_permutation(args.target)
    code = sign_code(perm)
    if args.json:
        _emit({"permutation": list(perm), "petal_number": perm.p, "signed": True,
               "code": list(code)})
    else:
        print(format_code(code))
    return 0


def cmd_matrix(args) -> int:
    perm = parse_permutation(args.permutation)
    if perm.p < 5:
        raise UsageError("crossingless petal projections (p < 5) have no coloring matrix")
    m = coloring_matrix(perm)
    if args.json:
        _emit({"permutation": list(perm), "matrix": m.tolist()})
    else:
        print(format_matrix(m))
    return 0


def cmd_arcs(args) -> int:
    perm = parse_permutation(args.permutation)
    arcs = split_arcs(sign_code(perm))
    if args.json:
        _emit({"permutation": list(perm), "rotation_offset": arcs.rotation_offset,
               "arcs": [list(a) for a in arcs]})
    else:
        for i, arc in enumerate(arcs, 1):
            print(f"{i}: ({format_code(arc)})")
    return 0


def cmd_reduce(args) -> int:
    perm = parse_permutation(args.permutation)
    reduced = canonical(reduce_fully(perm))
    if args.json:
        _emit({"permutation": list(perm), "reduced": list(reduced),
               "petal_number": reduced.p})
    else:
        print(format_permutation(reduced))
    return 0


def cmd_regress(args) -> int:
    results = experiments.regression_suite()
    failed = [r for r in results if not r.passed]
    if args.json:
        _emit({"passed": len(results) - len(failed), "total": len(results),
               "rows": [{"knot": r.fixture.name, "petal_number": r.fixture.petal_number,
                         "permutation": list(r.fixture.permutation),
                         "expected": r.fixture.expected_determinant,
                         "computed": r.computed, "passed": r.passed} for r in results]})
    else:
        sys.stdout.write(experiments.regression_csv(results))
        print(f"# {len(results) - len(failed)}/{len(results)} passed", file=sys.stderr)
    return EXIT_INTERNAL if failed else 0


def _seed_for(args, needed: bool):
    if args.seed is not None or not needed:
        return args.seed
    if args.json:
        raise UsageError("--seed is required with --json for randomized runs")
    seed = random.randrange(2**32)
    print(f"# seed {seed}", file=sys.stderr)
    return seed


def cmd_bench(args) -> int:
    seed = _seed_for(args, args.mode == "random")
    result = experiments.bench(args.p, args.mode, args.runs, seed)
    if args.json:
        _emit(result.to_json())
    else:
        dets = sorted({str(d) for d in result.determinants}, key=lambda s: (len(s), s))
        print(f"n={args.p} mode={args.mode} runs={args.runs} "
              f"min={result.min_ms:.4f}ms mean={result.mean_ms:.4f}ms "
              f"determinants={','.join(dets)}")
        print(f"host: {result.host}")
    return 0


def cmd_survey(args) -> int:
    sampled = any(math.factorial(n) >= experiments.EXHAUSTIVE_THRESHOLD for n in args.n)
    seed = _seed_for(args, sampled)
    rows = [experiments.survey(n, args.samples, args.primes, seed) for n in args.n]
    if args.json:
        _emit([r.to_json() for r in rows])
    else:
        sys.stdout.write(experiments.survey_csv(rows))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="petalknots",
        description="Knot determinants and colorability from petal permutations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    sp = add("det", cmd_det, "determinant and coloring counts")
    sp.add_argument("permutation", help="comma-separated heights, e.g. 1,3,5,2,4")

    sp = add("gauss", cmd_gauss, "petal Gauss code")
    sp.add_argument("target", help="permutation, or a petal number with --unsigned")
    sp.add_argument("--unsigned", action="store_true", help="unsigned code for a petal number")

    sp = add("matrix", cmd_matrix, "coloring matrix")
    sp.add_argument("permutation")

    sp = add("arcs", cmd_arcs, "arc decomposition of the signed code")
    sp.add_argument("permutation")

    sp = add("reduce", cmd_reduce, "cancel petals as far as possible")
    sp.add_argument("permutation")

    add("regress", cmd_regress, "prime knots below 10 crossings")

    sp = add("bench", cmd_bench, "time determinant computation")
    sp.add_argument("p", type=int)
    sp.add_argument("--mode", choices=("identity", "random"), default="identity")
    sp.add_argument("--runs", type=int, default=10)
    sp.add_argument("--seed", type=int)

    sp = add("survey", cmd_survey, "colorability distribution of random petal permutations")
    sp.add_argument("n", type=int, nargs="+")
    sp.add_argument("--samples", type=int, default=experiments.DEFAULT_SAMPLES)
    sp.add_argument("--primes", type=_parse_primes, default=SURVEY_PRIMES)
    sp.add_argument("--seed", type=int)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except PetalError as exc:
        print(f"petalknots: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InternalInconsistency as exc:
        print(f"petalknots: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
