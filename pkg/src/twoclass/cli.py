"""twoclass command line: classify, sweep, verify, oracle, group."""

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor

from twoclass.arith import PRIME_BOUND, primes_up_to
from twoclass.classifier import validate_pair
from twoclass.errors import SymbolError, ValidationError
from twoclass.formsoracle import class_group
from twoclass.group2 import FAMILIES, derived_subgroup, make_group, transfer
from twoclass.records import classify, csv_header, to_csv_row, to_json
from twoclass.verify import SUITES, run_suite

log = logging.getLogger("twoclass")

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


def cmd_classify(args) -> int:
    rec = classify(args.p, args.q)
    if args.json:
        print(to_json(rec))
    else:
        width = max(len(k) for k in rec.__dataclass_fields__)
        for name in rec.__dataclass_fields__:
            value = getattr(rec, name)
            print(f"{name:<{width}}  {'' if value is None else value}")
    return EXIT_OK


def _stripe(args) -> list:
    p, qs = args
    out = []
    for q in qs:
        if q != p and validate_pair(p, q).regime != "unsupported":
            out.append(classify(p, q))
    return out


def sweep_records(pmax: int, qmax: int, jobs: int = 1):
    qs = primes_up_to(qmax)
    ps = [p for p in primes_up_to(pmax) if p % 8 in (1, 5)]
    work = [(p, qs) for p in ps]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # map preserves input order regardless of scheduling
            for batch in pool.map(_stripe, work, chunksize=8):
                yield from batch
    else:
        for item in work:
            yield from _stripe(item)


def cmd_sweep(args) -> int:
    if args.pmax >= PRIME_BOUND or args.qmax >= PRIME_BOUND:
        raise ValidationError("bounds must be below 2^32")
    out = open(args.csv, "w", newline="") if args.csv else sys.stdout
    as_json = args.json and not args.csv
    count = 0
    try:
        for rec in sweep_records(args.pmax, args.qmax, args.jobs):
            if as_json:
                out.write(to_json(rec) + "\n")
            else:
                if count == 0:
                    out.write(csv_header())
                out.write(to_csv_row(rec))
            count += 1
    finally:
        if args.csv:
            out.close()
    log.info("sweep pmax=%d qmax=%d: %d records", args.pmax, args.qmax, count)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.bound)
    for line in report.lines:
        print(line)
    for msg in report.failures:
        print(f"counterexample: {msg}")
    print(report.summary())
    return EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE


def cmd_oracle(args) -> int:
    cg = class_group(args.d)
    result = {
        "D": cg.D,
        "h": cg.h,
        "two_part": cg.two_part,
        "two_structure": list(cg.two_structure),
        "forms": [[f.a, f.b, f.c] for f in cg.forms],
    }
    if args.json:
        print(json.dumps(result))
    else:
        print(f"D = {cg.D}")
        print(f"h = {cg.h}")
        print(f"2-part = {cg.two_part}, type {list(cg.two_structure)}")
        print("forms: " + " ".join(str(f) for f in cg.forms))
    return EXIT_OK


def cmd_group(args) -> int:
    G = make_group(args.family, args.n, args.m, paper_presentation=args.paper_presentation)
    res = transfer(G)
    Gp = derived_subgroup(G)
    print(f"{G.family} ({G.variant}) n={G.n} order={G.order}: x^{G.N} = 1, y^{G.Y} = x^{G.s}, y^-1 x y = x^{G.k}")
    print(f"G' = {{{', '.join(G.word(g) for g in sorted(Gp))}}}, |G/G'| = {res.quotient_order}")
    reps = [G.word(min(c)) for c in res.kernel_classes]
    print(f"ker V = {{{', '.join(r + 'G' + chr(39) for r in reps)}}}, size {res.kernel_size}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twoclass", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="rank and Galois structure for one pair")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("sweep", help="classify every supported pair below the bounds")
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--qmax", type=int, required=True)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--csv", metavar="PATH")
    fmt.add_argument("--json", action="store_true", help="JSON lines on stdout")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--bound", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="quadratic forms oracle")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    c = osub.add_parser("classgroup")
    c.add_argument("-d", type=int, required=True, help="negative discriminant")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_oracle)

    p = sub.add_parser("group", help="2-group transfer simulator")
    gsub = p.add_subparsers(dest="group_command", required=True)
    t = gsub.add_parser("transfer")
    t.add_argument("--family", choices=FAMILIES, required=True)
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--m", type=int, default=1, help="abelian only: y has order 2^m")
    t.add_argument("--paper-presentation", action="store_true")
    t.set_defaults(func=cmd_group)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (ValidationError, SymbolError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
