"""Command-line front end.

Subcommands map one-to-one onto the library modules; every run with
identical arguments produces byte-identical stdout (aggregation over
parallel workers is order-insensitive).  Exit codes: 0 success, 1 a
verification sweep found a counterexample, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor

from . import _kernels, density, oracle, stanley
from .sequence import BLOCK_SEQUENCE, count_leq, decompose, element_at
from .witness import MIN_N, find_witness, validate


def _parse_seed(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad seed list: {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apcover",
        description="Explore the base-4 block covering sequence A, "
        "its 3-AP witnesses, counting function and density.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("member", help="membership and decomposition of n")
    p.add_argument("n", type=int)

    p = sub.add_parser("count", help="A(n): number of members <= n")
    p.add_argument("n", type=int)

    p = sub.add_parser("nth", help="the j-th smallest member of A")
    p.add_argument("j", type=int)

    p = sub.add_parser("witness", help="constructive 3-AP witness for n >= 32")
    p.add_argument("n", type=int)

    p = sub.add_parser(
        "verify-covering",
        help="check the constructed witness for every n in a range",
    )
    p.add_argument("--from", dest="lo", type=int, required=True)
    p.add_argument("--to", dest="hi", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser(
        "min-n0",
        help="largest n <= bound with no 3-AP witness in A (brute force)",
    )
    p.add_argument("--upto", type=int, required=True)

    p = sub.add_parser("stanley", help="greedy Stanley sequence terms")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--seed", type=_parse_seed, required=True)
    p.add_argument("--count", type=int, required=True)

    p = sub.add_parser("density", help="density samples at the q-points")
    p.add_argument("--max-level", type=int, required=True)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true")
    fmt.add_argument("--jsonl", action="store_true")
    p.add_argument("--out", type=str, default=None)

    p = sub.add_parser("argmax", help="n <= bound maximizing A(n)/sqrt(n)")
    p.add_argument("--upto", type=int, required=True)

    p = sub.add_parser(
        "explore-problem1",
        help="does a Stanley sequence of order k+1 cover AP_k? (empirical)",
    )
    p.add_argument("--order", type=int, required=True, metavar="K")
    p.add_argument("--seed", type=_parse_seed, required=True)
    p.add_argument("--upto", type=int, required=True)

    return parser


def _sweep_chunk(bounds: tuple[int, int]) -> tuple[int, list[int]]:
    lo, hi = bounds
    return hi - lo + 1, _kernels.witness_sweep(lo, hi)


def _cmd_member(args) -> int:
    e = decompose(args.n)
    if e is None:
        print(f"{args.n} not in A")
    else:
        low = ",".join(str(d) for d in e.low)
        print(f"{args.n} in A: level={e.level} lead={e.lead} low=[{low}]")
    return 0


def _cmd_witness(args) -> int:
    if args.n < MIN_N:
        print(f"witness construction needs n >= {MIN_N}", file=sys.stderr)
        return 2
    w = find_witness(args.n)
    if not validate(w):
        print(f"a={w.a} b={w.b} n={w.n} INVALID")
        return 1
    print(f"a={w.a} b={w.b} n={w.n} ok")
    return 0


def _cmd_verify_covering(args) -> int:
    if args.lo < MIN_N or args.hi < args.lo:
        print(
            f"need {MIN_N} <= from <= to, got [{args.lo}, {args.hi}]",
            file=sys.stderr,
        )
        return 2
    if args.jobs < 1:
        print("--jobs must be >= 1", file=sys.stderr)
        return 2
    if args.jobs == 1:
        failures = _kernels.witness_sweep(args.lo, args.hi)
        checked = args.hi - args.lo + 1
    else:
        span = args.hi - args.lo + 1
        step = -(-span // args.jobs)
        chunks = [
            (lo, min(lo + step - 1, args.hi))
            for lo in range(args.lo, args.hi + 1, step)
        ]
        checked = 0
        failures = []
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            for n_checked, fails in pool.map(_sweep_chunk, chunks):
                checked += n_checked
                failures.extend(fails)
        failures.sort()
    for n in failures:
        print(f"FAIL {n}")
    print(f"checked={checked} failures={len(failures)}")
    return 1 if failures else 0


def _cmd_min_n0(args) -> int:
    threshold = oracle.min_threshold(BLOCK_SEQUENCE, 3, args.upto)
    print(f"n0={'none' if threshold is None else threshold} scanned_to={args.upto}")
    return 0


def _cmd_stanley(args) -> int:
    try:
        terms = stanley.generate(args.seed, args.order, args.count)
    except ValueError as err:
        print(str(err), file=sys.stderr)
        return 2
    print(" ".join(str(t) for t in terms))
    return 0


def _cmd_density(args) -> int:
    if args.max_level < 0:
        print("--max-level must be nonnegative", file=sys.stderr)
        return 2
    prof = density.profile(args.max_level)
    writer = density.write_jsonl if args.jsonl else density.write_csv
    if args.out is not None:
        with open(args.out, "w") as fh:
            writer(prof.samples, fh)
    else:
        writer(prof.samples, sys.stdout)
    print(
        f"argmax: n={prof.argmax.n} count={prof.argmax.count} "
        f"ratio={prof.argmax.ratio:.12g}",
        file=sys.stderr,
    )
    return 0


def _cmd_argmax(args) -> int:
    if args.upto < 1:
        print("--upto must be >= 1", file=sys.stderr)
        return 2
    n = density.argmax_upto(args.upto)
    count = count_leq(n)
    ratio = (count * count / n) ** 0.5
    print(f"n={n} count={count} ratio={ratio:.12g}")
    return 0


def _cmd_explore(args) -> int:
    if args.order < 3:
        print("--order must be >= 3", file=sys.stderr)
        return 2
    order = args.order + 1
    try:
        terms = stanley.generate_upto(args.seed, order, args.upto)
    except ValueError as err:
        print(str(err), file=sys.stderr)
        return 2
    seq = oracle.FiniteSet(terms)
    uncovered = oracle.uncovered_in_range(seq, 0, args.upto, args.order)
    print(
        f"stanley_order={order} terms={len(terms)} max_term={terms[-1]} "
        f"scanned_to={args.upto} uncovered={len(uncovered)}"
    )
    if uncovered:
        print("uncovered: " + " ".join(str(n) for n in uncovered))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    if args.command == "member":
        return _cmd_member(args)
    if args.command == "count":
        if args.n < 0:
            print("n must be nonnegative", file=sys.stderr)
            return 2
        print(count_leq(args.n))
        return 0
    if args.command == "nth":
        if args.j < 1:
            print("rank must be >= 1", file=sys.stderr)
            return 2
        print(element_at(args.j))
        return 0
    if args.command == "witness":
        return _cmd_witness(args)
    if args.command == "verify-covering":
        return _cmd_verify_covering(args)
    if args.command == "min-n0":
        if args.upto < 1:
            print("--upto must be >= 1", file=sys.stderr)
            return 2
        return _cmd_min_n0(args)
    if args.command == "stanley":
        return _cmd_stanley(args)
    if args.command == "density":
        return _cmd_density(args)
    if args.command == "argmax":
        return _cmd_argmax(args)
    if args.command == "explore-problem1":
        return _cmd_explore(args)
    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
