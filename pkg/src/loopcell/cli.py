"""
Command line entry point.

    loopcell verify [SELECTOR ...] [--n 2..5] [--seed S] [--samples K] [--json PATH] [--large]
    loopcell factorize PATH [--grassmannian] [--show-lu] [--strategy first|last|monomial]

Exit codes: 0 when everything passes, 1 when a claim or computation fails,
2 for usage and input errors.
"""

from __future__ import annotations

import argparse
import sys

from .affine_weyl import AffinePermutation, greedy_reduced_word, perm_length
from .exactalg import MatrixFormatError, matrix_from_json
from .harness import SELECTORS, run
from .loopgroup import STRATEGIES, FactorizationError, grassmannian_cell, iwahori_factorize

DEFAULT_SEED = 20240601
MAX_DEFAULT_N = 5


class _UsageError(Exception):
    pass


def parse_ranks(text: str) -> list[int]:
    """
    '2..5', '3' or '2,3,5'.

    >>> parse_ranks("2..4")
    [2, 3, 4]
    >>> parse_ranks("5,3")
    [3, 5]
    """
    try:
        out: set[int] = set()
        for part in text.split(","):
            if ".." in part:
                lo, hi = part.split("..")
                out.update(range(int(lo), int(hi) + 1))
            else:
                out.add(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid rank range {text!r}") from None
    if not out or min(out) < 2:
        raise argparse.ArgumentTypeError("ranks must be integers >= 2")
    return sorted(out)


def format_window(w: AffinePermutation) -> str:
    return "[" + ",".join(map(str, w.window)) + "]"


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="loopcell", description="Exact affine Bruhat cell computations.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the verification suites")
    v.add_argument("selectors", nargs="*", default=["all"],
                   help=f"one or more of: {', '.join(SELECTORS)}, all (default all)")
    v.add_argument("--n", type=parse_ranks, default=list(range(2, MAX_DEFAULT_N + 1)),
                   help="ranks, e.g. 2..5, 3 or 2,4 (default 2..5)")
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--samples", type=int, default=20)
    v.add_argument("--json", metavar="PATH", help="write the JSON report here")
    v.add_argument("--large", action="store_true", help=f"allow ranks above {MAX_DEFAULT_N}")
    v.add_argument("--quiet", action="store_true", help="print only the final tally")

    f = sub.add_parser("factorize", help="factor a matrix file as L * wdot * U")
    f.add_argument("path")
    f.add_argument("--grassmannian", action="store_true", help="also print the G0-cell minimal representative")
    f.add_argument("--show-lu", action="store_true", help="print L and U")
    f.add_argument("--strategy", choices=STRATEGIES, default="first")
    return p


def _verify(args) -> int:
    for s in args.selectors:
        if s != "all" and s not in SELECTORS:
            raise _UsageError(f"unknown selector {s!r}; choose from {', '.join(SELECTORS)}, all")
    if max(args.n) > MAX_DEFAULT_N and not args.large:
        raise _UsageError(f"ranks above {MAX_DEFAULT_N} are slow; pass --large to allow them")
    if args.samples < 1:
        raise _UsageError("--samples must be positive")
    report = run(args.selectors, args.n, seed=args.seed, samples=args.samples)
    if args.quiet:
        print(report.summary_table().splitlines()[-1])
    else:
        print(report.summary_table())
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report.to_json())
    return 0 if report.passed else 1


def _factorize(args) -> int:
    try:
        with open(args.path) as fh:
            text = fh.read()
    except OSError as e:
        raise _UsageError(f"cannot read {args.path}: {e.strerror}") from None
    try:
        M = matrix_from_json(text)
    except MatrixFormatError as e:
        raise _UsageError(f"{args.path}: {e}") from None
    try:
        fac = iwahori_factorize(M, strategy=args.strategy)
    except FactorizationError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    word = greedy_reduced_word(fac.w)
    print(f"w = {format_window(fac.w)}, word = {word}, length = {perm_length(fac.w)}")
    print(f"wdot = {fac.wdot.to_matrix()}".replace("\n", "\n       "))
    print("exact" if fac.exact else f"series precision {fac.precision}")
    if args.grassmannian:
        g = grassmannian_cell(M)
        print(f"grassmannian cell = {format_window(g)}, word = {greedy_reduced_word(g)}, "
              f"length = {perm_length(g)}")
    if args.show_lu:
        print(f"L = {fac.L}".replace("\n", "\n    "))
        print(f"U = {fac.U}".replace("\n", "\n    "))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.command == "verify":
            return _verify(args)
        return _factorize(args)
    except _UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
