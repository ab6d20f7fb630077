"""
Command line front end.

    gorenstein classify 37148265 --format json
    gorenstein count 7 --full --format csv
    gorenstein diagram 6314725
    gorenstein grassmannian 6,5,5,3,2 --rect 5x7
    gorenstein coset 4321 --blocks 2,2
    gorenstein embed-matrix 134625

classify, grassmannian, coset and embed-matrix exit with 0 when the variety
is Gorenstein and 1 when it is not; all commands exit with 2 on bad input and
3 when ``--oracle`` finds the two Gorenstein tests disagreeing.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional, Sequence

from .divisor import bar_diagram, solve, system_json
from .enumeration import OracleMismatch, census, format_row
from .permcore import (
    Permutation, PermutationError, frak_I, grassmannian_from_partition,
    grassmannian_partition,
)
from .verdicts import Composition, classify, matrix_schubert_embed, min_coset_rep

EXIT_GORENSTEIN, EXIT_NOT_GORENSTEIN, EXIT_INPUT, EXIT_ORACLE = 0, 1, 2, 3


def _report(w: Permutation, args, out, extra: Optional[dict] = None) -> int:
    report = classify(w)
    if args.oracle and report.gorenstein != (solve(w) is not None):
        raise OracleMismatch(f"w={w}: classifier and linear system disagree")
    if args.format == "json":
        d = dict(extra or {})
        d.update(report.to_dict())
        print(json.dumps(d), file=out)
    elif args.format == "csv":
        d = report.to_dict()
        cols = ["w", "gorenstein", "smooth", "factorial", "fano"]
        print(",".join(cols), file=out)
        print(",".join(str(report.w) if c == "w" else str(d[c]).lower() for c in cols), file=out)
    else:
        for k, v in (extra or {}).items():
            print(f"{k:<10} {v}", file=out)
        print(report.to_text(), file=out)
    return EXIT_GORENSTEIN if report.gorenstein else EXIT_NOT_GORENSTEIN


def cmd_classify(args, out) -> int:
    return _report(Permutation.parse(args.perm), args, out)


def cmd_count(args, out) -> int:
    if args.n < 1:
        raise PermutationError("n must be at least 1")
    try:
        row = census(args.n, full=args.full, oracle=args.oracle, workers=args.workers,
                     allow_large=args.allow_large)
    except ValueError as exc:
        raise PermutationError(str(exc)) from None
    print(format_row(row, args.format), file=out)
    return 0


def cmd_diagram(args, out) -> int:
    w = Permutation.parse(args.perm)
    alpha = solve(w)
    if args.format == "json":
        d = json.loads(system_json(w))
        d["diagram"] = bar_diagram(w)
        print(json.dumps(d), file=out)
        return 0
    values = alpha if alpha is not None else ["∅"] * (w.n - 1)
    print(bar_diagram(w, values), file=out)
    if alpha is None:
        print("infeasible", file=out)
    else:
        print("solution (" + ", ".join(map(str, alpha)) + ")", file=out)
    return 0


def _parse_partition(text: str) -> list[int]:
    body = text.strip().strip("()[]")
    if not body:
        return []
    try:
        parts = [int(t) for t in re.split(r"[\s,]+", body) if t]
    except ValueError:
        raise PermutationError(f"bad partition literal {text!r}") from None
    while parts and parts[-1] == 0:
        parts.pop()
    return parts


def _parse_rect(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(\d+)\s*[xX×]\s*(\d+)\s*", text)
    if not m:
        raise PermutationError(f"rectangle must look like 5x7, got {text!r}")
    return int(m.group(1)), int(m.group(2))


def cmd_grassmannian(args, out) -> int:
    parts = _parse_partition(args.shape)
    e, width = _parse_rect(args.rect)
    v = grassmannian_from_partition(parts, e, width)
    extra = {"partition": list(parts), "rect": f"{e}x{width}"}
    if parts:
        lam = grassmannian_partition(v)
        fi = frak_I(v)
        extra["corners"] = lam.distances
        extra["frak_I"] = getattr(fi, "distance", None)
    else:
        extra["corners"] = []
        extra["frak_I"] = 0
    return _report(v, args, out, extra)


def cmd_coset(args, out) -> int:
    w = Permutation.parse(args.perm)
    try:
        sizes = [int(t) for t in args.blocks.split(",") if t.strip()]
    except ValueError:
        raise PermutationError(f"bad block list {args.blocks!r}") from None
    rep = min_coset_rep(w, Composition.from_blocks(sizes))
    return _report(rep, args, out, {"coset_of": str(w), "blocks": sizes})


def cmd_embed_matrix(args, out) -> int:
    v = Permutation.parse(args.perm)
    return _report(matrix_schubert_embed(v), args, out, {"v": str(v)})


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default=argparse.SUPPRESS)
    common.add_argument("--full", action="store_true", default=argparse.SUPPRESS,
                        help="also count factorial and Fano varieties")
    common.add_argument("--oracle", action="store_true", default=argparse.SUPPRESS,
                        help="cross-check against the linear-system solver")

    parser = argparse.ArgumentParser(prog="gorenstein", parents=[common],
                                     description="Singularity tests for Schubert varieties.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="classify one permutation")
    p.add_argument("perm")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("count", parents=[common], help="census over S_n")
    p.add_argument("n", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--allow-large", action="store_true", help="lift the n <= 10 guard")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("diagram", parents=[common], help="bar diagram of the cover system")
    p.add_argument("perm")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("grassmannian", parents=[common], help="Grassmannian Schubert variety")
    p.add_argument("shape", help='partition, e.g. "6,5,5,3,2" or "()"')
    p.add_argument("--rect", required=True, help="rectangle rows x columns, e.g. 5x7")
    p.set_defaults(func=cmd_grassmannian)

    p = sub.add_parser("coset", parents=[common], help="partial flag variety Schubert variety")
    p.add_argument("perm")
    p.add_argument("--blocks", required=True, help='block sizes, e.g. "2,2,3"')
    p.set_defaults(func=cmd_coset)

    p = sub.add_parser("embed-matrix", parents=[common], help="matrix Schubert variety of v")
    p.add_argument("perm")
    p.set_defaults(func=cmd_embed_matrix)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    for name, default in (("format", "text"), ("full", False), ("oracle", False)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args, out)
    except PermutationError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except OracleMismatch as exc:
        print(f"oracle mismatch: {exc}", file=err)
        return EXIT_ORACLE


if __name__ == "__main__":
    sys.exit(main())
