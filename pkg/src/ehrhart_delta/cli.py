"""Command-line front end.

Polytope files are plain text: a header line ``d m`` followed by ``m`` lines
of ``d`` integers each.

Exit codes: 0 success, 1 usage or I/O error, 2 degenerate polytope,
3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence, TextIO

from .classification import ANY, SIMPLEX, enumerate_admissible
from .constructions import lattice_pyramid, paper_example, polytope_index
from .ehrhart import delta_vector, ehrhart_polynomial
from .lattice import LatticeError, LatticePolytope, NotFullDimensionalError, embed_affine
from .search import MAX_VERIFY_DIM, MAX_VERIFY_PRIME, is_prime, verify_main_theorem, verify_spanning_theorem

EXIT_OK, EXIT_USAGE, EXIT_DEGENERATE, EXIT_MISMATCH = 0, 1, 2, 3


class PolytopeFileError(ValueError):
    pass


def parse_polytope(text: str) -> LatticePolytope:
    lines = [line.strip() for line in text.splitlines()]
    while lines and not lines[-1]:
        lines.pop()
    if not lines:
        raise PolytopeFileError("empty file")
    try:
        header = [int(tok) for tok in lines[0].split()]
        rows = [tuple(int(tok) for tok in line.split()) for line in lines[1:]]
    except ValueError as exc:
        raise PolytopeFileError(f"non-integer token: {exc}") from None
    if len(header) != 2 or header[0] < 1 or header[1] < 1:
        raise PolytopeFileError("header must be 'd m' with positive integers")
    d, m = header
    if len(rows) != m:
        raise PolytopeFileError(f"header announces {m} points, found {len(rows)}")
    for k, row in enumerate(rows, start=2):
        if len(row) != d:
            raise PolytopeFileError(f"line {k}: expected {d} integers, got {len(row)}")
    if len(set(rows)) != len(rows):
        raise PolytopeFileError("duplicate vertices")
    return LatticePolytope(d, tuple(rows))


def format_polytope(poly: LatticePolytope) -> str:
    lines = [f"{poly.ambient_dim} {len(poly.vertices)}"]
    lines += [" ".join(map(str, v)) for v in poly.vertices]
    return "\n".join(lines) + "\n"


def read_polytope(path: str) -> LatticePolytope:
    return parse_polytope(Path(path).read_text())


def write_polytope(poly: LatticePolytope, path: str | None, out: TextIO) -> None:
    text = format_polytope(poly)
    if path is None:
        out.write(text)
    else:
        Path(path).write_text(text)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(args, out: TextIO, data: dict, lines: Sequence[str]) -> None:
    if args.json:
        out.write(json.dumps(data, indent=2) + "\n")
    else:
        for line in lines:
            out.write(line + "\n")


def _load(args) -> LatticePolytope:
    poly = read_polytope(args.path)
    if getattr(args, "embed", False) and not poly.is_full_dimensional:
        poly = embed_affine(poly)
    return poly


def cmd_delta(args, out):
    poly = _load(args)
    delta = delta_vector(poly)
    _emit(args, out,
          {"dim": delta.dim, "delta": list(delta), "volume": delta.volume},
          [f"delta: {delta}", f"volume: {delta.volume}"])


def cmd_ehrhart(args, out):
    poly = _load(args)
    poly_l = ehrhart_polynomial(poly)
    coeffs = [str(c) for c in poly_l.coefficients]
    _emit(args, out,
          {"dim": poly_l.degree, "coefficients": coeffs},
          [f"ehrhart: {' '.join(coeffs)}", f"L(n) = {poly_l}"])


def cmd_classify(args, out):
    kind = SIMPLEX if args.simplex else ANY
    result = enumerate_admissible(args.dim, args.volume, kind)
    tuples = [str(t) for t in result]
    _emit(args, out,
          {"dim": args.dim, "volume": args.volume, "kind": result.kind, "tuples": tuples},
          tuples)


def cmd_verify(args, out):
    if not 1 <= args.dim <= MAX_VERIFY_DIM:
        raise _UsageError(f"--dim must lie in [1, {MAX_VERIFY_DIM}]")
    if args.prime is not None:
        if not is_prime(args.prime) or args.prime > MAX_VERIFY_PRIME:
            raise _UsageError(f"--prime must be a prime <= {MAX_VERIFY_PRIME}")
        rep = verify_spanning_theorem(args.dim, args.prime, workers=args.workers)
        dist = ", ".join(f"index {k}: {v}" for k, v in sorted(rep.empty_index_distribution.items()))
        lines = [
            f"{'OK' if rep.ok else 'FAIL'}: spanning violations={len(rep.spanning_violations)}",
            f"simplices={rep.simplices_checked}, empty={rep.empty_simplices}" + (f" ({dist})" if dist else ""),
        ]
    else:
        rep = verify_main_theorem(args.dim, workers=args.workers)
        lines = [
            f"{'OK' if rep.ok else 'FAIL'}: realized={len(rep.realized_simplex_tuples)} simplex tuples, "
            f"witnesses={len(rep.witnesses)}, violations={len(rep.mismatches)}"
        ]
    lines += rep.mismatches + rep.spanning_violations
    _emit(args, out, rep.to_dict(), lines)
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def cmd_index(args, out):
    poly = _load(args)
    index = polytope_index(poly)
    label = "spanning" if index == 1 else "not spanning"
    _emit(args, out, {"index": index, "spanning": index == 1}, [f"index: {index} ({label})"])


def cmd_pyramid(args, out):
    write_polytope(lattice_pyramid(_load(args)), args.out, out)


def cmd_examples(args, out):
    write_polytope(paper_example(args.k), args.out, out)


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ehrhart-delta", description="Ehrhart polynomials and delta-vectors of lattice polytopes.")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_path(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("path")
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        p.set_defaults(func=fn)
        return p

    for name, fn, help_ in [("delta", cmd_delta, "print the delta-vector"),
                            ("ehrhart", cmd_ehrhart, "print the Ehrhart polynomial")]:
        p = with_path(name, fn, help_)
        p.add_argument("--embed", action="store_true",
                       help="re-express a lower-dimensional polytope in its affine lattice first")
    with_path("index", cmd_index, "index of the lattice generated by P cap Z^d")
    p = with_path("pyramid", cmd_pyramid, "write the lattice pyramid")
    p.add_argument("--out")

    p = sub.add_parser("classify", help="list admissible exponent tuples")
    p.add_argument("--volume", type=int, choices=(4, 5), required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--simplex", action="store_true")
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="brute-force verification at one dimension")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--prime", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("examples", help="write one of the witness polytopes P1, P2, P3")
    p.add_argument("--k", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--out")
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    p.set_defaults(func=cmd_examples)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code = args.func(args, out)
    except NotFullDimensionalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (PolytopeFileError, LatticeError, _UsageError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return code or EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
