"""Command-line interface: ``gcq {gc-map,sweep,bs,pw,dim,sample}``.

Exit codes: 0 success or agreement, 1 mismatch or invariant violation,
2 bad input, 3 eigensolver failure, 4 capacity exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .bohr_sommerfeld import BSVariant, enumerate_bs_points, to_csv
from .checks import run_sample_checks
from .errors import CapacityError, DomainError, NumericalError
from .gc import gc_map
from .linalg import matrix_from_json, matrix_to_json, sweep
from .peter_weyl import pw_check, pw_table
from .polytope import DEFAULT_CAP, DominantWeight, count_integral_points, weyl_dim

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_NUMERICAL, EXIT_CAPACITY = 0, 1, 2, 3, 4


@dataclass(frozen=True)
class Config:
    seed: int = 0
    tol: float = 1e-8
    cap: int = DEFAULT_CAP
    format: str = "pretty"

    def __post_init__(self):
        if self.tol < 0:
            raise DomainError("--tol must be non-negative")
        if self.cap < 1:
            raise DomainError("--cap must be at least 1")


def threads() -> int:
    try:
        return max(1, int(os.environ.get("GCQ_THREADS", "1")))
    except ValueError:
        return 1


def fmt_num(x: float) -> str:
    return f"{x + 0.0:.15g}"


def _read_matrix(path):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    try:
        return matrix_from_json(text)
    except (ValueError, TypeError, KeyError) as exc:
        raise DomainError(f"cannot parse matrix file {path}: {exc}") from exc


def cmd_gc_map(args, cfg: Config, out) -> int:
    v = gc_map(_read_matrix(args.matrix))
    if cfg.format == "json":
        out.write(v.to_json() + "\n")
    elif cfg.format == "csv":
        out.write(",".join(fmt_num(x) for x in v.values) + "\n")
    else:
        out.write(" ".join(fmt_num(x) for x in v.values) + "\n")
    return EXIT_OK


def cmd_sweep(args, cfg: Config, out) -> int:
    s = sweep(_read_matrix(args.matrix))
    diag = [s.entries[i, i].real for i in range(s.n)]
    if cfg.format == "json":
        out.write(matrix_to_json(s) + "\n")
    elif cfg.format == "csv":
        out.write(",".join(fmt_num(x) for x in diag) + "\n")
    else:
        out.write(" ".join(fmt_num(x) for x in diag) + "\n")
    return EXIT_OK


def _tuple_str(xs):
    return "(" + ",".join(str(x) for x in xs) + ")"


def cmd_bs(args, cfg: Config, out) -> int:
    variant = BSVariant(args.variant)
    points = enumerate_bs_points(args.n, args.max, variant, cap=cfg.cap)
    if cfg.format == "json":
        for p in points:
            out.write(p.to_json() + "\n")
        out.write(json.dumps({"count": len(points)}) + "\n")
    elif cfg.format == "csv":
        out.write(to_csv(points))
        out.write(f"# count {len(points)}\n")
    else:
        for p in points:
            out.write(f"{_tuple_str(p.weight())} | {_tuple_str(p.pattern())} | {_tuple_str(p.dual_pattern())}\n")
        out.write(f"# count {len(points)}\n")
    return EXIT_OK


def cmd_pw(args, cfg: Config, out) -> int:
    report = pw_check(args.n, args.max, workers=threads())
    out.write(pw_table(report, cfg.format))
    return EXIT_OK if report.agree else EXIT_MISMATCH


def _parse_weight(text):
    try:
        return DominantWeight(tuple(int(t) for t in text.split(",")))
    except ValueError as exc:
        raise DomainError(f"bad weight {text!r}: {exc}") from exc


def cmd_dim(args, cfg: Config, out) -> int:
    w = _parse_weight(args.weight)
    d, c = weyl_dim(w), count_integral_points(w)
    verdict = "AGREE" if d == c else "MISMATCH"
    if cfg.format == "json":
        out.write(json.dumps({"alpha": list(w.alpha), "weyl_dim": d, "gc_count": c, "agree": d == c}) + "\n")
    elif cfg.format == "csv":
        out.write(f"weyl_dim,gc_count,verdict\n{d},{c},{verdict}\n")
    else:
        out.write(f"{d} {c} {verdict}\n")
    return EXIT_OK if d == c else EXIT_MISMATCH


def cmd_sample(args, cfg: Config, out) -> int:
    rep = run_sample_checks(args.n, args.count, cfg.seed, tol=cfg.tol, inject=args.inject)
    if cfg.format == "json":
        out.write(json.dumps({"n": rep.n, "count": rep.count, "seed": rep.seed, "tol": rep.tol,
                              "violations": rep.violations, "ok": rep.ok}) + "\n")
    else:
        out.write("\n".join(rep.lines()) + "\n")
        out.write(("PASS" if rep.ok else "FAIL") + "\n")
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--tol", type=float, default=1e-8)
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap")
    common.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")

    parser = argparse.ArgumentParser(prog="gcq", description="Double Gelfand-Cetlin systems on T*U(n).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gc-map", parents=[common], help="GC vector of a Hermitian matrix (JSON file)")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_gc_map)

    p = sub.add_parser("sweep", parents=[common], help="diagonal of sorted eigenvalues")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("bs", parents=[common], help="enumerate Bohr-Sommerfeld points")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max", type=int, required=True, help="bound N on |alpha_i|")
    p.add_argument("--variant", choices=[v.value for v in BSVariant], default="closure")
    p.set_defaults(func=cmd_bs)

    p = sub.add_parser("pw", parents=[common], help="truncated Peter-Weyl check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(func=cmd_pw)

    p = sub.add_parser("dim", parents=[common], help="Weyl dimension vs GC pattern count")
    p.add_argument("weight", help='comma-separated, e.g. "2,1,0"')
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("sample", parents=[common], help="invariant checks on random cotangent points")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--inject", type=float, default=0.0,
                   help="perturb the pairing by this amount (negative control)")
    p.set_defaults(func=cmd_sample)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        cfg = Config(seed=args.seed, tol=args.tol, cap=args.cap, format=args.format)
        return args.func(args, cfg, out)
    except CapacityError as exc:
        print(f"gcq: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except NumericalError as exc:
        print(f"gcq: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (DomainError, OSError) as exc:
        print(f"gcq: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
