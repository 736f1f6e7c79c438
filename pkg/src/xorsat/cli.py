"""Command-line interface.

Subcommands: gen, solve, sweep, bounds, expected-y, witness, oracle.
Exit codes: 0 success, 1 domain error (message on stderr), 2 usage
error (argparse).  Randomized subcommands echo an auto-generated seed
to stderr when --seed is omitted, so any run can be reproduced.
"""

from __future__ import annotations

import argparse
import json
import os
import secrets
import sys
from typing import Optional

import numpy as np

from . import bounds, gf2, model, oracle, sweep
from .bounds import BracketingError, U_READING_LINEAR, U_READING_QUADRATIC
from .model import FormulaParseError, ModelDomainError
from .oracle import BudgetExceededError
from .sweep import NoCrossingError
from .witness import UnsupportedWidthError, count_tuv

_DOMAIN_ERRORS = (
    ModelDomainError,
    FormulaParseError,
    BudgetExceededError,
    BracketingError,
    NoCrossingError,
    UnsupportedWidthError,
    ValueError,
)


def _open_out(path: Optional[str]):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w"), True


def _write_out(path: Optional[str], text: str) -> None:
    fp, close = _open_out(path)
    try:
        fp.write(text)
    finally:
        if close:
            fp.close()


def _read_in(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fp:
        return fp.read()


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    seed = secrets.randbits(63)
    print(f"seed: {seed}", file=sys.stderr)
    return seed


def cmd_gen(args) -> int:
    seed = _resolve_seed(args)
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
    f = model.sample_formula(args.n, args.L, args.k, rng)
    _write_out(args.output, model.format_formula(f))
    return 0


def cmd_solve(args) -> int:
    f = model.parse_formula(_read_in(args.input))
    matrix, rhs = model.to_system(f)
    result = gf2.solve(matrix, rhs)
    lines = []
    if result.consistent:
        lines.append("s SATISFIABLE")
        lines.append("v " + " ".join(str(int(b)) for b in result.assignment))
    else:
        lines.append("s UNSATISFIABLE")
    lines.append(f"rank {result.rank}")
    _write_out(args.output, "\n".join(lines) + "\n")
    return 0


def _parse_ratio_range(text: str) -> tuple[float, float, float]:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"ratio range must be start:end:step, got {text!r}")
    return float(parts[0]), float(parts[1]), float(parts[2])


def cmd_sweep(args) -> int:
    if args.config is not None:
        cfg = sweep.SweepConfig.from_json(_read_in(args.config))
    else:
        if args.n is None or args.ratio is None:
            raise ValueError("sweep needs --config, or both --n and --ratio")
        start, end, step = _parse_ratio_range(args.ratio)
        cfg = sweep.SweepConfig(
            k=args.k,
            n_values=tuple(int(tok) for tok in args.n.split(",")),
            ratio_start=start,
            ratio_end=end,
            ratio_step=step,
            samples_per_point=args.samples,
            seed=_resolve_seed(args),
        )
    points = sweep.run_sweep(cfg, threads=args.threads)
    _write_out(args.output, sweep.format_csv(points, cfg.k))
    return 0


def cmd_bounds(args) -> int:
    report = bounds.bounds_report(args.k, tol=args.tol, reading=args.reading)
    _write_out(args.output, report.to_json(indent=2) + "\n")
    return 0


def cmd_expected_y(args) -> int:
    value = bounds.expected_y(args.n, args.L, args.k)
    doc = {"n": args.n, "L": args.L, "k": args.k, "expected_y": value}
    _write_out(args.output, json.dumps(doc, indent=2) + "\n")
    return 0


def cmd_witness(args) -> int:
    f = model.parse_formula(_read_in(args.input))
    matrix, _ = model.to_system(f)
    counts = count_tuv(matrix)
    actual = gf2.rank(matrix)
    sound = actual <= counts.rank_bound
    doc = {
        "t": counts.t,
        "u": counts.u,
        "v": counts.v,
        "rank_bound": counts.rank_bound,
        "rank_bound_clamped": counts.rank_bound_clamped,
        "rank": actual,
        "sound": sound,
    }
    _write_out(args.output, json.dumps(doc, indent=2) + "\n")
    print(f"soundness {'PASS' if sound else 'FAIL'}")
    return 0


def cmd_oracle(args) -> int:
    if args.mode == "sat-prob":
        p = oracle.exact_sat_probability(args.n, args.L, args.k)
        text = f"{p.numerator}/{p.denominator} = {p.value} ~ {float(p.value):.10g}\n"
    elif args.mode == "expected-y":
        v = oracle.exact_expected_y(args.n, args.L, args.k)
        text = f"{v} ~ {float(v):.10g}\n"
    elif args.mode == "omega":
        if args.m is None:
            raise ValueError("oracle omega needs -m")
        text = f"{oracle.omega_bruteforce(args.n, args.m, args.k)}\n"
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown oracle mode {args.mode}")
    _write_out(args.output, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xorsat",
        description="Random k-XOR-SAT: GF(2) solving, threshold bounds, Monte Carlo sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    out_parent = argparse.ArgumentParser(add_help=False)
    out_parent.add_argument("-o", "--output", default=None, help="output path ('-' = stdout)")

    p = sub.add_parser("gen", parents=[out_parent], help="sample a random formula")
    p.add_argument("-n", type=int, required=True, help="number of variables")
    p.add_argument("-L", type=int, required=True, help="number of clauses")
    p.add_argument("-k", type=int, default=3, help="clause width (default 3)")
    p.add_argument("--seed", type=int, default=None, help="64-bit seed (echoed if omitted)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", parents=[out_parent], help="solve a formula file")
    p.add_argument("input", help="formula path ('-' = stdin)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sweep", parents=[out_parent], help="Monte Carlo ratio sweep (CSV)")
    p.add_argument("-k", type=int, default=3, help="clause width (default 3)")
    p.add_argument("--n", default=None, help="comma-separated variable counts, e.g. 100,200")
    p.add_argument("--ratio", default=None, help="start:end:step, end included within half a step")
    p.add_argument("--samples", type=int, default=1000, help="formulas per point (default 1000)")
    p.add_argument("--seed", type=int, default=None, help="64-bit seed (echoed if omitted)")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                   help="worker threads (default: hardware count)")
    p.add_argument("--config", default=None, help="JSON SweepConfig path (overrides flags)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("bounds", parents=[out_parent], help="theta_k and beta_k root (JSON)")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--reading", choices=[U_READING_QUADRATIC, U_READING_LINEAR],
                   default=bounds.DEFAULT_U_READING,
                   help="u-term coefficient reading for k >= 4")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("expected-y", parents=[out_parent], help="analytic E(Y) (JSON)")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-L", type=int, required=True)
    p.add_argument("-k", type=int, default=3)
    p.set_defaults(func=cmd_expected_y)

    p = sub.add_parser("witness", parents=[out_parent],
                       help="T/U/V counters and certified rank bound for a k=3 formula")
    p.add_argument("input", help="formula path ('-' = stdin)")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("oracle", parents=[out_parent], help="exact brute-force spot checks")
    p.add_argument("mode", choices=["sat-prob", "expected-y", "omega"])
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-L", type=int, default=0)
    p.add_argument("-k", type=int, default=3)
    p.add_argument("-m", type=int, default=None, help="marked-set size (omega mode)")
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage/help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
