"""Command-line front end: ``spinweave generate|verify|enumerate|oracle``.

Exit codes: 0 success / all checks hold, 1 bad input, 2 a check failed,
3 the permutation-sum oracle cap was exceeded.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .coupling import build_coupled_state
from .document import SCHEMA, StateDocument, dumps
from .errors import CapExceeded, SpinweaveError
from .projection import DEFAULT_ORACLE_CAP, apply_projection_sequence, permutation_sum_oracle
from .spins import CouplingPath, HalfInt, enumerate_paths
from .verify import SUITES, compare, full_sweep
from .wiring import AssignmentPolicy, compile_setup

log = logging.getLogger("spinweave")

EXIT_OK, EXIT_INPUT, EXIT_FAIL, EXIT_CAP = 0, 1, 2, 3


def _write(text: str, target: str) -> None:
    if target in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(target).write_text(text, encoding="utf-8")


def _label(args):
    path = CouplingPath.parse(args.path)
    m = HalfInt.of(args.m)
    return path, m


def cmd_generate(args) -> int:
    path, m = _label(args)
    policy = AssignmentPolicy.parse(args.policy)
    cfg = compile_setup(path, m, policy)
    alg = apply_projection_sequence(cfg)
    ref = build_coupled_state(path, m)
    report = compare(path, m, alg, ref)
    doc = StateDocument.from_report(report, str(policy), cfg, alg, ref, with_decimals=args.approx)
    _write(doc.dumps(), args.output)
    return EXIT_OK if report.holds else EXIT_FAIL


def _suites(text: str) -> list:
    names = [s.strip() for s in text.split(",") if s.strip()]
    if "all" in names:
        return list(SUITES)
    bad = [s for s in names if s not in SUITES]
    if bad:
        raise SpinweaveError(f"unknown suite {bad[0]!r}; choose from all,{','.join(SUITES)}")
    return names


def cmd_verify(args) -> int:
    summary = full_sweep(
        args.n_max,
        suites=_suites(args.suite),
        seed=args.seed,
        trials=args.trials,
        oracle_cap=args.oracle_cap,
    )
    for suite, t in summary["totals"].items():
        log.info("%-16s pass=%d fail=%d skip=%d", suite, t["pass"], t["fail"], t["skip"])
    _write(dumps({"schema": SCHEMA, **summary}), args.output)
    return EXIT_OK if summary["all_passed"] else EXIT_FAIL


def cmd_enumerate(args) -> int:
    if args.n < 1:
        raise SpinweaveError(f"--n must be >= 1, got {args.n}")
    paths = enumerate_paths(args.n)
    doc = {
        "schema": SCHEMA,
        "n": args.n,
        "paths": [
            {"path": str(p), "final": str(p.final), "m_values": [str(m) for m in p.m_values()]}
            for p in paths
        ],
        "dimension": sum(p.final.doubled + 1 for p in paths),
    }
    _write(dumps(doc), args.output)
    return EXIT_OK


def cmd_oracle(args) -> int:
    path, m = _label(args)
    policy = AssignmentPolicy.parse(args.policy)
    cfg = compile_setup(path, m, policy)
    try:
        brute = permutation_sum_oracle(cfg, m, cap=args.oracle_cap)
    except CapExceeded as exc:
        print(f"spinweave: {exc} (offending n={exc.n}; raise --oracle-cap)", file=sys.stderr)
        return EXIT_CAP
    seq = apply_projection_sequence(cfg)
    doc = {
        "schema": SCHEMA,
        "n": path.n,
        "label": {"path": str(path), "m": str(m)},
        "policy": str(policy),
        "setup": cfg.to_json(),
        "state_oracle": brute.to_json(),
        "state_sequential": seq.to_json(),
        "match": brute == seq,
    }
    _write(dumps(doc), args.output)
    return EXIT_OK if brute == seq else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinweave",
        description="Wire detector setups for spin-1/2 coupled eigenstates and verify them exactly.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def label_args(p):
        p.add_argument("--path", required=True, help='coupling path, "1/2,1,1/2" or doubled "1,2,1"')
        p.add_argument("--m", required=True, help='magnetic quantum number, e.g. "1/2" or "-1"')
        p.add_argument("--policy", default="canonical",
                       help="canonical | random:<seed> | file:<layout.json>")

    p = sub.add_parser("generate", help="compile a setup and compare its output with the eigenstate")
    label_args(p)
    p.add_argument("--approx", action="store_true", help="add 15-digit decimal amplitudes")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="sweep every label up to --n-max")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--suite", default="all", help=f"comma list from all,{','.join(SUITES)}")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20, help="random layouts per label for invariance")
    p.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list coupling paths for n qubits")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("oracle", help="run the permutation double sum for one setup")
    label_args(p)
    p.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except (SpinweaveError, OSError, KeyError, ValueError) as exc:
        print(f"spinweave: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
