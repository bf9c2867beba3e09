"""Command-line front end.

Subcommands: ``dist`` (position distributions), ``xi`` (path-sum operator
for one step split), ``verify`` (seeded verification suites), ``classify``
(measure classification), ``eigen-check`` (right-eigenpair residuals).

Exit codes: 0 success, 1 verification failure, 2 config/parse error,
3 non-unitary coin, 4 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .coin import NotUnitaryError, coin_from_spec
from .pathsum import (
    CapExceededError,
    decompose_pqrs,
    path_sum_bruteforce,
    path_sum_reduced,
)
from .quaternion import DEFAULT_TOL, Quaternion, parse_quaternion
from .stationary import EigenCandidate, classify_measure, right_eigen_check
from .verify import run_suites
from .walk import PeriodicState, distributions, measure_from_json, state_from_json

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_CONFIG = 2
EXIT_NOT_UNITARY = 3
EXIT_CAP = 4


def _default_seed() -> int:
    """Seed from QQWALK_SEED when set; CLI flags override it."""
    try:
        return int(os.environ.get("QQWALK_SEED", "0"))
    except ValueError:
        return 0


@dataclass
class RunConfig:
    """Resolved settings for a walk run (flags override config-file values)."""

    coin: str
    init: str = "1,0"
    steps: int = 0
    output: str = "csv"
    seed: int = 0
    tolerance: float = DEFAULT_TOL


def _parse_spinor(text: str) -> tuple[Quaternion, Quaternion]:
    """Initial spinor: JSON pair of 4-arrays, or two text quaternions split on ','."""
    stripped = text.strip()
    if stripped.startswith("["):
        data = json.loads(stripped)
        if not isinstance(data, list) or len(data) != 2:
            raise ValueError("initial spinor JSON must be a pair of quaternions")
        return Quaternion.from_json(data[0]), Quaternion.from_json(data[1])
    parts = stripped.split(",")
    if len(parts) != 2:
        raise ValueError("initial spinor text must be 'alpha,beta'")
    return parse_quaternion(parts[0]), parse_quaternion(parts[1])


def _load_json_arg(text: str):
    """Inline JSON (starts with '{' or '[') or a path to a JSON file."""
    stripped = text.strip()
    if stripped.startswith(("{", "[")):
        return json.loads(stripped)
    if os.path.exists(stripped):
        with open(stripped, encoding="utf-8") as fh:
            return json.load(fh)
    raise ValueError(f"{text!r} is neither inline JSON nor an existing file")


def _resolve_run_config(args) -> RunConfig:
    values = {}
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            loaded = json.load(fh)
        if not isinstance(loaded, dict):
            raise ValueError("config file must hold a JSON object")
        values.update(loaded)
    for key, flag in (("coin", args.coin), ("init", args.init),
                      ("steps", args.steps), ("output", args.format),
                      ("seed", args.seed), ("tolerance", args.tol)):
        if flag is not None:
            values[key] = flag
    if "coin" not in values:
        raise ValueError("a coin is required (--coin or config file)")
    cfg = RunConfig(**{k: v for k, v in values.items()
                       if k in RunConfig.__dataclass_fields__})
    cfg.steps = int(cfg.steps)
    cfg.tolerance = float(cfg.tolerance)
    if cfg.steps < 0:
        raise ValueError("steps must be >= 0")
    if cfg.tolerance <= 0:
        raise ValueError("tolerance must be positive")
    if cfg.output not in ("csv", "json"):
        raise ValueError("output format must be csv or json")
    return cfg


def _cmd_dist(args) -> int:
    cfg = _resolve_run_config(args)
    coin = coin_from_spec(cfg.coin)
    spinor = _parse_spinor(cfg.init)
    series = distributions(coin, spinor, cfg.steps)
    if cfg.output == "csv":
        print("n,x,probability")
        for n, dist in enumerate(series):
            for x in sorted(dist):
                print(f"{n},{x},{dist[x]!r}")
    else:
        payload = [{"n": n, "dist": {str(x): dist[x] for x in sorted(dist)}}
                   for n, dist in enumerate(series)]
        print(json.dumps(payload))
    return EXIT_OK


def _cmd_xi(args) -> int:
    coin = coin_from_spec(args.coin)
    if args.mode == "brute":
        matrix = path_sum_bruteforce(coin, args.n, args.l, args.m)
        print(json.dumps(matrix.to_json()))
    elif args.mode == "reduced":
        matrix = path_sum_reduced(coin, args.n, args.l, args.m)
        print(json.dumps(matrix.to_json()))
    else:
        matrix = path_sum_reduced(coin, args.n, args.l, args.m)
        print(json.dumps(decompose_pqrs(coin, matrix, args.tol).to_json()))
    return EXIT_OK


def _cmd_verify(args) -> int:
    reports = run_suites(args.suite, seed=args.seed, tol=args.tol)
    for report in reports:
        print(json.dumps(report))
    return EXIT_OK if all(r["pass"] for r in reports) else EXIT_VERIFY_FAIL


def _cmd_classify(args) -> int:
    measure = measure_from_json(_load_json_arg(args.measure))
    klass = classify_measure(measure, window=args.window, tol=args.tol)
    print(json.dumps(klass.to_json()))
    return EXIT_OK


def _cmd_eigen_check(args) -> int:
    coin = coin_from_spec(args.coin)
    state = state_from_json(_load_json_arg(args.state))
    if not isinstance(state, PeriodicState):
        raise ValueError("eigen-check needs a periodic state")
    lam = parse_quaternion(args.eigenvalue)
    candidate = EigenCandidate(state, lam)
    passed, residual = right_eigen_check(coin, candidate, args.tol)
    print(json.dumps({"check": "right-eigenpair", "pass": passed,
                      "max_residual": residual,
                      "params": {"eigenvalue": lam.to_json(), "tol": args.tol}}))
    return EXIT_OK if passed else EXIT_VERIFY_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qqwalk",
        description="Quaternionic quantum walks on the integer line: "
                    "simulate, enumerate path sums, and verify.")
    sub = parser.add_subparsers(dest="command", required=True)

    dist = sub.add_parser("dist", help="position distributions for n = 0..steps")
    dist.add_argument("--coin", help="preset name, inline JSON, or JSON file")
    dist.add_argument("--init", help="initial spinor 'alpha,beta' or JSON pair")
    dist.add_argument("--steps", type=int, help="number of steps (default 0)")
    dist.add_argument("--format", choices=("csv", "json"), help="output format")
    dist.add_argument("--seed", type=int, help="recorded in the run config")
    dist.add_argument("--tol", type=float, help="tolerance for validation")
    dist.add_argument("--config", help="JSON config file (flags override it)")
    dist.set_defaults(handler=_cmd_dist)

    xi = sub.add_parser("xi", help="path-sum operator for one step split")
    xi.add_argument("--coin", required=True)
    xi.add_argument("-n", type=int, required=True, help="total steps")
    xi.add_argument("-l", type=int, required=True, help="left steps")
    xi.add_argument("-m", type=int, required=True, help="right steps")
    xi.add_argument("--mode", choices=("brute", "reduced", "decompose"),
                    default="brute")
    xi.add_argument("--tol", type=float, default=DEFAULT_TOL)
    xi.set_defaults(handler=_cmd_xi)

    verify = sub.add_parser("verify", help="run seeded verification suites")
    verify.add_argument("--suite", default="all",
                        choices=("all", "unitary", "pqrs", "stationary",
                                 "eigen", "theorem1"))
    verify.add_argument("--seed", type=int, default=_default_seed())
    verify.add_argument("--tol", type=float, default=DEFAULT_TOL)
    verify.set_defaults(handler=_cmd_verify)

    classify = sub.add_parser("classify", help="classify a measure")
    classify.add_argument("--measure", required=True,
                          help="measure JSON (inline or file)")
    classify.add_argument("--window", type=int, default=8)
    classify.add_argument("--tol", type=float, default=DEFAULT_TOL)
    classify.set_defaults(handler=_cmd_classify)

    eigen = sub.add_parser("eigen-check", help="verify a right eigenpair")
    eigen.add_argument("--coin", required=True)
    eigen.add_argument("--state", required=True,
                       help="periodic state JSON (inline or file)")
    eigen.add_argument("--eigenvalue", required=True,
                       help="quaternion text, e.g. '0+1i+0j+0k'")
    eigen.add_argument("--tol", type=float, default=DEFAULT_TOL)
    eigen.set_defaults(handler=_cmd_eigen_check)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except NotUnitaryError as exc:
        print(f"qqwalk: non-unitary coin: {exc}", file=sys.stderr)
        return EXIT_NOT_UNITARY
    except CapExceededError as exc:
        print(f"qqwalk: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"qqwalk: invalid configuration: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
