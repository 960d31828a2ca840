"""The ``verify`` command."""

from __future__ import annotations

import argparse
import os
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from .checks import REGISTRY
from .config import ConfigError, load_config
from .verifier import run_groups, write_csv, write_json

REPORT_STEM = "verify_report"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _check_list(text: str) -> list[str]:
    ids = [t.strip() for t in text.split(",") if t.strip()]
    if not ids:
        raise argparse.ArgumentTypeError("no check IDs given")
    return ids


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="verify", description="Check the Coulomb-function identities numerically.")
    parser.add_argument("--config", type=Path, help="INI configuration (default: the shipped grid)")
    parser.add_argument("--check", type=_check_list, metavar="ID[,ID...]", help="run only these checks")
    parser.add_argument(
        "--grid-scale", type=_positive_int, default=1, metavar="N",
        help="interpolate N-1 extra points between consecutive grid points",
    )
    parser.add_argument("--out", type=Path, default=Path("."), metavar="DIR", help="report directory")
    parser.add_argument("--format", choices=("json", "csv", "both"), default="both")
    parser.add_argument("--list", action="store_true", help="list the checks and exit")
    parser.add_argument("--jobs", type=_positive_int, default=1, help="worker processes")
    return parser


def _list_checks() -> None:
    for check_id, definition in REGISTRY.items():
        params = ", ".join(definition.params)
        print(f"{check_id:<12} {definition.title} ({params}; tol {definition.tolerance:g})")


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.list:
        _list_checks()
        return 0
    try:
        suite = load_config(args.config, args.grid_scale, args.check)
    except ConfigError as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return 2
    try:
        os.makedirs(args.out, exist_ok=True)
    except OSError as exc:
        print(f"verify: cannot create {args.out}: {exc}", file=sys.stderr)
        return 2

    start = time.perf_counter()
    groups = [(grid.specs, suite.arbitration_points) for grid in suite.grids]
    results = run_groups(groups, args.jobs)

    for grid in suite.grids:
        rows = [r for r in results if r.check_id == grid.check_id]
        passed = sum(r.passed for r in rows)
        worst = max((r.rel_err for r in rows), default=0.0)
        variant = next((r.diagnostic["variant"] for r in rows if "variant" in r.diagnostic), None)
        note = f" variant={variant}" if variant else ""
        status = "PASS" if passed == len(rows) else "FAIL"
        print(f"{status} {grid.check_id:<12} {passed}/{len(rows)} max rel err {worst:.2e}{note}")

    if args.format in ("json", "both"):
        write_json(results, args.out / f"{REPORT_STEM}.json")
    if args.format in ("csv", "both"):
        write_csv(results, args.out / f"{REPORT_STEM}.csv")
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} points passed in {time.perf_counter() - start:.1f} s")
    return 0 if failed == 0 and results else 1


if __name__ == "__main__":
    sys.exit(main())
