"""Running checks over parameter grids and writing the reports."""

from __future__ import annotations

import csv
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .checks import REGISTRY, CheckDef, Evaluation
from .cxcore import DomainError
from .hyp import AccuracyError
from .quad import QuadConfig

__all__ = [
    "CheckSpec",
    "CheckResult",
    "run_check",
    "run_grid",
    "CSV_FIELDS",
    "write_json",
    "write_csv",
]

CSV_FIELDS = (
    "check_id",
    "params",
    "variant",
    "lhs_re",
    "lhs_im",
    "rhs_re",
    "rhs_im",
    "abs_err",
    "rel_err",
    "tolerance",
    "passed",
    "lhs_source",
    "rhs_source",
)

# failures of the numerics that a check reports instead of raising
_NUMERIC_ERRORS = (ArithmeticError, AccuracyError, DomainError, ValueError)


@dataclass(frozen=True)
class CheckSpec:
    check_id: str
    params: dict[str, float]
    tolerance: float
    quad_cfg: QuadConfig = QuadConfig()
    variant: Optional[str] = None

    def __post_init__(self):
        definition = REGISTRY.get(self.check_id)
        if definition is None:
            raise ValueError(f"unknown check {self.check_id!r}")
        missing = set(definition.params) - set(self.params)
        extra = set(self.params) - set(definition.params)
        if missing or extra:
            raise ValueError(
                f"{self.check_id} takes parameters {', '.join(definition.params)}"
            )
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.variant is not None and self.variant not in definition.variants:
            raise ValueError(f"{self.check_id} has no variant {self.variant!r}")
        definition.validate(self.params)

    @property
    def definition(self) -> CheckDef:
        return REGISTRY[self.check_id]


@dataclass
class CheckResult:
    check_id: str
    params: dict[str, float]
    lhs: complex
    rhs: complex
    abs_err: float
    rel_err: float
    passed: bool
    lhs_source: str
    rhs_source: str
    wall_time: float
    tolerance: float = 0.0
    diagnostic: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "check_id": self.check_id,
            "params": dict(self.params),
            "lhs": _complex_json(self.lhs),
            "rhs": _complex_json(self.rhs),
            "abs_err": _float_json(self.abs_err),
            "rel_err": _float_json(self.rel_err),
            "passed": self.passed,
            "lhs_source": self.lhs_source,
            "rhs_source": self.rhs_source,
            "wall_time": self.wall_time,
            "tolerance": self.tolerance,
            "diagnostic": _plain(self.diagnostic),
        }

    def csv_row(self) -> list[str]:
        params = ";".join(f"{k}={_fmt(v)}" for k, v in self.params.items())
        return [
            self.check_id,
            params,
            str(self.diagnostic.get("variant", "")),
            _fmt(self.lhs.real),
            _fmt(self.lhs.imag),
            _fmt(self.rhs.real),
            _fmt(self.rhs.imag),
            _fmt(self.abs_err),
            _fmt(self.rel_err),
            _fmt(self.tolerance),
            "true" if self.passed else "false",
            self.lhs_source,
            self.rhs_source,
        ]


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _float_json(x: float):
    return x if math.isfinite(x) else None


def _complex_json(z: complex) -> dict:
    return {"re": _float_json(z.real), "im": _float_json(z.imag)}


def _plain(value):
    """Diagnostics with complex numbers turned into {re, im} objects."""
    if isinstance(value, complex):
        return _complex_json(value)
    if isinstance(value, float):
        return _float_json(value)
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def _errors(lhs: complex, rhs: complex, scale: Optional[float]) -> tuple[float, float]:
    abs_err = abs(lhs - rhs)
    ref = scale if scale is not None else abs(rhs)
    rel_err = abs_err / ref if ref > 0 else (0.0 if abs_err == 0 else math.inf)
    return abs_err, rel_err


def _within(abs_err: float, rel_err: float, tol: float) -> bool:
    return abs_err <= tol or rel_err <= tol


def _failed(spec: CheckSpec, start: float, message: str) -> CheckResult:
    d = spec.definition
    nan = complex(math.nan, math.nan)
    return CheckResult(
        spec.check_id, dict(spec.params), nan, nan, math.inf, math.inf, False,
        d.lhs_source, d.rhs_source, time.perf_counter() - start, spec.tolerance,
        {"error": message},
    )


def _evaluate(spec: CheckSpec) -> tuple[Optional[Evaluation], float, Optional[str]]:
    start = time.perf_counter()
    try:
        ev = spec.definition.evaluate(spec.params, spec.quad_cfg)
    except _NUMERIC_ERRORS as exc:
        return None, start, f"{type(exc).__name__}: {exc}"
    return ev, start, None


def _finish(spec: CheckSpec, ev: Evaluation, start: float, variant: Optional[str]) -> CheckResult:
    d = spec.definition
    diag = dict(ev.diagnostic)
    if variant is not None:
        lhs, rhs = ev.variants[variant]
        diag["variant"] = variant
        diag["variant_rel_err"] = {
            name: _errors(l, r, ev.scale)[1] for name, (l, r) in ev.variants.items()
        }
    else:
        lhs, rhs = ev.lhs, ev.rhs
    abs_err, rel_err = _errors(lhs, rhs, ev.scale)
    passed = _within(abs_err, rel_err, spec.tolerance) and ev.converged
    if not ev.converged:
        diag["quadrature"] = "not converged"
    return CheckResult(
        spec.check_id, dict(spec.params), lhs, rhs, abs_err, rel_err, passed,
        d.lhs_source, d.rhs_source, time.perf_counter() - start, spec.tolerance, diag,
    )


def _matching(spec: CheckSpec, ev: Evaluation) -> list[str]:
    return [
        name
        for name, (lhs, rhs) in ev.variants.items()
        if _within(*_errors(lhs, rhs, ev.scale), spec.tolerance)
    ]


def run_check(spec: CheckSpec) -> CheckResult:
    """Evaluate one check at one point.

    A check with candidate variants uses ``spec.variant`` when given;
    otherwise it passes only if exactly one candidate matches, and that one
    is reported.
    """
    ev, start, error = _evaluate(spec)
    if ev is None:
        return _failed(spec, start, error)
    if not spec.definition.variants:
        return _finish(spec, ev, start, None)
    if spec.variant is not None:
        return _finish(spec, ev, start, spec.variant)
    matches = _matching(spec, ev)
    if len(matches) == 1:
        return _finish(spec, ev, start, matches[0])
    best = min(ev.variants, key=lambda name: _errors(*ev.variants[name], ev.scale)[1])
    result = _finish(spec, ev, start, best)
    result.passed = False
    result.diagnostic["arbitration"] = f"{len(matches)} candidates match"
    return result


def run_grid(specs: Sequence[CheckSpec], arbitration_points: int = 3) -> list[CheckResult]:
    """Run one check over its grid, pinning an unpinned variant first.

    The first ``arbitration_points`` points evaluate every candidate. A
    candidate matching at all of them, and the only one doing so, is pinned
    for the remaining points. Otherwise every point fails.
    """
    if not specs:
        return []
    definition = specs[0].definition
    if not definition.variants or specs[0].variant is not None:
        return [run_check(s) for s in specs]
    head = specs[:arbitration_points]
    evaluations = [_evaluate(s) for s in head]
    winners = set(definition.variants)
    for spec, (ev, _, _) in zip(head, evaluations):
        winners &= set(_matching(spec, ev)) if ev is not None else set()
    results = []
    matching = sorted(winners)
    pinned = matching[0] if len(matching) == 1 else None
    verdict = {"points": len(head), "matching": matching, "pinned": pinned}
    for spec, (ev, start, error) in zip(head, evaluations):
        if ev is None:
            result = _failed(spec, start, error)
        else:
            choice = pinned or min(ev.variants, key=lambda n: _errors(*ev.variants[n], ev.scale)[1])
            result = _finish(spec, ev, start, choice)
            result.passed = result.passed and pinned is not None
        result.diagnostic["arbitration"] = verdict
        results.append(result)
    for spec in specs[arbitration_points:]:
        if pinned is None:
            ev, start, error = _evaluate(spec)
            result = _failed(spec, start, error or "arbitration found no unique variant")
        else:
            result = run_check(
                CheckSpec(spec.check_id, spec.params, spec.tolerance, spec.quad_cfg, pinned)
            )
        result.diagnostic["arbitration"] = verdict
        results.append(result)
    return results


def _run_group(args) -> list[CheckResult]:
    specs, arbitration_points = args
    return run_grid(specs, arbitration_points)


def run_groups(
    groups: Sequence[tuple[Sequence[CheckSpec], int]], jobs: int = 1
) -> list[CheckResult]:
    """Run several grids, optionally in worker processes; order is preserved."""
    if jobs <= 1 or len(groups) <= 1:
        return [r for g in groups for r in _run_group(g)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return [r for rs in pool.map(_run_group, groups) for r in rs]


def write_json(results: Iterable[CheckResult], path: Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump([r.to_json() for r in results], fh, indent=2, allow_nan=False)
        fh.write("\n")


def write_csv(results: Iterable[CheckResult], path: Path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_FIELDS)
        for r in results:
            writer.writerow(r.csv_row())
