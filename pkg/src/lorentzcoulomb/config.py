"""Suite configuration: an INI file with one section per check.

::

    [suite]
    rel_tol = 1e-9            ; quadrature tolerances shared by all checks
    abs_tol = 1e-12
    arbitration_points = 3

    [THM1]
    tolerance = 1e-6          ; optional, defaults to the check's own
    enabled = true            ; optional
    variant = auto            ; checks with candidates only: auto or a name
    points =
        sigma=-0.5 rho=1 lam=2
        sigma=0.25 rho=0.5 lam=1

Checks without a section are not run.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence

from .checks import REGISTRY
from .cxcore import DomainError
from .quad import QuadConfig
from .verifier import CheckSpec

__all__ = ["ConfigError", "CheckGrid", "SuiteConfig", "load_config", "default_config_text", "densify"]

_SUITE_KEYS = {"rel_tol", "abs_tol", "max_depth", "max_evaluations", "arbitration_points"}
_CHECK_KEYS = {"tolerance", "enabled", "variant", "points"}


class ConfigError(ValueError):
    """The configuration cannot be used; the CLI exits with status 2."""


@dataclass
class CheckGrid:
    check_id: str
    specs: list[CheckSpec]


@dataclass
class SuiteConfig:
    quad_cfg: QuadConfig
    arbitration_points: int
    grids: list[CheckGrid]


def default_config_text() -> str:
    return resources.files("lorentzcoulomb").joinpath("default.ini").read_text(encoding="utf-8")


def _parse_point(line: str, check_id: str) -> dict[str, float]:
    point = {}
    for item in line.split():
        name, sep, value = item.partition("=")
        if not sep:
            raise ConfigError(f"[{check_id}] expected name=value, got {item!r}")
        try:
            point[name] = float(value)
        except ValueError:
            raise ConfigError(f"[{check_id}] {name} is not a number: {value!r}") from None
    return point


def densify(points: Sequence[dict[str, float]], factor: int) -> list[dict[str, float]]:
    """Insert factor - 1 evenly spaced points between consecutive grid points."""
    if factor < 1:
        raise ConfigError("grid scale must be a positive integer")
    if factor == 1 or len(points) < 2:
        return [dict(p) for p in points]
    out = []
    for a, b in zip(points, points[1:]):
        for k in range(factor):
            t = k / factor
            out.append({name: a[name] + t * (b[name] - a[name]) for name in a})
    out.append(dict(points[-1]))
    return out


def _suite_settings(parser: configparser.ConfigParser) -> tuple[QuadConfig, int]:
    section = parser["suite"] if parser.has_section("suite") else {}
    unknown = set(section) - _SUITE_KEYS
    if unknown:
        raise ConfigError(f"[suite] unknown keys: {', '.join(sorted(unknown))}")
    try:
        defaults = QuadConfig()
        cfg = QuadConfig(
            abs_tol=float(section.get("abs_tol", defaults.abs_tol)),
            rel_tol=float(section.get("rel_tol", defaults.rel_tol)),
            max_depth=int(section.get("max_depth", defaults.max_depth)),
            max_evaluations=int(section.get("max_evaluations", defaults.max_evaluations)),
        )
        arbitration = int(section.get("arbitration_points", 3))
    except ValueError as exc:
        raise ConfigError(f"[suite] {exc}") from None
    if arbitration < 1:
        raise ConfigError("[suite] arbitration_points must be at least 1")
    return cfg, arbitration


def _grid(check_id, section, cfg: QuadConfig, grid_scale: int) -> Optional[CheckGrid]:
    definition = REGISTRY[check_id]
    unknown = set(section) - _CHECK_KEYS
    if unknown:
        raise ConfigError(f"[{check_id}] unknown keys: {', '.join(sorted(unknown))}")
    try:
        if not section.getboolean("enabled", True):
            return None
        tolerance = float(section.get("tolerance", definition.tolerance))
    except ValueError as exc:
        raise ConfigError(f"[{check_id}] {exc}") from None
    variant = section.get("variant", "auto").strip()
    if variant == "auto":
        variant = None
    elif variant not in definition.variants:
        raise ConfigError(f"[{check_id}] unknown variant {variant!r}")
    lines = [ln for ln in section.get("points", "").splitlines() if ln.strip()]
    if not lines:
        raise ConfigError(f"[{check_id}] no points")
    points = [_parse_point(ln, check_id) for ln in lines]
    specs = []
    for point in points:
        try:
            specs.append(CheckSpec(check_id, point, tolerance, cfg, variant))
        except (ValueError, DomainError) as exc:
            raise ConfigError(f"[{check_id}] point {point}: {exc}") from None
    if grid_scale > 1:
        specs = []
        for point in densify(points, grid_scale):
            try:
                specs.append(CheckSpec(check_id, point, tolerance, cfg, variant))
            except (ValueError, DomainError):
                continue  # interpolated point outside the regime
    return CheckGrid(check_id, specs)


def parse_config(text: str, grid_scale: int = 1, only: Optional[Sequence[str]] = None) -> SuiteConfig:
    parser = configparser.ConfigParser(inline_comment_prefixes=(";",), interpolation=None)
    parser.optionxform = str
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(f"unreadable configuration: {exc}") from None
    unknown = [s for s in parser.sections() if s != "suite" and s not in REGISTRY]
    if unknown:
        raise ConfigError(f"unknown checks: {', '.join(unknown)}")
    if only is not None:
        missing = [c for c in only if c not in REGISTRY]
        if missing:
            raise ConfigError(f"unknown checks: {', '.join(missing)}")
    cfg, arbitration = _suite_settings(parser)
    grids = []
    for check_id in REGISTRY:
        if not parser.has_section(check_id) or (only is not None and check_id not in only):
            continue
        grid = _grid(check_id, parser[check_id], cfg, grid_scale)
        if grid is not None:
            grids.append(grid)
    return SuiteConfig(cfg, arbitration, grids)


def load_config(
    path: Optional[Path] = None, grid_scale: int = 1, only: Optional[Sequence[str]] = None
) -> SuiteConfig:
    """Read a configuration file, or the shipped default when path is None."""
    if path is None:
        text = default_config_text()
    else:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            raise ConfigError(f"cannot read {path}: {exc}") from None
    return parse_config(text, grid_scale, only)
