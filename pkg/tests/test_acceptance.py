"""The eleven acceptance criteria, each at its stated tolerance and time budget.

Every criterion records a PASS/FAIL line that is printed at the end of the
run (see ``pytest_terminal_summary`` in conftest).
"""

import cmath
import csv
import json
import math
import shutil
import subprocess
import sys
import time
from importlib import resources
from itertools import product

import jsonschema
import pytest

from conftest import ACCEPTANCE, rel_err
from lorentzcoulomb.cli import REPORT_STEM
from lorentzcoulomb.coulomb import CoulombParams, coulomb_f, coulomb_g, coulomb_h, ode_residual
from lorentzcoulomb.cxcore import beta, gamma
from lorentzcoulomb.hyp import hyp1f1, hyp2f1
from lorentzcoulomb.specfun import (
    BesselKind,
    bessel,
    ferrers_p,
    legendre_q_offcut,
    parabolic_d,
    whittaker_m,
    whittaker_w,
)
from lorentzcoulomb.verifier import CSV_FIELDS, CheckSpec, run_check, run_grid


def _record(number, title, passed, detail, seconds):
    ACCEPTANCE[number] = (title, passed, detail, seconds)
    assert passed, f"criterion {number} ({title}): {detail}"


def _run(check_id, points, tolerance):
    return [run_check(CheckSpec(check_id, p, tolerance)) for p in points]


def _summary(results):
    worst = max(r.rel_err for r in results)
    passed = sum(r.passed for r in results)
    return passed == len(results), f"{passed}/{len(results)} points, worst rel err {worst:.2e}"


def _timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def _golden_cases():
    z = 1 + 1j
    return [
        ("Gamma(5)", gamma(5), 24, 1e-9),
        ("Gamma(1/2)", gamma(0.5), math.sqrt(math.pi), 1e-9),
        ("B(1,1)", beta(1, 1), 1, 1e-9),
        ("B(1/2,1/2)", beta(0.5, 0.5), math.pi, 1e-9),
        ("1F1(a;b;0)", hyp1f1(0.3 - 2j, 1.7, 0), 1, 1e-9),
        ("1F1(1;1;z)", hyp1f1(1, 1, z), cmath.exp(z), 1e-9),
        ("2F1(a,b;b;x)", hyp2f1(0.3, 1.2, 1.2, 0.4), 0.6**-0.3, 1e-9),
        ("2F1(a,b;c;0)", hyp2f1(0.3, 2, 1.5, 0), 1, 1e-9),
        ("M_{0,1/2}", whittaker_m(0, 0.5, 1.3), 2 * math.sinh(0.65), 1e-9),
        ("W_{0,1/2}", whittaker_w(0, 0.5, 2), math.exp(-1), 1e-9),
        ("D_0", parabolic_d(0, 0.9), math.exp(-0.81 / 4), 1e-9),
        ("J_{1/2}", bessel(BesselKind.J, 0.5, 2.2), math.sqrt(2 / (math.pi * 2.2)) * math.sin(2.2), 1e-9),
        ("K_{1/2}", bessel(BesselKind.K, 0.5, 1.7), math.sqrt(math.pi / 3.4) * math.exp(-1.7), 1e-9),
        ("Q^0_0", legendre_q_offcut(0, 0, 2), 0.5 * math.log(3), 1e-9),
        ("Q^0_1", legendre_q_offcut(0, 1, 3), 1.5 * math.log(2) - 1, 1e-9),
        ("P^0_1", ferrers_p(0, 1, 0.3), 0.3, 1e-9),
        ("P^0_nu(1-)", ferrers_p(0, 0.3 + 0.5j, 1 - 1e-8), 1, 1e-6),
        ("F_0(0)", coulomb_f(CoulombParams(0, 0, 1.1)), math.sin(1.1), 1e-9),
        ("G_0(0)", coulomb_g(CoulombParams(0, 0, 2.3)), math.cos(2.3), 1e-9),
        ("H+_0(0)", coulomb_h(CoulombParams(0, 0, 0.8), +1), cmath.exp(0.8j), 1e-9),
    ]


def test_criterion_01_golden_special_functions():
    cases, seconds = _timed(_golden_cases)
    bad = [name for name, got, want, tol in cases if rel_err(got, want) > tol]
    worst = max(rel_err(got, want) for _, got, want, _ in cases)
    ok = not bad and seconds < 5
    detail = f"{len(cases) - len(bad)}/{len(cases)} golden values, worst rel err {worst:.2e}"
    if bad:
        detail += f", failing {', '.join(bad)}"
    _record(1, "special-function golden suite", ok, detail, seconds)


def test_criterion_02_coulomb_equation_residuals():
    def residuals():
        out = []
        for (sigma, rho), lam in product([(-0.5, 1), (0.25, 0.5), (-0.75, 0.5)], [1, 2, 5]):
            for func in (coulomb_f, coulomb_g):
                y = lambda x, func=func: func(CoulombParams(sigma, rho, x))  # noqa: E731
                out.append(ode_residual(y, sigma, rho, lam) / max(1.0, abs(y(lam))))
        return out

    values, seconds = _timed(residuals)
    ok = max(values) <= 1e-5 and seconds < 5
    _record(2, "Coulomb equation residuals", ok, f"{len(values)} residuals, worst {max(values):.2e}", seconds)


def test_criterion_03_parabolic_to_hyperbolic_plus():
    points = [
        {"sigma": s, "rho": r, "lam": l} for s, r, l in product([-0.75, -0.5, 0.25], [0.5, 1], [1, 2])
    ]
    results, seconds = _timed(lambda: _run("THM1", points, 1e-6))
    ok, detail = _summary(results)
    _record(3, "plus coefficient closed form vs parabola pairing", ok and len(results) >= 5 and seconds < 30, detail, seconds)


def test_criterion_04_parabolic_to_hyperbolic_minus():
    points = [{"lam": l, "rho": r} for l, r in [(1, 0.5), (2, 0.5), (1, 1)]]
    results, seconds = _timed(lambda: _run("THM2", points, 1e-6))
    ok, detail = _summary(results)
    _record(4, "minus coefficient closed form vs rotated contour", ok and seconds < 30, detail, seconds)


def test_criterion_05_coulomb_k_transform():
    xis = [(-0.5, 0.5, (2, 0.3, 0.5)), (-0.25, 0.7, (1.5, -0.4, 0.2)), (-0.75, -0.5, (2, 0.5, -0.5))]
    points = [{"sigma": s, "rho": r, "xi1": x[0], "xi2": x[1], "xi3": x[2]} for s, r, x in xis]
    results, seconds = _timed(lambda: run_grid([CheckSpec("THM3", p, 1e-5) for p in points]))
    ok, detail = _summary(results)
    detail += f", sign {results[0].diagnostic.get('variant')}"
    _record(5, "K transform lambda integral vs Ferrers form", ok and seconds < 60, detail, seconds)


def test_criterion_06_hankel_transforms_arbitration():
    xis = [
        (-0.3, 0.5, (2, -1.5, 1.6)),
        (-0.6, 0.3, (1, -2, 0.5)),
        (-0.4, -0.5, (1.5, -2.5, -1)),
        (-0.7, 0.8, (2, -3, 1)),
        (-0.2, 0.4, (1.2, -1.5, 0.3)),
        (-0.35, 0.6, (1.8, -2.2, 0.9)),
    ]
    points = [{"sigma": s, "rho": r, "xi1": x[0], "xi2": x[1], "xi3": x[2]} for s, r, x in xis]
    results, seconds = _timed(lambda: run_grid([CheckSpec("THM4", p, 1e-5) for p in points], 3))
    verdict = results[0].diagnostic["arbitration"]
    unique = len(verdict["matching"]) == 1
    further = results[3:]
    ok = unique and all(r.passed for r in results) and len(further) >= 3 and seconds < 60
    _, detail = _summary(results)
    detail = f"matching {verdict['matching']}, pinned {verdict['pinned']}; {detail}"
    _record(6, "Hankel transforms tan/tanh arbitration", ok, detail, seconds)


def test_criterion_07_rho_integral():
    xis = [(1, (2, 0.3, 0.5)), (2, (2, -0.4, 0.3)), (1, (3, 1, -1.5))]
    points = [{"lam": l, "xi1": x[0], "xi2": x[1], "xi3": x[2]} for l, x in xis]
    results, seconds = _timed(lambda: _run("THM5", points, 1e-5))
    ok, detail = _summary(results)
    _record(7, "rho integral vs K-Bessel", ok and seconds < 60, detail, seconds)


def test_criterion_08_reflection_formula():
    points = [
        {"sigma": s, "rho": r, "lam": l} for s, r, l in product([-0.25, -0.3, -0.5], [0.5, 1], [1.5, 2])
    ]
    results, seconds = _timed(lambda: _run("REFL", points, 1e-8))
    ok, detail = _summary(results)
    _record(8, "reflection formula", ok, detail, seconds)


def test_criterion_09_poisson_transform():
    def run():
        poisson = _run(
            "POISSON",
            [
                {"sigma": -0.5, "lam": 2, "alpha3": 0.3, "beta3": 0.2},
                {"sigma": -0.75, "lam": 1, "alpha3": 0.5, "beta3": 0},
            ],
            1e-6,
        )
        legrep = _run(
            "LEGREP",
            [{"sigma": -0.25, "rho": 0.5, "alpha3": -0.5}, {"sigma": -0.5, "rho": 1, "alpha3": -1}],
            1e-6,
        )
        harmonic = _run(
            "HARMONIC",
            [
                {"sigma": s, "lam": l, "alpha3": a, "beta3": b}
                for s, l, a, b in [
                    (-0.5, 2, 0.3, 0.2), (-0.75, 1, 0.5, 0), (-0.25, 1.5, -0.4, 1),
                    (-0.6, -1, 0.8, -0.5), (-0.4, 0.7, -0.2, 2),
                ]
            ],
            1e-4,
        )
        return poisson, legrep, harmonic

    (poisson, legrep, harmonic), seconds = _timed(run)
    parts = {"Poisson": poisson, "Legendre": legrep, "harmonic": harmonic}
    ok = all(r.passed for rs in parts.values() for r in rs)
    detail = "; ".join(f"{name} {_summary(rs)[1]}" for name, rs in parts.items())
    _record(9, "Poisson closed form, Legendre representation, harmonicity", ok, detail, seconds)


AUX_POINTS = {
    "AUX-2.3.6": [
        {"sigma": -0.5, "rho": 0.5, "lam": 1},
        {"sigma": 0.25, "rho": 1, "lam": 2},
    ],
    "AUX-2.2.9": [
        {"mu": 0.5, "mu_im": 0.3, "nu": 1, "a": 1, "b": 0.5, "c": 2},
        {"mu": 1, "mu_im": 0, "nu": 1.5, "a": 2, "b": -0.5, "c": 1},
    ],
    "AUX-3.383": [
        {"nu": 0.75, "nu_im": 0.5, "beta": 2, "mu": 0, "mu_im": -1.5},
        {"nu": 1.2, "nu_im": -0.5, "beta": 2, "mu": 0.5, "mu_im": 1},
    ],
    "AUX-2.5.48": [{"a": 1.5, "b": 0.5, "c": 1, "nu": 0.5}, {"a": 3, "b": 2, "c": 1.5, "nu": 1.3}],
    "AUX-2.3.5.3": [
        {"sigma": -0.5, "lam": 1, "half_width": 1},
        {"sigma": -0.25, "lam": 2, "half_width": 0.5},
    ],
    "AUX-2.3.5.5": [
        {"sigma": -0.5, "lam": 1, "half_width": 1},
        {"sigma": -0.75, "lam": 0.7, "half_width": 2},
    ],
    "AUX-LONDON": [
        {"a": 1, "b": 0.5, "nu": 0.75, "y": 2, "sign": 1},
        {"a": 0.5, "b": 1, "nu": 0.75, "y": -2, "sign": -1},
    ],
    "AUX-HANKEL": [{"sigma": -0.3, "x": 2}, {"sigma": -0.7, "x": 1.5}],
    "AUX-7.3.1": [{"sigma": -0.5, "rho": 0.5, "x": 0.3}, {"sigma": -0.75, "rho": -0.5, "x": 0.9}],
}


def test_criterion_10_auxiliary_integrals():
    results, seconds = _timed(lambda: {cid: _run(cid, pts, 1e-7) for cid, pts in AUX_POINTS.items()})
    failing = [cid for cid, rs in results.items() if not all(r.passed for r in rs)]
    flat = [r for rs in results.values() for r in rs]
    _, detail = _summary(flat)
    detail = f"{len(results)} identities, {detail}"
    if failing:
        detail += f", failing {', '.join(failing)}"
    _record(10, "auxiliary table integrals", not failing, detail, seconds)


def _verify_command():
    exe = shutil.which("verify")
    return [exe] if exe else [sys.executable, "-m", "lorentzcoulomb.cli"]


def test_criterion_11_cli_contract(tmp_path):
    start = time.perf_counter()
    full = tmp_path / "full"
    done = subprocess.run(_verify_command() + ["--out", str(full)], capture_output=True, text=True, timeout=300)
    full_seconds = time.perf_counter() - start
    schema = json.loads(resources.files("lorentzcoulomb").joinpath("report.schema.json").read_text())
    report = json.loads((full / f"{REPORT_STEM}.json").read_text())
    jsonschema.validate(report, schema)
    with open(full / f"{REPORT_STEM}.csv", newline="") as fh:
        rows = list(csv.reader(fh))
    default_ok = done.returncode == 0 and tuple(rows[0]) == CSV_FIELDS and len(rows) - 1 == len(report)

    filtered = tmp_path / "thm3"
    code = subprocess.run(_verify_command() + ["--check", "THM3", "--out", str(filtered)], capture_output=True).returncode
    with open(filtered / f"{REPORT_STEM}.csv", newline="") as fh:
        ids = {r[0] for r in list(csv.reader(fh))[1:]}
    filter_ok = code == 0 and ids == {"THM3"}

    corrupt = tmp_path / "corrupt.ini"
    corrupt.write_text("[THM1\npoints = sigma=oops\n")
    corrupt_code = subprocess.run(
        _verify_command() + ["--config", str(corrupt), "--out", str(tmp_path)], capture_output=True
    ).returncode

    seconds = time.perf_counter() - start
    ok = default_ok and filter_ok and corrupt_code == 2 and full_seconds <= 300
    detail = (
        f"default run exit {done.returncode} with {len(report)} rows in {full_seconds:.1f} s, "
        f"--check THM3 rows {sorted(ids)}, corrupt config exit {corrupt_code}"
    )
    _record(11, "CLI contract", ok, detail, seconds)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
