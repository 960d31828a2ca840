import cmath
import math


def rel_err(got, want):
    got, want = complex(got), complex(want)
    if want == 0:
        return abs(got)
    return abs(got - want) / abs(want)


def close(got, want, rel=1e-9):
    err = rel_err(got, want)
    assert err <= rel, f"{got!r} vs {want!r}: relative error {err:.3e}"


__all__ = ["close", "rel_err", "ACCEPTANCE"]


# criterion number -> (title, passed, detail, seconds), filled by test_acceptance
ACCEPTANCE: dict[int, tuple[str, bool, str, float]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, passed, detail, seconds = ACCEPTANCE[number]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] {number:>2}. {title}: {detail} ({seconds:.1f} s)")
