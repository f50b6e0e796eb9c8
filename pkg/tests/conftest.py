from collections import defaultdict
from fractions import Fraction
from functools import lru_cache

import pytest


@lru_cache(maxsize=None)
def e_enclosure(digits: int) -> tuple[Fraction, Fraction]:
    """Rational lo < e < hi with hi - lo < 10^-digits.

    Partial sums of 1/k! from below; the tail after 1/N! is below 2/(N+1)!.
    Kept independent of the package's digit routines.
    """
    s, term, k = Fraction(1), Fraction(1), 0
    tol = Fraction(1, 10**digits)
    while True:
        k += 1
        term /= k
        s += term
        tail = 2 * term / (k + 1)
        if tail < tol:
            return s, s + tail


@pytest.fixture
def e_bounds():
    return e_enclosure


_criteria = defaultdict(list)


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for name, args in getattr(report, "acceptance", ()):
        _criteria[args].append((report.nodeid.split("::")[-1], report.passed))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marks = [m for m in item.iter_markers(name="acceptance")]
    rep.acceptance = [("acceptance", m.args[0]) for m in marks]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        results = _criteria[num]
        ok = all(p for _, p in results)
        names = ", ".join(n for n, _ in results)
        terminalreporter.write_line(f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  ({names})")
