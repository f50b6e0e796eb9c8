"""Correctly rounded decimal digits of e with certified error bounds.

Two independent methods share one rendering routine:

* ``cf``: the convergent p_{3n}/q_{3n} of [1,0,1,1,2,1,...], whose error is
  |A_n| / q_{3n} <= 3 / (4^n n! q_{3n}).
* ``taylor``: the partial sum of 1/k! for k <= N, whose tail is below
  3 / (N+1)!.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .cf_core import e_term
from .exact_arith import unlimited_int_digits
from .hermite import hermite_bound

INITIAL_GUARD = 5


class DigitMismatch(AssertionError):
    """The two digit methods disagree; signals a correctness bug."""


@dataclass(frozen=True)
class DecimalResult:
    digits: str
    terms_used: int
    bound: Fraction
    truncated: str
    method: str = ""
    guard_digits: int = INITIAL_GUARD

    @property
    def fractional_digits(self) -> int:
        return len(self.digits.split(".", 1)[1])


@dataclass
class BenchmarkRecord:
    method: str
    terms: int
    seconds: float
    digits_agreed: int


@dataclass
class BenchmarkReport:
    digits: int
    records: list[BenchmarkRecord] = field(default_factory=list)


def _format(scaled: int, D: int) -> str:
    ip, fp = divmod(scaled, 10**D)
    with unlimited_int_digits():
        return f"{ip}.{fp:0{D}d}"


def _render(num: int, den: int, eps: Fraction, D: int, G: int):
    """Round e to D places given |e - num/den| <= eps, eps * 10^(D+G) < 1.

    Returns (rounded, truncated) scaled integers, or None when G guard digits
    cannot decide either of them.
    """
    scale = 10 ** (D + G)
    T = num * scale // den
    # e * 10^(D+G) lies strictly inside (T - 1, T + 2)
    unit = 10**G
    half = unit // 2
    lo_t, hi_t = (T - 1) // unit, (T + 2) // unit
    lo_r, hi_r = (T - 1 + half) // unit, (T + 2 + half) // unit
    if lo_t != hi_t or lo_r != hi_r:
        return None
    return lo_r, lo_t


def _finish(num: int, den: int, eps: Fraction, D: int, G: int, terms: int, method: str) -> DecimalResult:
    rounded, truncated = _render(num, den, eps, D, G)
    x = Fraction(num, den)
    bound = eps + abs(x - Fraction(rounded, 10**D))
    assert bound < Fraction(1, 10**D)
    return DecimalResult(_format(rounded, D), terms, bound, _format(truncated, D), method, G)


def cf_depth(D: int, G: int) -> tuple[int, int, int]:
    """Smallest n with 3 / (4^n n! q_{3n}) < 10^-(D+G); returns (n, p_{3n}, q_{3n})."""
    target = 3 * 10 ** (D + G)
    p0, p1, q0, q1 = 0, 1, 1, 0
    i = 0
    n = 0
    weight = 1  # 4^n n!
    while True:
        # advance the convergent recurrence to index 3n
        while i <= 3 * n:
            a = e_term(i)
            p0, p1 = p1, a * p1 + p0
            q0, q1 = q1, a * q1 + q0
            i += 1
        if weight * q1 > target:
            return n, p1, q1
        n += 1
        weight *= 4 * n


def e_decimal(D: int) -> DecimalResult:
    """e to D places from the convergents p_{3n}/q_{3n}."""
    if D < 1:
        raise ValueError("D must be at least 1")
    G = INITIAL_GUARD
    while True:
        n, p, q = cf_depth(D, G)
        eps = hermite_bound(n) / q
        if _render(p, q, eps, D, G) is not None:
            return _finish(p, q, eps, D, G, n, "cf")
        G *= 2


def taylor_depth(D: int, G: int) -> tuple[int, int, int]:
    """Smallest N with 3/(N+1)! < 10^-(D+G); returns (N, N! * S_N, N!)."""
    target = 3 * 10 ** (D + G)
    N, fact, num = 0, 1, 1  # S_0 = 1
    while fact * (N + 1) <= target:
        N += 1
        fact *= N
        num = num * N + 1
    return N, num, fact


def e_by_taylor(D: int) -> DecimalResult:
    """e to D places from the partial sums of sum 1/k!."""
    if D < 1:
        raise ValueError("D must be at least 1")
    G = INITIAL_GUARD
    while True:
        N, num, den = taylor_depth(D, G)
        eps = Fraction(3, den * (N + 1))
        if _render(num, den, eps, D, G) is not None:
            return _finish(num, den, eps, D, G, N, "taylor")
        G *= 2


METHODS = {"cf": e_decimal, "taylor": e_by_taylor}


def _agreement(a: str, b: str) -> int:
    fa, fb = a.split(".", 1)[1], b.split(".", 1)[1]
    if a.split(".", 1)[0] != b.split(".", 1)[0]:
        return 0
    k = 0
    while k < min(len(fa), len(fb)) and fa[k] == fb[k]:
        k += 1
    return k


def benchmark(D: int) -> BenchmarkReport:
    """Time both methods at D digits; raise DigitMismatch if they differ."""
    results = {}
    times = {}
    for name, fn in METHODS.items():
        t0 = time.perf_counter()
        results[name] = fn(D)
        times[name] = time.perf_counter() - t0
    ref = results["taylor"].digits
    report = BenchmarkReport(D)
    for name, res in results.items():
        report.records.append(BenchmarkRecord(name, res.terms_used, times[name], _agreement(res.digits, ref)))
    if results["cf"].digits != ref:
        raise DigitMismatch(f"cf and taylor disagree after {report.records[0].digits_agreed} digits")
    return report
