"""Pade approximants p(z)/q(z) of e^z, normalized so q(0) = 1."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cf_core import e_convergents
from .exact_arith import Polynomial, poly_mul, solve_linear_system
from .hermite import LinearFormInE, VerificationReport


class DegreeViolation(AssertionError):
    """Integration-by-parts output exceeds the (m, n) degree bounds; indicates a bug."""


class PoleAtOne(ZeroDivisionError):
    pass


@dataclass(frozen=True)
class PadeApproximant:
    m: int
    n: int
    numerator: Polynomial
    denominator: Polynomial

    @property
    def p(self) -> Polynomial:
        return self.numerator

    @property
    def q(self) -> Polynomial:
        return self.denominator

    def degrees_ok(self) -> bool:
        dp, dq = self.numerator.degree, self.denominator.degree
        return (dp is None or dp <= self.m) and (dq is not None and dq <= self.n)

    def is_normalized(self) -> bool:
        return self.denominator.coeff(0) == 1


def exp_taylor(order: int) -> list[Fraction]:
    """Coefficients 1/k! for k < order."""
    out, f = [], 1
    for k in range(order):
        if k:
            f *= k
        out.append(Fraction(1, f))
    return out


def lemma_polynomials(r: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Return (p, q) with int_0^1 r(x) e^(zx) dx = (q(z) e^z - p(z)) / z^(k+1).

    q(z) = sum_j (-1)^j r^(j)(1) z^(k-j) and p(z) likewise with r^(j)(0).
    """
    if r.is_zero():
        raise ValueError("r must be nonzero")
    k = r.degree
    pc = [Fraction(0)] * (k + 1)
    qc = [Fraction(0)] * (k + 1)
    d = r
    for j in range(k + 1):
        sign = -1 if j % 2 else 1
        qc[k - j] = sign * d(1)
        pc[k - j] = sign * d(0)
        d = d.derivative()
    return Polynomial(pc), Polynomial(qc)


def lemma_raw(m: int, n: int) -> tuple[Polynomial, Polynomial]:
    """Unnormalized (p, q) from r(x) = x^n (x-1)^m."""
    x = Polynomial.x()
    return lemma_polynomials(x**n * (x - 1) ** m)


def pade_by_lemma(m: int, n: int) -> PadeApproximant:
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    if m == n == 0:
        one = Polynomial([1])
        return PadeApproximant(0, 0, one, one)
    p, q = lemma_raw(m, n)
    if (p.degree is not None and p.degree > m) or q.degree > n:
        raise DegreeViolation(f"type ({m},{n}): deg p = {p.degree}, deg q = {q.degree}")
    scale = q.coeff(0)  # (-1)^(m+n) (m+n)!
    return PadeApproximant(m, n, p / scale, q / scale)


def pade_by_linear_system(m: int, n: int) -> PadeApproximant:
    """Fix q(0) = 1 and solve for q_1..q_n so that the z^(m+1)..z^(m+n)
    coefficients of q(z) e^z vanish; p is q(z) e^z truncated to degree m.
    """
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    c = exp_taylor(m + n + 1)
    # row t: sum_{j=1..n} q_j c[t-j] = -c[t]
    A = [[c[t - j] if t - j >= 0 else Fraction(0) for j in range(1, n + 1)] for t in range(m + 1, m + n + 1)]
    b = [-c[t] for t in range(m + 1, m + n + 1)]
    qs = solve_linear_system(A, b) if n else []
    q = Polynomial([1, *qs])
    p = poly_mul(q, Polynomial(c[: m + 1])).truncate(m)
    return PadeApproximant(m, n, p, q)


def pade(m: int, n: int, method: str = "lemma") -> PadeApproximant:
    if method == "lemma":
        return pade_by_lemma(m, n)
    if method in ("linsolve", "linear_system"):
        return pade_by_linear_system(m, n)
    raise ValueError(f"unknown method {method!r}")


def order_of_agreement(approx: PadeApproximant, check_order: int) -> int:
    """Index of the first nonzero Taylor coefficient of q(z) e^z - p(z),
    or ``check_order`` if all coefficients below it vanish."""
    if check_order < 1:
        raise ValueError("check_order must be positive")
    c = exp_taylor(check_order)
    q = approx.denominator.coeffs
    for t in range(check_order):
        s = sum(q[j] * c[t - j] for j in range(min(t, len(q) - 1) + 1))
        if s != approx.numerator.coeff(t):
            return t
    return check_order


def uniqueness_check(a: PadeApproximant, b: PadeApproximant) -> bool:
    """True when p_a q_b - p_b q_a vanishes identically."""
    return (a.numerator * b.denominator - b.numerator * a.denominator).is_zero()


def evaluate_at_one(approx: PadeApproximant) -> Fraction:
    den = approx.denominator(1)
    if den == 0:
        raise PoleAtOne(f"q(1) = 0 for type ({approx.m},{approx.n})")
    return approx.numerator(1) / den


def integral_at_one(m: int, n: int) -> LinearFormInE:
    """int_0^1 x^n (x-1)^m e^x dx, read off the unnormalized integration-by-parts polynomials at z = 1."""
    p, q = lemma_raw(m, n)
    return LinearFormInE(-p(1), q(1))


def convergent_correspondence(N: int) -> VerificationReport:
    """Check r_{n,n}(1), r_{n,n+1}(1), r_{n+1,n}(1) against the e-convergents
    of index 3n, 3n+1, 3n+2 for 0 <= n <= N, skipping the undefined p_1/q_1."""
    if N < 1:
        raise ValueError("N must be at least 1")
    cv = e_convergents(3 * N + 3)
    report = VerificationReport(f"correspondence(N={N})")
    for n in range(N + 1):
        for (m_, n_), idx in (((n, n), 3 * n), ((n, n + 1), 3 * n + 1), ((n + 1, n), 3 * n + 2)):
            pair = cv[idx]
            if not pair.evaluable:
                continue
            got = evaluate_at_one(pade_by_lemma(m_, n_))
            want = pair.value()
            report.add(f"r_{{{m_},{n_}}}(1) = p_{idx}/q_{idx}", got == want, f"{got} vs {want}")
    return report
