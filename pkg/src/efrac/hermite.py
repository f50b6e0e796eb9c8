"""The integrals A_n, B_n, C_n as exact linear forms a + b*e.

    A_n = int_0^1 x^n (x-1)^n / n! e^x dx
    B_n = int_0^1 x^(n+1) (x-1)^n / n! e^x dx
    C_n = int_0^1 x^n (x-1)^(n+1) / n! e^x dx

They are computed two ways: by the three-term recurrences from
(A_0, B_0, C_0) = (e - 1, 1, 2 - e), and by expanding the integrand and
integrating monomials against e^x. The integration path never looks at
continued-fraction convergents.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .cf_core import e_convergents
from .exact_arith import Polynomial, Scalar


@dataclass(frozen=True)
class LinearFormInE:
    """Exact value ``constant + e_coefficient * e``.

    Since e is irrational, two forms are equal iff both components are.
    """

    constant: Fraction = Fraction(0)
    e_coefficient: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "constant", Fraction(self.constant))
        object.__setattr__(self, "e_coefficient", Fraction(self.e_coefficient))

    @classmethod
    def e(cls) -> LinearFormInE:
        return cls(0, 1)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LinearFormInE(other, 0)
        if not isinstance(other, LinearFormInE):
            return NotImplemented
        return LinearFormInE(self.constant + other.constant, self.e_coefficient + other.e_coefficient)

    __radd__ = __add__

    def __neg__(self):
        return LinearFormInE(-self.constant, -self.e_coefficient)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LinearFormInE(other, 0)
        if not isinstance(other, LinearFormInE):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, c):
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        return LinearFormInE(self.constant * c, self.e_coefficient * c)

    __rmul__ = __mul__

    def __truediv__(self, c):
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        return self * (Fraction(1) / Fraction(c))

    def is_zero(self) -> bool:
        return self.constant == 0 and self.e_coefficient == 0

    def is_integral(self) -> bool:
        return self.constant.denominator == 1 and self.e_coefficient.denominator == 1

    def at(self, e_value: Scalar) -> Fraction:
        """Value with e replaced by a rational stand-in."""
        return self.constant + self.e_coefficient * Fraction(e_value)

    def enclosure(self, lo: Scalar, hi: Scalar) -> tuple[Fraction, Fraction]:
        """Exact range of the form when e is only known to lie in [lo, hi]."""
        a, b = self.at(lo), self.at(hi)
        return (a, b) if a <= b else (b, a)

    def __str__(self):
        a, b = self.constant, self.e_coefficient
        if b == 0:
            return str(a)
        eb = "e" if b == 1 else ("-e" if b == -1 else f"{b}e")
        if a == 0:
            return eb
        return f"{eb} {'-' if a < 0 else '+'} {abs(a)}"


@dataclass(frozen=True)
class HermiteTriple:
    n: int
    A: LinearFormInE
    B: LinearFormInE
    C: LinearFormInE

    def __post_init__(self):
        if self.C != self.B - self.A:
            raise ValueError(f"C_{self.n} != B_{self.n} - A_{self.n}")


def hermite_by_recurrence(n: int) -> HermiteTriple:
    if n < 0:
        raise ValueError("n must be nonnegative")
    e = LinearFormInE.e()
    A, B, C = e - 1, LinearFormInE(1, 0), 2 - e
    for k in range(1, n + 1):
        A = -B - C
        B = -2 * k * A + C
        C = B - A
    return HermiteTriple(n, A, B, C)


def monomial_integrals(k: int) -> list[LinearFormInE]:
    """I_0, ..., I_k as integer linear forms, using I_j = e - j I_{j-1}."""
    out = [LinearFormInE.e() - 1]
    for j in range(1, k + 1):
        out.append(LinearFormInE.e() - j * out[-1])
    return out


def integral_poly_exp(f: Polynomial) -> LinearFormInE:
    """Exact value of int_0^1 f(x) e^x dx."""
    if f.is_zero():
        return LinearFormInE()
    I = monomial_integrals(f.degree)
    const = sum((c * I[k].constant for k, c in enumerate(f.coeffs)), Fraction(0))
    ecoef = sum((c * I[k].e_coefficient for k, c in enumerate(f.coeffs)), Fraction(0))
    return LinearFormInE(const, ecoef)


def hermite_integrand(n: int, extra_x: int = 0, extra_xm1: int = 0) -> Polynomial:
    """x^(n+extra_x) (x-1)^(n+extra_xm1) / n!."""
    x = Polynomial.x()
    return (x ** (n + extra_x)) * ((x - 1) ** (n + extra_xm1)) / math.factorial(n)


def hermite_by_integration(n: int) -> HermiteTriple:
    if n < 0:
        raise ValueError("n must be nonnegative")
    A = integral_poly_exp(hermite_integrand(n))
    B = integral_poly_exp(hermite_integrand(n, extra_x=1))
    C = integral_poly_exp(hermite_integrand(n, extra_xm1=1))
    return HermiteTriple(n, A, B, C)


def hermite_bound(n: int) -> Fraction:
    """3 / (4^n n!), an upper bound on |A_n|, |B_n| and |C_n|.

    On [0, 1], |x(x-1)| <= 1/4, x and |x-1| are at most 1, and e^x < 3.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Fraction(3, 4**n * math.factorial(n))


@dataclass
class CheckRow:
    label: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    name: str
    rows: list[CheckRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    @property
    def n_passed(self) -> int:
        return sum(r.passed for r in self.rows)

    def add(self, label: str, passed: bool, detail: str = "") -> None:
        self.rows.append(CheckRow(label, bool(passed), detail))

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name}: {self.n_passed}/{len(self.rows)} passed {status}"

    def lines(self) -> list[str]:
        out = [f"{r.label} {'PASS' if r.passed else 'FAIL'}" + (f" {r.detail}" if r.detail else "") for r in self.rows]
        out.append(self.summary())
        return out

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "rows": [{"label": r.label, "passed": r.passed, "detail": r.detail} for r in self.rows],
        }


def verify_prop1(N: int, integration_cap: int = 30) -> VerificationReport:
    """Check A_n = q_{3n} e - p_{3n}, B_n = p_{3n+1} - q_{3n+1} e and
    C_n = p_{3n+2} - q_{3n+2} e for 0 <= n <= N.

    The recurrence path is checked for every n; for n up to
    ``integration_cap`` the integration path must also agree with it.
    """
    if N < 1:
        raise ValueError("N must be at least 1")
    cv = e_convergents(3 * N + 3)
    report = VerificationReport(f"prop1(N={N})")
    for n in range(N + 1):
        t = hermite_by_recurrence(n)
        pa, pb, pc = cv[3 * n], cv[3 * n + 1], cv[3 * n + 2]
        ok_a = t.A == LinearFormInE(-pa.p, pa.q)
        ok_b = t.B == LinearFormInE(pb.p, -pb.q)
        ok_c = t.C == LinearFormInE(pc.p, -pc.q)
        ok_int = True
        if n <= integration_cap:
            ok_int = hermite_by_integration(n) == t
        detail = f"A={t.A} (q={pa.q}, p={pa.p})"
        if n <= integration_cap:
            detail += f" integration={'agrees' if ok_int else 'DIFFERS'}"
        report.add(f"n={n}", ok_a and ok_b and ok_c and ok_int, detail)
    return report


def derivative_identity_polys(n: int) -> dict[str, tuple[Polynomial, Polynomial]]:
    """For each identity, (LHS polynomial, polynomial f with RHS = d/dx(f e^x))."""
    if n < 1:
        raise ValueError("n must be at least 1")
    x = Polynomial.x()
    fn = math.factorial(n)
    fn1 = math.factorial(n - 1)
    a_n = x**n * (x - 1) ** n / fn
    b_prev = x**n * (x - 1) ** (n - 1) / fn1
    c_prev = x ** (n - 1) * (x - 1) ** n / fn1
    b_n = x ** (n + 1) * (x - 1) ** n / fn
    c_n = x**n * (x - 1) ** (n + 1) / fn
    return {
        "A_n + B_{n-1} + C_{n-1}": (a_n + b_prev + c_prev, a_n),
        "B_n + 2n A_n - C_{n-1}": (b_n + 2 * n * a_n - c_prev, c_n),
    }


def verify_derivative_identities(n: int) -> VerificationReport:
    """Check both product-rule identities as polynomial identities.

    d/dx(f e^x) = (f + f') e^x, so each identity reduces to LHS = f + f'.
    Also checks f(0) = f(1) = 0, which is what makes the integrated
    right-hand side vanish.
    """
    report = VerificationReport(f"identities(n={n})")
    for name, (lhs, f) in derivative_identity_polys(n).items():
        same = lhs == f + f.derivative()
        boundary = f(0) == 0 and f(1) == 0
        report.add(f"n={n} {name}", same and boundary, "" if same else f"lhs={lhs} f+f'={f + f.derivative()}")
    return report
