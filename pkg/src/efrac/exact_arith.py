"""Exact scalars, dense polynomials and linear solving over the rationals."""

from __future__ import annotations

import sys
from contextlib import contextmanager
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]


@contextmanager
def unlimited_int_digits():
    """Lift the interpreter's int/str conversion digit cap, where it exists."""
    getter = getattr(sys, "get_int_max_str_digits", None)
    if getter is None:
        yield
        return
    old = getter()
    sys.set_int_max_str_digits(0)
    try:
        yield
    finally:
        sys.set_int_max_str_digits(old)


class SingularMatrix(ArithmeticError):
    """Raised when elimination finds no nonzero pivot."""


class Polynomial:
    """Dense univariate polynomial with rational coefficients, ascending order.

    Trailing zeros are stripped on construction, so the zero polynomial has an
    empty coefficient tuple and ``degree`` of ``None``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def x(cls) -> Polynomial:
        return cls([0, 1])

    @classmethod
    def constant(cls, c: Scalar) -> Polynomial:
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> Polynomial:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' + mono if mono else ''}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __add__(self, other):
        other = _promote(other)
        if other is NotImplemented:
            return other
        return poly_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _promote(other)
        if other is NotImplemented:
            return other
        return poly_add(self, -other)

    def __rsub__(self, other):
        other = _promote(other)
        if other is NotImplemented:
            return other
        return poly_add(other, -self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return poly_scale(self, other)
        if isinstance(other, Polynomial):
            return poly_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return poly_scale(self, Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = Polynomial([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x: Scalar) -> Fraction:
        return poly_eval(self, x)

    def derivative(self) -> Polynomial:
        return poly_derivative(self)

    def reflect(self) -> Polynomial:
        """Return f(-x)."""
        return Polynomial(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs))

    def truncate(self, degree: int) -> Polynomial:
        return Polynomial(self.coeffs[: degree + 1])


def _promote(value):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return Polynomial([value])
    return NotImplemented


def poly_derivative(f: Polynomial) -> Polynomial:
    return Polynomial(k * c for k, c in enumerate(f.coeffs) if k)


def poly_eval(f: Polynomial, x: Scalar) -> Fraction:
    """Horner evaluation at an exact point."""
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(f.coeffs):
        acc = acc * x + c
    return acc


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    a, b = f.coeffs, g.coeffs
    if len(a) < len(b):
        a, b = b, a
    return Polynomial([c + (b[k] if k < len(b) else 0) for k, c in enumerate(a)])


def poly_scale(f: Polynomial, c: Scalar) -> Polynomial:
    c = Fraction(c)
    return Polynomial(c * a for a in f.coeffs)


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    if f.is_zero() or g.is_zero():
        return Polynomial()
    out = [Fraction(0)] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(g.coeffs):
            out[i + j] += a * b
    return Polynomial(out)


def solve_linear_system(
    A: Sequence[Sequence[Scalar]], b: Sequence[Scalar]
) -> list[Fraction]:
    """Solve ``A x = b`` exactly by Gauss-Jordan elimination.

    The pivot for each column is the first row at or below the diagonal with a
    nonzero entry, which keeps the elimination order deterministic.
    """
    n = len(A)
    if len(b) != n or any(len(row) != n for row in A):
        raise ValueError("A must be square and match the length of b")
    # augmented copy
    M = [[Fraction(v) for v in row] + [Fraction(b[i])] for i, row in enumerate(A)]

    for col in range(n):
        pivot = next((r for r in range(col, n) if M[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrix(f"no nonzero pivot in column {col}")
        if pivot != col:
            M[col], M[pivot] = M[pivot], M[col]
        inv = 1 / M[col][col]
        M[col] = [v * inv for v in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                factor = M[r][col]
                M[r] = [v - factor * w for v, w in zip(M[r], M[col])]

    return [M[i][n] for i in range(n)]
