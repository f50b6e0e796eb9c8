import math
from fractions import Fraction

import pytest

from efrac.cf_core import e_convergents
from efrac.exact_arith import Polynomial
from efrac.hermite import (
    HermiteTriple,
    LinearFormInE,
    derivative_identity_polys,
    hermite_bound,
    hermite_by_integration,
    hermite_by_recurrence,
    integral_poly_exp,
    verify_derivative_identities,
    verify_prop1,
)

x = Polynomial.x()
E = LinearFormInE.e()


def form(const, ecoef):
    return LinearFormInE(const, ecoef)


@pytest.mark.parametrize(
    "n, A, B, C",
    [
        (0, form(-1, 1), form(1, 0), form(2, -1)),
        (1, form(-3, 1), form(8, -3), form(11, -4)),
        (2, form(-19, 7), form(87, -32), form(106, -39)),
    ],
)
def test_recurrence_values(n, A, B, C):
    assert hermite_by_recurrence(n) == HermiteTriple(n, A, B, C)


def test_integral_poly_exp_examples():
    assert integral_poly_exp(Polynomial([1])) == E - 1
    assert integral_poly_exp(x * x - x) == E - 3
    assert integral_poly_exp(x) == form(1, 0)
    assert integral_poly_exp(Polynomial()).is_zero()


@pytest.mark.parametrize("n", [0, 1, 2, 5, 12])
def test_integration_matches_recurrence(n):
    assert hermite_by_integration(n) == hermite_by_recurrence(n)


def test_dual_path_to_30():
    for n in range(31):
        t = hermite_by_integration(n)
        assert t == hermite_by_recurrence(n)
        # the 1/n! lands the coefficients back in the integers
        assert t.A.is_integral() and t.B.is_integral() and t.C.is_integral()


def test_c_equals_b_minus_a_enforced():
    with pytest.raises(ValueError):
        HermiteTriple(0, E - 1, form(1, 0), E)


def test_prop1_small():
    rep = verify_prop1(2)
    assert rep.passed
    assert len(rep.rows) == 3
    t = hermite_by_recurrence(1)
    cv = e_convergents(4)
    assert (t.A, cv[3].q, cv[3].p) == (E - 3, 1, 3)
    assert hermite_by_recurrence(0).A == cv[0].q * E - cv[0].p


def test_prop1_detects_corruption(monkeypatch):
    import efrac.hermite as h

    real = h.hermite_by_recurrence

    def broken(n):
        t = real(n)
        return HermiteTriple(n, t.A + 1, t.B + 1, t.C) if n == 2 else t

    monkeypatch.setattr(h, "hermite_by_recurrence", broken)
    rep = h.verify_prop1(3)
    assert not rep.passed
    assert [r.passed for r in rep.rows] == [True, True, False, True]


def test_prop1_to_50():
    assert verify_prop1(50).passed


def test_identity_n1_by_hand():
    polys = derivative_identity_polys(1)
    lhs, f = polys["A_n + B_{n-1} + C_{n-1}"]
    # x(x-1) + x + (x-1) = x^2 + x - 1, and f + f' = x^2 - x + 2x - 1
    assert lhs == Polynomial([-1, 1, 1])
    assert f + f.derivative() == Polynomial([-1, 1, 1])
    lhs, f = polys["B_n + 2n A_n - C_{n-1}"]
    assert lhs == Polynomial([1, -3, 1, 1])
    assert f == Polynomial([0, 1, -2, 1])


@pytest.mark.parametrize("n", [1, 2, 7, 20])
def test_identities(n):
    rep = verify_derivative_identities(n)
    assert rep.passed and len(rep.rows) == 2


def test_identity_requires_positive_n():
    with pytest.raises(ValueError):
        verify_derivative_identities(0)


def test_bound_values():
    assert hermite_bound(0) == 3
    assert hermite_bound(1) == Fraction(3, 4)
    assert hermite_bound(5) == Fraction(3, 122880)


def test_bound_a5(e_bounds):
    lo, hi = e_bounds(50)
    a_lo, a_hi = hermite_by_recurrence(5).A.enclosure(lo, hi)
    assert max(abs(a_lo), abs(a_hi)) <= hermite_bound(5)


def test_bound_with_slack_to_30(e_bounds):
    lo, hi = e_bounds(300)
    err = hi - lo
    for n in range(31):
        t = hermite_by_recurrence(n)
        for f in (t.A, t.B, t.C):
            assert abs(f.at(lo)) <= hermite_bound(n) + abs(f.e_coefficient) * err


def test_sign_of_a_alternates(e_bounds):
    lo, hi = e_bounds(300)
    for n in range(31):
        a_lo, a_hi = hermite_by_recurrence(n).A.enclosure(lo, hi)
        # enclosure must not straddle zero for the sign to be certified
        sign = 1 if a_lo > 0 else -1 if a_hi < 0 else 0
        assert sign == (-1) ** n


def test_linear_form_str():
    assert str(form(-19, 7)) == "7e - 19"
    assert str(form(1, 0)) == "1"
    assert str(form(2, -1)) == "-e + 2"


def test_recurrence_is_cheap_for_large_n():
    t = hermite_by_recurrence(400)
    cv = e_convergents(3 * 400 + 1)
    assert t.A == LinearFormInE(-cv[1200].p, cv[1200].q)
    assert math.log10(cv[1200].q) > 1000
