from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from efrac.cf_core import (
    CANONICAL,
    UNIT_TAIL,
    MalformedSequence,
    TermSequence,
    UndefinedConvergent,
    cf_of_rational,
    convergents,
    determinant,
    e_convergents,
    e_term,
    eval_cf,
    normalize_cf,
)


def nested(terms):
    """Brute-force a_0 + 1/(a_1 + 1/(...)), evaluated from the tail."""
    v = Fraction(terms[-1])
    for a in reversed(terms[:-1]):
        v = a + 1 / v
    return v


canonical_terms = st.tuples(
    st.integers(-50, 50), st.lists(st.integers(1, 30), max_size=15)
).map(lambda t: [t[0], *t[1]])


def test_e_terms():
    assert [e_term(i) for i in range(9)] == [1, 0, 1, 1, 2, 1, 1, 4, 1]
    assert e_term(9) == 1
    assert e_term(10) == 6
    assert e_term(16) == 10


def test_e_convergent_table():
    cv = e_convergents(9)
    assert [c.p for c in cv] == [1, 1, 2, 3, 8, 11, 19, 87, 106]
    assert [c.q for c in cv] == [1, 0, 1, 1, 3, 4, 7, 32, 39]
    assert not cv[1].evaluable


def test_split_recurrences():
    cv = e_convergents(3 * 40 + 3)
    for n in range(1, 40):
        for attr in ("p", "q"):
            g = lambda i: getattr(cv[i], attr)
            assert g(3 * n) == g(3 * n - 1) + g(3 * n - 2)
            assert g(3 * n + 1) == 2 * n * g(3 * n) + g(3 * n - 1)
            assert g(3 * n + 2) == g(3 * n + 1) + g(3 * n)


def test_single_term():
    [c] = convergents([5], 1)
    assert (c.p, c.q) == (5, 1)


def test_too_few_terms():
    with pytest.raises(ValueError):
        convergents([1, 2], 3)


@given(canonical_terms)
def test_convergents_match_nested_evaluation(terms):
    for c in convergents(terms, len(terms)):
        assert c.value() == nested(terms[: c.index + 1])


@given(canonical_terms)
def test_determinant_identity(terms):
    cv = convergents(terms, len(terms))
    for i in range(1, len(cv)):
        assert determinant(cv[i - 1], cv[i]) == (-1) ** (i - 1)


def test_determinant_on_e_sequence():
    cv = e_convergents(300)
    assert all(determinant(cv[i - 1], cv[i]) == (-1) ** (i - 1) for i in range(1, 300))


def test_e_denominators_increase():
    qs = [c.q for c in e_convergents(500)]
    assert all(q >= 1 for q in qs[2:])
    # q_2 = q_3 = 1, strict growth starts at i = 3
    assert qs[2] == qs[3] == 1
    assert all(a < b for a, b in zip(qs[3:], qs[4:]))


def test_eval_cf_examples():
    assert eval_cf([2, 1, 2, 1, 1, 4]) == Fraction(87, 32)
    assert eval_cf([1, 0, 1]) == 2
    with pytest.raises(UndefinedConvergent):
        eval_cf([1, 0])


def test_cf_of_rational_examples():
    assert cf_of_rational(3, UNIT_TAIL).terms == (2, 1)
    assert cf_of_rational(3, CANONICAL).terms == (3,)
    assert cf_of_rational(Fraction(87, 32)).terms == (2, 1, 2, 1, 1, 4)
    # the unit-tail representative of 106/39 is the one listed with the e-prefix
    assert cf_of_rational(Fraction(106, 39), UNIT_TAIL).terms == (2, 1, 2, 1, 1, 4, 1)
    assert cf_of_rational(Fraction(106, 39), CANONICAL).terms == (2, 1, 2, 1, 1, 5)


def test_cf_of_negative_rational_uses_floor():
    ts = cf_of_rational(Fraction(-7, 3))
    assert ts.terms == (-3, 1, 2)
    assert eval_cf(ts) == Fraction(-7, 3)
    assert cf_of_rational(-4, UNIT_TAIL).terms == (-5, 1)


@given(st.fractions(max_denominator=10**6))
def test_round_trip(r):
    for form in (CANONICAL, UNIT_TAIL):
        ts = cf_of_rational(r, form)
        assert eval_cf(ts) == r
        assert all(a >= 1 for a in ts.terms[1:])
    canon = cf_of_rational(r, CANONICAL).terms
    assert len(canon) == 1 or canon[-1] >= 2
    assert cf_of_rational(r, UNIT_TAIL).terms[-1] == 1


def test_normalize_examples():
    assert normalize_cf([1, 0, 1, 1, 2, 1]).terms == (2, 1, 2, 1)
    assert eval_cf([2, 1, 2, 1]) == Fraction(11, 4)
    assert normalize_cf([2, 1, 2]).terms == (2, 1, 2)
    assert normalize_cf([1, 0, 1]).terms == (2,)
    assert normalize_cf([1, 0, 1]).form == CANONICAL


def test_normalize_rejects_trailing_zero():
    with pytest.raises(MalformedSequence):
        normalize_cf([1, 2, 0])


def test_normalize_e_prefix():
    raw = [e_term(i) for i in range(30)]
    out = normalize_cf(raw)
    assert out.terms[:6] == (2, 1, 2, 1, 1, 4)
    assert eval_cf(out) == eval_cf(raw)


@given(st.lists(st.integers(0, 6), min_size=1, max_size=12))
def test_normalize_preserves_value(terms):
    # skip trailing zeros and doubled interior zeros
    if terms[-1] == 0 or any(a == b == 0 for a, b in zip(terms[1:], terms[2:])):
        return
    try:
        before = eval_cf(terms)
    except UndefinedConvergent:
        return
    assert eval_cf(normalize_cf(terms)) == before


def test_term_sequence_form_checks():
    with pytest.raises(ValueError):
        TermSequence((1, 0, 1), CANONICAL)
    assert str(TermSequence((1, 0, 1))) == "[1,0,1]"
