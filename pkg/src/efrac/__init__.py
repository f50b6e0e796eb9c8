"""Exact continued fractions of e, Hermite integrals and Pade approximants."""

from .cf_core import (
    ConvergentPair,
    MalformedSequence,
    TermSequence,
    UndefinedConvergent,
    cf_of_rational,
    convergents,
    e_convergents,
    e_term,
    eval_cf,
    normalize_cf,
)
from .digits import DecimalResult, DigitMismatch, benchmark, e_by_taylor, e_decimal
from .exact_arith import (
    Polynomial,
    Rational,
    SingularMatrix,
    poly_add,
    poly_derivative,
    poly_eval,
    poly_mul,
    poly_scale,
    solve_linear_system,
)
from .hermite import (
    HermiteTriple,
    LinearFormInE,
    hermite_bound,
    hermite_by_integration,
    hermite_by_recurrence,
    integral_poly_exp,
    verify_derivative_identities,
    verify_prop1,
)
from .pade import (
    DegreeViolation,
    PadeApproximant,
    PoleAtOne,
    convergent_correspondence,
    evaluate_at_one,
    lemma_polynomials,
    order_of_agreement,
    pade_by_lemma,
    pade_by_linear_system,
    uniqueness_check,
)

__version__ = "0.1.0"
