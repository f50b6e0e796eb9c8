"""Continued fractions: terms of e, convergents, conversion and normalization."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Literal, Sequence, Union

CANONICAL = "canonical"
UNIT_TAIL = "unit_tail"
RAW = "raw"

Form = Literal["canonical", "unit_tail", "raw"]


class UndefinedConvergent(ZeroDivisionError):
    """A convergent whose denominator q_k is zero."""


class MalformedSequence(ValueError):
    """A raw term sequence that cannot be brought to canonical form."""


@dataclass(frozen=True)
class TermSequence:
    """Finite list of partial quotients with an explicit form tag.

    RAW sequences may contain zero terms; CANONICAL and UNIT_TAIL sequences
    keep every term after the first at least 1.
    """

    terms: tuple[int, ...]
    form: Form = RAW

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(int(a) for a in self.terms))
        if self.form not in (CANONICAL, UNIT_TAIL, RAW):
            raise ValueError(f"unknown form {self.form!r}")
        if self.form != RAW and any(a < 1 for a in self.terms[1:]):
            raise ValueError(f"{self.form} sequence has a term below 1: {self.terms}")

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __getitem__(self, i):
        return self.terms[i]

    def __str__(self):
        return "[" + ",".join(str(a) for a in self.terms) + "]"


@dataclass(frozen=True)
class ConvergentPair:
    index: int
    p: int
    q: int

    @property
    def evaluable(self) -> bool:
        return self.q != 0

    def value(self) -> Fraction:
        if self.q == 0:
            raise UndefinedConvergent(f"q_{self.index} = 0, so p_{self.index}/q_{self.index} is undefined")
        return Fraction(self.p, self.q)


Terms = Union[TermSequence, Sequence[int], Callable[[int], int]]


def e_term(i: int) -> int:
    """i-th term of e = [1,0,1,1,2,1,1,4,1,...]."""
    if i < 0:
        raise ValueError("index must be nonnegative")
    k, r = divmod(i, 3)
    return 2 * k if r == 1 else 1


def iter_convergents(terms: Terms) -> Iterator[ConvergentPair]:
    """Yield (p_i, q_i) for successive i.

    ``terms`` is either a finite sequence or a callable giving the i-th term;
    a callable produces an unbounded stream.
    """
    if callable(terms):
        source = (terms(i) for i in _count())
    else:
        source = iter(terms)
    # p_{-2}, p_{-1} = 0, 1 and q_{-2}, q_{-1} = 1, 0 give p_0 = a_0, p_1 = a_0 a_1 + 1
    p0, p1 = 0, 1
    q0, q1 = 1, 0
    for i, a in enumerate(source):
        a = int(a)
        p0, p1 = p1, a * p1 + p0
        q0, q1 = q1, a * q1 + q0
        yield ConvergentPair(i, p1, q1)


def _count():
    i = 0
    while True:
        yield i
        i += 1


def convergents(terms: Terms, count: int) -> list[ConvergentPair]:
    if count < 1:
        raise ValueError("count must be positive")
    out = []
    for pair in iter_convergents(terms):
        out.append(pair)
        if len(out) == count:
            break
    if len(out) < count:
        raise ValueError(f"only {len(out)} terms available, {count} requested")
    return out


def e_convergents(count: int) -> list[ConvergentPair]:
    return convergents(e_term, count)


def eval_cf(terms: TermSequence | Sequence[int]) -> Fraction:
    """Value p_k/q_k of a finite continued fraction via the recurrence."""
    if len(terms) == 0:
        raise ValueError("empty term sequence")
    last = None
    for last in iter_convergents(terms):
        pass
    return last.value()


def cf_of_rational(r: Fraction | int, form: Form = CANONICAL) -> TermSequence:
    """Expand a rational by floor-based Euclidean steps.

    ``unit_tail`` rewrites the final term a_k as (a_k - 1, 1); for a single
    integer n this gives [n - 1, 1].
    """
    r = Fraction(r)
    num, den = r.numerator, r.denominator
    terms = []
    while True:
        a, rem = divmod(num, den)  # floor division, so later terms stay >= 1
        terms.append(a)
        if rem == 0:
            break
        num, den = den, rem
    if form == CANONICAL:
        return TermSequence(tuple(terms), CANONICAL)
    if form == UNIT_TAIL:
        # canonical expansions with more than one term end in a term >= 2
        terms[-1] -= 1
        terms.append(1)
        return TermSequence(tuple(terms), UNIT_TAIL)
    raise ValueError(f"unsupported form {form!r}")


def normalize_cf(terms: TermSequence | Sequence[int]) -> TermSequence:
    """Remove zero terms with [..., a, 0, b, ...] -> [..., a + b, ...].

    Only zeros are merged; a trailing 1 is kept, so [1,0,1,1,2,1] becomes
    [2,1,2,1]. At most ``len(terms)`` merge passes are attempted.
    """
    ts = [int(a) for a in terms]
    if not ts:
        raise MalformedSequence("empty term sequence")

    for _ in range(len(ts) + 1):
        zero = next((i for i in range(1, len(ts)) if ts[i] == 0), None)
        if zero is None:
            break
        if zero == len(ts) - 1:
            raise MalformedSequence(f"trailing zero term in {list(terms)}")
        ts[zero - 1 : zero + 2] = [ts[zero - 1] + ts[zero + 1]]
    else:
        raise MalformedSequence(f"zero merging did not terminate for {list(terms)}")

    if any(a < 0 for a in ts[1:]):
        raise MalformedSequence(f"negative partial quotient in {list(terms)}")
    return TermSequence(tuple(ts), CANONICAL)


def determinant(prev: ConvergentPair, cur: ConvergentPair) -> int:
    """p_i q_{i-1} - p_{i-1} q_i, which is (-1)^(i-1)."""
    return cur.p * prev.q - prev.p * cur.q
