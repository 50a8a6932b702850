"""Finite continued fractions: convergents, evaluation, parsing, expansion.

Terms are plain integers and may be zero or negative; identity sweeps over
negative tail terms depend on that. The forward convergent recurrence

    p_i = a_i * p_{i-1} + p_{i-2}        (seeds p_{-1} = 1, p_{-2} = 0)
    q_i = a_i * q_{i-1} + q_{i-2}        (seeds q_{-1} = 0, q_{-2} = 1)

is the authoritative semantics: [a_0, ..., a_n] has the value p_n / q_n,
which exists exactly when q_n != 0. The right-to-left fold is kept as a
second, independent route for cross-checking.

Text format (a stable interface, used by the CLI):

    cf    := '[' item (sep item)* ']'
    item  := INT | INT 'x' COUNT
    sep   := ','   (the first separator may be ';' instead)

Whitespace between tokens is ignored. INT is a signed decimal integer;
COUNT is a nonnegative decimal repetition count, so "[4x3, 9]" means
"[4,4,4,9]" and a zero count contributes nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import (
    EmptyCF,
    IntermediateZero,
    ParseError,
    PerfectSquare,
    PeriodNotFound,
    UndefinedValue,
)
from .rational import Rational


@dataclass(frozen=True)
class ConvergentTable:
    """Parallel numerators p_i and denominators q_i for i = 0..n.

    Successive rows satisfy p_i*q_{i-1} - p_{i-1}*q_i = (-1)^(i+1).
    """

    p: tuple[int, ...]
    q: tuple[int, ...]

    def final(self) -> tuple[int, int]:
        return self.p[-1], self.q[-1]


@dataclass(frozen=True)
class SurdExpansion:
    """Periodic expansion of a quadratic surd: a0 followed by the minimal period."""

    a0: int
    period: tuple[int, ...]


def _require_terms(terms) -> list[int]:
    terms = list(terms)
    if not terms:
        raise EmptyCF("a continued fraction needs at least one term")
    return terms


def convergents(terms) -> ConvergentTable:
    """Full convergent table of [a_0, ..., a_n]; never rejects a zero q."""
    terms = _require_terms(terms)
    p_prev, p_prev2 = 1, 0
    q_prev, q_prev2 = 0, 1
    ps, qs = [], []
    for a in terms:
        p_prev, p_prev2 = a * p_prev + p_prev2, p_prev
        q_prev, q_prev2 = a * q_prev + q_prev2, q_prev
        ps.append(p_prev)
        qs.append(q_prev)
    return ConvergentTable(tuple(ps), tuple(qs))


def evaluate(terms) -> Rational:
    """Exact value p_n/q_n of the final convergent, reduced."""
    p, q = convergents(terms).final()
    if q == 0:
        raise UndefinedValue("final convergent denominator is zero")
    return Rational(p, q)


def eval_fold(terms) -> Rational:
    """Right-to-left fold x <- a_i + 1/x.

    Rejects any zero partial value with IntermediateZero (zero middle terms
    usually trip this even when the forward value exists). Whenever the fold
    succeeds it agrees with evaluate().
    """
    terms = _require_terms(terms)
    value = Rational(terms[-1])
    for a in reversed(terms[:-1]):
        if not value:
            raise IntermediateZero("partial value is zero before a reciprocal")
        value = value.reciprocal() + a
    return value


def expand_rational(r: Rational) -> list[int]:
    """Canonical continued fraction of r via the Euclidean algorithm.

    a_0 is the floor; every later term is >= 1 and the final term is >= 2
    unless the whole expansion is a single term, so the result is the
    unique canonical form and evaluate() inverts it exactly.
    """
    num, den = r.num, r.den
    terms = []
    while True:
        a, rem = divmod(num, den)
        terms.append(a)
        if rem == 0:
            return terms
        num, den = den, rem


def build_uniform(c: int, count: int, tail: int | None = None) -> list[int]:
    """`count` copies of c, then the tail term if given."""
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    terms = [c] * count
    if tail is not None:
        terms.append(tail)
    if not terms:
        raise EmptyCF("zero repetitions and no tail term")
    return terms


def parse_cf(text: str) -> list[int]:
    """Parse the bracketed text format into an expanded term list."""
    pos = 0
    n = len(text)

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def expect(ch: str):
        nonlocal pos
        skip_ws()
        if pos >= n or text[pos] != ch:
            raise ParseError(f"expected '{ch}'", pos)
        pos += 1

    def read_int(signed: bool) -> int:
        nonlocal pos
        skip_ws()
        start = pos
        if signed and pos < n and text[pos] in "+-":
            pos += 1
        digits = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        if pos == digits:
            raise ParseError("expected an integer", start)
        return int(text[start:pos])

    def read_item() -> list[int]:
        nonlocal pos
        value = read_int(signed=True)
        skip_ws()
        if pos < n and text[pos] == "x":
            pos += 1
            count = read_int(signed=False)
            return [value] * count
        return [value]

    expect("[")
    terms = read_item()
    first_sep = True
    while True:
        skip_ws()
        if pos >= n:
            raise ParseError("expected ',' or ']'", pos)
        ch = text[pos]
        if ch == "]":
            pos += 1
            break
        if ch == "," or (ch == ";" and first_sep):
            pos += 1
            first_sep = False
            terms.extend(read_item())
            continue
        raise ParseError("expected ',' or ']'", pos)
    skip_ws()
    if pos != n:
        raise ParseError("trailing input after ']'", pos)
    if not terms:
        raise EmptyCF("expansion produced no terms")
    return terms


def surd_cf(d: int, max_terms: int = 10_000) -> SurdExpansion:
    """Periodic continued fraction of sqrt(d) for non-square d >= 2.

    Runs the classical (P, Q) state recurrence

        P_{i+1} = a_i*Q_i - P_i,   Q_{i+1} = (d - P_{i+1}^2) / Q_i,
        a_i = floor((a0 + P_i) / Q_i)

    from (P_1, Q_1) and stops at the first repeated state, which closes
    the minimal period.
    """
    if d < 1:
        raise ValueError(f"expected a positive integer, got {d}")
    a0 = isqrt(d)
    if a0 * a0 == d:
        raise PerfectSquare(f"{d} is a perfect square")

    period: list[int] = []
    seen: dict[tuple[int, int], int] = {}
    p, q = a0, d - a0 * a0
    while (p, q) not in seen:
        if len(period) >= max_terms:
            raise PeriodNotFound(f"no period within {max_terms} terms")
        seen[(p, q)] = len(period)
        a = (a0 + p) // q
        period.append(a)
        p = a * q - p
        q = (d - p * p) // q
    start = seen[(p, q)]
    return SurdExpansion(a0, tuple(period[start:]))
