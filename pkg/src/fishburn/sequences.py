"""Closed-form evaluators, integer recurrences, and exact series expansion.

Everything is exact integer arithmetic; Python integers are unbounded, so
overflow cannot wrap.  NOTE the Fibonacci convention used throughout this
package: F(0) = F(1) = 1 (so F(5) = 8), one step ahead of the common
F(0) = 0 indexing.  `fibonacci` below is the single place that encodes it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb

from fishburn.enumeration import CapacityError
from fishburn.patterns import PatternSet


class RangeError(ValueError):
    """Raised when a closed form or identity is evaluated below its stated range."""


def fibonacci(n: int) -> int:
    """Fibonacci number with F(0) = F(1) = 1, F(n) = F(n-1) + F(n-2).

    >>> [fibonacci(n) for n in range(7)]
    [1, 1, 2, 3, 5, 8, 13]
    """
    if n < 0:
        raise ValueError("fibonacci index must be nonnegative")
    a, b = 1, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def pell(n: int) -> int:
    """Pell number with P(0) = 0, P(1) = 1, P(n) = 2 P(n-1) + P(n-2).

    >>> [pell(n) for n in range(7)]
    [0, 1, 2, 5, 12, 29, 70]
    """
    if n < 0:
        raise ValueError("pell index must be nonnegative")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, 2 * b + a
    return a


def q_value(n: int) -> int:
    """(P(n) + P(n-1) + 1) / 2 for n >= 1, with the n = 0 value defined as 1.

    P(n) + P(n-1) is always odd, so the division is exact; a parity failure
    would mean a broken recurrence and raises rather than rounding.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n == 0:
        return 1
    half, rem = divmod(pell(n) + pell(n - 1) + 1, 2)
    if rem:
        raise ArithmeticError(f"P({n}) + P({n - 1}) + 1 is odd")
    return half


class Formula(Enum):
    """Closed forms appearing as class sizes, keyed by their expression."""

    QUAD_A = "n^2 - 3n + 4"
    QUAD_B = "3n^2/2 - 13n/2 + 10"
    BINOM_PLUS_1 = "C(n,2) + 1"
    FIB_PLUS_2 = "F(n) + 2"
    FIB_NEXT_MINUS_1 = "F(n+1) - 1"
    POW_MINUS_BINOM = "2^n - C(n,2) - 1"
    PELL_Q = "(P(n) + P(n-1) + 1)/2"
    LINEAR = "n"
    FIB = "F(n)"
    POW = "2^(n-1)"


def evaluate_formula(formula: Formula, n: int) -> int | None:
    """Evaluate a closed form exactly; None where the expression is undefined
    (only 2^(n-1) at n = 0).  Range gating is the caller's business."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if formula is Formula.QUAD_A:
        return n * n - 3 * n + 4
    if formula is Formula.QUAD_B:
        return (3 * n * n - 13 * n + 20) // 2  # numerator is always even
    if formula is Formula.BINOM_PLUS_1:
        return comb(n, 2) + 1
    if formula is Formula.FIB_PLUS_2:
        return fibonacci(n) + 2
    if formula is Formula.FIB_NEXT_MINUS_1:
        return fibonacci(n + 1) - 1
    if formula is Formula.POW_MINUS_BINOM:
        return 2**n - comb(n, 2) - 1
    if formula is Formula.PELL_Q:
        return q_value(n)
    if formula is Formula.LINEAR:
        return n
    if formula is Formula.FIB:
        return fibonacci(n)
    if formula is Formula.POW:
        return 2 ** (n - 1) if n >= 1 else None
    raise TypeError(f"unknown formula {formula!r}")


@dataclass(frozen=True)
class SequenceRow:
    """One enumerated class: its pattern set, closed form, and validity range."""

    row_id: str
    patterns: PatternSet
    formula: Formula
    valid_from: int


def _row(pattern_text: str, formula: Formula, valid_from: int) -> SequenceRow:
    return SequenceRow(
        row_id=pattern_text,
        patterns=PatternSet.parse(pattern_text, fishburn=True),
        formula=formula,
        valid_from=valid_from,
    )


TABLE_ROWS: tuple[SequenceRow, ...] = (
    _row("321,1243", Formula.QUAD_A, 2),
    _row("321,2134", Formula.QUAD_A, 2),
    _row("321,1324", Formula.QUAD_B, 3),
    _row("321,1423,2143", Formula.BINOM_PLUS_1, 0),
    _row("321,3142,2143", Formula.BINOM_PLUS_1, 0),
    _row("321,2143,3124", Formula.BINOM_PLUS_1, 0),
    _row("321,2143,4123", Formula.BINOM_PLUS_1, 0),
    _row("321,1423,3124", Formula.FIB_PLUS_2, 4),
    _row("321,1423,4123", Formula.FIB_NEXT_MINUS_1, 1),
    _row("321,3124,4123", Formula.FIB_NEXT_MINUS_1, 1),
    _row("321,14253", Formula.POW_MINUS_BINOM, 1),
    _row("321,21354", Formula.POW_MINUS_BINOM, 1),
    _row("321,31452", Formula.PELL_Q, 1),
    _row("321,31524", Formula.PELL_Q, 1),
    _row("321,41523", Formula.PELL_Q, 1),
    _row("321,132", Formula.LINEAR, 1),
    _row("321,213", Formula.LINEAR, 1),
    _row("321,312", Formula.FIB, 1),
    _row("321,3142", Formula.POW, 1),
)


def eval_row(row: SequenceRow, n: int) -> int:
    """The row's closed form at n; rejects n below the stated range."""
    if n < row.valid_from:
        raise RangeError(f"row {row.row_id} is stated for n >= {row.valid_from}, got n={n}")
    value = evaluate_formula(row.formula, n)
    if value is None:
        raise RangeError(f"row {row.row_id} formula undefined at n={n}")
    return value


SERIES_CAP = 64


def _mul_trunc(a: list[int], b: tuple[int, ...], degree: int) -> list[int]:
    out = [0] * min(len(a) + len(b) - 1, degree + 1)
    for i, ai in enumerate(a):
        if ai == 0 or i > degree:
            continue
        for j, bj in enumerate(b):
            if i + j > degree:
                break
            out[i + j] += ai * bj
    return out


def fishburn_series(degree: int, *, cap: int = SERIES_CAP) -> tuple[int, ...]:
    """Coefficients c_0..c_degree of 1 + sum_{n>=1} prod_{i=1..n} (1-(1-t)^i).

    The n-th product starts at degree n, so summands beyond n = degree cannot
    contribute below the truncation and the outer sum is finite.

    >>> fishburn_series(5)
    (1, 1, 2, 5, 15, 53)
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if degree > cap:
        raise CapacityError(f"degree {degree} exceeds the series cap of {cap}")
    coeffs = [0] * (degree + 1)
    coeffs[0] = 1
    one_minus_t_power = [1]  # (1-t)^i
    product = [1]  # prod_{j<=i} (1 - (1-t)^j)
    for _ in range(degree):
        one_minus_t_power = _mul_trunc(one_minus_t_power, (1, -1), degree)
        factor = [-c for c in one_minus_t_power]
        factor[0] += 1
        product = _mul_trunc(product, tuple(factor), degree)
        for d, c in enumerate(product):
            coeffs[d] += c
    return tuple(coeffs)


class PellIdentity(Enum):
    """Exact integer identities about Pell numbers and their Q averages."""

    SUM_P = "sum P(i), i=1..n"
    SUM_Q = "sum Q(i), i=0..n"
    SUM_KP = "sum k*P(n-k), k=1..n"
    Q_PLUS_KP = "Q(n-2) + sum (k-2)P(n-k) + Q(n-k), k=3..n"
    NESTED_Q = "Q(n-1) + Q(n-2) + sum Q(n-k) + sum C(l-3,l-k) Q(n-l)"


IDENTITY_MIN_N = {
    PellIdentity.SUM_P: 1,
    PellIdentity.SUM_Q: 1,
    PellIdentity.SUM_KP: 1,
    PellIdentity.Q_PLUS_KP: 3,
    PellIdentity.NESTED_Q: 3,
}


def identity_sides(identity: PellIdentity, n: int) -> tuple[int, int]:
    """Both sides of the identity at n, the left computed by literal summation.

    The recurrences are re-unrolled locally on every call so the checker does
    not depend on any cached evaluator state.
    """
    if n < IDENTITY_MIN_N[identity]:
        raise RangeError(f"{identity.name} is stated for n >= {IDENTITY_MIN_N[identity]}, got n={n}")
    p = [0, 1]
    while len(p) < n + 2:
        p.append(2 * p[-1] + p[-2])
    q = [1]
    for i in range(1, n + 1):
        half, rem = divmod(p[i] + p[i - 1] + 1, 2)
        if rem:
            raise ArithmeticError(f"P({i}) + P({i - 1}) + 1 is odd")
        q.append(half)

    if identity is PellIdentity.SUM_P:
        return sum(p[i] for i in range(1, n + 1)), (p[n + 1] + p[n] - 1) // 2
    if identity is PellIdentity.SUM_Q:
        return sum(q[i] for i in range(n + 1)), (p[n + 1] + n + 1) // 2
    if identity is PellIdentity.SUM_KP:
        return sum(k * p[n - k] for k in range(1, n + 1)), (p[n + 1] - n - 1) // 2
    if identity is PellIdentity.Q_PLUS_KP:
        left = q[n - 2] + sum((k - 2) * p[n - k] + q[n - k] for k in range(3, n + 1))
        return left, p[n - 1]
    if identity is PellIdentity.NESTED_Q:
        left = q[n - 1] + q[n - 2]
        for k in range(3, n + 1):
            left += q[n - k]
            for l in range(k + 1, n + 1):
                left += comb(l - 3, l - k) * q[n - l]
        return left, q[n]
    raise TypeError(f"unknown identity {identity!r}")


def check_identity(identity: PellIdentity, n: int) -> bool:
    """True iff literal summation agrees with the closed right side at n."""
    left, right = identity_sides(identity, n)
    return left == right
