"""The period-5 map (x, y) -> (y, (y+1)/x) and its action on monomials.

Monomials x^a y^b (x+1)^c (y+1)^d (x+y+1)^e are tracked by their integer
exponent vectors (a, b, c, d, e).  Composing a monomial with the map is the
linear action of a 5x5 integer matrix on exponent columns; the matrix has
order 5 and each 5th root of unity appears in its spectrum once.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .exact import ExactMatrix

__all__ = [
    "lyness_homomesy_check",
    "lyness_map",
    "lyness_matrix",
    "lyness_numeric_orbit_sum",
    "lyness_orbit",
    "lyness_orbit_sum_operator",
    "lyness_pullback",
    "monomial_value",
]

ExpVector = tuple[int, int, int, int, int]

_M_ROWS = (
    (0, -1, 0, -1, -1),
    (1, 0, 0, 0, 0),
    (0, 0, 0, 0, 1),
    (0, 1, 1, 0, 1),
    (0, 0, 0, 1, 0),
)


def lyness_matrix() -> ExactMatrix:
    """Exponent action: monomial_v o T = monomial_{M v} (column convention)."""
    return ExactMatrix.from_rows(_M_ROWS)


def _check_domain(x: Fraction, y: Fraction) -> None:
    for name, value in (
        ("x", x),
        ("y", y),
        ("x+1", x + 1),
        ("y+1", y + 1),
        ("x+y+1", x + y + 1),
    ):
        if value == 0:
            raise ValueError(f"point outside the domain: {name} = 0")


def lyness_map(x, y) -> tuple[Fraction, Fraction]:
    """One step of the recurrence; the fifth iterate is the identity."""
    x, y = Fraction(x), Fraction(y)
    _check_domain(x, y)
    return (y, (y + 1) / x)


def lyness_orbit(x, y) -> list[tuple[Fraction, Fraction]]:
    """The 5 points of the orbit through (x, y)."""
    pt = (Fraction(x), Fraction(y))
    out = [pt]
    for _ in range(4):
        pt = lyness_map(*pt)
        out.append(pt)
    return out


def lyness_pullback(v) -> ExpVector:
    """Exponent vector of monomial_v composed with the map."""
    vec = _exp_vector(v)
    return tuple(
        sum(row[j] * vec[j] for j in range(5)) for row in _M_ROWS
    )  # type: ignore[return-value]


def lyness_orbit_sum_operator() -> ExactMatrix:
    """I + M + M^2 + M^3 + M^4, the orbit-sum action on exponents."""
    m = lyness_matrix()
    total = ExactMatrix.identity(5)
    power = ExactMatrix.identity(5)
    for _ in range(4):
        power = power * m
        total = total + power
    return total


def lyness_homomesy_check(v) -> bool:
    """True iff log|monomial_v| sums to zero along every 5-orbit.

    Equivalent to the exponent orbit-sum (I + M + ... + M^4) v being zero.
    """
    vec = _exp_vector(v)
    return all(s == 0 for s in lyness_orbit_sum_operator().apply(vec))


def _exp_vector(v) -> ExpVector:
    vec = tuple(int(c) for c in v)
    if len(vec) != 5:
        raise ValueError("exponent vector must have 5 entries")
    return vec  # type: ignore[return-value]


def monomial_value(v, x, y) -> Fraction:
    """Exact value of x^a y^b (x+1)^c (y+1)^d (x+y+1)^e at a rational point."""
    a, b, c, d, e = _exp_vector(v)
    x, y = Fraction(x), Fraction(y)
    _check_domain(x, y)
    return x**a * y**b * (x + 1) ** c * (y + 1) ** d * (x + y + 1) ** e


def _log_abs(q: Fraction) -> float:
    # split numerator/denominator so huge exact values cannot overflow float
    return math.log(abs(q.numerator)) - math.log(q.denominator)


def lyness_numeric_orbit_sum(v, seed) -> float:
    """Sum of log|monomial_v| over the 5-orbit through `seed`.

    Orbit points and monomial values are exact rationals; only the final
    logarithms are floating point.  Callers compare against their own
    tolerance (the verification suite uses 1e-9).
    """
    vec = _exp_vector(v)
    return sum(_log_abs(monomial_value(vec, x, y)) for x, y in lyness_orbit(*seed))
