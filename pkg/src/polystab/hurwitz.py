"""Hurwitz matrices and their leading principal minors.

For p(s) = s^n + a1 s^(n-1) + ... + an the i-th Hurwitz minor delta_i is
the determinant of the i x i matrix whose entry at (row r, column c),
1-based, is a_{2c-r}, with a0 = 1 and a_k = 0 for k < 0 or k > n:

    [ a1  a3  a5  ... ]
    [ 1   a2  a4  ... ]
    [ 0   a1  a3  ... ]
    [ 0   1   a2  ... ]

Three independent routes to the fourth minor are provided and must agree:
the determinant itself, an eleven-term polynomial expansion of it, and a
factored form built from delta_2 and the two products a5 - a1*a4 and
a7 - a1*a6.  The factored form is the cheapest and is what the decision
procedures use; the agreement of all three is enforced by the test suite
as an executable identity.

Exact determinants run fraction-free Bareiss elimination on an integer
rescaling of the matrix; a direct cofactor expansion is kept as an
in-repo cross-check.  Float determinants use partially pivoted Gaussian
elimination.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import IndexOutOfRange
from .poly import Polynomial, Scalar


@dataclass(frozen=True)
class HurwitzMinorSet:
    """All minors delta_1..delta_n of one polynomial, in order."""

    values: tuple[Scalar, ...]
    exact: bool


def hurwitz_matrix(p: Polynomial, i: int) -> list[list[Scalar]]:
    """The leading i x i block of the Hurwitz matrix of p.

    Raises IndexOutOfRange unless 1 <= i <= degree; the full criterion
    only quantifies minors up to the degree.
    """
    if i < 1 or i > p.degree:
        raise IndexOutOfRange(f"minor index {i} outside 1..{p.degree}")
    return [[p.coeff(2 * (c + 1) - (r + 1)) for c in range(i)] for r in range(i)]


def det_cofactor(rows: list[list[Scalar]]) -> Scalar:
    """Determinant by Laplace expansion along the first row.

    Exponential in the size, so only used as an independent cross-check
    for the small minors that the closed forms cover.
    """
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for c in range(n):
        if rows[0][c] == 0:
            continue
        sub = [row[:c] + row[c + 1:] for row in rows[1:]]
        term = rows[0][c] * det_cofactor(sub)
        total = total + term if c % 2 == 0 else total - term
    return total


def det_bareiss(rows: list[list[Scalar]]) -> Fraction:
    """Exact determinant by fraction-free Bareiss elimination.

    The matrix is rescaled to integers (multiplying every entry by the
    lcm of all denominators scales the determinant by lcm**n), then the
    Bareiss recurrence keeps every intermediate value an integer minor,
    avoiding rational blowup.  Zero pivots are handled by row swaps.
    """
    n = len(rows)
    den = 1
    for row in rows:
        for x in row:
            den = math.lcm(den, Fraction(x).denominator)
    a = [[int(x * den) for x in row] for row in rows]

    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for r in range(k + 1, n):
            for c in range(k + 1, n):
                a[r][c] = (a[k][k] * a[r][c] - a[r][k] * a[k][c]) // prev
            a[r][k] = 0
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1], den**n)


def det_float(rows: list[list[float]]) -> float:
    """Determinant by Gaussian elimination with partial pivoting."""
    n = len(rows)
    a = [[float(x) for x in row] for row in rows]
    det = 1.0
    for k in range(n):
        piv = max(range(k, n), key=lambda r: abs(a[r][k]))
        if a[piv][k] == 0.0:
            return 0.0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for r in range(k + 1, n):
            f = a[r][k] / a[k][k]
            for c in range(k + 1, n):
                a[r][c] -= f * a[k][c]
    return det


def hurwitz_minor_det(p: Polynomial, i: int) -> Scalar:
    """delta_i of p: Bareiss in the exact domain, pivoted elimination in floats."""
    m = hurwitz_matrix(p, i)
    return det_bareiss(m) if p.exact else det_float(m)


def all_minors(p: Polynomial) -> HurwitzMinorSet:
    """delta_1..delta_n, each computed from scratch."""
    values = tuple(hurwitz_minor_det(p, i) for i in range(1, p.degree + 1))
    return HurwitzMinorSet(values=values, exact=p.exact)


def delta2(p: Polynomial) -> Scalar:
    """delta_2 = a1*a2 - a3  (a3 reads as zero below degree 3)."""
    return p.coeff(1) * p.coeff(2) - p.coeff(3)


def delta4_factored(p: Polynomial) -> Scalar:
    """The fourth minor in factored form.

    With A = a5 - a1*a4, B = a7 - a1*a6 and D = delta_2:

        delta_4 = -a2*A*D - a4*D**2 - A**2 - B*D

    Meaningful for degree >= 4; a5, a6, a7 read as zero beyond the
    degree, which for degree five kills the B term entirely.
    """
    a1, a2, a4 = p.coeff(1), p.coeff(2), p.coeff(4)
    big_a = p.coeff(5) - a1 * a4
    big_b = p.coeff(7) - a1 * p.coeff(6)
    d2 = delta2(p)
    return -a2 * big_a * d2 - a4 * d2 * d2 - big_a * big_a - big_b * d2


def delta4_expanded(p: Polynomial) -> Scalar:
    """The fourth minor as the verbatim eleven-term expansion.

    This is the first-column cofactor expansion of the 4x4 block written
    out in full; it is kept as an independent route to the same value as
    :func:`delta4_factored`.
    """
    a1, a2, a3, a4 = p.coeff(1), p.coeff(2), p.coeff(3), p.coeff(4)
    a5, a6, a7 = p.coeff(5), p.coeff(6), p.coeff(7)
    return (
        a1 * a2 * a3 * a4
        + 2 * a1 * a4 * a5
        - a1 * a2 * a2 * a5
        - a1 * a1 * a4 * a4
        - a3 * a3 * a4
        - a5 * a5
        + a2 * a3 * a5
        + a1 * a1 * a2 * a6
        - a1 * a3 * a6
        - a1 * a2 * a7
        + a3 * a7
    )
