"""Monic real polynomials over two coefficient domains.

A polynomial of degree n is stored as the ordered coefficient tuple
(a1, ..., an) of

    p(s) = s^n + a1 s^(n-1) + ... + an

The leading coefficient is implicitly 1 and never stored.  Coefficients
live either in the exact domain (`fractions.Fraction`, always in lowest
terms with positive denominator) or in the float domain (IEEE doubles);
a polynomial is entirely in one domain.  Exact arithmetic is used
wherever determinant identities are asserted bit-exactly, floats
wherever root finding is involved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import LengthMismatch, NonFiniteCoefficient, ParseError

Scalar = Union[Fraction, float]


@dataclass(frozen=True)
class Polynomial:
    """Immutable monic polynomial; build through :func:`make_polynomial`."""

    degree: int
    coeffs: tuple[Scalar, ...]

    @property
    def exact(self) -> bool:
        """True in the exact-rational domain, False in the float domain."""
        return isinstance(self.coeffs[0], Fraction)

    def coeff(self, k: int) -> Scalar:
        """a_k extended by a_0 = 1 and a_k = 0 for k < 0 or k > degree.

        The extension is what the Hurwitz matrix definition requires, so
        reading past the degree is deliberately not an error.
        """
        if 1 <= k <= self.degree:
            return self.coeffs[k - 1]
        if self.exact:
            return Fraction(1) if k == 0 else Fraction(0)
        return 1.0 if k == 0 else 0.0

    def __call__(self, x):
        """Evaluate p(x) by Horner's rule (Fraction, float or complex x)."""
        acc = 1
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        parts = [f"s^{self.degree}" if self.degree > 1 else "s"]
        for i, c in enumerate(self.coeffs, start=1):
            power = self.degree - i
            term = "" if power == 0 else (" s" if power == 1 else f" s^{power}")
            parts.append(f"{c}{term}")
        return " + ".join(parts)


def make_polynomial(degree: int, coeffs) -> Polynomial:
    """Validate and build a monic polynomial from its trailing coefficients.

    `coeffs` holds (a1, ..., an).  Integers and Fractions give an exact
    polynomial; the presence of any float switches the whole polynomial
    to the float domain.  Raises LengthMismatch when the list length is
    not `degree`, NonFiniteCoefficient for NaN or infinite floats.
    """
    if not isinstance(degree, int) or degree < 1:
        raise ValueError(f"degree must be a positive integer, got {degree!r}")
    coeffs = list(coeffs)
    if len(coeffs) != degree:
        raise LengthMismatch(
            f"expected {degree} coefficients, got {len(coeffs)}"
        )
    if any(isinstance(c, float) for c in coeffs):
        out = []
        for c in coeffs:
            c = float(c)
            if not math.isfinite(c):
                raise NonFiniteCoefficient(f"coefficient {c!r} is not finite")
            out.append(c)
        return Polynomial(degree, tuple(out))
    return Polynomial(degree, tuple(Fraction(c) for c in coeffs))


def to_float(p: Polynomial) -> Polynomial:
    """Convert to the float domain by nearest-rounding each coefficient."""
    if not p.exact:
        return p
    out = []
    for c in p.coeffs:
        try:
            f = float(c)
        except OverflowError as exc:
            raise NonFiniteCoefficient(f"coefficient {c} overflows a double") from exc
        if not math.isfinite(f):
            raise NonFiniteCoefficient(f"coefficient {c} overflows a double")
        out.append(f)
    return Polynomial(p.degree, tuple(out))


def all_coeffs_positive(p: Polynomial) -> bool:
    """True iff every stored coefficient is strictly positive."""
    return all(c > 0 for c in p.coeffs)


def monic_from_leading(leading: Scalar, coeffs, exact: bool = True) -> Polynomial:
    """Normalize a general polynomial by dividing through its leading coefficient."""
    if leading == 0:
        raise ParseError("leading coefficient must be nonzero")
    if exact:
        lead = Fraction(leading)
        scaled = [Fraction(c) / lead for c in coeffs]
    else:
        lead = float(leading)
        scaled = [float(c) / lead for c in coeffs]
    return make_polynomial(len(scaled), scaled)


def parse_scalar(value, exact: bool) -> Scalar:
    """Parse one coefficient from user input.

    Accepts ints, floats, decimal strings ("0.5", "1e-3") and fraction
    strings ("9/4").  In the exact domain, numeric values are read by
    their decimal representation, so 0.1 means 1/10.
    """
    try:
        if exact:
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            return Fraction(str(value).strip())
        if isinstance(value, str) and "/" in value:
            return float(Fraction(value.strip()))
        return float(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"cannot parse coefficient {value!r}") from exc


def scalar_to_json(x: Scalar):
    """Wire form of a scalar: "num/den" string when exact, number otherwise."""
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return x


def scalar_to_text(x: Scalar) -> str:
    """Human form: lowest-terms fraction without a trailing /1, repr for floats."""
    if isinstance(x, Fraction):
        return str(x)
    return repr(x)
