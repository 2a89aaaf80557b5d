"""Deterministic polynomial generators for fuzzing and property suites.

Everything here draws from an explicit `random.Random`, in a fixed
per-sample order, so any stream is reproducible from its seed.  Exact
generators produce Fraction coefficients (for bit-exact identity
checks); float generators produce log-uniform magnitudes spanning
[1e-3, 1e3].  Region generators construct samples inside the hypothesis
set of one instability/stability rule by solving its defining
inequality or equality for the last coefficient drawn.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .boxes import IntervalBox, make_box
from .poly import Polynomial, make_polynomial


def rational(rng: random.Random, lo: int = 1, hi: int = 100) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(lo, hi))


def rational_polynomial(
    rng: random.Random, degree: int, lo: int = 1, hi: int = 100, signed: bool = False
) -> Polynomial:
    coeffs = []
    for _ in range(degree):
        c = rational(rng, lo, hi)
        if signed and rng.random() < 0.5:
            c = -c
        coeffs.append(c)
    return make_polynomial(degree, coeffs)


def log_uniform(rng: random.Random, lo: float = 1e-3, hi: float = 1e3) -> float:
    return math.exp(rng.uniform(math.log(lo), math.log(hi)))


def float_polynomial(rng: random.Random, degree: int, signed: bool = False) -> Polynomial:
    coeffs = []
    for _ in range(degree):
        c = log_uniform(rng)
        if signed and rng.random() < 0.5:
            c = -c
        coeffs.append(c)
    return make_polynomial(degree, coeffs)


def _convolve(a: list, b: list) -> list:
    zero = a[0] * 0
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def stable_polynomial(rng: random.Random, degree: int, exact: bool = False) -> Polynomial:
    """Product of factors with roots in Re(s) in [-10, -0.1]; always stable.

    Linear factors (s + a) and quadratic pairs (s + sigma)^2 + omega^2
    are multiplied out; with exact=True the factor parameters are
    rationals and the product is exact.
    """
    one = Fraction(1) if exact else 1.0
    full = [one]
    remaining = degree
    while remaining > 0:
        if remaining >= 2 and rng.random() < 0.7:
            if exact:
                sigma = Fraction(rng.randint(1, 100), 10)
                omega = Fraction(rng.randint(0, 100), 10)
            else:
                sigma = rng.uniform(0.1, 10.0)
                omega = rng.uniform(0.0, 10.0)
            full = _convolve(full, [one, 2 * sigma, sigma * sigma + omega * omega])
            remaining -= 2
        else:
            a = Fraction(rng.randint(1, 100), 10) if exact else rng.uniform(0.1, 10.0)
            full = _convolve(full, [one, a])
            remaining -= 1
    return make_polynomial(degree, full[1:])


def mixed_polynomial(rng: random.Random, degree: int) -> Polynomial:
    """The fuzz workload: positive, signed, or stable-by-construction rationals."""
    u = rng.random()
    if u < 0.4:
        return rational_polynomial(rng, degree)
    if u < 0.7:
        return rational_polynomial(rng, degree, signed=True)
    return stable_polynomial(rng, degree, exact=True)


def _positive_floats(rng: random.Random, degree: int) -> list[float]:
    return [log_uniform(rng) for _ in range(degree)]


def cor1_region_polynomial(rng: random.Random, degree: int) -> Polynomial:
    """Positive coefficients with a5 >= a1*a4 and (degree >= 7) a7 >= a1*a6.

    Degree 6 is excluded by construction: there a7 reads as zero while a6
    is a positive coefficient, so the second inequality cannot hold.
    """
    if degree < 5 or degree == 6:
        raise ValueError(f"rule region needs degree 5 or >= 7, got {degree}")
    coeffs = _positive_floats(rng, degree)
    coeffs[4] = coeffs[0] * coeffs[3] * (1.0 + rng.random())
    if degree >= 7:
        coeffs[6] = coeffs[0] * coeffs[5] * (1.0 + rng.random())
    return make_polynomial(degree, coeffs)


def cor2_region_polynomial(rng: random.Random, degree: int) -> Polynomial:
    """The a2 = 2, a4 = 1 family with a7 >= a1*a6 where a7 exists."""
    if degree < 5 or degree == 6:
        raise ValueError(f"rule region needs degree 5 or >= 7, got {degree}")
    coeffs = _positive_floats(rng, degree)
    coeffs[1] = 2.0
    coeffs[3] = 1.0
    if degree >= 7:
        coeffs[6] = coeffs[0] * coeffs[5] * (1.0 + rng.random())
    return make_polynomial(degree, coeffs)


def cor3_region_polynomial(rng: random.Random, degree: int) -> Polynomial:
    """Positive coefficients with a2**2 <= 4*a4 and a7 >= a1*a6 where a7 exists."""
    if degree < 5 or degree == 6:
        raise ValueError(f"rule region needs degree 5 or >= 7, got {degree}")
    coeffs = _positive_floats(rng, degree)
    coeffs[3] = coeffs[1] * coeffs[1] / 4.0 * (1.0 + rng.random())
    if degree >= 7:
        coeffs[6] = coeffs[0] * coeffs[5] * (1.0 + rng.random())
    return make_polynomial(degree, coeffs)


def cor5_vertex_polynomial(rng: random.Random) -> Polynomial:
    """Exact degree-five sample satisfying the vertex equality.

    Free draws: a1, a2 positive rationals; a4 = q * a2**2 / 4 with
    q in (0, 1) keeps the discriminant positive; delta_2 = t * a1*a2 / 2
    with t in (0, 1) keeps a5 = a4 * (a1 - 2*delta_2/a2) positive.  Then
    a3 = a1*a2 - delta_2 and the vertex equality holds by construction.
    """
    a1 = Fraction(rng.randint(1, 20), rng.randint(1, 20))
    a2 = Fraction(rng.randint(1, 20), rng.randint(1, 20))
    a4 = a2 * a2 / 4 * Fraction(rng.randint(1, 9), 10)
    d2 = a1 * a2 / 2 * Fraction(rng.randint(1, 9), 10)
    a3 = a1 * a2 - d2
    a5 = a4 * (a1 - 2 * d2 / a2)
    return make_polynomial(5, [a1, a2, a3, a4, a5])


def narrow_band_polynomial(rng: random.Random) -> Polynomial:
    """Degree five, a4 = 1, a2 uniform in (0, 2], other coefficients positive."""
    a2 = rng.uniform(0.0, 2.0)
    if a2 == 0.0:  # keep the half-open interval
        a2 = 2.0
    return make_polynomial(
        5, [log_uniform(rng), a2, log_uniform(rng), 1.0, log_uniform(rng)]
    )


def certified_box(rng: random.Random) -> IntervalBox:
    """A random degree-5 or 7 box certified by one of the lifted rules."""
    degree = 5 if rng.random() < 0.7 else 7
    use_cor1 = rng.random() < 0.5

    def pair() -> tuple[Fraction, Fraction]:
        lo = Fraction(rng.randint(1, 50), rng.randint(1, 10))
        hi = lo + Fraction(rng.randint(0, 30), 10)
        return (lo, hi)

    bounds = [pair() for _ in range(degree)]
    if use_cor1:
        floor5 = bounds[0][1] * bounds[3][1]
        lo5 = floor5 + Fraction(rng.randint(0, 20), 10)
        bounds[4] = (lo5, lo5 + Fraction(rng.randint(0, 30), 10))
        if degree >= 7:
            floor7 = bounds[0][1] * bounds[5][1]
            lo7 = floor7 + Fraction(rng.randint(0, 20), 10)
            bounds[6] = (lo7, lo7 + Fraction(rng.randint(0, 30), 10))
    else:
        ceil2 = bounds[1][1]
        lo4 = ceil2 * ceil2 / 4 + Fraction(rng.randint(0, 20), 10)
        bounds[3] = (lo4, lo4 + Fraction(rng.randint(0, 30), 10))
        if degree >= 7:
            floor7 = bounds[0][1] * bounds[5][1]
            lo7 = floor7 + Fraction(rng.randint(0, 20), 10)
            bounds[6] = (lo7, lo7 + Fraction(rng.randint(0, 30), 10))
    return make_box(degree, bounds)
