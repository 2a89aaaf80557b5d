"""Stability decision procedures with machine-checkable certificates.

The primary test is the Lienard-Chipart criterion: a monic polynomial
has all roots in the open left half-plane iff every coefficient is
strictly positive and every even-indexed Hurwitz minor is positive (the
odd-indexed variant and the full all-minors Routh-Hurwitz test are
equivalent and kept as cross-checks).

On top of it sit cheap certificate-producing rules.  Three prove
instability from coefficient inequalities alone (no minors beyond
delta_2), one rejects degree-five candidates failing a necessary
condition, and one proves degree-five stability from a single equality.
Every verdict carries a Certificate naming the rule that fired and the
inequality values it fired on, so a verdict can be replayed without
rerunning the pipeline.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from .errors import DegreeTooSmall, PreconditionUnmet
from .hurwitz import delta2, delta4_factored, hurwitz_minor_det
from .poly import Polynomial, Scalar, all_coeffs_positive

# Equality-type hypotheses are knife-edge in floats; matches within this
# relative tolerance are accepted, but a Stable claim is only emitted
# after delta_4 is recomputed and found positive.
FLOAT_EQ_RTOL = 1e-12


class Verdict(str, enum.Enum):
    STABLE = "Stable"
    NOT_STABLE = "NotStable"


class CertificateKind(str, enum.Enum):
    LIENARD_CHIPART_EVEN = "LienardChipartEven"
    LIENARD_CHIPART_ODD = "LienardChipartOdd"
    ROUTH_HURWITZ_FULL = "RouthHurwitzFull"
    COR1 = "Cor1"
    COR2 = "Cor2"
    COR3 = "Cor3"
    COR4_VIOLATED = "Cor4Violated"
    COR5 = "Cor5"
    COEFFICIENT_NON_POSITIVE = "CoefficientNonPositive"


Witness = tuple[str, Scalar]


@dataclass(frozen=True)
class Certificate:
    """Which rule decided, plus every inequality value that fired."""

    kind: CertificateKind
    witnesses: tuple[Witness, ...]


@dataclass(frozen=True)
class StabilityVerdict:
    status: Verdict
    certificate: Certificate

    @property
    def stable(self) -> bool:
        return self.status is Verdict.STABLE


@dataclass(frozen=True)
class GammaReport:
    """The concave quadratic controlling the sign of delta_4.

    With A = a5 - a1*a4 nonzero, gamma = delta_2 / A and

        Gamma(gamma) = -a4*gamma**2 - a2*gamma - 1

    satisfies delta_4 = Gamma * A**2 - (a7 - a1*a6) * delta_2, so a
    negative Gamma forces delta_4 below zero whenever a7 - a1*a6 >= 0.
    `defined` is False when A = 0 (gamma and big_gamma are then None);
    the discriminant a2**2 - 4*a4 is reported regardless.
    """

    defined: bool
    gamma: Optional[Scalar]
    big_gamma: Optional[Scalar]
    discriminant: Scalar


def _eq(x: Scalar, y, exact: bool) -> bool:
    if exact:
        return x == y
    return math.isclose(float(x), float(y), rel_tol=FLOAT_EQ_RTOL, abs_tol=0.0)


def _nonpositive_coefficient(p: Polynomial) -> Optional[Certificate]:
    for i, c in enumerate(p.coeffs, start=1):
        if not c > 0:
            return Certificate(
                CertificateKind.COEFFICIENT_NON_POSITIVE, ((f"a{i}", c),)
            )
    return None


def _minor(p: Polynomial, i: int) -> Scalar:
    # The factored closed form is the cheap route to delta_4.
    if i == 4:
        return delta4_factored(p)
    return hurwitz_minor_det(p, i)


def _minor_sweep(p: Polynomial, indices, kind: CertificateKind) -> StabilityVerdict:
    seen: list[Witness] = []
    for i in indices:
        value = _minor(p, i)
        if not value > 0:
            return StabilityVerdict(
                Verdict.NOT_STABLE, Certificate(kind, ((f"delta{i}", value),))
            )
        seen.append((f"delta{i}", value))
    return StabilityVerdict(Verdict.STABLE, Certificate(kind, tuple(seen)))


def lienard_chipart(p: Polynomial) -> StabilityVerdict:
    """Stable iff all coefficients positive and delta_2, delta_4, ... positive."""
    bad = _nonpositive_coefficient(p)
    if bad is not None:
        return StabilityVerdict(Verdict.NOT_STABLE, bad)
    return _minor_sweep(
        p, range(2, p.degree + 1, 2), CertificateKind.LIENARD_CHIPART_EVEN
    )


def lienard_chipart_odd(p: Polynomial) -> StabilityVerdict:
    """Stable iff all coefficients positive and delta_1, delta_3, ... positive."""
    bad = _nonpositive_coefficient(p)
    if bad is not None:
        return StabilityVerdict(Verdict.NOT_STABLE, bad)
    return _minor_sweep(
        p, range(1, p.degree + 1, 2), CertificateKind.LIENARD_CHIPART_ODD
    )


def routh_hurwitz_full(p: Polynomial) -> StabilityVerdict:
    """The unsimplified test: stable iff delta_i > 0 for every i = 1..n.

    Every minor is evaluated as a determinant, with no closed-form
    shortcut, so this is an independent route from the even-minor test.
    Coefficient positivity is implied by the minors but recorded in the
    certificate for replay.
    """
    seen: list[Witness] = []
    for i in range(1, p.degree + 1):
        value = hurwitz_minor_det(p, i)
        if not value > 0:
            return StabilityVerdict(
                Verdict.NOT_STABLE,
                Certificate(CertificateKind.ROUTH_HURWITZ_FULL, ((f"delta{i}", value),)),
            )
        seen.append((f"delta{i}", value))
    seen.extend((f"a{i}", c) for i, c in enumerate(p.coeffs, start=1))
    return StabilityVerdict(
        Verdict.STABLE, Certificate(CertificateKind.ROUTH_HURWITZ_FULL, tuple(seen))
    )


def _require_degree(p: Polynomial, at_least: int) -> None:
    if p.degree < at_least:
        raise DegreeTooSmall(
            f"rule requires degree >= {at_least}, got {p.degree}"
        )


def cor1_certificate(p: Polynomial) -> Optional[Certificate]:
    """Instability from a5 - a1*a4 >= 0 together with a7 - a1*a6 >= 0.

    Under positive coefficients and delta_2 > 0 these force delta_4 <= 0
    through the factored form (every term becomes non-positive); when
    positivity or delta_2 already fail the polynomial is unstable anyway,
    so a returned certificate is unconditionally sound for degree >= 5.
    """
    _require_degree(p, 5)
    big_a = p.coeff(5) - p.coeff(1) * p.coeff(4)
    big_b = p.coeff(7) - p.coeff(1) * p.coeff(6)
    if big_a >= 0 and big_b >= 0:
        return Certificate(
            CertificateKind.COR1, (("a5-a1*a4", big_a), ("a7-a1*a6", big_b))
        )
    return None


def cor2_certificate(p: Polynomial) -> Optional[Certificate]:
    """Instability for the family a2 = 2, a4 = 1 when a7 - a1*a6 >= 0.

    For that coefficient shape the factored delta_4 collapses to
    -(delta_2 + A)**2 - B*delta_2, which cannot be positive.  The two
    structural equalities are matched exactly in the rational domain and
    within FLOAT_EQ_RTOL in floats.
    """
    _require_degree(p, 5)
    a2, a4 = p.coeff(2), p.coeff(4)
    big_b = p.coeff(7) - p.coeff(1) * p.coeff(6)
    if _eq(a2, 2, p.exact) and _eq(a4, 1, p.exact) and big_b >= 0:
        return Certificate(
            CertificateKind.COR2, (("a2", a2), ("a4", a4), ("a7-a1*a6", big_b))
        )
    return None


def cor3_certificate(p: Polynomial) -> Optional[Certificate]:
    """Instability from a2**2 - 4*a4 <= 0 together with a7 - a1*a6 >= 0.

    A non-positive discriminant caps the quadratic of :class:`GammaReport`
    at zero, so delta_4 <= 0 whenever it is defined; when A = 0 the
    factored form gives delta_4 < 0 directly.
    """
    _require_degree(p, 5)
    disc = p.coeff(2) * p.coeff(2) - 4 * p.coeff(4)
    big_b = p.coeff(7) - p.coeff(1) * p.coeff(6)
    if disc <= 0 and big_b >= 0:
        return Certificate(
            CertificateKind.COR3, (("a2^2-4*a4", disc), ("a7-a1*a6", big_b))
        )
    return None


def gamma_report(p: Polynomial) -> GammaReport:
    """gamma, Gamma(gamma) and the discriminant; defined=False when A = 0."""
    a2, a4 = p.coeff(2), p.coeff(4)
    disc = a2 * a2 - 4 * a4
    big_a = p.coeff(5) - p.coeff(1) * a4
    if big_a == 0:
        return GammaReport(defined=False, gamma=None, big_gamma=None, discriminant=disc)
    gamma = delta2(p) / big_a
    big_gamma = -a4 * gamma * gamma - a2 * gamma - 1
    return GammaReport(defined=True, gamma=gamma, big_gamma=big_gamma, discriminant=disc)


def _cor45_hypotheses(p: Polynomial) -> Scalar:
    """Shared hypotheses of the degree-five rules; returns delta_2."""
    if p.degree != 5:
        raise PreconditionUnmet(f"rule is stated for degree 5, got {p.degree}")
    if not all_coeffs_positive(p):
        raise PreconditionUnmet("rule requires all coefficients > 0")
    d2 = delta2(p)
    if not d2 > 0:
        raise PreconditionUnmet(f"rule requires delta2 > 0, got {d2}")
    return d2


def cor4_necessary_violated(p: Polynomial) -> Optional[Certificate]:
    """Degree-five necessary condition a2**2 - 4*a4 > 0, reported when violated.

    Hypotheses (degree 5, positive coefficients, delta_2 > 0) are hard
    preconditions; a returned certificate proves instability under them.
    """
    d2 = _cor45_hypotheses(p)
    disc = p.coeff(2) * p.coeff(2) - 4 * p.coeff(4)
    if disc <= 0:
        return Certificate(
            CertificateKind.COR4_VIOLATED, (("a2^2-4*a4", disc), ("delta2", d2))
        )
    return None


def cor5_sufficient(p: Polynomial) -> Optional[Certificate]:
    """Degree-five stability when gamma sits exactly at the quadratic's vertex.

    Hypotheses: degree 5, positive coefficients, delta_2 > 0 and
    a2**2 - 4*a4 > 0 (PreconditionUnmet otherwise).  Fires iff
    A = a5 - a1*a4 is nonzero and delta_2 / A equals -a2 / (2*a4); the
    vertex value Gamma_max = (a2**2 - 4*a4) / (4*a4) is then positive and
    delta_4 = Gamma_max * A**2 > 0 follows.  In the float domain the
    equality is matched within FLOAT_EQ_RTOL and the recomputed delta_4
    must itself be positive before Stable is claimed.
    """
    d2 = _cor45_hypotheses(p)
    a2, a4 = p.coeff(2), p.coeff(4)
    disc = a2 * a2 - 4 * a4
    if not disc > 0:
        raise PreconditionUnmet(f"rule requires a2^2 - 4*a4 > 0, got {disc}")
    big_a = p.coeff(5) - p.coeff(1) * a4
    if big_a == 0:
        return None
    gamma = d2 / big_a
    vertex = -a2 / (2 * a4)
    if not _eq(gamma, vertex, p.exact):
        return None
    gamma_max = disc / (4 * a4)
    d4 = delta4_factored(p)
    if not d4 > 0:
        # A tolerance match whose delta_4 is not positive must never
        # produce a Stable claim.
        return None
    return Certificate(
        CertificateKind.COR5,
        (
            ("gamma", gamma),
            ("vertex", vertex),
            ("gamma_at_vertex", gamma_max),
            ("delta4", d4),
        ),
    )


def cor5_equivalents(p: Polynomial) -> tuple[bool, bool, bool]:
    """The vertex equality and its two algebraic reformulations.

    Returns the truth of (gamma = -a2/(2*a4),
    delta_2 = a3 - a2*a5/a4, a1 = 2*a3/a2 - a5/a4).  The three are
    equivalent, which the property suite checks.  Equality semantics are
    exact in the rational domain, FLOAT_EQ_RTOL in floats.
    """
    if p.degree != 5:
        raise PreconditionUnmet(f"rule is stated for degree 5, got {p.degree}")
    a1, a2, a3 = p.coeff(1), p.coeff(2), p.coeff(3)
    a4, a5 = p.coeff(4), p.coeff(5)
    if a2 == 0 or a4 == 0:
        raise PreconditionUnmet("a2 and a4 must be nonzero")
    big_a = a5 - a1 * a4
    if big_a == 0:
        raise PreconditionUnmet("a5 - a1*a4 must be nonzero")
    d2 = delta2(p)
    exact = p.exact
    first = _eq(d2 / big_a, -a2 / (2 * a4), exact)
    second = _eq(d2, a3 - a2 * a5 / a4, exact)
    third = _eq(a1, 2 * a3 / a2 - a5 / a4, exact)
    return (first, second, third)


def analyze(p: Polynomial) -> StabilityVerdict:
    """Certificate-priority pipeline, cheapest rule first.

    Order: coefficient positivity; the three instability rules for
    degree >= 5; the degree-five necessary condition under its
    hypotheses; the degree-five vertex sufficiency; finally the full
    even-minor sweep.  Degrees below five skip the rule stages, whose
    statements need a fifth coefficient.  The status always equals
    lienard_chipart(p).status; only the certificate records which stage
    decided first.
    """
    bad = _nonpositive_coefficient(p)
    if bad is not None:
        return StabilityVerdict(Verdict.NOT_STABLE, bad)
    if p.degree >= 5:
        for rule in (cor1_certificate, cor2_certificate, cor3_certificate):
            cert = rule(p)
            if cert is not None:
                return StabilityVerdict(Verdict.NOT_STABLE, cert)
        if p.degree == 5 and delta2(p) > 0:
            cert = cor4_necessary_violated(p)
            if cert is not None:
                return StabilityVerdict(Verdict.NOT_STABLE, cert)
            disc = p.coeff(2) * p.coeff(2) - 4 * p.coeff(4)
            if disc > 0:
                cert = cor5_sufficient(p)
                if cert is not None:
                    return StabilityVerdict(Verdict.STABLE, cert)
    return lienard_chipart(p)
