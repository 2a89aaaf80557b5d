"""Interval polynomials: certificates and sampling over coefficient boxes.

A box assigns each coefficient a closed interval [lo_i, hi_i]; the
polynomial family is every choice of coefficients inside it.  Only the
instability rules lift to boxes, because their left-hand sides are
monotone in each coefficient over positive boxes: evaluating each at its
single worst corner bounds the whole family.  No stability claim is ever
made for a box: the equality-type sufficient rule holds on a measure-zero
slice, and the Hurwitz minors are not coefficient-monotone.

Sampling is uniform per coordinate, coefficient i drawn as
lo_i + (hi_i - lo_i) * u with u from `random.Random(seed)` in generation
order (sample by sample, coefficient by coefficient), so a summary is
reproducible from its seed alone.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction

from . import criteria
from .criteria import Certificate, CertificateKind, Verdict
from .errors import DegreeTooSmall, LengthMismatch, NonPositiveBox, ParseError
from .poly import Scalar, make_polynomial, parse_scalar

EXEMPLAR_CAP = 10


@dataclass(frozen=True)
class IntervalBox:
    """Closed per-coefficient bounds for a family of monic polynomials."""

    degree: int
    bounds: tuple[tuple[Scalar, Scalar], ...]

    def bound(self, k: int) -> tuple[Scalar, Scalar]:
        """(lo_k, hi_k), reading as (0, 0) beyond the degree."""
        if 1 <= k <= self.degree:
            return self.bounds[k - 1]
        return (Fraction(0), Fraction(0))

    @property
    def positive(self) -> bool:
        return all(lo > 0 for lo, _ in self.bounds)


@dataclass(frozen=True)
class BoxSampleSummary:
    count: int
    stable: int
    not_stable: int
    stable_exemplars: tuple[tuple[float, ...], ...]
    not_stable_exemplars: tuple[tuple[float, ...], ...]


def make_box(degree: int, bounds) -> IntervalBox:
    """Validate and build a box; the lifted rules need degree >= 5."""
    if not isinstance(degree, int) or degree < 5:
        raise DegreeTooSmall(f"interval boxes require degree >= 5, got {degree!r}")
    bounds = [tuple(b) for b in bounds]
    if len(bounds) != degree:
        raise LengthMismatch(f"expected {degree} bound pairs, got {len(bounds)}")
    checked = []
    for i, pair in enumerate(bounds, start=1):
        if len(pair) != 2:
            raise ParseError(f"bound {i} is not a [lo, hi] pair")
        lo, hi = pair
        if lo > hi:
            raise ParseError(f"bound {i} has lo > hi: [{lo}, {hi}]")
        checked.append((lo, hi))
    return IntervalBox(degree, tuple(checked))


def load_box(doc) -> IntervalBox:
    """Parse the JSON bounds document {"schema": 1, "degree": n, "bounds": [...]}.

    Values may be numbers or fraction strings; they are kept exact so the
    corner checks below are free of rounding.
    """
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise ParseError(
                f"malformed bounds JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
            ) from exc
    if not isinstance(doc, dict):
        raise ParseError("bounds document must be a JSON object")
    if doc.get("schema") != 1:
        raise ParseError(f"unsupported bounds schema {doc.get('schema')!r}")
    degree = doc.get("degree")
    bounds = doc.get("bounds")
    if not isinstance(degree, int) or not isinstance(bounds, list):
        raise ParseError("bounds document needs integer 'degree' and list 'bounds'")
    parsed = []
    for pair in bounds:
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise ParseError(f"bound entry {pair!r} is not a [lo, hi] pair")
        parsed.append((parse_scalar(pair[0], exact=True), parse_scalar(pair[1], exact=True)))
    return make_box(degree, parsed)


def _check_liftable(b: IntervalBox) -> None:
    if b.degree < 5:
        raise DegreeTooSmall(f"box rule requires degree >= 5, got {b.degree}")
    if not b.positive:
        raise NonPositiveBox("box rule requires every lower bound > 0")


def box_cor1(b: IntervalBox) -> Certificate | None:
    """Whole-family instability from the worst corner of a5 - a1*a4 and a7 - a1*a6.

    Over a positive box both expressions decrease in a1, a4, a6 and
    increase in a5, a7, so lo5 - hi1*hi4 and lo7 - hi1*hi6 are family
    minima; both nonnegative certifies every member unstable.
    """
    _check_liftable(b)
    lo5 = b.bound(5)[0]
    lo7 = b.bound(7)[0]
    hi1, hi4, hi6 = b.bound(1)[1], b.bound(4)[1], b.bound(6)[1]
    worst_a = lo5 - hi1 * hi4
    worst_b = lo7 - hi1 * hi6
    if worst_a >= 0 and worst_b >= 0:
        return Certificate(
            CertificateKind.COR1,
            (("lo5-hi1*hi4", worst_a), ("lo7-hi1*hi6", worst_b)),
        )
    return None


def box_cor3(b: IntervalBox) -> Certificate | None:
    """Whole-family instability from hi2**2 - 4*lo4 <= 0 and lo7 - hi1*hi6 >= 0."""
    _check_liftable(b)
    hi2 = b.bound(2)[1]
    lo4 = b.bound(4)[0]
    lo7 = b.bound(7)[0]
    hi1, hi6 = b.bound(1)[1], b.bound(6)[1]
    worst_disc = hi2 * hi2 - 4 * lo4
    worst_b = lo7 - hi1 * hi6
    if worst_disc <= 0 and worst_b >= 0:
        return Certificate(
            CertificateKind.COR3,
            (("hi2^2-4*lo4", worst_disc), ("lo7-hi1*hi6", worst_b)),
        )
    return None


def sample_polynomials(b: IntervalBox, count: int, seed: int):
    """The deterministic float sample stream behind :func:`box_sample_verdicts`."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    rng = random.Random(seed)
    lows = [float(lo) for lo, _ in b.bounds]
    spans = [float(hi) - float(lo) for lo, hi in b.bounds]
    for _ in range(count):
        coeffs = [lo + span * rng.random() for lo, span in zip(lows, spans)]
        yield make_polynomial(b.degree, coeffs)


def box_sample_verdicts(b: IntervalBox, count: int, seed: int) -> BoxSampleSummary:
    """Seeded uniform samples, each decided by the certificate pipeline."""
    stable = 0
    not_stable = 0
    stable_ex: list[tuple[float, ...]] = []
    not_stable_ex: list[tuple[float, ...]] = []
    for p in sample_polynomials(b, count, seed):
        verdict = criteria.analyze(p)
        if verdict.status is Verdict.STABLE:
            stable += 1
            if len(stable_ex) < EXEMPLAR_CAP:
                stable_ex.append(p.coeffs)
        else:
            not_stable += 1
            if len(not_stable_ex) < EXEMPLAR_CAP:
                not_stable_ex.append(p.coeffs)
    return BoxSampleSummary(
        count=count,
        stable=stable,
        not_stable=not_stable,
        stable_exemplars=tuple(stable_ex),
        not_stable_exemplars=tuple(not_stable_ex),
    )
