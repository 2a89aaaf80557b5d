"""Seeded randomized property checks, runnable on demand.

Three properties are exercised over one stream of exact rational
polynomials (mixed positive / signed / stable-by-construction):

  delta4_triple      the factored and expanded closed forms and the
                     Bareiss determinant of the fourth minor agree
                     bit-exactly (degree >= 4);
  oracle_agreement   the algebraic verdict in floats matches the root
                     oracle's classification whenever the oracle is
                     determinate at the given margin;
  corollary_soundness  whenever one of the instability rules certifies a
                     sample (degree >= 5), the oracle never calls it
                     Stable.

Output is a plain data structure with no timing or environment content,
so identical (count, degrees, seed, margin) produce identical reports.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import criteria, hurwitz, roots, sampling
from .criteria import Verdict
from .poly import Polynomial, scalar_to_text, to_float
from .roots import Classification


@dataclass
class FuzzCheck:
    checked: int = 0
    failures: int = 0


@dataclass(frozen=True)
class Counterexample:
    property: str
    degree: int
    coeffs: tuple[str, ...]
    detail: str


@dataclass
class FuzzReport:
    count: int
    degree_lo: int
    degree_hi: int
    seed: int
    margin: float
    checks: dict[str, FuzzCheck] = field(default_factory=dict)
    counterexamples: list[Counterexample] = field(default_factory=list)
    verdict_counts: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.failures == 0 for c in self.checks.values())


def _exact_coeff_strings(p: Polynomial) -> tuple[str, ...]:
    return tuple(scalar_to_text(c) for c in p.coeffs)


def run_fuzz(
    count: int,
    degree_lo: int = 5,
    degree_hi: int = 9,
    seed: int = 0,
    margin: float = 1e-8,
) -> FuzzReport:
    """Draw `count` samples and run every applicable property on each."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if not 1 <= degree_lo <= degree_hi:
        raise ValueError(f"bad degree range {degree_lo}..{degree_hi}")
    report = FuzzReport(count, degree_lo, degree_hi, seed, margin)
    triple = report.checks["delta4_triple"] = FuzzCheck()
    agreement = report.checks["oracle_agreement"] = FuzzCheck()
    soundness = report.checks["corollary_soundness"] = FuzzCheck()
    verdicts = {Verdict.STABLE.value: 0, Verdict.NOT_STABLE.value: 0}

    rng = random.Random(seed)
    samples = [
        sampling.mixed_polynomial(rng, rng.randint(degree_lo, degree_hi))
        for _ in range(count)
    ]
    float_samples = [to_float(p) for p in samples]
    reports = roots.find_roots_many(float_samples, margin=margin)

    for p, pf, oracle in zip(samples, float_samples, reports):
        if p.degree >= 4:
            triple.checked += 1
            factored = hurwitz.delta4_factored(p)
            expanded = hurwitz.delta4_expanded(p)
            determinant = hurwitz.hurwitz_minor_det(p, 4)
            if not (factored == expanded == determinant):
                triple.failures += 1
                if len(report.counterexamples) < 10:
                    report.counterexamples.append(
                        Counterexample(
                            "delta4_triple",
                            p.degree,
                            _exact_coeff_strings(p),
                            f"factored={factored} expanded={expanded} "
                            f"determinant={determinant}",
                        )
                    )

        verdict = criteria.lienard_chipart(pf)
        verdicts[verdict.status.value] += 1
        if oracle.classification is not Classification.INDETERMINATE:
            agreement.checked += 1
            oracle_stable = oracle.classification is Classification.STABLE
            if oracle_stable != verdict.stable:
                agreement.failures += 1
                if len(report.counterexamples) < 10:
                    report.counterexamples.append(
                        Counterexample(
                            "oracle_agreement",
                            p.degree,
                            _exact_coeff_strings(p),
                            f"verdict={verdict.status.value} "
                            f"oracle={oracle.classification.value} "
                            f"max_real_part={oracle.max_real_part!r}",
                        )
                    )

        if p.degree >= 5:
            fired = [
                rule(p)
                for rule in (
                    criteria.cor1_certificate,
                    criteria.cor2_certificate,
                    criteria.cor3_certificate,
                )
            ]
            fired = [c for c in fired if c is not None]
            if fired:
                soundness.checked += 1
                if oracle.classification is Classification.STABLE:
                    soundness.failures += 1
                    if len(report.counterexamples) < 10:
                        report.counterexamples.append(
                            Counterexample(
                                "corollary_soundness",
                                p.degree,
                                _exact_coeff_strings(p),
                                f"rules={[c.kind.value for c in fired]} "
                                f"oracle=Stable "
                                f"max_real_part={oracle.max_real_part!r}",
                            )
                        )

    report.verdict_counts = verdicts
    return report
