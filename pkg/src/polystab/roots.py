"""Root-finding oracle, independent of every determinant code path.

All n roots are found simultaneously by Aberth-Ehrlich iteration:
starting from guesses on a circle of radius 1 + max|a_i| (a classical
bound containing every root), each approximation z_i moves by the Newton
step divided by 1 - N_i * sum_{j != i} 1/(z_i - z_j), which repels the
approximations from each other and gives cubic convergence on simple
roots.  A single Newton polish follows.

The kernel is vectorized over a batch of same-degree polynomials so the
property suites can check tens of thousands of samples in seconds; a
single polynomial is just a batch of one.

Verdicts produced from roots are deliberately three-valued: a maximum
real part within +-margin of the axis is Indeterminate rather than
forced into Stable/Unstable, since no float root finder can call sides
that close to the boundary.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence
from .poly import Polynomial, to_float

DEFAULT_MARGIN = 1e-8
UPDATE_TOL = 1e-13
RESIDUAL_TOL = 1e-8
MAX_ITERATIONS = 200

# Fixed irrational-multiple phase (the golden angle) rotating the initial
# circle so that symmetric root constellations do not start on top of
# their own symmetry axes.
_PHASE = 2.399963229728653


class Classification(str, enum.Enum):
    STABLE = "Stable"
    UNSTABLE = "Unstable"
    INDETERMINATE = "Indeterminate"


@dataclass(frozen=True)
class RootReport:
    """All roots of one polynomial plus the verdict derived from them."""

    roots: tuple[complex, ...]
    max_real_part: float
    classification: Classification
    residual: float
    margin: float
    iterations: int


def classify(max_real_part: float, margin: float = DEFAULT_MARGIN) -> Classification:
    """Three-way verdict from the rightmost real part."""
    if not margin > 0:
        raise ValueError(f"margin must be positive, got {margin}")
    if max_real_part < -margin:
        return Classification.STABLE
    if max_real_part > margin:
        return Classification.UNSTABLE
    return Classification.INDETERMINATE


def _coeff_rows(polys: list[Polynomial]) -> np.ndarray:
    degree = polys[0].degree
    rows = np.empty((len(polys), degree + 1), dtype=np.float64)
    rows[:, 0] = 1.0
    for r, p in enumerate(polys):
        rows[r, 1:] = p.coeffs
    return rows


def _eval_with_derivative(rows: np.ndarray, z: np.ndarray):
    p = np.ones_like(z)
    d = np.zeros_like(z)
    for j in range(1, rows.shape[1]):
        d = d * z + p
        p = p * z + rows[:, j : j + 1]
    return p, d


def _initial_guesses(rows: np.ndarray) -> np.ndarray:
    n = rows.shape[1] - 1
    radius = 1.0 + np.abs(rows[:, 1:]).max(axis=1)
    angles = 2.0 * np.pi * np.arange(n) / n + _PHASE
    return radius[:, None] * np.exp(1j * angles)[None, :]


def _aberth(rows: np.ndarray, max_iterations: int):
    """Simultaneous iteration; returns roots, per-row update-converged flag
    and per-row iteration counts."""
    batch, m = rows.shape
    n = m - 1
    z = _initial_guesses(rows)
    active = np.ones(batch, dtype=bool)
    iterations = np.zeros(batch, dtype=np.int64)
    diag = np.arange(n)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        for _ in range(max_iterations):
            if not active.any():
                break
            za = z[active]
            pv, dv = _eval_with_derivative(rows[active], za)
            newton = pv / np.where(dv == 0, 1e-300, dv)
            diff = za[:, :, None] - za[:, None, :]
            diff[:, diag, diag] = np.inf
            repel = (1.0 / diff).sum(axis=2)
            denom = 1.0 - newton * repel
            step = newton / np.where(denom == 0, 1e-300, denom)
            z[active] = za - step
            iterations[active] += 1
            rel = (np.abs(step) / (1.0 + np.abs(za))).max(axis=1)
            if (rel < UPDATE_TOL).any():
                idx = np.flatnonzero(active)
                active[idx[rel < UPDATE_TOL]] = False
    return z, ~active, iterations


def _newton_polish(rows: np.ndarray, z: np.ndarray) -> np.ndarray:
    pv, dv = _eval_with_derivative(rows, z)
    safe = np.abs(dv) > 0
    return np.where(safe, z - pv / np.where(safe, dv, 1.0), z)


def _relative_residuals(rows: np.ndarray, z: np.ndarray) -> np.ndarray:
    """|p(z)| scaled by a normwise magnitude, max over each row's roots."""
    n = rows.shape[1] - 1
    pv, _ = _eval_with_derivative(rows, z)
    scale = np.maximum(1.0, np.abs(z)) ** n
    scale *= 1.0 + np.abs(rows[:, 1:]).max(axis=1, keepdims=True)
    return (np.abs(pv) / scale).max(axis=1)


def find_roots_many(
    polys: list[Polynomial],
    margin: float = DEFAULT_MARGIN,
    max_iterations: int = MAX_ITERATIONS,
) -> list[RootReport]:
    """Root reports for a list of polynomials, batched by degree.

    Rows of equal degree run through one vectorized iteration, so the
    result for a polynomial does not depend on what else is in the list.
    Raises NoConvergence if any polynomial fails both the update
    criterion and the residual backstop.
    """
    if not margin > 0:
        raise ValueError(f"margin must be positive, got {margin}")
    floats = [to_float(p) for p in polys]
    reports: list[RootReport | None] = [None] * len(polys)
    by_degree: dict[int, list[int]] = {}
    for idx, p in enumerate(floats):
        by_degree.setdefault(p.degree, []).append(idx)

    for degree, indices in by_degree.items():
        rows = _coeff_rows([floats[i] for i in indices])
        z, update_ok, iterations = _aberth(rows, max_iterations)
        z = _newton_polish(rows, z)
        residuals = _relative_residuals(rows, z)
        # NaN residuals (blown-up rows) must count as failures too.
        bad = ~update_ok & ~(residuals < RESIDUAL_TOL)
        if bad.any():
            worst = int(np.flatnonzero(bad)[0])
            raise NoConvergence(
                f"degree-{degree} polynomial did not converge: "
                f"residual {residuals[worst]:.3e} after {max_iterations} iterations"
            )
        order = np.lexsort((z.imag, z.real), axis=-1)
        for row, idx in enumerate(indices):
            sorted_roots = z[row, order[row]]
            reports[idx] = RootReport(
                roots=tuple(complex(r) for r in sorted_roots),
                max_real_part=float(z[row].real.max()),
                classification=classify(float(z[row].real.max()), margin),
                residual=float(residuals[row]),
                margin=margin,
                iterations=int(iterations[row]),
            )
    return reports  # type: ignore[return-value]


def find_roots(
    p: Polynomial,
    margin: float = DEFAULT_MARGIN,
    max_iterations: int = MAX_ITERATIONS,
) -> RootReport:
    """All roots of one polynomial; see :func:`find_roots_many`."""
    return find_roots_many([p], margin=margin, max_iterations=max_iterations)[0]


def reconstruction_error(p: Polynomial, roots: tuple[complex, ...]) -> float:
    """Normwise relative distance between p and the monic polynomial
    rebuilt from the given roots; the end-to-end accuracy check for the
    oracle."""
    pf = to_float(p)
    rebuilt = np.real(np.poly(np.asarray(roots, dtype=np.complex128)))
    target = np.concatenate(([1.0], np.asarray(pf.coeffs, dtype=np.float64)))
    return float(np.abs(rebuilt - target).max() / np.abs(target).max())
