"""Durand-Kerner simultaneous root iteration, the closed-form-independent oracle.

Deliberately self-contained: it shares no code with the closed-form
solvers so that agreement between the two is meaningful evidence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

_INITIAL_BASE = 0.4 + 0.9j


@dataclass(frozen=True)
class OracleConfig:
    """Iteration budget and relative step threshold for convergence."""

    max_iterations: int = 500
    convergence_tol: float = 1e-14

    def __post_init__(self) -> None:
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")
        if not self.convergence_tol > 0.0:
            raise ValueError("convergence_tol must be positive")


class NonConvergenceError(RuntimeError):
    """The iteration budget ran out before the step tolerance was met.

    Carries the best estimates so callers can report them; typical only
    near multiple roots, where simultaneous iteration slows to a crawl.
    """

    def __init__(self, iterations: int, estimates: list[complex]):
        super().__init__(
            f"root iteration did not converge within {iterations} iterations"
        )
        self.iterations = iterations
        self.estimates = estimates


def durand_kerner(
    coefficients: Sequence[float], config: OracleConfig | None = None
) -> list[complex]:
    """All roots of a degree-2 or degree-3 real polynomial, with multiplicity.

    ``coefficients`` are in descending powers.  Starting from the guesses
    (0.4 + 0.9i)**k, every estimate is repeatedly moved by the Weierstrass
    correction -f(x_k) / prod(x_k - x_j, j != k) until the largest step is
    at most ``convergence_tol * (1 + max |x_k|)``.  The result is sorted
    by descending real part, then descending imaginary part.

    Raises :class:`NonConvergenceError` when the budget is exhausted.
    """
    if config is None:
        config = OracleConfig()
    degree = len(coefficients) - 1
    if degree not in (2, 3):
        raise ValueError(f"expected a degree 2 or 3 polynomial, got degree {degree}")
    if coefficients[0] == 0:
        raise ValueError("leading coefficient must be nonzero")
    if not all(math.isfinite(c) for c in coefficients):
        raise ValueError("coefficients must be finite")

    leading = coefficients[0]
    monic = [c / leading for c in coefficients[1:]]
    estimates = [_INITIAL_BASE**k for k in range(degree)]

    for _ in range(config.max_iterations):
        max_step = 0.0
        for k in range(degree):
            x = estimates[k]
            denominator = 1.0 + 0.0j
            for j in range(degree):
                if j != k:
                    denominator *= x - estimates[j]
            if denominator == 0:
                # Collided estimates; nudge apart instead of dividing by zero.
                x += 1e-12 * (1.0 + abs(x)) * (1.0 + 1.0j)
                estimates[k] = x
                max_step = math.inf
                continue
            value = 1.0 + 0.0j
            for c in monic:
                value = value * x + c
            step = value / denominator
            estimates[k] = x - step
            max_step = max(max_step, abs(step))
        scale = 1.0 + max(abs(x) for x in estimates)
        if max_step <= config.convergence_tol * scale:
            return sorted(estimates, key=lambda r: (-r.real, -r.imag))
    raise NonConvergenceError(config.max_iterations, list(estimates))
