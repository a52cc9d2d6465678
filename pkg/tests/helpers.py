"""Shared numeric helpers for the test suite."""

from __future__ import annotations

import itertools
import math
import random
from typing import Iterable, Sequence

from feroots import Cubic, inflection_point, reduced_invariants


def canonical(roots: Iterable[complex]) -> list[complex]:
    """Descending real part, ties broken by descending imaginary part."""
    return sorted(roots, key=lambda r: (-r.real, -r.imag))


def within_ulps(x: float, y: float, n: float, scale: float | None = None) -> bool:
    """True when x and y differ by at most n ulps at the given scale.

    The default scale is the larger magnitude of the two values; passing
    an explicit scale makes the comparison cancellation-aware (a
    difference of large terms is only accurate to ulps of those terms).
    """
    if x == y:
        return True
    if scale is None:
        scale = max(abs(x), abs(y))
    return abs(x - y) <= n * math.ulp(scale)


def close_rel(x: complex, y: complex, tol: float) -> bool:
    """|x - y| within tol relative to the larger magnitude, floored at 1."""
    return abs(x - y) <= tol * max(1.0, abs(x), abs(y))


def matched_roots(
    lhs: Sequence[complex], rhs: Sequence[complex]
) -> list[tuple[complex, complex]]:
    """Pair two root multisets by the permutation minimizing the worst gap.

    Canonical sorting alone can mispair conjugate partners whose real
    parts differ only by rounding noise; with at most three roots, trying
    every permutation is cheap and robust.
    """
    left = list(lhs)
    best: list[tuple[complex, complex]] | None = None
    best_cost = math.inf
    for ordering in itertools.permutations(rhs):
        cost = max(abs(l - r) for l, r in zip(left, ordering))
        if cost < best_cost:
            best_cost = cost
            best = list(zip(left, ordering))
    assert best is not None
    return best


def roots_close(lhs: Sequence[complex], rhs: Sequence[complex], tol: float) -> bool:
    """Matched root multisets agree to a relative tolerance (floored at 1)."""
    return all(close_rel(left, right, tol) for left, right in matched_roots(lhs, rhs))


def max_root_distance(lhs: Sequence[complex], rhs: Sequence[complex]) -> float:
    return max(abs(left - right) for left, right in matched_roots(lhs, rhs))


def random_cubics(count: int, seed: int, bound: float = 1e3) -> list[Cubic]:
    """Cubics with coefficients uniform in [-bound, bound], nonzero leading."""
    rng = random.Random(seed)
    result: list[Cubic] = []
    while len(result) < count:
        a = rng.uniform(-bound, bound)
        if a == 0.0:
            continue
        result.append(
            Cubic(
                a,
                rng.uniform(-bound, bound),
                rng.uniform(-bound, bound),
                rng.uniform(-bound, bound),
            )
        )
    return result


def discriminant_margin(cubic: Cubic) -> float:
    """|D| relative to |Q|**3 + R**2; small means a near-degenerate cubic."""
    invariants = reduced_invariants(inflection_point(cubic))
    return abs(invariants.D) / (abs(invariants.Q) ** 3 + invariants.R**2 + 1e-300)


def power_sum_eval(coeffs_desc: Sequence[float], x: float) -> float:
    """Term-by-term power summation; the non-Horner evaluation oracle."""
    degree = len(coeffs_desc) - 1
    return math.fsum(c * x ** (degree - k) for k, c in enumerate(coeffs_desc))


def root_conditioning(cubic: Cubic, roots: Sequence[complex]) -> float:
    """Worst amplification of half-ulp coefficient noise, at root-set scale.

    For each root x the evaluation noise floor is about eps times the sum
    of term magnitudes, and Newton-style sensitivity divides it by |f'(x)|.
    Values around 1 mean coefficient rounding moves roots by about one ulp
    of the largest root.
    """
    set_scale = max(abs(r) for r in roots)
    worst = 0.0
    for x in roots:
        terms = (
            abs(cubic.a * x**3) + abs(cubic.b * x**2) + abs(cubic.c * x) + abs(cubic.d)
        )
        slope = abs((3.0 * cubic.a * x + 2.0 * cubic.b) * x + cubic.c)
        if slope == 0.0:
            return math.inf
        worst = max(worst, terms / (slope * max(set_scale, 1e-300)))
    return worst
