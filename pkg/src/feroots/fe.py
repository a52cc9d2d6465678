"""Closed-form cubic solver driven entirely by the inflection-point values.

The reduction Q = f'(z)/(3a), R = -f(z)/(2a) collapses any cubic to two
numbers; the sign of the discriminant D = Q**3 + R**2 selects the solution
path:

* D < 0: three distinct real roots via the arccos/cosine formula (the
  algebraic radicals would be complex here, so cosines are used instead),
* D > 0: one real root from a pair of real cube roots plus an exact complex
  conjugate pair,
* D ~ 0: repeated roots, handled by dedicated closed forms.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable, Sequence

from .poly import (
    Cubic,
    EvalPoint,
    Quadratic,
    evaluate,
    evaluate_derivative,
    evaluate_quadratic,
    inflection_point,
)

_TWO_PI = 2.0 * math.pi
# Scale floor inside the D ~ 0 test; keeps the threshold positive for x**3.
_D_FLOOR = sys.float_info.min * 10.0
# Slack allowed on the arccos argument before clamping; anything larger
# indicates an inconsistent classification, not rounding.
_ACOS_SLACK = 1e-12

_POLISH_STEPS = 2


class Classification(Enum):
    """Root structure of a real cubic."""

    THREE_REAL_DISTINCT = "three_real_distinct"
    ONE_REAL_TWO_COMPLEX = "one_real_two_complex"
    REAL_WITH_DOUBLE = "real_with_double"
    TRIPLE_ROOT = "triple_root"


@dataclass(frozen=True)
class ReducedInvariants:
    """Q = f'(z)/(3a), R = -f(z)/(2a) and the discriminant D = Q**3 + R**2."""

    Q: float
    R: float
    D: float


@dataclass(frozen=True)
class SolveOptions:
    """Solver knobs: Newton polishing, the D ~ 0 threshold, residual target."""

    polish: bool = True
    tol_d: float = 1e-12
    residual_tol: float = 1e-10


@dataclass(frozen=True)
class RootSet:
    """Three roots with multiplicity, a classification tag and residuals.

    Real classifications carry exactly-zero imaginary parts and are ordered
    by descending real part.  For one real root plus a conjugate pair the
    real root comes first, then the pair with positive imaginary part ahead
    of its mirror; the two are exact conjugates by construction.

    ``trig_angle`` records the arccos angle used on the three-real path and
    ``real_root_offset`` the cube-root sum B with x1 = z + B on the
    one-real path; both are ``None`` when the path did not produce them.
    """

    roots: tuple[complex, complex, complex]
    classification: Classification
    residuals: tuple[float, float, float]
    trig_angle: float | None = None
    real_root_offset: float | None = None


def cbrt(x: float) -> float:
    """Real, sign-preserving cube root."""
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


def reduced_invariants(point: EvalPoint) -> ReducedInvariants:
    """Collapse an evaluation point to the two invariants and discriminant."""
    q = point.fpz / 3.0
    r = -point.fz / 2.0
    return ReducedInvariants(Q=q, R=r, D=q * q * q + r * r)


def classify(invariants: ReducedInvariants, tol_d: float = 1e-12) -> Classification:
    """Select the solution path from the sign of D.

    The D ~ 0 band is relative: D is a difference of comparable cubic and
    quadratic terms, so it is measured against |Q|**3 + R**2.
    """
    q, r, d = invariants.Q, invariants.R, invariants.D
    thresh = tol_d * (abs(q) ** 3 + r * r + _D_FLOOR)
    if d < -thresh:
        return Classification.THREE_REAL_DISTINCT
    if d > thresh:
        return Classification.ONE_REAL_TWO_COMPLEX
    if abs(q) > tol_d:
        return Classification.REAL_WITH_DOUBLE
    return Classification.TRIPLE_ROOT


def _depressed_residual(point: EvalPoint, root: complex) -> float:
    # Residual against the monic cubic the evaluation point encodes:
    # f(x)/a = (x - z)**3 + fpz*(x - z) + fz, expanded for the scale.
    z, fz, fpz = point.z, point.fz, point.fpz
    b = -3.0 * z
    c = 3.0 * z * z + fpz
    d = fz - fpz * z - z * z * z
    t = root - z
    value = (t * t + fpz) * t + fz
    scale = max(1.0, abs(b), abs(c), abs(d)) * max(1.0, abs(root)) ** 3
    return abs(value) / scale


def normalized_residual(cubic: Cubic, root: complex) -> float:
    """|f(root)| divided by the coefficient-and-magnitude scale."""
    scale = max(abs(cubic.a), abs(cubic.b), abs(cubic.c), abs(cubic.d))
    scale *= max(1.0, abs(root)) ** 3
    return abs(evaluate(cubic, root)) / scale


def _real_root_set(
    roots: Sequence[float],
    classification: Classification,
    residual_of: Callable[[complex], float],
    trig_angle: float | None = None,
) -> RootSet:
    ordered = sorted(roots, reverse=True)
    values = tuple(complex(x, 0.0) for x in ordered)
    return RootSet(
        roots=values,
        classification=classification,
        residuals=tuple(residual_of(v) for v in values),
        trig_angle=trig_angle,
    )


def solve_trig(point: EvalPoint, invariants: ReducedInvariants) -> RootSet:
    """Three distinct real roots for D < 0 via the cosine formula.

    theta = arccos(R / sqrt((-Q)**3)) and the roots are
    2*sqrt(-Q)*cos((theta + 2*pi*k)/3) + z for k = 0, 1, 2.
    """
    if invariants.Q >= 0.0:
        raise ValueError(
            "internal contract: the trigonometric path requires Q < 0, "
            f"got Q={invariants.Q!r}"
        )
    arg = invariants.R / math.sqrt((-invariants.Q) ** 3)
    # D < 0 forces |arg| < 1 in exact arithmetic; rounding may push it
    # marginally outside the arccos domain.
    assert -1.0 - _ACOS_SLACK <= arg <= 1.0 + _ACOS_SLACK
    theta = math.acos(min(1.0, max(-1.0, arg)))
    amplitude = 2.0 * math.sqrt(-invariants.Q)
    roots = [
        amplitude * math.cos((theta + _TWO_PI * k) / 3.0) + point.z
        for k in range(3)
    ]
    return _real_root_set(
        roots,
        Classification.THREE_REAL_DISTINCT,
        lambda v: _depressed_residual(point, v),
        trig_angle=theta,
    )


def solve_cardano(point: EvalPoint, invariants: ReducedInvariants) -> RootSet:
    """One real root plus an exact conjugate pair for D > 0.

    The real root is z + B where B sums the two real cube roots
    [R + sqrt(D)]**(1/3) + [R - sqrt(D)]**(1/3).  The smaller-magnitude
    term is recovered as -Q/u from the larger one u, because the product
    of the two terms is exactly -Q; subtracting nearly equal cube roots
    directly would cancel catastrophically.  The conjugate pair is
    z - B/2 +/- i*(sqrt(3)/2)*sqrt(B**2 + 4Q), with the radical computed
    through the identities B**2 + 4Q = (u - v)**2 and
    u - v = 2*sqrt(D)/(u**2 + uv + v**2): the direct form cancels badly
    whenever the pair sits close to the real axis.
    """
    if invariants.D <= 0.0:
        raise ValueError(
            "internal contract: the cube-root path requires D > 0, "
            f"got D={invariants.D!r}"
        )
    q, r = invariants.Q, invariants.R
    sqrt_d = math.sqrt(invariants.D)
    u = cbrt(r + sqrt_d) if r >= 0.0 else cbrt(r - sqrt_d)
    v = -q / u
    b_sum = u + v
    x1 = point.z + b_sum
    re = point.z - 0.5 * b_sum
    im = math.sqrt(3.0) * sqrt_d / (u * u - q + v * v)
    roots = (complex(x1, 0.0), complex(re, im), complex(re, -im))
    return RootSet(
        roots=roots,
        classification=Classification.ONE_REAL_TWO_COMPLEX,
        residuals=tuple(_depressed_residual(point, v) for v in roots),
        real_root_offset=b_sum,
    )


def solve_repeated(
    point: EvalPoint,
    invariants: ReducedInvariants,
    classification: Classification,
) -> RootSet:
    """Repeated roots for D ~ 0.

    A triple root sits exactly at the inflection abscissa.  For a double
    root the depressed cubic factors as (t - 2*cbrt(R)) * (t + cbrt(R))**2,
    giving the simple root z + 2*cbrt(R) and the double root z - cbrt(R).
    """
    if classification is Classification.TRIPLE_ROOT:
        roots = [point.z] * 3
    elif classification is Classification.REAL_WITH_DOUBLE:
        croot = cbrt(invariants.R)
        roots = [point.z + 2.0 * croot, point.z - croot, point.z - croot]
    else:
        raise ValueError(
            "internal contract: the repeated-root path requires a "
            f"RealWithDouble or TripleRoot classification, got {classification}"
        )
    return _real_root_set(
        roots, classification, lambda v: _depressed_residual(point, v)
    )


def _polish_real(cubic: Cubic, x: float) -> float:
    for _ in range(_POLISH_STEPS):
        fx = evaluate(cubic, x)
        if fx == 0.0:
            break
        dfx = evaluate_derivative(cubic, x)
        if dfx == 0.0:
            break
        candidate = x - fx / dfx
        if not math.isfinite(candidate):
            break
        if abs(evaluate(cubic, candidate)) >= abs(fx):
            break
        x = candidate
    return x


def _polish_complex(cubic: Cubic, x: complex) -> complex:
    for _ in range(_POLISH_STEPS):
        fx = evaluate(cubic, x)
        if fx == 0.0:
            break
        dfx = evaluate_derivative(cubic, x)
        if dfx == 0.0:
            break
        candidate = x - fx / dfx
        if not (math.isfinite(candidate.real) and math.isfinite(candidate.imag)):
            break
        if abs(evaluate(cubic, candidate)) >= abs(fx):
            break
        x = candidate
    return x


def _polish(cubic: Cubic, root_set: RootSet) -> RootSet:
    # Newton degrades at multiple roots, so only simple-root
    # classifications are polished.
    if root_set.classification is Classification.THREE_REAL_DISTINCT:
        polished = sorted(
            (_polish_real(cubic, v.real) for v in root_set.roots), reverse=True
        )
        roots = tuple(complex(x, 0.0) for x in polished)
    elif root_set.classification is Classification.ONE_REAL_TWO_COMPLEX:
        x1 = _polish_real(cubic, root_set.roots[0].real)
        pair = _polish_complex(cubic, root_set.roots[1])
        # Re-enforce exact conjugate symmetry after the complex steps.
        re, im = pair.real, abs(pair.imag)
        roots = (complex(x1, 0.0), complex(re, im), complex(re, -im))
    else:
        return root_set
    return replace(root_set, roots=roots)


def solve(cubic: Cubic, options: SolveOptions | None = None) -> RootSet:
    """All three roots of a cubic from its inflection-point values.

    Composes the reduction, the discriminant classification and the
    matching closed-form path, then optionally polishes each root with up
    to two Newton steps and fills residuals against the original
    coefficients.
    """
    if options is None:
        options = SolveOptions()
    point = inflection_point(cubic)
    invariants = reduced_invariants(point)
    classification = classify(invariants, options.tol_d)
    if classification is Classification.THREE_REAL_DISTINCT:
        root_set = solve_trig(point, invariants)
    elif classification is Classification.ONE_REAL_TWO_COMPLEX:
        root_set = solve_cardano(point, invariants)
    else:
        root_set = solve_repeated(point, invariants, classification)
    if options.polish:
        root_set = _polish(cubic, root_set)
    return replace(
        root_set,
        residuals=tuple(normalized_residual(cubic, v) for v in root_set.roots),
    )


def solve_quadratic(quadratic: Quadratic) -> tuple[complex, complex]:
    """Both roots of a quadratic from its stationary-point value.

    The same recipe one degree down: evaluate at the stationary point
    z = -b/(2a); with v = -f(z)/a the roots are z +/- sqrt(v) when
    v >= 0 and z +/- i*sqrt(-v) otherwise.
    """
    z = -quadratic.b / (2.0 * quadratic.a)
    v = -evaluate_quadratic(quadratic, z) / quadratic.a
    if v >= 0.0:
        s = math.sqrt(v)
        return (complex(z + s, 0.0), complex(z - s, 0.0))
    s = math.sqrt(-v)
    return (complex(z, s), complex(z, -s))


def root_set_from_values(
    cubic: Cubic, values: Sequence[complex], snap_tol: float = 1e-9
) -> RootSet:
    """Assemble a RootSet from three externally computed roots.

    Imaginary parts below ``snap_tol`` relative to the largest root
    magnitude are snapped to zero, the surviving non-real pair is made an
    exact conjugate pair, and the classification is derived from the root
    geometry.  Used to wrap solvers that produce raw complex values.
    """
    if len(values) != 3:
        raise ValueError(f"expected exactly three roots, got {len(values)}")
    threshold = snap_tol * max(1.0, max(abs(v) for v in values))
    snapped = [
        complex(v.real, 0.0) if abs(v.imag) <= threshold else complex(v)
        for v in values
    ]
    non_real = [v for v in snapped if v.imag != 0.0]
    if len(non_real) == 3:
        # Real coefficients force at least one real root; the most nearly
        # real value is it.
        keep = min(snapped, key=lambda v: abs(v.imag))
        snapped = [complex(v.real, 0.0) if v is keep else v for v in snapped]
        non_real = [v for v in snapped if v.imag != 0.0]
    if len(non_real) == 1:
        # A lone non-real root cannot occur with real coefficients.
        snapped = [complex(v.real, 0.0) for v in snapped]
        non_real = []

    def residual_of(v: complex) -> float:
        return normalized_residual(cubic, v)

    if non_real:
        real_root = next(v.real for v in snapped if v.imag == 0.0)
        re = 0.5 * (non_real[0].real + non_real[1].real)
        im = 0.5 * (abs(non_real[0].imag) + abs(non_real[1].imag))
        roots = (complex(real_root, 0.0), complex(re, im), complex(re, -im))
        return RootSet(
            roots=roots,
            classification=Classification.ONE_REAL_TWO_COMPLEX,
            residuals=tuple(residual_of(v) for v in roots),
        )
    xs = sorted((v.real for v in snapped), reverse=True)
    if xs[0] - xs[2] <= threshold:
        classification = Classification.TRIPLE_ROOT
    elif xs[0] - xs[1] <= threshold or xs[1] - xs[2] <= threshold:
        classification = Classification.REAL_WITH_DOUBLE
    else:
        classification = Classification.THREE_REAL_DISTINCT
    return _real_root_set(xs, classification, residual_of)
