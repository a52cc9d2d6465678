"""Polynomial value types, evaluation, and the inflection-point reduction.

Everything downstream consumes cubics through :class:`EvalPoint`: the abscissa
z where the second derivative vanishes together with the normalized values
f(z)/a and f'(z)/a.  Once those two numbers are known the original
coefficients are never needed again.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class CoefficientError(ValueError):
    """Polynomial coefficients are unusable (non-finite)."""


class LeadingZeroError(CoefficientError):
    """The leading coefficient is zero, so the input has lower degree."""


def _check_finite(kind: str, **coeffs: float) -> None:
    for name, value in coeffs.items():
        if not math.isfinite(value):
            raise CoefficientError(
                f"{kind} coefficient {name} must be finite, got {value!r}"
            )


@dataclass(frozen=True)
class Cubic:
    """Real coefficients of a*x**3 + b*x**2 + c*x + d, with a != 0."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, float(getattr(self, name)))
        _check_finite("cubic", a=self.a, b=self.b, c=self.c, d=self.d)
        if self.a == 0.0:
            raise LeadingZeroError(
                "leading coefficient a must be nonzero for a cubic"
            )


@dataclass(frozen=True)
class Quadratic:
    """Real coefficients of a*x**2 + b*x + c, with a != 0."""

    a: float
    b: float
    c: float

    def __post_init__(self) -> None:
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, float(getattr(self, name)))
        _check_finite("quadratic", a=self.a, b=self.b, c=self.c)
        if self.a == 0.0:
            raise LeadingZeroError(
                "leading coefficient a must be nonzero for a quadratic"
            )


@dataclass(frozen=True)
class EvalPoint:
    """The inflection abscissa z = -b/(3a) with f(z)/a and f'(z)/a.

    This triple is the solver's entire view of a cubic: ``fz`` and ``fpz``
    are already divided by the leading coefficient, so every downstream
    formula may assume the monic case.
    """

    z: float
    fz: float
    fpz: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.z) and math.isfinite(self.fz)
                and math.isfinite(self.fpz)):
            raise CoefficientError(
                f"evaluation point must be finite, got "
                f"z={self.z!r}, fz={self.fz!r}, fpz={self.fpz!r}"
            )


def evaluate(cubic: Cubic, x: float | complex) -> float | complex:
    """Value of the cubic at ``x`` by Horner's scheme."""
    return ((cubic.a * x + cubic.b) * x + cubic.c) * x + cubic.d


def evaluate_derivative(cubic: Cubic, x: float | complex) -> float | complex:
    """Value of the first derivative 3ax**2 + 2bx + c at ``x``."""
    return (3.0 * cubic.a * x + 2.0 * cubic.b) * x + cubic.c


def evaluate_quadratic(quadratic: Quadratic, x: float | complex) -> float | complex:
    """Value of the quadratic at ``x`` by Horner's scheme."""
    return (quadratic.a * x + quadratic.b) * x + quadratic.c


def inflection_point(cubic: Cubic) -> EvalPoint:
    """Reduce a cubic to its evaluation point.

    Returns z = -b/(3a) (the unique solution of f''(z) = 0) together with
    f(z)/a and f'(z)/a.  Dividing by ``a`` here makes the reduction, and
    therefore the roots, invariant under scaling all four coefficients.
    """
    z = -cubic.b / (3.0 * cubic.a)
    return EvalPoint(
        z=z,
        fz=evaluate(cubic, z) / cubic.a,
        fpz=evaluate_derivative(cubic, z) / cubic.a,
    )


def shift(cubic: Cubic, h: float) -> Cubic:
    """The cubic g with g(x) = f(x + h), coefficients expanded exactly."""
    a, b, c, d = cubic.a, cubic.b, cubic.c, cubic.d
    return Cubic(
        a=a,
        b=3.0 * a * h + b,
        c=(3.0 * a * h + 2.0 * b) * h + c,
        d=((a * h + b) * h + c) * h + d,
    )
