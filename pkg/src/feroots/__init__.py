"""Closed-form cubic and quadratic solving from inflection-point values.

The library reduces every cubic to the abscissa z where f''(z) = 0 together
with f(z)/a and f'(z)/a, classifies the root structure through the
discriminant D = Q**3 + R**2, and produces all three roots in closed form.
A classical depressed-cubic solver and a Durand-Kerner iteration ship
alongside as independent cross-checks.
"""

from .classic import (
    OMEGA,
    OMEGA_SQUARED,
    CardanoRadicals,
    DepressedCubic,
    cardano_radicals,
    depress,
    solve_classic,
)
from .fe import (
    Classification,
    ReducedInvariants,
    RootSet,
    SolveOptions,
    cbrt,
    classify,
    normalized_residual,
    reduced_invariants,
    root_set_from_values,
    solve,
    solve_cardano,
    solve_quadratic,
    solve_repeated,
    solve_trig,
)
from .oracle import NonConvergenceError, OracleConfig, durand_kerner
from .parsing import (
    ParsedPolynomial,
    ParseError,
    ParseErrorKind,
    as_cubic,
    as_quadratic,
    format_polynomial,
    parse,
)
from .poly import (
    CoefficientError,
    Cubic,
    EvalPoint,
    LeadingZeroError,
    Quadratic,
    evaluate,
    evaluate_derivative,
    evaluate_quadratic,
    inflection_point,
    shift,
)

__version__ = "0.1.0"

__all__ = [
    "CardanoRadicals",
    "Classification",
    "CoefficientError",
    "Cubic",
    "DepressedCubic",
    "EvalPoint",
    "LeadingZeroError",
    "NonConvergenceError",
    "OMEGA",
    "OMEGA_SQUARED",
    "OracleConfig",
    "ParseError",
    "ParseErrorKind",
    "ParsedPolynomial",
    "Quadratic",
    "ReducedInvariants",
    "RootSet",
    "SolveOptions",
    "as_cubic",
    "as_quadratic",
    "cardano_radicals",
    "cbrt",
    "classify",
    "depress",
    "durand_kerner",
    "evaluate",
    "evaluate_derivative",
    "evaluate_quadratic",
    "format_polynomial",
    "inflection_point",
    "normalized_residual",
    "parse",
    "reduced_invariants",
    "root_set_from_values",
    "shift",
    "solve",
    "solve_cardano",
    "solve_classic",
    "solve_quadratic",
    "solve_repeated",
    "solve_trig",
]
