"""Classical depressed-cubic solver used as a cross-validation path.

This is the textbook route: shift the variable to kill the quadratic term,
take the two cube-root radicals A and B, and generate the remaining roots
with the complex cube roots of unity.  It exists so the inflection-point
solver has an independently derived implementation to agree with; it is
not the fast path.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .fe import RootSet, root_set_from_values
from .poly import Cubic

# Complex cube roots of unity; omega**3 == 1 and 1 + omega + omega**2 == 0.
OMEGA = complex(-0.5, math.sqrt(3.0) / 2.0)
OMEGA_SQUARED = complex(-0.5, -math.sqrt(3.0) / 2.0)


@dataclass(frozen=True)
class DepressedCubic:
    """Coefficients p, q of the shifted monic cubic y**3 + p*y + q."""

    p: float
    q: float


@dataclass(frozen=True)
class CardanoRadicals:
    """The cube-root radicals A, B and the radicand discriminant.

    ``discriminant`` is (p/3)**3 + (q/2)**2; A and B are chosen so their
    product equals -p/3, the branch-pairing constraint that makes the
    three combinations of A and B actual roots.
    """

    A: complex
    B: complex
    discriminant: float


def depress(cubic: Cubic) -> tuple[DepressedCubic, float]:
    """Shift a cubic into y**3 + p*y + q form.

    The cubic is first normalized to monic, then shifted by -b/(3a):
    p = c - b**2/3 and q = d - b*c/3 + 2*b**3/27 in the monic
    coefficients.  The depressed roots plus the returned shift are the
    original roots.
    """
    b = cubic.b / cubic.a
    c = cubic.c / cubic.a
    d = cubic.d / cubic.a
    p = c - b * b / 3.0
    q = d - b * c / 3.0 + 2.0 * b * b * b / 27.0
    return DepressedCubic(p=p, q=q), -b / 3.0


def _principal_cbrt(w: complex) -> complex:
    # Principal branch: argument mapped into (-pi/3, pi/3].
    if w == 0:
        return 0j
    magnitude, angle = cmath.polar(w)
    return cmath.rect(magnitude ** (1.0 / 3.0), angle / 3.0)


def cardano_radicals(depressed: DepressedCubic) -> CardanoRadicals:
    """Compute the radical pair A = [-q/2 +/- sqrt(disc)]**(1/3), B = -p/(3A).

    The two radicals are not independent: taking principal branches of
    both can silently break the identity A*B = -p/3 that the root
    formulas rely on, so B is derived from A through that identity
    whenever A is nonzero.  A is taken from whichever radicand has the
    larger magnitude; the two radicands sum to -q, so the smaller one
    cancels badly, and swapping A with B only swaps two of the three
    root combinations.
    """
    p, q = depressed.p, depressed.q
    discriminant = (p / 3.0) ** 3 + (q / 2.0) ** 2
    root = cmath.sqrt(complex(discriminant))
    radicand = -q / 2.0 + root
    other = -q / 2.0 - root
    if abs(other) > abs(radicand):
        radicand = other
    a_value = _principal_cbrt(radicand)
    if a_value != 0:
        b_value = (-p / 3.0) / a_value
    else:
        b_value = 0j
    return CardanoRadicals(A=a_value, B=b_value, discriminant=discriminant)


def solve_classic(cubic: Cubic) -> RootSet:
    """All three roots via the depressed form and cube-root radicals.

    The depressed roots are A + B, omega*A + omega**2*B and
    omega*B + omega**2*A; each is shifted back by -b/(3a).  Imaginary
    parts that are pure rounding noise are snapped to zero and the
    classification is read off the resulting root geometry.
    """
    depressed, offset = depress(cubic)
    radicals = cardano_radicals(depressed)
    a_value, b_value = radicals.A, radicals.B
    values = [
        a_value + b_value + offset,
        OMEGA * a_value + OMEGA_SQUARED * b_value + offset,
        OMEGA * b_value + OMEGA_SQUARED * a_value + offset,
    ]
    return root_set_from_values(cubic, values)
