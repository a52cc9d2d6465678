"""The depressed-cubic radical solver and its agreement with the main path."""

import math

import pytest

from feroots import (
    OMEGA,
    OMEGA_SQUARED,
    Classification,
    Cubic,
    cardano_radicals,
    depress,
    inflection_point,
    solve,
    solve_classic,
)
from helpers import (
    discriminant_margin,
    random_cubics,
    roots_close,
    within_ulps,
)


class TestDepress:
    def test_three_real_example(self):
        depressed, offset = depress(Cubic(1, -6, 11, -6))
        assert depressed.p == -1.0
        assert depressed.q == 0.0
        assert offset == 2.0

    def test_already_depressed(self):
        depressed, offset = depress(Cubic(1, 0, -15, -4))
        assert depressed.p == -15.0
        assert depressed.q == -4.0
        assert offset == 0.0

    def test_perfect_cube(self):
        depressed, offset = depress(Cubic(1, 3, 3, 1))
        assert depressed.p == 0.0
        assert depressed.q == 0.0
        assert offset == -1.0

    def test_matches_evaluation_point(self):
        # The depressed coefficients are exactly the normalized derivative
        # and function values at the inflection abscissa.
        for cubic in random_cubics(400, seed=61):
            depressed, offset = depress(cubic)
            point = inflection_point(cubic)
            b = cubic.b / cubic.a
            scale_p = abs(cubic.c / cubic.a) + b * b / 3.0
            scale_q = (
                abs(cubic.d / cubic.a)
                + abs(b * cubic.c / cubic.a) / 3.0
                + 2.0 * abs(b) ** 3 / 27.0
            )
            assert within_ulps(depressed.p, point.fpz, 4, scale=max(scale_p, 1e-300))
            assert within_ulps(depressed.q, point.fz, 4, scale=max(scale_q, 1e-300))
            assert within_ulps(offset, point.z, 4)


class TestCardanoRadicals:
    def test_pairing_constraint(self):
        for cubic in random_cubics(600, seed=67):
            depressed, _ = depress(cubic)
            radicals = cardano_radicals(depressed)
            if radicals.A == 0:
                continue
            product = radicals.A * radicals.B
            target = -depressed.p / 3.0
            assert abs(product - target) <= 1e-10 * max(1.0, abs(target))

    def test_radicand_discriminant_value(self):
        depressed, _ = depress(Cubic(1, 0, -15, -4))
        radicals = cardano_radicals(depressed)
        assert abs(radicals.discriminant - (-121.0)) < 1e-12

    def test_pure_cube_takes_nonzero_radicand(self):
        # p = 0, q = 2: the radicands are {0, -2}; A must come from -2.
        from feroots import DepressedCubic

        radicals = cardano_radicals(DepressedCubic(p=0.0, q=2.0))
        assert abs(radicals.A**3 - (-2.0)) < 1e-14
        assert radicals.B == 0

    def test_triple_root_radicals_are_zero(self):
        from feroots import DepressedCubic

        radicals = cardano_radicals(DepressedCubic(p=0.0, q=0.0))
        assert radicals.A == 0 and radicals.B == 0


class TestUnityRoots:
    def test_omega_cubes_to_one(self):
        assert abs(OMEGA**3 - 1.0) <= 4 * 2.0**-52
        assert abs(OMEGA_SQUARED**3 - 1.0) <= 4 * 2.0**-52

    def test_omega_sum_vanishes(self):
        assert abs(1.0 + OMEGA + OMEGA_SQUARED) <= 4 * 2.0**-52

    def test_omega_squared_is_square_and_conjugate(self):
        assert abs(OMEGA * OMEGA - OMEGA_SQUARED) <= 4 * 2.0**-52
        assert OMEGA_SQUARED == OMEGA.conjugate()


class TestSolveClassic:
    def test_three_real_example(self):
        result = solve_classic(Cubic(1, -6, 11, -6))
        assert result.classification is Classification.THREE_REAL_DISTINCT
        assert roots_close(result.roots, [3 + 0j, 2 + 0j, 1 + 0j], 1e-9)
        assert all(r.imag == 0.0 for r in result.roots)

    def test_historical_example(self):
        result = solve_classic(Cubic(1, 0, -15, -4))
        expected = [4 + 0j, complex(-2 + math.sqrt(3)), complex(-2 - math.sqrt(3))]
        assert roots_close(result.roots, expected, 1e-9)

    def test_conjugate_example(self):
        result = solve_classic(Cubic(1, -5, 9, -9))
        assert result.classification is Classification.ONE_REAL_TWO_COMPLEX
        expected = [3 + 0j, complex(1, math.sqrt(2)), complex(1, -math.sqrt(2))]
        assert roots_close(result.roots, expected, 1e-9)
        assert result.roots[1] == result.roots[2].conjugate()

    def test_triple_root(self):
        result = solve_classic(Cubic(1, -15, 75, -125))
        assert result.classification is Classification.TRIPLE_ROOT
        assert all(abs(r - 5.0) < 1e-9 for r in result.roots)

    def test_agreement_with_fe_solver(self):
        for cubic in random_cubics(2000, seed=71):
            if discriminant_margin(cubic) <= 1e-9:
                continue
            assert roots_close(
                solve(cubic).roots, solve_classic(cubic).roots, 1e-9
            ), cubic
