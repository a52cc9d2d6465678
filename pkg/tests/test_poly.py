"""Polynomial types, evaluation, and the inflection-point reduction."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from feroots import (
    CoefficientError,
    Cubic,
    EvalPoint,
    LeadingZeroError,
    Quadratic,
    evaluate,
    evaluate_derivative,
    inflection_point,
    shift,
)
from helpers import power_sum_eval, within_ulps

# Subnormals are excluded: the relative-error bounds asserted below assume
# normalized arithmetic, which gradual underflow does not provide.
coefficients = st.floats(
    min_value=-1e3, max_value=1e3, allow_nan=False, allow_subnormal=False
).filter(lambda v: v == 0.0 or abs(v) >= 1e-280)
nonzero = coefficients.filter(lambda v: abs(v) >= 1e-3)
points = st.floats(min_value=-1e2, max_value=1e2, allow_nan=False)


cubic_strategy = st.builds(Cubic, a=nonzero, b=coefficients, c=coefficients, d=coefficients)


class TestConstruction:
    def test_zero_leading_coefficient_rejected(self):
        with pytest.raises(LeadingZeroError):
            Cubic(0.0, 1.0, 2.0, 3.0)
        with pytest.raises(LeadingZeroError):
            Quadratic(0.0, 1.0, 2.0)

    @pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
    def test_non_finite_rejected(self, bad):
        with pytest.raises(CoefficientError):
            Cubic(1.0, bad, 0.0, 0.0)
        with pytest.raises(CoefficientError):
            Quadratic(1.0, 0.0, bad)
        with pytest.raises(CoefficientError):
            EvalPoint(z=0.0, fz=bad, fpz=0.0)

    def test_leading_zero_is_distinct_from_non_finite(self):
        assert issubclass(LeadingZeroError, CoefficientError)
        with pytest.raises(LeadingZeroError):
            Cubic(0, 1, 1, 1)
        try:
            Cubic(1, math.nan, 0, 0)
        except LeadingZeroError:
            pytest.fail("non-finite coefficients must not raise LeadingZeroError")
        except CoefficientError:
            pass

    def test_coefficients_coerced_to_float(self):
        cubic = Cubic(1, -6, 11, -6)
        assert isinstance(cubic.a, float) and isinstance(cubic.d, float)


class TestEvaluate:
    def test_known_root(self):
        assert evaluate(Cubic(1, -6, 11, -6), 2.0) == 0.0

    def test_zero_everything(self):
        assert evaluate(Cubic(1, 0, 0, 0), 0.0) == 0.0

    def test_against_power_sum(self):
        cubic = Cubic(2, -1, 3, 5)
        x = 1.7
        expected = power_sum_eval([2, -1, 3, 5], x)
        assert within_ulps(evaluate(cubic, x), expected, 8)

    @given(cubic=cubic_strategy, x=points)
    def test_power_sum_agreement_everywhere(self, cubic, x):
        horner = evaluate(cubic, x)
        summed = power_sum_eval([cubic.a, cubic.b, cubic.c, cubic.d], x)
        scale = max(
            abs(cubic.a * x**3), abs(cubic.b * x**2), abs(cubic.c * x), abs(cubic.d), 1e-300
        )
        assert within_ulps(horner, summed, 8, scale=max(abs(horner), abs(summed), scale * 2**-40))


class TestEvaluateDerivative:
    def test_worked_example(self):
        assert evaluate_derivative(Cubic(1, -6, 11, -6), 2.0) == -1.0

    def test_depressed_example(self):
        assert evaluate_derivative(Cubic(1, 0, -15, -4), 0.0) == -15.0

    def test_pure_cube(self):
        assert evaluate_derivative(Cubic(1, 0, 0, 0), 0.0) == 0.0


class TestInflectionPoint:
    def test_worked_example(self):
        point = inflection_point(Cubic(1, -6, 11, -6))
        assert point.z == 2.0
        assert point.fz == 0.0
        assert point.fpz == -1.0

    def test_fractional_example(self):
        point = inflection_point(Cubic(1, -5, 9, -9))
        assert abs(point.z - 5.0 / 3.0) < 1e-15
        assert abs(point.fz - (-88.0 / 27.0)) < 1e-14
        assert abs(point.fpz - 2.0 / 3.0) < 1e-14

    def test_scaled_cubic_reduces_identically(self):
        # Tripling every coefficient must reproduce the same normalized values.
        assert inflection_point(Cubic(3, -18, 33, -18)) == inflection_point(
            Cubic(1, -6, 11, -6)
        )

    @given(cubic=cubic_strategy)
    def test_second_derivative_vanishes(self, cubic):
        point = inflection_point(cubic)
        eps = 2.0**-52
        residual = abs(6.0 * cubic.a * point.z + 2.0 * cubic.b)
        assert residual <= 4.0 * eps * (
            6.0 * abs(cubic.a) * abs(point.z) + 2.0 * abs(cubic.b)
        )

    @given(cubic=cubic_strategy, exponent=st.integers(min_value=-30, max_value=30))
    def test_scaling_by_powers_of_two_is_exact(self, cubic, exponent):
        factor = 2.0**exponent
        scaled = Cubic(
            factor * cubic.a, factor * cubic.b, factor * cubic.c, factor * cubic.d
        )
        assert inflection_point(scaled) == inflection_point(cubic)

    @given(cubic=cubic_strategy, factor=st.sampled_from([1e-6, 1e-3, 7.0, 1e6]))
    def test_scaling_covariance(self, cubic, factor):
        point = inflection_point(cubic)
        scaled = inflection_point(
            Cubic(factor * cubic.a, factor * cubic.b, factor * cubic.c, factor * cubic.d)
        )
        assert within_ulps(point.z, scaled.z, 4)
        # fz and fpz are evaluations, so rounding is relative to the term
        # magnitudes, not the (possibly cancelled) result.
        z = point.z
        f_scale = (
            abs(cubic.a) * abs(z) ** 3
            + abs(cubic.b) * z**2
            + abs(cubic.c) * abs(z)
            + abs(cubic.d)
        ) / abs(cubic.a)
        fp_scale = (
            3 * abs(cubic.a) * z**2 + 2 * abs(cubic.b) * abs(z) + abs(cubic.c)
        ) / abs(cubic.a)
        assert within_ulps(point.fz, scaled.fz, 16, scale=max(f_scale, 1e-300))
        assert within_ulps(point.fpz, scaled.fpz, 16, scale=max(fp_scale, 1e-300))


class TestShift:
    def test_binomial_expansion(self):
        assert shift(Cubic(1, 0, 0, 0), 1.0) == Cubic(1, 3, 3, 1)

    def test_shift_to_inflection_kills_quadratic_term(self):
        shifted = shift(Cubic(1, -6, 11, -6), 2.0)
        assert shifted.b == 0.0

    @given(cubic=cubic_strategy)
    def test_zero_shift_is_identity(self, cubic):
        assert shift(cubic, 0.0) == cubic

    @given(cubic=cubic_strategy, h=points, x=points)
    def test_evaluation_covariance(self, cubic, h, x):
        lhs = evaluate(shift(cubic, h), x)
        rhs = evaluate(cubic, x + h)
        # Expanding and re-evaluating moves rounding through terms of size
        # |a|*(|x|+|h|)**3 even when the value itself cancels to near zero,
        # so that is the scale "relative" is measured against.
        reach = abs(x) + abs(h)
        scale = (
            abs(cubic.a) * reach**3
            + abs(cubic.b) * reach**2
            + abs(cubic.c) * reach
            + abs(cubic.d)
        )
        assert abs(lhs - rhs) <= 1e-12 * max(abs(lhs), abs(rhs), scale, 1e-300)
