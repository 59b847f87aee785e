"""Independent numerical cross-check machinery: quadrature, derivatives,
outward shooting.  These routines must stand on their own, so they are
validated against problems with known closed-form answers."""

import math

import pytest

from ptbound.errors import ConvergenceError, DomainError, NodeCountError
from ptbound.oracle import (
    RadialProblem,
    finite_difference,
    harmonic_problem,
    integrate_adaptive,
    shoot_eigenvalue,
)
from ptbound.specfun import erfi

SQRT_PI = math.sqrt(math.pi)


class TestQuadrature:
    def test_polynomial_exact(self):
        assert integrate_adaptive(lambda x: x * x, 0.0, 1.0, tol=1e-14) == pytest.approx(
            1.0 / 3.0, abs=1e-14
        )

    def test_gaussian_growth_integral(self):
        # int_0^1 e^{y^2} dy = (sqrt(pi)/2) erfi(1)
        val = integrate_adaptive(lambda y: math.exp(y * y), 0.0, 1.0, tol=1e-13)
        assert val == pytest.approx(0.5 * SQRT_PI * erfi(1.0), rel=1e-10)

    def test_oscillatory(self):
        val = integrate_adaptive(math.sin, 0.0, math.pi, tol=1e-12)
        assert val == pytest.approx(2.0, rel=1e-11)

    def test_additivity(self):
        f = lambda x: math.exp(-x) * math.cos(3.0 * x)
        whole = integrate_adaptive(f, 0.0, 2.0, tol=1e-13)
        parts = integrate_adaptive(f, 0.0, 0.7, tol=1e-13) + integrate_adaptive(
            f, 0.7, 2.0, tol=1e-13
        )
        assert whole == pytest.approx(parts, abs=1e-12)

    def test_mapped_semi_infinite_tail(self):
        # int_0^inf r^2 e^{-2r} dr = 1/4, folded onto [0,1) by r = t/(1-t).
        # The integrand underflows to an exact 0 well before t -> 1, so a
        # fixed right endpoint just below 1 captures the whole tail.
        def folded(t):
            r = t / (1.0 - t)
            return r * r * math.exp(-2.0 * r) / (1.0 - t) ** 2

        coarse = integrate_adaptive(folded, 0.0, 1.0 - 1e-9, tol=1e-8)
        fine = integrate_adaptive(folded, 0.0, 1.0 - 1e-9, tol=1e-12)
        assert fine == pytest.approx(0.25, rel=1e-10)
        assert abs(coarse - fine) < 1e-7

    def test_empty_interval_rejected(self):
        with pytest.raises(DomainError):
            integrate_adaptive(math.sin, 1.0, 1.0)

    def test_depth_exhaustion_carries_estimate(self):
        with pytest.raises(ConvergenceError) as exc:
            integrate_adaptive(lambda x: math.sin(10.0 * x), 0.0, 3.0, tol=1e-15, max_depth=2)
        assert math.isfinite(exc.value.estimate)


class TestFiniteDifference:
    def test_first_derivative_cubic(self):
        val, err = finite_difference(lambda x: x**3, 2.0)
        assert val == pytest.approx(12.0, rel=1e-9)
        assert err < 1e-6

    def test_second_derivative_quartic(self):
        val, err = finite_difference(lambda x: x**4, 1.0, order=2)
        assert val == pytest.approx(12.0, rel=1e-7)
        assert err < 1e-4

    def test_exponential(self):
        val, _ = finite_difference(math.exp, 0.5)
        assert val == pytest.approx(math.exp(0.5), rel=1e-10)

    def test_validation(self):
        with pytest.raises(DomainError):
            finite_difference(math.exp, 0.0, order=3)
        with pytest.raises(DomainError):
            finite_difference(math.exp, 0.0, h=0.0)
        with pytest.raises(DomainError):
            finite_difference(math.exp, 0.0, levels=1)


class TestShooting:
    """Radial oscillator: q_n = omega (4n + 3) exactly."""

    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_oscillator_levels(self, n):
        res = shoot_eigenvalue(harmonic_problem(), n, (4 * n + 1, 4 * n + 5))
        assert res.value == pytest.approx(4 * n + 3, rel=1e-8)
        assert res.nodes == n
        assert res.refinements >= 1
        assert res.mesh_gap <= 1e-9 * max(1.0, abs(res.value))

    def test_frequency_scaling(self):
        res = shoot_eigenvalue(harmonic_problem(omega=2.0), 1, (10.0, 18.0))
        assert res.value == pytest.approx(14.0, rel=1e-8)

    def test_mesh_doubles(self):
        coarse = harmonic_problem(npts=501)
        res = shoot_eigenvalue(coarse, 0, (1.0, 5.0))
        assert res.npts > 501
        assert res.value == pytest.approx(3.0, rel=1e-7)

    def test_bracket_above_level(self):
        with pytest.raises(NodeCountError, match="above"):
            shoot_eigenvalue(harmonic_problem(), 0, (8.0, 10.0))

    def test_bracket_below_level(self):
        with pytest.raises(NodeCountError, match="below"):
            shoot_eigenvalue(harmonic_problem(), 1, (1.0, 2.0))

    def test_empty_bracket(self):
        with pytest.raises(DomainError):
            shoot_eigenvalue(harmonic_problem(), 0, (5.0, 5.0))

    def test_negative_level(self):
        with pytest.raises(DomainError):
            shoot_eigenvalue(harmonic_problem(), -1, (1.0, 5.0))

    def test_problem_validation(self):
        with pytest.raises(DomainError):
            RadialProblem(w=lambda r: 0.0, r_min=1.0, r_cut=0.5, origin_exponent=1.0)
        with pytest.raises(DomainError):
            RadialProblem(w=lambda r: 0.0, r_min=0.0, r_cut=1.0, origin_exponent=1.0)
        with pytest.raises(DomainError):
            harmonic_problem(omega=-1.0)
