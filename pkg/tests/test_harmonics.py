"""Zonal functions, spectra, multiplier action, quadrature, subsphere averages."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad
from scipy.special import eval_gegenbauer

from igeom import constants as C
from igeom import harmonics as H


class TestGegenbauer:
    def test_degree2_legendre(self):
        t = np.linspace(-1, 1, 41)
        np.testing.assert_allclose(H.gegenbauer_eval(2, 0.5, t), (3 * t**2 - 1) / 2, rtol=1e-12)

    def test_degree0_and_1(self):
        assert H.gegenbauer_eval(0, 1.3, 0.7) == 1.0
        assert H.gegenbauer_eval(1, 1.3, 0.7) == pytest.approx(2 * 1.3 * 0.7, rel=1e-14)

    @given(
        n=st.integers(0, 12),
        lam=st.floats(0.5, 3.0),
        t=st.floats(-1.0, 1.0),
    )
    @settings(max_examples=200, deadline=None)
    def test_matches_scipy(self, n, lam, t):
        ours = float(H.gegenbauer_eval(n, lam, t))
        ref = float(eval_gegenbauer(n, lam, t))
        assert ours == pytest.approx(ref, rel=1e-9, abs=1e-9)

    def test_upto_consistent(self):
        t = np.linspace(-1, 1, 7)
        all_vals = H.gegenbauer_upto(6, 1.0, t)
        for n, vals in enumerate(all_vals):
            np.testing.assert_allclose(vals, H.gegenbauer_eval(n, 1.0, t), rtol=1e-13)


class TestZonal:
    def test_lies_on_degree_space_d3(self):
        f = H.ZonalTestFunction(3, 2, [0, 0, 1])
        u = np.array([0.0, 0.0, 1.0])
        assert f(u) == pytest.approx(float(eval_gegenbauer(2, 0.5, 1.0)), rel=1e-12)

    def test_axis_normalized(self):
        f = H.ZonalTestFunction(3, 1, [0, 0, 2.0])
        assert np.linalg.norm(f.axis) == pytest.approx(1.0, rel=1e-14)

    def test_integral_vanishes_for_positive_degree(self):
        rng = np.random.default_rng(7)
        quad_mc = H.SphereQuadrature.monte_carlo(3, 10**6, rng)
        f = H.HarmonicSpectrum.zonal(3, 2, [0.0, 0.0, 1.0])
        val = H.pair(f, quad_mc)
        # stderr of a degree-2 Legendre under sigma is ~ sqrt(1/5)/1000
        assert abs(val) < 3 * math.sqrt(0.2) / 1000

    def test_constant_integrates_to_scale(self):
        rng = np.random.default_rng(3)
        quad_mc = H.SphereQuadrature.monte_carlo(3, 1000, rng)
        f = H.HarmonicSpectrum.constant(3, 1.0)
        assert H.pair(f, quad_mc) == pytest.approx(1.0, rel=1e-12)


class TestRealBasis:
    def test_degree1_closed_form(self):
        u = np.array([[0.3, -0.5, math.sqrt(1 - 0.09 - 0.25)]])
        z = H.RealSphericalHarmonic(1, 0)
        assert z(u)[0] == pytest.approx(math.sqrt(3) * u[0, 2], rel=1e-10)

    def test_orthonormal_under_sigma(self):
        rng = np.random.default_rng(11)
        pts = H.sphere_points(3, 200000, rng)
        basis = H.real_harmonic_basis(4)
        vals = np.stack([y(pts) for y in basis])
        gram = vals @ vals.T / pts.shape[0]
        # MC Gram matrix close to the identity
        assert np.max(np.abs(gram - np.eye(len(basis)))) < 0.05

    def test_x2_minus_third(self):
        # u1^2 - 1/3 at e1 equals 2/3
        f = H.HarmonicSpectrum.zonal(3, 2, [1.0, 0, 0], coeff=2 / 3)
        assert H.pair_pointwise(f, [1.0, 0, 0]) == pytest.approx(2 / 3, rel=1e-12)
        u = np.array([0.2, 0.6, math.sqrt(1 - 0.04 - 0.36)])
        assert f(u) == pytest.approx(u[0] ** 2 - 1 / 3, rel=1e-10)


class TestSpectrum:
    def test_identity_multiplier(self):
        f = H.HarmonicSpectrum.zonal(3, 2, [0, 0, 1.0], coeff=0.7)
        g = H.apply_multiplier(f, lambda s: 1.0)
        u = H.sphere_points(3, 5, np.random.default_rng(0))
        np.testing.assert_allclose(f(u), g(u), rtol=1e-14)

    def test_reflection_multiplier(self):
        f = H.HarmonicSpectrum.zonal(3, 3, [0, 0, 1.0])
        g = H.apply_multiplier(f, C.reflection_multiplier)
        u = H.sphere_points(3, 5, np.random.default_rng(1))
        np.testing.assert_allclose(g(u), f(-u), rtol=1e-12)

    def test_composition_is_product(self):
        f = H.HarmonicSpectrum(
            3,
            H.HarmonicSpectrum.zonal(3, 1, [0, 1.0, 0]).entries
            + H.HarmonicSpectrum.zonal(3, 3, [1.0, 0, 0], 0.5).entries,
        )
        m1 = lambda s: 2.0 + s
        m2 = lambda s: 1.0 / (1 + s)
        a = H.apply_multiplier(H.apply_multiplier(f, m1), m2)
        b = H.apply_multiplier(f, lambda s: m1(s) * m2(s))
        u = H.sphere_points(3, 8, np.random.default_rng(2))
        np.testing.assert_allclose(a(u), b(u), rtol=1e-14)

    def test_double_transform_on_degree2(self):
        # the order-(1,1) composition at d=3 scales degree 2 by pi^4
        f = H.HarmonicSpectrum.zonal(3, 2, [0, 0, 1.0])
        g = H.apply_multiplier(f, lambda s: C.composed_multiplier(3, 1, 2, s))
        u = H.sphere_points(3, 4, np.random.default_rng(3))
        np.testing.assert_allclose(g(u), math.pi**4 * f(u), rtol=1e-12)

    def test_mean_and_reflection(self):
        f = H.HarmonicSpectrum.constant(3, 2.5)
        assert f.mean() == pytest.approx(2.5, rel=1e-14)
        g = H.HarmonicSpectrum.zonal(3, 1, [1.0, 0, 0])
        assert g.mean() == 0.0
        assert g.reflected()(np.array([1.0, 0, 0])) == pytest.approx(
            g(np.array([-1.0, 0, 0])), rel=1e-12
        )

    def test_even_centered_predicates(self):
        assert H.HarmonicSpectrum.zonal(3, 2, [0, 0, 1.0]).is_even()
        assert not H.HarmonicSpectrum.zonal(3, 3, [0, 0, 1.0]).is_even()
        assert H.HarmonicSpectrum.zonal(3, 3, [0, 0, 1.0]).is_centered()
        assert not H.HarmonicSpectrum.zonal(3, 1, [0, 0, 1.0]).is_centered()


class TestOrthogonality:
    @pytest.mark.parametrize("deg_pair", [(1, 2), (2, 3)])
    def test_distinct_degrees_orthogonal(self, deg_pair):
        rng = np.random.default_rng(5)
        pts = H.sphere_points(3, 10**6, rng)
        f = H.ZonalTestFunction(3, deg_pair[0], [0.0, 0.6, 0.8])
        g = H.ZonalTestFunction(3, deg_pair[1], [0.6, 0.0, 0.8])
        prod = f(pts) * g(pts)
        z = prod.mean() / (prod.std() / math.sqrt(len(prod)))
        assert abs(z) < 4


class TestSubsphereAverage:
    def test_constant_exact(self):
        basis = np.eye(3)[:, :2]
        est = H.subsphere_average(lambda u: np.ones(u.shape[:-1]), basis, 100, np.random.default_rng(0))
        assert est.value == pytest.approx(1.0, rel=1e-12)
        assert est.stderr == pytest.approx(0.0, abs=1e-15)

    def test_orthogonal_direction_vanishes(self):
        basis = np.eye(3)[:, :2]
        v = np.array([0.0, 0.0, 1.0])
        est = H.subsphere_average(lambda u: u @ v, basis, 20000, np.random.default_rng(1))
        assert abs(est.value) < 4 * est.stderr + 1e-12

    def test_first_coordinate_squared(self):
        # mean of u1^2 over the circle in the (e1,e2)-plane is 1/2
        basis = np.eye(3)[:, :2]
        est = H.subsphere_average(lambda u: u[..., 0] ** 2, basis, 200000, np.random.default_rng(2))
        assert est.value == pytest.approx(0.5, abs=4 * est.stderr)

    def test_zero_dimensional_rejected(self):
        with pytest.raises(ValueError):
            H.subsphere_average(lambda u: u[..., 0], np.zeros((3, 0)), 10, np.random.default_rng(0))

    def test_gegenbauer_restriction_oracle(self):
        # averaging an even zonal over a random 2-subspace matches the 1D
        # quadrature oracle for the restricted Gegenbauer kernel
        rng = np.random.default_rng(9)
        g = rng.standard_normal((3, 2))
        basis, _ = np.linalg.qr(g)
        axis = rng.standard_normal(3)
        axis /= np.linalg.norm(axis)
        f = H.ZonalTestFunction(3, 2, axis)
        est = H.subsphere_average(f, basis, 400000, rng)

        # oracle: restrict axis to the plane; the average over the circle is
        # (1/2pi) int C_2(cos(alpha) cos(t)) dt with cos(alpha) = |P_L axis|
        proj = basis @ (basis.T @ axis)
        ca = np.linalg.norm(proj)
        oracle = quad(lambda t: float(H.gegenbauer_eval(2, 0.5, ca * math.cos(t))), 0, 2 * math.pi)[0] / (
            2 * math.pi
        )
        assert est.value == pytest.approx(oracle, abs=4 * est.stderr)


def test_quadrature_weights_validated():
    with pytest.raises(ValueError):
        H.SphereQuadrature(3, np.eye(3), np.array([0.5, 0.2, 0.2]))


def test_pair_dimension_mismatch():
    q3 = H.SphereQuadrature.monte_carlo(3, 10, np.random.default_rng(0))
    f4 = H.HarmonicSpectrum.constant(4)
    with pytest.raises(ValueError):
        H.pair(f4, q3)
