import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from amratio import foxh
from amratio.errors import (
    ContourError,
    DivergenceError,
    DomainError,
    NonConvergenceError,
    ParameterError,
    PoleError,
)

# arbitrary-precision oracle values, computed before the build
LOGGAMMA_ORACLE = {
    (2.0, 3.0): complex(-2.092851753092733349564, 2.302396543466867626154),
    (0.5, -20.0): complex(-30.49698800269325964285, -39.91672910847332607045),
    (-3.2, 0.7): complex(-2.340607893963262574731, -10.71363591562658756111),
    (1e6, 1e6): complex(12376679.82274329919842, 13947481.91894257170304),
    (1e-4, 1e-4): complex(8.863709060130521143198, -0.7854558685153991656827),
    (-0.25, 40.0): complex(-64.67959854333467321609, 106.3710914198799540951),
}
THETA_CDF_KERNEL_ORACLE = complex(3.028462115217640492166326, -2.017130999674124437319813)
H1_K1_Z05 = 0.44444444444444444444
H1_K2_Z3 = 0.046089122697748618711
H3_TWIN_K2_Z2 = 0.051619234891421871035
H2_K2_Z4 = 0.062571507661233623186


class TestLogGammaComplex:
    def test_real_anchor_points(self):
        assert foxh.log_gamma_complex(1.0) == 0.0
        assert foxh.log_gamma_complex(0.5).real == pytest.approx(
            math.log(math.sqrt(math.pi)), abs=1e-15)
        assert foxh.log_gamma_complex(12.5).real == pytest.approx(
            18.73434751193644570163, rel=1e-14)

    @pytest.mark.parametrize("s, expected", sorted(LOGGAMMA_ORACLE.items()))
    def test_oracle_points(self, s, expected):
        got = foxh.log_gamma_complex(complex(*s))
        assert abs(got - expected) <= 1e-13 * max(abs(expected), 1.0)

    def test_matches_real_lgamma(self):
        for x in np.logspace(-3, 5, 40):
            assert foxh.log_gamma_complex(float(x)) == pytest.approx(
                math.lgamma(x), rel=1e-14, abs=1e-14)

    @pytest.mark.parametrize("s", [0.0, -1.0, -7.0])
    def test_pole_error(self, s):
        with pytest.raises(PoleError):
            foxh.log_gamma_complex(s)

    @given(st.floats(0.5, 40.0), st.floats(0.0, 40.0))
    @settings(max_examples=80, deadline=None)
    def test_recurrence(self, re, im):
        z = complex(re, im)
        lhs = foxh.log_gamma_complex(z + 1.0)
        rhs = foxh.log_gamma_complex(z) + np.log(complex(z))
        assert abs(lhs - rhs) <= 1e-12 * (abs(lhs) + 1.0)

    def test_conjugate_symmetry(self):
        z = complex(3.7, 2.2)
        assert foxh.log_gamma_complex(z.conjugate()) == pytest.approx(
            foxh.log_gamma_complex(z).conjugate())


class TestTheta:
    def test_exp_kernel_at_one(self):
        assert foxh.theta(foxh.EXP_KERNEL, 1.0) == pytest.approx(1.0, rel=1e-14)

    def test_denominator_upper_pair(self):
        # H^{1,0}_{1,1} with upper pair (0.5, 0.5) in the denominator:
        # Gamma(1) / Gamma(0.5 + 0.5) = 1 at s = 1
        params = foxh.FoxHParams(1, 0, 1, 1, ((0.5, 0.5),), ((0.0, 1.0),))
        assert foxh.theta(params, 1.0) == pytest.approx(1.0, rel=1e-14)

    def test_cdf_kernel_oracle(self):
        params = foxh.ratio_cdf_kernel(1.5, 2.0, 0.75)
        got = foxh.theta(params, 0.3 + 0.2j)
        assert abs(got - THETA_CDF_KERNEL_ORACLE) <= 1e-12 * abs(THETA_CDF_KERNEL_ORACLE)

    def test_numerator_pole_raises(self):
        with pytest.raises(PoleError):
            foxh.theta(foxh.EXP_KERNEL, 0.0)

    def test_denominator_pole_is_zero(self):
        # Gamma(s) / Gamma(1 - s) at s = 1 hits the reciprocal-gamma zero
        params = foxh.FoxHParams(1, 0, 0, 2, (), ((0.0, 1.0), (0.0, 1.0)))
        assert foxh.theta(params, 1.0) == 0.0

    def test_empty_products_are_unity(self):
        assert foxh.theta(foxh.EXP_KERNEL, 2.0) == pytest.approx(1.0, rel=1e-14)


class TestFoxHParams:
    def test_validation(self):
        with pytest.raises(ParameterError):
            foxh.FoxHParams(0, 0, 0, 1, (), ((0.0, 1.0),))  # m < 1
        with pytest.raises(ParameterError):
            foxh.FoxHParams(1, 2, 1, 1, ((0.0, 1.0),), ((0.0, 1.0),))  # n > p
        with pytest.raises(ParameterError):
            foxh.FoxHParams(1, 0, 0, 1, (), ((0.0, -1.0),))  # B <= 0

    def test_pole_separation_enforced(self):
        # upper pair (1, 1) puts the right family at s = 0, colliding with
        # the left family of the lower pair (0, 1)
        with pytest.raises(ContourError):
            foxh.FoxHParams(1, 1, 1, 1, ((1.0, 1.0),), ((0.0, 1.0),))

    def test_construction_matches_offset_feasibility(self):
        params = foxh.ratio_cdf_kernel(3.5, 2.8, 1.5 / 1.1)
        c = foxh.choose_contour_offset(params)
        assert params.left_pole_bound < c < params.right_pole_bound


class TestChooseContourOffset:
    def test_unbounded_right_family(self):
        assert foxh.choose_contour_offset(foxh.EXP_KERNEL) == 1.0

    def test_pdf_kernel_midpoint(self):
        params = foxh.ratio_pdf_kernel(1.0, 1.0, 1.0)
        assert foxh.choose_contour_offset(params) == pytest.approx(1.0)

    def test_cdf_kernel_strictly_inside(self):
        mu1, mu2 = 3.5, 2.8
        for k in (0.8 / 1.3, 1.5 / 1.1, 2.0 / 2.0, 3.9 / 1.3):
            params = foxh.ratio_cdf_kernel(mu1, mu2, k)
            c = foxh.choose_contour_offset(params)
            assert 0.0 < c < mu1
            # strictly separates the two families
            left_poles = [-h for h in range(6)]
            right_poles = [mu1 + h for h in range(6)]
            right_poles += [(k * mu1 + mu2 + h) / k for h in range(6)]
            assert max(left_poles) < c < min(right_poles)

    def test_override_respected(self):
        cfg = foxh.QuadratureConfig(contour_offset_override=0.3)
        params = foxh.ratio_cdf_kernel(1.0, 1.0, 1.0)
        assert foxh.choose_contour_offset(params, cfg) == 0.3
        with pytest.raises(ContourError):
            foxh.choose_contour_offset(
                params, foxh.QuadratureConfig(contour_offset_override=5.0))


class TestContour:
    def test_exp_identity_points(self):
        assert foxh.foxh_contour(foxh.EXP_KERNEL, 1.0) == pytest.approx(
            math.exp(-1.0), rel=1e-10)
        assert foxh.foxh_contour(foxh.EXP_KERNEL, 5.0) == pytest.approx(
            math.exp(-5.0), rel=1e-10)

    def test_exp_ratio_cdf_at_one(self):
        # k = 1, z = 1 sits on the series boundary; the contour handles it
        h2 = foxh.foxh_contour(foxh.ratio_cdf_kernel(1.0, 1.0, 1.0), 1.0)
        assert h2 == pytest.approx(0.5, rel=1e-10)

    def test_override_still_converges(self):
        cfg = foxh.QuadratureConfig(contour_offset_override=1.0)
        assert foxh.foxh_contour(foxh.EXP_KERNEL, 1.0, cfg) == pytest.approx(
            math.exp(-1.0), rel=1e-9)

    def test_tolerance_monotonicity(self):
        # halving rel_tol never moves the result by more than the looser one
        for z in (0.2, 1.0, 7.0):
            loose = foxh.foxh_contour(foxh.ratio_pdf_kernel(2.8, 1.0, 0.5), z,
                                      foxh.QuadratureConfig(rel_tol=1e-6))
            tight = foxh.foxh_contour(foxh.ratio_pdf_kernel(2.8, 1.0, 0.5), z,
                                      foxh.QuadratureConfig(rel_tol=5e-7))
            assert abs(tight - loose) <= 1e-6 * abs(loose)

    def test_domain_error(self):
        with pytest.raises(DomainError):
            foxh.foxh_contour(foxh.EXP_KERNEL, -1.0)

    def test_nonconvergence_error(self):
        # Gamma(s)/Gamma(3+s) decays only like |t|^-3: the tail cannot meet
        # rel_tol before the truncation budget runs out
        slow = foxh.FoxHParams(1, 0, 1, 1, ((3.0, 1.0),), ((0.0, 1.0),))
        cfg = foxh.QuadratureConfig(initial_half_length=20.0, max_half_length=80.0)
        with pytest.raises(NonConvergenceError):
            foxh.foxh_contour(slow, 0.5, cfg)


class TestSeries:
    def test_h1_leading_term(self):
        # k = 0.5, mu = (2, 1): h = 0 term alone is Gamma(2) = 1
        assert foxh.foxh_series_h1(2.0, 1.0, 0.5, 1e-14) == pytest.approx(1.0, rel=1e-12)

    def test_h1_against_contour_oracle(self):
        assert foxh.foxh_series_h1(1.0, 1.0, 1.0, 0.5) == pytest.approx(
            H1_K1_Z05, rel=1e-8)
        assert foxh.foxh_series_h1(1.0, 1.0, 2.0, 3.0) == pytest.approx(
            H1_K2_Z3, rel=1e-8)
        assert foxh.foxh_series_h1(2.0, 1.0, 0.5, 0.2) == pytest.approx(
            foxh.foxh_contour(foxh.ratio_pdf_kernel(2.0, 1.0, 0.5), 0.2), rel=1e-8)

    def test_h2_leading_term(self):
        # k <= 1 branch, h = 0 term: Gamma(k mu1 + mu2) / mu1 = Gamma(2)/2
        assert foxh.foxh_series_h2(2.0, 1.0, 0.5, 1e-14) == pytest.approx(0.5, rel=1e-12)

    def test_h2_against_contour_oracle(self):
        got = foxh.foxh_series_h2(1.0, 1.0, 1.0, 0.25)
        ref = foxh.foxh_contour(foxh.ratio_cdf_kernel(1.0, 1.0, 1.0), 0.25)
        assert got == pytest.approx(ref, rel=1e-8)
        assert foxh.foxh_series_h2(1.5, 0.8, 2.0, 4.0) == pytest.approx(
            H2_K2_Z4, rel=1e-7)

    def test_h2_exponential_closed_form(self):
        # z H2(z) = z/(1+z) for the unit-exponential quotient
        for z in (0.25, 0.5, 4.0, 9.0):
            assert z * foxh.foxh_series_h2(1.0, 1.0, 1.0, z) == pytest.approx(
                z / (1.0 + z), rel=1e-10)

    def test_h3_leading_term(self):
        assert foxh.foxh_series_h3(1.0, 2.0, 0.5, 1e-14) == pytest.approx(
            math.gamma(0.5 + 2.0), rel=1e-12)

    def test_h3_against_contour_oracle(self):
        assert foxh.foxh_series_h3(1.0, 1.0, 1.0, 0.5) == pytest.approx(
            H1_K1_Z05, rel=1e-8)
        assert foxh.foxh_series_h3(1.0, 2.0, 2.0, 2.0) == pytest.approx(
            H3_TWIN_K2_Z2, rel=1e-8)
        twin = foxh.foxh_contour(foxh.series_twin_kernel(1.0, 2.0, 2.0), 2.0)
        assert foxh.foxh_series_h3(1.0, 2.0, 2.0, 2.0) == pytest.approx(twin, rel=1e-8)

    def test_boundary_rejected(self):
        with pytest.raises(DomainError):
            foxh.foxh_series_h1(1.0, 1.0, 1.0, 1.0)
        with pytest.raises(DomainError):
            foxh.foxh_series_h2(2.0, 0.5, 1.0, 1.0)

    def test_term_blowup_raises(self):
        # ascending branch far outside its numerically usable range
        with pytest.raises((DivergenceError, OverflowError)):
            foxh.foxh_series_h1(1.0, 1.0, 0.999, 1e9,
                                foxh.SeriesConfig(max_terms=500))

    def test_branch_selection_at_k1(self):
        below = foxh.foxh_series_h1(1.0, 1.0, 1.0, 0.5)
        above = foxh.foxh_series_h1(1.0, 1.0, 1.0, 2.0)
        # exponential quotient kernel: H1 = (1+z)^-2
        assert below == pytest.approx((1.5) ** -2, rel=1e-10)
        assert above == pytest.approx((3.0) ** -2, rel=1e-10)


class TestSeriesContourAgreement:
    GRID_K = (0.25, 0.5, 1.0, 2.0, 4.0)
    GRID_MU = (0.6, 1.0, 2.8, 4.5)

    @pytest.mark.parametrize("k", GRID_K)
    def test_h1_h2_grid(self, k):
        for mu1 in self.GRID_MU:
            for mu2 in self.GRID_MU:
                zs = (0.5, 2.0) if k == 1.0 else (0.4, 2.5)
                for z in zs:
                    c1 = foxh.foxh_contour(foxh.ratio_pdf_kernel(mu1, mu2, k), z)
                    s1 = foxh.foxh_series_h1(mu1, mu2, k, z)
                    assert abs(s1 - c1) <= 1e-6 * abs(c1)
                    c2 = foxh.foxh_contour(foxh.ratio_cdf_kernel(mu1, mu2, k), z)
                    s2 = foxh.foxh_series_h2(mu1, mu2, k, z)
                    assert abs(s2 - c2) <= 1e-6 * abs(c2)


class TestMeijerG:
    def test_exp_identity(self):
        params = foxh.FoxHParams(1, 0, 0, 1, (), ((0.0, 1.0),))
        assert foxh.meijer_g(params, 2.0) == pytest.approx(math.exp(-2.0), rel=1e-10)

    def test_weight_validation(self):
        params = foxh.ratio_pdf_kernel(1.0, 1.0, 0.5)  # carries weight k = 0.5
        with pytest.raises(ParameterError):
            foxh.meijer_g(params, 1.0)

    def test_nakagami_quotient_pdf_kernel(self):
        # G^{1,1}_{1,1}[z | -1; 0] = (1+z)^-2: exponential-quotient density at 1
        params = foxh.FoxHParams(1, 1, 1, 1, ((-1.0, 1.0),), ((0.0, 1.0),))
        assert foxh.meijer_g(params, 1.0) == pytest.approx(0.25, rel=1e-10)

    def test_rayleigh_quotient_cdf_kernel(self):
        # z G^{1,2}_{2,2}[z | 0,-1; 0,-1] = z/(1+z): equals 0.5 at z = 1
        params = foxh.FoxHParams(1, 2, 2, 2, ((0.0, 1.0), (-1.0, 1.0)),
                                 ((0.0, 1.0), (-1.0, 1.0)))
        assert 1.0 * foxh.meijer_g(params, 1.0) == pytest.approx(0.5, rel=1e-10)


class TestConfigs:
    def test_quadrature_validation(self):
        with pytest.raises(ParameterError):
            foxh.QuadratureConfig(rel_tol=2.0)
        with pytest.raises(ParameterError):
            foxh.QuadratureConfig(initial_half_length=100.0, max_half_length=50.0)

    def test_series_validation(self):
        with pytest.raises(ParameterError):
            foxh.SeriesConfig(max_terms=2, consecutive_small_terms=5)
