import math

import numpy as np
import pytest
import scipy.integrate as integrate
import scipy.special as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from amratio import dists
from amratio.dists import AlphaMuChannel, SampleStream
from amratio.errors import DivergenceError, DomainError, ParameterError
from amratio.mc import empirical_ks

# arbitrary-precision oracles, computed before the build
ENVELOPE_PDF_ORACLE = 0.7718176499690713  # alpha=1.5 mu=2.5 r_hat=1.3 at r=1
REG_GAMMA_ORACLE = 0.8074495669206042  # P(2.5, 3.7)

KS_CRIT_1PCT = 1.63  # c(0.01) * sqrt(N) for the sampler-law checks


class TestAlphaMuChannel:
    def test_validation(self):
        with pytest.raises(ParameterError):
            AlphaMuChannel(-1.0, 1.0)
        with pytest.raises(ParameterError):
            AlphaMuChannel(2.0, 0.0)
        with pytest.raises(ParameterError):
            AlphaMuChannel.from_mean_snr(2.0, 1.0, -3.0)

    def test_scale_round_trip(self):
        ch = AlphaMuChannel(3.1, 2.2, 1.7, 4.0)
        back = ch.beta * math.gamma(ch.mu + 2 / ch.alpha) / math.gamma(ch.mu)
        assert back == pytest.approx(ch.mean_snr, rel=1e-12)

    def test_from_mean_snr_round_trip(self):
        ch = AlphaMuChannel.from_mean_snr(1.5, 3.5, 2.75)
        assert ch.mean_snr == pytest.approx(2.75, rel=1e-12)

    def test_scaled(self):
        ch = AlphaMuChannel.from_mean_snr(2.0, 1.0, 1.0)
        assert ch.scaled(10.0).mean_snr == pytest.approx(10.0, rel=1e-12)
        assert ch.scaled(10.0).alpha == ch.alpha

    def test_rayleigh_beta_equals_mean(self):
        ch = AlphaMuChannel.from_mean_snr(2.0, 1.0, 3.7)
        assert ch.beta == pytest.approx(3.7, rel=1e-12)


class TestEnvelopePdf:
    def test_rayleigh_point(self):
        ch = AlphaMuChannel(2.0, 1.0)
        assert dists.envelope_pdf(ch, 1.0) == pytest.approx(2 * math.exp(-1), rel=1e-12)

    def test_normalization(self):
        for ch in (AlphaMuChannel(2.0, 1.0), AlphaMuChannel(1.5, 2.5, 1.3),
                   AlphaMuChannel(3.5, 0.6)):
            val, _ = integrate.quad(lambda r: dists.envelope_pdf(ch, r), 0, np.inf)
            assert val == pytest.approx(1.0, abs=1e-10)

    def test_high_precision_oracle(self):
        ch = AlphaMuChannel(1.5, 2.5, 1.3)
        assert dists.envelope_pdf(ch, 1.0) == pytest.approx(ENVELOPE_PDF_ORACLE, rel=1e-13)

    def test_domain(self):
        with pytest.raises(DomainError):
            dists.envelope_pdf(AlphaMuChannel(2.0, 1.0), 0.0)


class TestEnvelopeMoments:
    def test_alpha_moment_is_rhat(self):
        ch = AlphaMuChannel(1.7, 2.3, 1.9)
        assert dists.envelope_moment(ch, ch.alpha) == pytest.approx(
            ch.r_hat**ch.alpha, rel=1e-12)

    def test_rayleigh_second_moment(self):
        assert dists.envelope_moment(AlphaMuChannel(2.0, 1.0), 2.0) == pytest.approx(1.0)

    def test_against_sampler(self):
        ch = AlphaMuChannel(1.5, 2.5, 2.0)
        r = dists.sample_envelope(ch, SampleStream(seed=11, count=1_000_000))
        m3 = r**3
        se = m3.std() / math.sqrt(m3.size)
        assert abs(dists.envelope_moment(ch, 3.0) - m3.mean()) <= 3 * se

    def test_inverse_moment_gamma_identity(self):
        # R^2 of a (2, 2) channel is Gamma(2, 1/2); E[1/R^2] = 2
        assert dists.inverse_envelope_moment(AlphaMuChannel(2.0, 2.0), 2.0) == (
            pytest.approx(2.0, rel=1e-12))

    def test_inverse_moment_vanishing_order(self):
        assert dists.inverse_envelope_moment(AlphaMuChannel(2.0, 1.5), 1e-12) == (
            pytest.approx(1.0, rel=1e-9))

    def test_inverse_moment_divergence(self):
        with pytest.raises(DivergenceError):
            dists.inverse_envelope_moment(AlphaMuChannel(2.0, 1.0), 2.0)

    def test_moment_product_bound(self):
        # Cauchy-Schwarz: E[R^n] E[R^-n] >= 1 when both exist
        for ch in (AlphaMuChannel(2.0, 2.0), AlphaMuChannel(1.5, 3.0, 1.4)):
            for n in (0.5, 1.0, 2.0):
                prod = dists.envelope_moment(ch, n) * dists.inverse_envelope_moment(ch, n)
                assert prod >= 1.0 - 1e-12


class TestRegularizedLowerGamma:
    def test_anchor_values(self):
        assert dists.regularized_lower_gamma(1.0, 1.0) == pytest.approx(
            1 - math.exp(-1), rel=1e-14)
        assert dists.regularized_lower_gamma(2.5, 3.7) == pytest.approx(
            REG_GAMMA_ORACLE, rel=1e-13)

    def test_zero_limit(self):
        for z in (0.3, 1.0, 7.5):
            assert dists.regularized_lower_gamma(z, 0.0) == 0.0

    def test_against_scipy(self):
        # independent oracle across both internal branches
        for z in (0.2, 0.9, 2.5, 8.0, 40.0):
            for y in (1e-6, 0.5 * z, z + 0.5, z + 20.0):
                assert dists.regularized_lower_gamma(z, y) == pytest.approx(
                    float(sp.gammainc(z, y)), rel=1e-12, abs=1e-300)

    def test_domain(self):
        with pytest.raises(DomainError):
            dists.regularized_lower_gamma(0.0, 1.0)
        with pytest.raises(DomainError):
            dists.regularized_lower_gamma(1.0, -1.0)

    @given(st.floats(0.1, 30.0), st.floats(0.0, 60.0), st.floats(0.0, 60.0))
    @settings(max_examples=60, deadline=None)
    def test_monotone_in_y(self, z, y1, y2):
        lo, hi = sorted((y1, y2))
        p_lo = dists.regularized_lower_gamma(z, lo)
        p_hi = dists.regularized_lower_gamma(z, hi)
        assert 0.0 <= p_lo <= p_hi <= 1.0


class TestSnrStatistics:
    def test_rayleigh_is_exponential(self):
        ch = AlphaMuChannel.from_mean_snr(2.0, 1.0, 2.0)
        beta = ch.beta
        assert dists.snr_pdf(ch, 1.0) == pytest.approx(math.exp(-1 / beta) / beta, rel=1e-12)
        assert dists.snr_cdf(ch, beta) == pytest.approx(1 - math.exp(-1), rel=1e-12)

    def test_cdf_integrates_pdf(self):
        ch = AlphaMuChannel.from_mean_snr(3.5, 2.8, 1.0)
        for g in np.logspace(-1, 1, 7):
            val, _ = integrate.quad(lambda x: dists.snr_pdf(ch, x), 0, g)
            assert val == pytest.approx(dists.snr_cdf(ch, float(g)), abs=1e-8)

    def test_pdf_is_cdf_derivative(self):
        # central finite difference, h = 1e-5 * snr, within 1e-5 relative
        ch = AlphaMuChannel.from_mean_snr(2.7, 1.8, 1.0)
        for g in np.logspace(-1, 1, 9):
            g = float(g)
            h = 1e-5 * g
            diff = (dists.snr_cdf(ch, g + h) - dists.snr_cdf(ch, g - h)) / (2 * h)
            assert diff == pytest.approx(dists.snr_pdf(ch, g), rel=1e-5)

    def test_normalization(self):
        for alpha, mu in ((2.0, 2.5), (3.1, 1.0), (2.0, 1.0), (1.3, 0.7)):
            ch = AlphaMuChannel.from_mean_snr(alpha, mu, 1.5)
            val, _ = integrate.quad(lambda x: dists.snr_pdf(ch, x), 0, np.inf, limit=200)
            assert val == pytest.approx(1.0, abs=1e-8)

    def test_median_against_sampler(self):
        ch = AlphaMuChannel.from_mean_snr(3.5, 2.8, 1.0)
        snr = dists.sample_snr(ch, SampleStream(seed=5, count=1_000_000))
        med = float(np.median(snr))
        assert dists.snr_cdf(ch, med) == pytest.approx(0.5, abs=2e-3)

    def test_special_case_collapse(self):
        # Nakagami-m (alpha=2, mu=m): SNR is Gamma(m, beta)
        m, mean = 3.5, 2.0
        ch = AlphaMuChannel.from_mean_snr(2.0, m, mean)
        for g in (0.2, 1.0, 4.0):
            gamma_pdf = (g ** (m - 1) * math.exp(-g / ch.beta)
                         / (math.gamma(m) * ch.beta**m))
            assert dists.snr_pdf(ch, g) == pytest.approx(gamma_pdf, rel=1e-10)
        # Weibull (mu=1): power transform of an exponential
        a = 3.0
        ch = AlphaMuChannel.from_mean_snr(a, 1.0, 1.0)
        for g in (0.2, 1.0, 4.0):
            c = 0.5 * a
            weibull_pdf = c * g ** (c - 1) / ch.beta**c * math.exp(-((g / ch.beta) ** c))
            assert dists.snr_pdf(ch, g) == pytest.approx(weibull_pdf, rel=1e-10)
        # Rayleigh (alpha=2, mu=1): exponential SNR
        ch = AlphaMuChannel.from_mean_snr(2.0, 1.0, 1.0)
        assert dists.snr_pdf(ch, 1.0) == pytest.approx(math.exp(-1.0), rel=1e-10)


class TestSampling:
    def test_reproducible_streams(self):
        ch = AlphaMuChannel(2.2, 1.4)
        a = dists.sample_envelope(ch, SampleStream(seed=42, count=1000, stream_id=3))
        b = dists.sample_envelope(ch, SampleStream(seed=42, count=1000, stream_id=3))
        c = dists.sample_envelope(ch, SampleStream(seed=42, count=1000, stream_id=4))
        assert np.array_equal(a, b)
        assert not np.array_equal(a, c)

    def test_alpha_power_mean(self):
        ch = AlphaMuChannel(1.5, 2.5, 1.3)
        r = dists.sample_envelope(ch, SampleStream(seed=1, count=1_000_000))
        ra = r**ch.alpha
        se = ra.std() / math.sqrt(ra.size)
        assert abs(ra.mean() - ch.r_hat**ch.alpha) <= 3 * se

    def test_rayleigh_second_moment(self):
        ch = AlphaMuChannel(2.0, 1.0, 1.0)
        r = dists.sample_envelope(ch, SampleStream(seed=2, count=1_000_000))
        se = (r**2).std() / math.sqrt(r.size)
        assert abs((r**2).mean() - 1.0) <= 3 * se

    @pytest.mark.parametrize("alpha, mu", [(2.0, 3.5), (3.0, 1.0), (2.0, 1.0)])
    def test_sampler_law_ks(self, alpha, mu):
        # Nakagami / Weibull / Rayleigh collapse, 1% KS level at 1e6 draws
        ch = AlphaMuChannel.from_mean_snr(alpha, mu, 1.0)
        snr = dists.sample_snr(ch, SampleStream(seed=9, count=1_000_000))
        d = empirical_ks(snr, lambda g: dists.snr_cdf(ch, g))
        assert d < KS_CRIT_1PCT / math.sqrt(snr.size)

    def test_envelope_law_ks(self):
        ch = AlphaMuChannel(1.5, 2.5, 1.3)
        r = dists.sample_envelope(ch, SampleStream(seed=13, count=200_000))
        d = empirical_ks(r, lambda x: dists.envelope_cdf(ch, x))
        assert d < KS_CRIT_1PCT / math.sqrt(r.size)
