"""alpha-mu fading primitives.

Envelope and SNR densities/CDFs, (inverse) moments, and exact sampling.
The envelope R with non-linearity ``alpha`` and cluster number ``mu``
satisfies mu * (R/r_hat)^alpha ~ Gamma(mu, 1), which gives closed forms for
every statistic here and an exact sampler (gamma variate, power transform).
The SNR variable is gamma_t * R^2 with scale beta = gamma_t * r_hat^2 /
mu^(2/alpha); its mean is beta * Gamma(mu + 2/alpha) / Gamma(mu).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DivergenceError, DomainError, NonConvergenceError, ParameterError

__all__ = [
    "AlphaMuChannel",
    "SampleStream",
    "envelope_pdf",
    "envelope_cdf",
    "envelope_moment",
    "inverse_envelope_moment",
    "regularized_lower_gamma",
    "snr_pdf",
    "snr_cdf",
    "sample_envelope",
    "sample_snr",
]


@dataclass(frozen=True)
class AlphaMuChannel:
    """Fading parameters of one alpha-mu link.

    Parameters
    ----------
    alpha : float
        Non-linearity of the propagation environment (> 0).
    mu : float
        Number of multipath clusters (> 0, real).
    r_hat : float
        alpha-root mean value of the envelope, E[R^alpha]^(1/alpha).
    gamma_t : float
        Transmit SNR (linear scale) of the SNR variable gamma_t * R^2.

    ``from_mean_snr`` builds a channel directly from the average received
    SNR (unit envelope scale); ``scaled`` rescales the mean SNR.
    """

    alpha: float
    mu: float
    r_hat: float = 1.0
    gamma_t: float = 1.0

    def __post_init__(self):
        for name in ("alpha", "mu", "r_hat", "gamma_t"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0.0):
                raise ParameterError(f"{name} must be a positive finite real, got {v!r}")
        # scale round trip: mean_snr == beta * Gamma(mu+2/a)/Gamma(mu)
        lhs = self.mean_snr
        rhs = self.beta * math.exp(math.lgamma(self.mu + 2.0 / self.alpha)
                                   - math.lgamma(self.mu))
        if abs(lhs - rhs) > 1e-12 * abs(lhs):
            raise ParameterError("inconsistent derived scale parameters")

    @property
    def beta(self) -> float:
        """SNR scale parameter, gamma_t * r_hat^2 / mu^(2/alpha)."""
        return self.gamma_t * self.r_hat**2 * self.mu ** (-2.0 / self.alpha)

    @property
    def mean_snr(self) -> float:
        """Average received SNR (linear)."""
        return (self.r_hat**2 * self.gamma_t
                * math.exp(math.lgamma(self.mu + 2.0 / self.alpha) - math.lgamma(self.mu))
                * self.mu ** (-2.0 / self.alpha))

    @classmethod
    def from_mean_snr(cls, alpha: float, mu: float, mean_snr: float) -> "AlphaMuChannel":
        """Channel with unit envelope scale and the given average SNR."""
        if not (mean_snr > 0.0 and math.isfinite(mean_snr)):
            raise ParameterError(f"mean_snr must be positive, got {mean_snr!r}")
        gamma_t = (mean_snr * mu ** (2.0 / alpha)
                   * math.exp(math.lgamma(mu) - math.lgamma(mu + 2.0 / alpha)))
        return cls(alpha, mu, 1.0, gamma_t)

    def scaled(self, factor: float) -> "AlphaMuChannel":
        """Same fading shape with the mean SNR multiplied by ``factor``."""
        if factor <= 0.0:
            raise ParameterError("scale factor must be positive")
        return AlphaMuChannel(self.alpha, self.mu, self.r_hat, self.gamma_t * factor)


@dataclass(frozen=True)
class SampleStream:
    """Reproducible sample request: (seed, stream_id) fixes the variates."""

    seed: int
    count: int
    stream_id: int = 0

    def __post_init__(self):
        if self.count <= 0:
            raise ParameterError("count must be positive")

    def generator(self) -> np.random.Generator:
        # counter-based generator keyed by (seed, stream_id): distinct
        # stream ids never share state
        seq = np.random.SeedSequence(self.seed, spawn_key=(self.stream_id,))
        return np.random.Generator(np.random.Philox(seed=seq))


# ---------------------------------------------------------------------------
# envelope statistics
# ---------------------------------------------------------------------------

def envelope_pdf(ch: AlphaMuChannel, r: float) -> float:
    """Density of the fading envelope at r > 0."""
    if r <= 0.0:
        raise DomainError(f"envelope argument must be positive, got r={r}")
    a, mu, rh = ch.alpha, ch.mu, ch.r_hat
    log_f = (math.log(a) + mu * math.log(mu) + (a * mu - 1.0) * math.log(r)
             - a * mu * math.log(rh) - math.lgamma(mu) - mu * (r / rh) ** a)
    return math.exp(log_f)


def envelope_cdf(ch: AlphaMuChannel, r: float) -> float:
    """CDF of the fading envelope (regularized lower incomplete gamma)."""
    if r < 0.0:
        raise DomainError(f"envelope argument must be non-negative, got r={r}")
    if r == 0.0:
        return 0.0
    return regularized_lower_gamma(ch.mu, ch.mu * (r / ch.r_hat) ** ch.alpha)


def envelope_moment(ch: AlphaMuChannel, n_order: float) -> float:
    """E[R^n] = r_hat^n Gamma(mu + n/alpha) / (mu^(n/alpha) Gamma(mu))."""
    a, mu = ch.alpha, ch.mu
    if mu + n_order / a <= 0.0:
        raise DivergenceError(f"moment of order {n_order} diverges (needs n > -mu*alpha)")
    return math.exp(n_order * math.log(ch.r_hat)
                    + math.lgamma(mu + n_order / a)
                    - (n_order / a) * math.log(mu) - math.lgamma(mu))


def inverse_envelope_moment(ch: AlphaMuChannel, n_order: float) -> float:
    """E[R^-n] = r_hat^-n mu^(n/alpha) Gamma(mu - n/alpha) / Gamma(mu).

    Finite only for n < mu * alpha.
    """
    a, mu = ch.alpha, ch.mu
    if n_order >= mu * a:
        raise DivergenceError(
            f"inverse moment of order {n_order} diverges (needs n < mu*alpha = {mu * a:.6g})"
        )
    return math.exp(-n_order * math.log(ch.r_hat)
                    + (n_order / a) * math.log(mu)
                    + math.lgamma(mu - n_order / a) - math.lgamma(mu))


# ---------------------------------------------------------------------------
# regularized lower incomplete gamma
# ---------------------------------------------------------------------------

def regularized_lower_gamma(z: float, y: float) -> float:
    """P(z, y), by power series for y < z+1 and continued fraction otherwise."""
    if z <= 0.0:
        raise DomainError(f"shape argument must be positive, got z={z}")
    if y < 0.0:
        raise DomainError(f"integration limit must be non-negative, got y={y}")
    if y == 0.0:
        return 0.0
    log_pre = z * math.log(y) - y - math.lgamma(z)
    if y < z + 1.0:
        ap = z
        term = 1.0 / z
        total = term
        for _ in range(500):
            ap += 1.0
            term *= y / ap
            total += term
            if abs(term) < 1e-16 * abs(total):
                return min(1.0, total * math.exp(log_pre))
        raise NonConvergenceError("incomplete-gamma series did not converge")
    # modified Lentz continued fraction for the upper tail Q(z, y)
    tiny = 1e-300
    b = y + 1.0 - z
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 500):
        an = -i * (i - z)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            return 1.0 - math.exp(log_pre) * h
    raise NonConvergenceError("incomplete-gamma continued fraction did not converge")


# ---------------------------------------------------------------------------
# SNR statistics
# ---------------------------------------------------------------------------

def snr_pdf(ch: AlphaMuChannel, snr: float) -> float:
    """Density of the received SNR gamma_t * R^2 at snr > 0."""
    if snr <= 0.0:
        raise DomainError(f"snr must be positive, got {snr}")
    a, mu, beta = ch.alpha, ch.mu, ch.beta
    half_a = 0.5 * a
    log_f = (math.log(half_a) + (half_a * mu - 1.0) * math.log(snr)
             - half_a * mu * math.log(beta) - math.lgamma(mu)
             - (snr / beta) ** half_a)
    return math.exp(log_f)


def snr_cdf(ch: AlphaMuChannel, snr: float) -> float:
    """CDF of the received SNR, P(mu, (snr/beta)^(alpha/2))."""
    if snr < 0.0:
        raise DomainError(f"snr must be non-negative, got {snr}")
    if snr == 0.0:
        return 0.0
    return regularized_lower_gamma(ch.mu, (snr / ch.beta) ** (0.5 * ch.alpha))


# ---------------------------------------------------------------------------
# sampling
# ---------------------------------------------------------------------------

def sample_envelope(ch: AlphaMuChannel, stream: SampleStream) -> np.ndarray:
    """Exact envelope draws: R = r_hat * (G/mu)^(1/alpha), G ~ Gamma(mu, 1)."""
    g = stream.generator().standard_gamma(ch.mu, stream.count)
    return ch.r_hat * (g / ch.mu) ** (1.0 / ch.alpha)


def sample_snr(ch: AlphaMuChannel, stream: SampleStream) -> np.ndarray:
    """Exact SNR draws: beta * G^(2/alpha), G ~ Gamma(mu, 1)."""
    g = stream.generator().standard_gamma(ch.mu, stream.count)
    return ch.beta * g ** (2.0 / ch.alpha)
