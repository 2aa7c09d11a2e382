"""Statistics of the quotient X = SNR1 / SNR2 of two independent links.

PDF, CDF and MGF are prefactored Fox H instances of the argument
z = (x * beta2 / beta1)^(alpha1/2); fractional moments are a closed gamma
product.  Each H value is obtained either from its residue series or from
the Mellin-Barnes contour; the auto policy prefers the series inside its
branch domain when the alternating terms do not cancel catastrophically
and falls back to the contour otherwise (always, for the MGF: the MGF
kernel has no usable residue series).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from . import foxh
from .dists import AlphaMuChannel
from .errors import (
    DivergenceError,
    DomainError,
    NonConvergenceError,
    NumericalError,
    ParameterError,
)

__all__ = [
    "EvalMethod",
    "RatioPair",
    "SpecialCaseKind",
    "ratio_pdf",
    "ratio_cdf",
    "ratio_mgf",
    "ratio_moment",
    "make_special_case",
]

# nats of predicted alternating-term cancellation before the series is not
# even attempted (cheap a-priori filter, peak over the leading term)
_CANCEL_LIMIT = 9.0
# nats of cancellation actually absorbed by a finished series sum (peak over
# the result) beyond which its value is discarded for the contour
_POST_CANCEL_LIMIT = 11.5
# fractional distance to the |z| = 1 branch boundary required at k = 1
_BOUNDARY_MARGIN = 0.1


class EvalMethod(enum.Enum):
    AUTO = "auto"
    SERIES = "series"
    CONTOUR = "contour"


@dataclass(frozen=True)
class RatioPair:
    """Ordered pair of independent links defining X = num / den."""

    num: AlphaMuChannel
    den: AlphaMuChannel
    policy: EvalMethod = EvalMethod.AUTO
    quad: foxh.QuadratureConfig = field(default_factory=foxh.QuadratureConfig)
    series: foxh.SeriesConfig = field(default_factory=foxh.SeriesConfig)

    def __post_init__(self):
        if isinstance(self.policy, str):
            object.__setattr__(self, "policy", EvalMethod(self.policy))

    @property
    def k(self) -> float:
        """Shape ratio alpha1 / alpha2 of the two links."""
        return self.num.alpha / self.den.alpha

    def swapped(self) -> "RatioPair":
        """The reciprocal quotient den / num."""
        return RatioPair(self.den, self.num, self.policy, self.quad, self.series)


def _kernel_argument(pair: RatioPair, x: float) -> float:
    return math.exp(0.5 * pair.num.alpha
                    * (math.log(x) + math.log(pair.den.beta) - math.log(pair.num.beta)))


def _series_ok(pair: RatioPair, kind: str, z: float) -> bool:
    k = pair.k
    if k == 1.0 and abs(z - 1.0) < _BOUNDARY_MARGIN:
        return False
    exponent = foxh.series_cancellation_exponent(
        kind, pair.num.mu, pair.den.mu, k, z, scan=pair.series.max_terms)
    return exponent <= _CANCEL_LIMIT


def _h_value(pair: RatioPair, kind: str, z: float) -> tuple[float, float]:
    """(mantissa, log_scale) of the PDF/CDF kernel at z under the policy."""
    mu1, mu2, k = pair.num.mu, pair.den.mu, pair.k
    if pair.policy is EvalMethod.SERIES:
        series_fn = foxh.foxh_series_h1 if kind == "h1" else foxh.foxh_series_h2
        return series_fn(mu1, mu2, k, z, pair.series), 0.0
    if pair.policy is EvalMethod.AUTO and _series_ok(pair, kind, z):
        try:
            value, absorbed = foxh._series_eval(kind, mu1, mu2, k, z, pair.series)
            if absorbed <= _POST_CANCEL_LIMIT:
                return value, 0.0
            # heavy cancellation slipped past the a-priori probe: discard
        except (NonConvergenceError, DivergenceError, OverflowError):
            pass  # the contour is the robust fallback
    kernel_fn = foxh.ratio_pdf_kernel if kind == "h1" else foxh.ratio_cdf_kernel
    return foxh._contour_parts(kernel_fn(mu1, mu2, k), z, pair.quad)


def ratio_pdf(pair: RatioPair, x: float) -> float:
    """Density of X = num/den at x > 0."""
    if x <= 0.0:
        raise DomainError(f"quotient argument must be positive, got x={x}")
    a1, mu1, mu2 = pair.num.alpha, pair.num.mu, pair.den.mu
    lb_ratio = math.log(pair.den.beta) - math.log(pair.num.beta)
    log_pre = (math.log(0.5 * a1) + (0.5 * a1 * mu1 - 1.0) * math.log(x)
               + 0.5 * a1 * mu1 * lb_ratio - math.lgamma(mu1) - math.lgamma(mu2))
    mantissa, log_scale = _h_value(pair, "h1", _kernel_argument(pair, x))
    val = mantissa * math.exp(log_scale + log_pre)
    if val < -1e-9:
        raise NumericalError(f"quotient density came out negative at x={x}: {val:.3e}")
    return max(val, 0.0)


def ratio_cdf(pair: RatioPair, x: float) -> float:
    """CDF of X = num/den at x >= 0, clamped to [0, 1] within 1e-9 slack."""
    if x < 0.0:
        raise DomainError(f"quotient argument must be non-negative, got x={x}")
    if x == 0.0:
        return 0.0
    a1, mu1, mu2 = pair.num.alpha, pair.num.mu, pair.den.mu
    lb_ratio = math.log(pair.den.beta) - math.log(pair.num.beta)
    log_pre = (0.5 * a1 * mu1 * (math.log(x) + lb_ratio)
               - math.lgamma(mu1) - math.lgamma(mu2))
    mantissa, log_scale = _h_value(pair, "h2", _kernel_argument(pair, x))
    val = mantissa * math.exp(log_scale + log_pre)
    if val < 0.0:
        if val < -1e-9:
            raise NumericalError(f"quotient CDF came out negative at x={x}: {val:.3e}")
        return 0.0
    if val > 1.0:
        if val > 1.0 + 1e-9:
            raise NumericalError(f"quotient CDF exceeded 1 at x={x}: {val:.12g}")
        return 1.0
    if val >= 1.0 - 1e-12:  # far tail: below the evaluators' noise floor
        return 1.0
    return val


def ratio_mgf(pair: RatioPair, s: float) -> float:
    """E[exp(-s X)] for s > 0, always via the contour route."""
    if s <= 0.0:
        raise DomainError(f"mgf argument must be positive, got s={s}")
    a1, mu1, mu2 = pair.num.alpha, pair.num.mu, pair.den.mu
    log_arg = math.log(pair.den.beta) - math.log(pair.num.beta) - math.log(s)
    z = math.exp(0.5 * a1 * log_arg)
    log_pre = (math.log(0.5 * a1) + 0.5 * a1 * mu1 * log_arg
               - math.lgamma(mu1) - math.lgamma(mu2))
    kernel = foxh.ratio_mgf_kernel(mu1, mu2, pair.k, a1)
    mantissa, log_scale = foxh._contour_parts(kernel, z, pair.quad)
    val = mantissa * math.exp(log_scale + log_pre)
    if val < -1e-9:
        raise NumericalError(f"quotient MGF came out negative at s={s}: {val:.3e}")
    return max(val, 0.0)


def ratio_moment(pair: RatioPair, n_order: float) -> float:
    """E[X^n] = (beta1/beta2)^n Gamma(mu1+2n/a1) Gamma(mu2-2n/a2) / (Gamma(mu1) Gamma(mu2)).

    Finite only while 2n < mu2 * alpha2 (the denominator tail).
    """
    if n_order < 0.0:
        raise DomainError(f"moment order must be non-negative, got {n_order}")
    if n_order == 0.0:
        return 1.0
    a1, mu1 = pair.num.alpha, pair.num.mu
    a2, mu2 = pair.den.alpha, pair.den.mu
    if 2.0 * n_order >= mu2 * a2:
        raise DivergenceError(
            f"moment of order {n_order} diverges (needs 2n < mu2*alpha2 = {mu2 * a2:.6g})"
        )
    return math.exp(n_order * (math.log(pair.num.beta) - math.log(pair.den.beta))
                    + math.lgamma(mu1 + 2.0 * n_order / a1)
                    + math.lgamma(mu2 - 2.0 * n_order / a2)
                    - math.lgamma(mu1) - math.lgamma(mu2))


# ---------------------------------------------------------------------------
# classical-fading special cases
# ---------------------------------------------------------------------------

class SpecialCaseKind(enum.Enum):
    """The nine quotient families of classical marginals."""

    NAKAGAMI_OVER_NAKAGAMI = ("nakagami", "nakagami")
    NAKAGAMI_OVER_WEIBULL = ("nakagami", "weibull")
    NAKAGAMI_OVER_RAYLEIGH = ("nakagami", "rayleigh")
    WEIBULL_OVER_WEIBULL = ("weibull", "weibull")
    WEIBULL_OVER_NAKAGAMI = ("weibull", "nakagami")
    WEIBULL_OVER_RAYLEIGH = ("weibull", "rayleigh")
    RAYLEIGH_OVER_RAYLEIGH = ("rayleigh", "rayleigh")
    RAYLEIGH_OVER_NAKAGAMI = ("rayleigh", "nakagami")
    RAYLEIGH_OVER_WEIBULL = ("rayleigh", "weibull")


def _special_channel(family: str, side: int, m: float | None, alpha: float | None,
                     mean_snr: float) -> AlphaMuChannel:
    if family == "nakagami":
        if m is None:
            raise ParameterError(f"Nakagami side {side} requires its shape m")
        return AlphaMuChannel.from_mean_snr(2.0, m, mean_snr)
    if family == "weibull":
        if alpha is None:
            raise ParameterError(f"Weibull side {side} requires its shape alpha")
        return AlphaMuChannel.from_mean_snr(alpha, 1.0, mean_snr)
    return AlphaMuChannel.from_mean_snr(2.0, 1.0, mean_snr)


def make_special_case(kind: SpecialCaseKind, *,
                      m1: float | None = None, alpha1: float | None = None,
                      m2: float | None = None, alpha2: float | None = None,
                      mean_snr1: float = 1.0, mean_snr2: float = 1.0,
                      policy: EvalMethod = EvalMethod.AUTO) -> RatioPair:
    """Quotient of two classical marginals via their alpha-mu embeddings.

    Nakagami-m sides take ``m`` (alpha = 2, mu = m), Weibull sides take
    ``alpha`` (mu = 1), Rayleigh sides take no shape (alpha = 2, mu = 1).
    """
    fam1, fam2 = kind.value
    num = _special_channel(fam1, 1, m1, alpha1, mean_snr1)
    den = _special_channel(fam2, 2, m2, alpha2, mean_snr2)
    return RatioPair(num, den, policy)
