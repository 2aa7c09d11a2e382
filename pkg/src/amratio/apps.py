"""Wireless-performance applications of the quotient CDF.

Three scenarios: a secrecy-outage lower bound (wiretap channel), the outage
of an underlay cognitive relaying network (per-hop SNR is a gain quotient
scaled by the interference cap), and the outage of a full-duplex relay with
Rayleigh residual self-interference (interference-limited approximation).
"""

from __future__ import annotations

from dataclasses import dataclass

from .dists import AlphaMuChannel, snr_cdf
from .errors import ParameterError
from .ratio import RatioPair, ratio_cdf

__all__ = [
    "SecrecyScenario",
    "CognitiveScenario",
    "FullDuplexScenario",
    "sop_lower_bound",
    "cognitive_outage",
    "fullduplex_outage",
    "fullduplex_floor",
]


@dataclass(frozen=True)
class SecrecyScenario:
    """Wiretap channel: legitimate link, eavesdropper link, rate threshold."""

    main: AlphaMuChannel
    eve: AlphaMuChannel
    rate_threshold: float = 0.0  # bits/s/Hz

    def __post_init__(self):
        if self.rate_threshold < 0.0:
            raise ParameterError("rate_threshold must be non-negative")

    @property
    def tau1(self) -> float:
        """SNR-ratio threshold 2^rate (>= 1)."""
        return 2.0 ** self.rate_threshold


@dataclass(frozen=True)
class CognitiveScenario:
    """Underlay cognitive relaying: data links SR/RD, interference links SP/RP.

    The secondary transmitters invert the interference-link gain, so each
    hop SNR is interference_cap * (data gain / interference gain).
    """

    sr: AlphaMuChannel
    sp: AlphaMuChannel
    rd: AlphaMuChannel
    rp: AlphaMuChannel
    interference_cap: float  # tolerated interference-to-noise ratio, linear
    target_rate: float  # bits/s/Hz over the two hops

    def __post_init__(self):
        if self.interference_cap <= 0.0:
            raise ParameterError("interference_cap must be positive")
        if self.target_rate <= 0.0:
            raise ParameterError("target_rate must be positive")

    @property
    def tau2(self) -> float:
        """Per-hop SNR threshold 2^(2 rate) - 1 (half-duplex relaying)."""
        return 2.0 ** (2.0 * self.target_rate) - 1.0

    def hop_pairs(self) -> tuple[RatioPair, RatioPair]:
        """The two hop-SNR quotients with the cap folded into the numerator."""
        first = RatioPair(self.sr.scaled(self.interference_cap), self.sp)
        second = RatioPair(self.rd.scaled(self.interference_cap), self.rp)
        return first, second


@dataclass(frozen=True)
class FullDuplexScenario:
    """Two-hop full-duplex relay with Rayleigh residual self-interference.

    Hop SNRs carry the half power split: mean gamma_SR = E[g_SR] *
    system_snr / 2, likewise RD and the loop-back RR term.
    """

    sr: AlphaMuChannel
    rd: AlphaMuChannel
    rr: AlphaMuChannel
    system_snr: float  # transmit system SNR, linear
    target_rate: float  # bits/s/Hz

    def __post_init__(self):
        if self.system_snr <= 0.0:
            raise ParameterError("system_snr must be positive")
        if self.target_rate <= 0.0:
            raise ParameterError("target_rate must be positive")
        if self.rr.alpha != 2.0 or self.rr.mu != 1.0:
            raise ParameterError(
                "the residual self-interference channel is Rayleigh "
                "(alpha = 2, mu = 1); got "
                f"alpha={self.rr.alpha}, mu={self.rr.mu}"
            )

    @classmethod
    def with_rayleigh_rsi(cls, sr: AlphaMuChannel, rd: AlphaMuChannel,
                          rsi_level: float, system_snr: float,
                          target_rate: float) -> "FullDuplexScenario":
        """Build the RR link from its mean power gain (the RSI level)."""
        rr = AlphaMuChannel.from_mean_snr(2.0, 1.0, rsi_level)
        return cls(sr, rd, rr, system_snr, target_rate)

    @property
    def rsi_level(self) -> float:
        return self.rr.mean_snr

    @property
    def tau3(self) -> float:
        """SNR threshold 2^rate - 1."""
        return 2.0 ** self.target_rate - 1.0

    def rsi_pair(self) -> RatioPair:
        """The first-hop quotient gamma_SR / gamma_RR (system SNR cancels)."""
        half = self.system_snr / 2.0
        return RatioPair(self.sr.scaled(half), self.rr.scaled(half))


def sop_lower_bound(sc: SecrecyScenario) -> float:
    """Lower bound of the secrecy outage probability.

    The exact outage event compares (1+SNR_B)/(1+SNR_E) against 2^rate;
    dropping the ones gives Pr{SNR_B/SNR_E < tau1}, a guaranteed lower
    bound evaluated through the quotient CDF.
    """
    return ratio_cdf(RatioPair(sc.main, sc.eve), sc.tau1)


def cognitive_outage(sc: CognitiveScenario) -> float:
    """Outage of the decode-and-forward secondary network.

    The weaker hop drives the outage: P = F2 + F3 - F2*F3 with the per-hop
    quotient CDFs evaluated at tau2.
    """
    first, second = sc.hop_pairs()
    f2 = ratio_cdf(first, sc.tau2)
    f3 = ratio_cdf(second, sc.tau2)
    return f2 + f3 - f2 * f3


def fullduplex_outage(sc: FullDuplexScenario) -> float:
    """Interference-limited outage of the full-duplex relay.

    Approximates SNR_SR/(SNR_RR + 1) by SNR_SR/SNR_RR; the unapproximated
    model is only available through the Monte Carlo engine, so the
    approximation gap stays measurable.
    """
    f4 = ratio_cdf(sc.rsi_pair(), sc.tau3)
    f5 = snr_cdf(sc.rd.scaled(sc.system_snr / 2.0), sc.tau3)
    return f4 + f5 - f4 * f5


def fullduplex_floor(sc: FullDuplexScenario) -> float:
    """High-SNR limit of the outage: the second hop clears, leaving F4(tau3).

    The quotient SNR_SR/SNR_RR is scale-invariant in the system SNR, so the
    floor is independent of it.
    """
    return ratio_cdf(sc.rsi_pair(), sc.tau3)
