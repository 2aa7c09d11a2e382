"""Named experiment presets: the scenario corpus behind the demo figures."""

from __future__ import annotations

from .apps import CognitiveScenario, FullDuplexScenario, SecrecyScenario
from .dists import AlphaMuChannel
from .ratio import RatioPair

__all__ = [
    "db_to_linear",
    "QUOTIENT_PDF_CASES",
    "QUOTIENT_CDF_CASES",
    "SECRECY_CASES",
    "COGNITIVE_CASES",
    "FULLDUPLEX_CASES",
    "quotient_pair",
    "secrecy_scenario",
    "cognitive_scenario",
    "fullduplex_scenario",
]


def db_to_linear(v_db: float) -> float:
    return 10.0 ** (v_db / 10.0)


# quotient-statistics showcases: mean SNRs of 0 dB on both sides.
# PDF sweep: fixed shape pair (alpha1, alpha2) = (1.5, 1.1), varying (mu1, mu2);
# CDF sweep: fixed (mu1, mu2) = (3.5, 2.8), varying (alpha1, alpha2).
QUOTIENT_PDF_CASES: dict[str, tuple[float, float, float, float]] = {
    # name: (alpha1, alpha2, mu1, mu2)
    "mu_0.5_0.5": (1.5, 1.1, 0.5, 0.5),
    "mu_1.0_1.0": (1.5, 1.1, 1.0, 1.0),
    "mu_2.5_1.5": (1.5, 1.1, 2.5, 1.5),
    "mu_3.5_2.8": (1.5, 1.1, 3.5, 2.8),
}

QUOTIENT_CDF_CASES: dict[str, tuple[float, float, float, float]] = {
    "alpha_0.8_1.3": (0.8, 1.3, 3.5, 2.8),
    "alpha_1.5_1.1": (1.5, 1.1, 3.5, 2.8),
    "alpha_2.0_2.0": (2.0, 2.0, 3.5, 2.8),
    "alpha_3.9_1.3": (3.9, 1.3, 3.5, 2.8),
}

# secrecy cases 1-5: (alpha_B, mu_B, alpha_E, mu_E); eavesdropper mean 1 dB,
# rate threshold 0 (tau1 = 1)
SECRECY_CASES: dict[int, tuple[float, float, float, float]] = {
    1: (2.0, 4.5, 2.0, 0.6),
    2: (3.9, 1.0, 1.3, 1.0),
    3: (2.0, 1.0, 2.0, 1.0),
    4: (1.2, 1.0, 4.5, 1.0),
    5: (2.0, 0.5, 2.0, 3.1),
}
SECRECY_EVE_SNR_DB = 1.0
SECRECY_RATE = 0.0

# cognitive cases 6-9: per-link (alpha, mu) of SR, SP, RD, RP; all link means
# 1 dB; per-hop threshold tau2 = 1 (rate 0.5 over two hops)
COGNITIVE_CASES: dict[int, dict[str, tuple[float, float]]] = {
    6: {"sr": (4.2, 1.0), "sp": (2.0, 4.1), "rd": (3.9, 1.0), "rp": (2.0, 3.8)},
    7: {"sr": (2.0, 1.0), "sp": (2.0, 1.0), "rd": (2.0, 1.0), "rp": (2.0, 1.0)},
    8: {"sr": (2.0, 0.6), "sp": (0.8, 1.0), "rd": (2.0, 0.9), "rp": (0.7, 1.0)},
    9: {"sr": (0.6, 1.0), "sp": (2.0, 4.2), "rd": (4.1, 1.0), "rp": (2.0, 0.8)},
}
COGNITIVE_LINK_SNR_DB = 1.0
COGNITIVE_RATE = 0.5

# full-duplex cases 10-11: (alpha, mu) of SR and RD; link means 0 dB; the
# loop-back residual self-interference is Rayleigh by model, its level set
# per run; threshold tau3 = 1 (rate 1)
FULLDUPLEX_CASES: dict[int, dict[str, tuple[float, float]]] = {
    10: {"sr": (1.8, 0.8), "rd": (2.1, 0.6)},
    11: {"sr": (1.9, 2.3), "rd": (2.2, 2.9)},
}
FULLDUPLEX_LINK_SNR_DB = 0.0
FULLDUPLEX_RATE = 1.0
FULLDUPLEX_RSI_DB = (-10.0, -20.0, -30.0)


def quotient_pair(alpha1: float, alpha2: float, mu1: float, mu2: float,
                  mean_snr1_db: float = 0.0, mean_snr2_db: float = 0.0) -> RatioPair:
    return RatioPair(
        AlphaMuChannel.from_mean_snr(alpha1, mu1, db_to_linear(mean_snr1_db)),
        AlphaMuChannel.from_mean_snr(alpha2, mu2, db_to_linear(mean_snr2_db)),
    )


def secrecy_scenario(case: int, main_snr_db: float,
                     eve_snr_db: float = SECRECY_EVE_SNR_DB,
                     rate: float = SECRECY_RATE) -> SecrecyScenario:
    ab, mb, ae, me = SECRECY_CASES[case]
    return SecrecyScenario(
        AlphaMuChannel.from_mean_snr(ab, mb, db_to_linear(main_snr_db)),
        AlphaMuChannel.from_mean_snr(ae, me, db_to_linear(eve_snr_db)),
        rate,
    )


def cognitive_scenario(case: int, interference_cap_db: float,
                       link_snr_db: float = COGNITIVE_LINK_SNR_DB,
                       rate: float = COGNITIVE_RATE) -> CognitiveScenario:
    links = COGNITIVE_CASES[case]
    mean = db_to_linear(link_snr_db)
    return CognitiveScenario(
        sr=AlphaMuChannel.from_mean_snr(*links["sr"], mean),
        sp=AlphaMuChannel.from_mean_snr(*links["sp"], mean),
        rd=AlphaMuChannel.from_mean_snr(*links["rd"], mean),
        rp=AlphaMuChannel.from_mean_snr(*links["rp"], mean),
        interference_cap=db_to_linear(interference_cap_db),
        target_rate=rate,
    )


def fullduplex_scenario(case: int, rsi_db: float, system_snr_db: float,
                        link_snr_db: float = FULLDUPLEX_LINK_SNR_DB,
                        rate: float = FULLDUPLEX_RATE) -> FullDuplexScenario:
    links = FULLDUPLEX_CASES[case]
    mean = db_to_linear(link_snr_db)
    return FullDuplexScenario.with_rayleigh_rsi(
        sr=AlphaMuChannel.from_mean_snr(*links["sr"], mean),
        rd=AlphaMuChannel.from_mean_snr(*links["rd"], mean),
        rsi_level=db_to_linear(rsi_db),
        system_snr=db_to_linear(system_snr_db),
        target_rate=rate,
    )
