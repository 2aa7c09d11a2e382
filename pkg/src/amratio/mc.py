"""Seedable, deterministically-partitioned Monte Carlo engine.

Every analytic quantity of the package has an independent estimator here:
quotient CDF/PDF/MGF/moments, exact and bounded secrecy outage, cognitive
and full-duplex outage (the latter with or without the +1 noise term).
Work is split into per-worker chunks; each chunk draws from counter-based
streams keyed by (seed, worker, role), so estimates are bit-identical for a
fixed (seed, trials, worker_count) regardless of scheduling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.interpolate import PchipInterpolator

from .apps import CognitiveScenario, FullDuplexScenario, SecrecyScenario
from .dists import SampleStream, sample_snr
from .errors import ParameterError
from .ratio import RatioPair, ratio_cdf

__all__ = [
    "McConfig",
    "McReport",
    "HistogramResult",
    "estimate_ratio_cdf",
    "estimate_ratio_pdf",
    "estimate_ratio_mgf",
    "estimate_ratio_moment",
    "estimate_ratio_ks",
    "estimate_sop_exact",
    "estimate_sop_bound",
    "estimate_cr_outage",
    "estimate_fd_outage",
    "empirical_ks",
]

# role offsets inside a worker's stream block; stride bounds roles per worker
_ROLE_STRIDE = 8


@dataclass(frozen=True)
class McConfig:
    """Trial count, seed and deterministic partitioning of the engine."""

    trials: int = 10_000_000
    seed: int = 0
    worker_count: int = 8
    histogram_bins: int = 200

    def __post_init__(self):
        if self.trials < 10_000:
            raise ParameterError("trials must be at least 1e4")
        if self.worker_count < 1:
            raise ParameterError("worker_count must be positive")
        if self.histogram_bins < 1:
            raise ParameterError("histogram_bins must be positive")

    def chunks(self) -> list[tuple[int, int]]:
        """(worker_index, chunk_size) partition of the trial budget."""
        base, extra = divmod(self.trials, self.worker_count)
        return [(w, base + (1 if w < extra else 0))
                for w in range(self.worker_count) if base + (1 if w < extra else 0) > 0]


@dataclass(frozen=True)
class McReport:
    """Point estimate with its uncertainty."""

    estimate: float
    standard_error: float
    n_effective: int
    ks_statistic: float | None = None


@dataclass(frozen=True)
class HistogramResult:
    """Binned density estimate over log-spaced edges."""

    edges: np.ndarray
    density: np.ndarray
    standard_error: np.ndarray
    n_effective: int

    @property
    def centers(self) -> np.ndarray:
        return np.sqrt(self.edges[:-1] * self.edges[1:])


def _chunk_stream(cfg: McConfig, worker: int, role: int, count: int) -> SampleStream:
    return SampleStream(cfg.seed, count, worker * _ROLE_STRIDE + role)


def _pair_samples(pair: RatioPair, cfg: McConfig, worker: int, count: int) -> np.ndarray:
    num = sample_snr(pair.num, _chunk_stream(cfg, worker, 0, count))
    den = sample_snr(pair.den, _chunk_stream(cfg, worker, 1, count))
    return num / den


def _binomial_report(hits: int, n: int) -> McReport:
    p = hits / n
    return McReport(p, math.sqrt(p * (1.0 - p) / n), n)


def _mean_report(total: float, total_sq: float, n: int) -> McReport:
    mean = total / n
    var = max(total_sq / n - mean * mean, 0.0)
    return McReport(mean, math.sqrt(var / n), n)


def estimate_ratio_cdf(pair: RatioPair, x: float, cfg: McConfig) -> McReport:
    """Empirical Pr{X <= x} from paired independent draws."""
    hits = 0
    for worker, count in cfg.chunks():
        num = sample_snr(pair.num, _chunk_stream(cfg, worker, 0, count))
        den = sample_snr(pair.den, _chunk_stream(cfg, worker, 1, count))
        hits += int(np.count_nonzero(num <= x * den))
    return _binomial_report(hits, cfg.trials)


def estimate_ratio_pdf(pair: RatioPair, cfg: McConfig,
                       x_range: tuple[float, float] = (1e-2, 1e2)) -> HistogramResult:
    """Histogram density of X over log-spaced bins (heavy-tail friendly)."""
    edges = np.logspace(math.log10(x_range[0]), math.log10(x_range[1]),
                        cfg.histogram_bins + 1)
    counts = np.zeros(cfg.histogram_bins, dtype=np.int64)
    for worker, count in cfg.chunks():
        x = _pair_samples(pair, cfg, worker, count)
        counts += np.histogram(x, bins=edges)[0]
    widths = np.diff(edges)
    n = cfg.trials
    p = counts / n
    density = p / widths
    se = np.sqrt(p * (1.0 - p) / n) / widths
    return HistogramResult(edges, density, se, n)


def estimate_ratio_mgf(pair: RatioPair, s: float, cfg: McConfig) -> McReport:
    """Empirical E[exp(-s X)]."""
    total = 0.0
    total_sq = 0.0
    for worker, count in cfg.chunks():
        e = np.exp(-s * _pair_samples(pair, cfg, worker, count))
        total += float(np.sum(e))
        total_sq += float(np.sum(e * e))
    return _mean_report(total, total_sq, cfg.trials)


def estimate_ratio_moment(pair: RatioPair, n_order: float, cfg: McConfig) -> McReport:
    """Empirical E[X^n]."""
    total = 0.0
    total_sq = 0.0
    for worker, count in cfg.chunks():
        xn = _pair_samples(pair, cfg, worker, count) ** n_order
        total += float(np.sum(xn))
        total_sq += float(np.sum(xn * xn))
    return _mean_report(total, total_sq, cfg.trials)


def empirical_ks(samples: np.ndarray, cdf, grid_points: int = 4096) -> float:
    """Kolmogorov-Smirnov distance between draws and a scalar CDF callable.

    The CDF is evaluated on a log-spaced grid spanning the sample range and
    monotone-interpolated (PCHIP) to the sorted samples; for the smooth,
    slowly-varying CDFs here the interpolation error is orders of magnitude
    below the KS critical values of interest.
    """
    xs = np.sort(np.asarray(samples, dtype=np.float64))
    n = xs.size
    grid = np.logspace(math.log10(xs[0]), math.log10(xs[-1]), grid_points)
    grid[0], grid[-1] = xs[0], xs[-1]
    f_grid = np.array([cdf(float(g)) for g in grid])
    f_at = PchipInterpolator(grid, f_grid, extrapolate=False)(xs)
    i = np.arange(1, n + 1)
    return float(np.maximum(i / n - f_at, f_at - (i - 1) / n).max())


def estimate_ratio_ks(pair: RatioPair, cfg: McConfig,
                      grid_points: int = 4096) -> McReport:
    """KS distance between quotient draws and the analytic quotient CDF."""
    parts = [_pair_samples(pair, cfg, worker, count)
             for worker, count in cfg.chunks()]
    d = empirical_ks(np.concatenate(parts), lambda x: ratio_cdf(pair, x), grid_points)
    return McReport(d, 0.0, cfg.trials, ks_statistic=d)


def estimate_sop_exact(sc: SecrecyScenario, cfg: McConfig) -> McReport:
    """Simulated exact secrecy outage Pr{(1+SNR_B)/(1+SNR_E) < 2^rate}."""
    hits = 0
    for worker, count in cfg.chunks():
        gb = sample_snr(sc.main, _chunk_stream(cfg, worker, 0, count))
        ge = sample_snr(sc.eve, _chunk_stream(cfg, worker, 1, count))
        hits += int(np.count_nonzero((1.0 + gb) < sc.tau1 * (1.0 + ge)))
    return _binomial_report(hits, cfg.trials)


def estimate_sop_bound(sc: SecrecyScenario, cfg: McConfig) -> McReport:
    """Simulated bound event Pr{SNR_B/SNR_E < 2^rate} (drops the +1 terms)."""
    hits = 0
    for worker, count in cfg.chunks():
        gb = sample_snr(sc.main, _chunk_stream(cfg, worker, 0, count))
        ge = sample_snr(sc.eve, _chunk_stream(cfg, worker, 1, count))
        hits += int(np.count_nonzero(gb < sc.tau1 * ge))
    return _binomial_report(hits, cfg.trials)


def estimate_cr_outage(sc: CognitiveScenario, cfg: McConfig) -> McReport:
    """Direct simulation of min{hop1, hop2} < tau2 in the cognitive network."""
    hits = 0
    cap = sc.interference_cap
    for worker, count in cfg.chunks():
        g_sr = sample_snr(sc.sr, _chunk_stream(cfg, worker, 0, count))
        g_sp = sample_snr(sc.sp, _chunk_stream(cfg, worker, 1, count))
        g_rd = sample_snr(sc.rd, _chunk_stream(cfg, worker, 2, count))
        g_rp = sample_snr(sc.rp, _chunk_stream(cfg, worker, 3, count))
        hop1 = cap * g_sr / g_sp
        hop2 = cap * g_rd / g_rp
        hits += int(np.count_nonzero(np.minimum(hop1, hop2) < sc.tau2))
    return _binomial_report(hits, cfg.trials)


def estimate_fd_outage(sc: FullDuplexScenario, cfg: McConfig,
                       exact_rsi: bool = False) -> McReport:
    """Direct simulation of the full-duplex outage event.

    With ``exact_rsi`` the first hop keeps the +1 noise term in
    SNR_SR/(SNR_RR + 1); otherwise the interference-limited quotient is
    simulated (the event the analytic expression models).
    """
    hits = 0
    half = sc.system_snr / 2.0
    for worker, count in cfg.chunks():
        g_sr = half * sample_snr(sc.sr, _chunk_stream(cfg, worker, 0, count))
        g_rr = half * sample_snr(sc.rr, _chunk_stream(cfg, worker, 1, count))
        g_rd = half * sample_snr(sc.rd, _chunk_stream(cfg, worker, 2, count))
        denom = g_rr + 1.0 if exact_rsi else g_rr
        hits += int(np.count_nonzero(np.minimum(g_sr / denom, g_rd) < sc.tau3))
    return _binomial_report(hits, cfg.trials)
