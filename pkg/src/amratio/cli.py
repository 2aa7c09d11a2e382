"""Command-line front end.

Subcommands evaluate the quotient statistics, sweep them over an axis, run
the three application scenarios, validate figure presets against Monte
Carlo, and evaluate Fox H instances directly.  All dB-to-linear conversion
(10^(v/10)) happens here; the library layers are linear-scale throughout.

Output is a table written as CSV (header row, LF endings, %.17g floats) or
JSON ({"spec": ..., "columns": ..., "rows": ...}); identical invocations
produce byte-identical files.  Exit codes: 2 usage, 3 domain/parameter
error, 4 numerical error.  A config file with one ``--flag=value`` per line
can be passed as ``@file``.  AMRATIO_SEED overrides the default seed.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from . import foxh, mc, presets
from .apps import cognitive_outage, fullduplex_outage, sop_lower_bound
from .dists import AlphaMuChannel
from .errors import (
    AmRatioError,
    ContourError,
    DivergenceError,
    DomainError,
    NonConvergenceError,
    NumericalError,
    ParameterError,
    PoleError,
)
from .presets import db_to_linear
from .ratio import EvalMethod, RatioPair, ratio_cdf, ratio_mgf, ratio_moment, ratio_pdf

_USAGE_EXIT = 2
_DOMAIN_EXIT = 3
_NUMERIC_EXIT = 4


def _fmt(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "1" if v else "0"
    if isinstance(v, float):
        return f"{v:.17g}"
    return str(v)


def _json_value(v):
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, float):
        return float(v)
    return v


def _write_table(args, spec: dict, columns: list[str], rows: list[list]) -> None:
    if args.format == "json":
        payload = {"spec": spec, "columns": columns,
                   "rows": [[_json_value(v) for v in row] for row in rows]}
        text = json.dumps(payload, indent=1) + "\n"
    else:
        lines = [",".join(columns)]
        lines += [",".join(_fmt(v) for v in row) for row in rows]
        text = "\n".join(lines) + "\n"
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)


def _default_seed() -> int:
    return int(os.environ.get("AMRATIO_SEED", "12345"))


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", help="output file (stdout when omitted)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")


def _add_pair_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--alpha1", type=float, required=True)
    p.add_argument("--mu1", type=float, required=True)
    p.add_argument("--alpha2", type=float, required=True)
    p.add_argument("--mu2", type=float, required=True)
    p.add_argument("--snr1-db", type=float, default=0.0, help="numerator mean SNR [dB]")
    p.add_argument("--snr2-db", type=float, default=0.0, help="denominator mean SNR [dB]")
    p.add_argument("--method", choices=("auto", "series", "contour"), default="auto")


def _pair_from_args(args) -> RatioPair:
    return RatioPair(
        AlphaMuChannel.from_mean_snr(args.alpha1, args.mu1, db_to_linear(args.snr1_db)),
        AlphaMuChannel.from_mean_snr(args.alpha2, args.mu2, db_to_linear(args.snr2_db)),
        policy=EvalMethod(args.method),
    )


def _pair_spec(args, **extra) -> dict:
    spec = {"alpha1": args.alpha1, "mu1": args.mu1, "alpha2": args.alpha2,
            "mu2": args.mu2, "snr1_db": args.snr1_db, "snr2_db": args.snr2_db,
            "method": args.method}
    spec.update(extra)
    return spec


_STATS = {
    "pdf": (ratio_pdf, "x"),
    "cdf": (ratio_cdf, "x"),
    "mgf": (ratio_mgf, "s"),
    "moment": (ratio_moment, "n"),
}


def _axis_values(start: float, stop: float, points: int, spacing: str) -> np.ndarray:
    if points < 2:
        raise ParameterError("a sweep needs at least 2 points")
    if spacing == "log":
        if start <= 0 or stop <= 0:
            raise ParameterError("log spacing requires positive endpoints")
        return np.logspace(math.log10(start), math.log10(stop), points)
    return np.linspace(start, stop, points)  # linear and db grids


def _cmd_eval(stat: str):
    def run(args) -> None:
        fn, axis = _STATS[stat]
        pair = _pair_from_args(args)
        value = float(getattr(args, axis))
        result = fn(pair, value)
        _write_table(args, _pair_spec(args, command=f"eval-{stat}", **{axis: value}),
                     [axis, stat], [[value, result]])
    return run


def _cmd_sweep(args) -> None:
    fn, axis = _STATS[args.stat]
    pair = _pair_from_args(args)
    values = _axis_values(args.start, args.stop, args.points, args.spacing)
    rows = []
    for v in values:
        arg = db_to_linear(float(v)) if args.spacing == "db" else float(v)
        rows.append([float(v), fn(pair, arg)])
    axis_name = f"{axis}_db" if args.spacing == "db" else axis
    _write_table(args, _pair_spec(args, command="sweep", stat=args.stat,
                                  start=args.start, stop=args.stop,
                                  points=args.points, spacing=args.spacing),
                 [axis_name, args.stat], rows)


def _snr_axis(args) -> list[float]:
    if args.points > 1:
        return [float(v) for v in np.linspace(args.start, args.stop, args.points)]
    return [args.start]


def _cmd_app_sop(args) -> None:
    rows = []
    for snr_db in _snr_axis(args):
        sc = presets.secrecy_scenario(args.case, snr_db, args.eve_snr_db, args.rate)
        rows.append([snr_db, sop_lower_bound(sc)])
    _write_table(args, {"command": "app-sop", "case": args.case,
                        "eve_snr_db": args.eve_snr_db, "rate": args.rate},
                 ["main_snr_db", "sop_lower_bound"], rows)


def _cmd_app_cr(args) -> None:
    rows = []
    for cap_db in _snr_axis(args):
        sc = presets.cognitive_scenario(args.case, cap_db, args.link_snr_db, args.rate)
        rows.append([cap_db, cognitive_outage(sc)])
    _write_table(args, {"command": "app-cr", "case": args.case,
                        "link_snr_db": args.link_snr_db, "rate": args.rate},
                 ["interference_cap_db", "outage"], rows)


def _cmd_app_fd(args) -> None:
    rows = []
    for snr_db in _snr_axis(args):
        sc = presets.fullduplex_scenario(args.case, args.rsi_db, snr_db,
                                         args.link_snr_db, args.rate)
        rows.append([snr_db, fullduplex_outage(sc)])
    _write_table(args, {"command": "app-fd", "case": args.case, "rsi_db": args.rsi_db,
                        "link_snr_db": args.link_snr_db, "rate": args.rate},
                 ["system_snr_db", "outage"], rows)


# ---------------------------------------------------------------------------
# figure-preset validation (analytic vs Monte Carlo)
# ---------------------------------------------------------------------------

def _quantile(pair: RatioPair, p: float) -> float:
    lo, hi = 1e-9, 1e9
    for _ in range(200):
        mid = math.sqrt(lo * hi)
        if ratio_cdf(pair, mid) < p:
            lo = mid
        else:
            hi = mid
        if hi / lo < 1.0 + 1e-6:
            break
    return math.sqrt(lo * hi)


def _null_se(p: float, n: int) -> float:
    return math.sqrt(max(p, 0.0) * max(1.0 - p, 0.0) / n)


def _validate_fig4(cfg: mc.McConfig) -> tuple[list[str], list[list]]:
    rows = []
    for name, (a1, a2, m1, m2) in presets.QUOTIENT_PDF_CASES.items():
        pair = presets.quotient_pair(a1, a2, m1, m2)
        x_lo, x_hi = _quantile(pair, 0.005), _quantile(pair, 0.995)
        hist = mc.estimate_ratio_pdf(pair, cfg, (x_lo, x_hi))
        widths = np.diff(hist.edges)
        for i, center in enumerate(hist.centers):
            lo, hi = hist.edges[i], hist.edges[i + 1]
            p_bin = ratio_cdf(pair, float(hi)) - ratio_cdf(pair, float(lo))
            analytic = p_bin / widths[i]
            se = _null_se(p_bin, cfg.trials) / widths[i]
            ok = abs(analytic - hist.density[i]) <= 3.0 * se
            rows.append([name, float(center), analytic, float(hist.density[i]),
                         se, ok])
    return ["case", "x", "analytic_pdf", "mc_pdf", "se", "within_3se"], rows


def _validate_fig5(cfg: mc.McConfig) -> tuple[list[str], list[list]]:
    rows = []
    xs = np.logspace(math.log10(0.05), math.log10(20.0), 16)
    for name, (a1, a2, m1, m2) in presets.QUOTIENT_CDF_CASES.items():
        pair = presets.quotient_pair(a1, a2, m1, m2)
        for x in xs:
            analytic = ratio_cdf(pair, float(x))
            rep = mc.estimate_ratio_cdf(pair, float(x), cfg)
            se = _null_se(analytic, cfg.trials)
            ok = abs(analytic - rep.estimate) <= 3.0 * se
            rows.append([name, float(x), analytic, rep.estimate, se, ok])
    return ["case", "x", "analytic_cdf", "mc_cdf", "se", "within_3se"], rows


def _validate_fig6(cfg: mc.McConfig) -> tuple[list[str], list[list]]:
    rows = []
    for case in sorted(presets.SECRECY_CASES):
        for snr_db in np.linspace(0.0, 30.0, 16):
            sc = presets.secrecy_scenario(case, float(snr_db))
            bound = sop_lower_bound(sc)
            rep = mc.estimate_sop_exact(sc, cfg)
            se = max(rep.standard_error, _null_se(bound, cfg.trials))
            ok = bound <= rep.estimate + 3.0 * se
            rows.append([case, float(snr_db), bound, rep.estimate, se, ok])
    return ["case", "main_snr_db", "sop_bound", "mc_exact_sop", "mc_se",
            "bound_holds"], rows


def _validate_fig7(cfg: mc.McConfig) -> tuple[list[str], list[list]]:
    rows = []
    for case in sorted(presets.COGNITIVE_CASES):
        for cap_db in np.linspace(0.0, 30.0, 8):
            sc = presets.cognitive_scenario(case, float(cap_db))
            analytic = cognitive_outage(sc)
            rep = mc.estimate_cr_outage(sc, cfg)
            se = _null_se(analytic, cfg.trials)
            ok = abs(analytic - rep.estimate) <= 3.0 * se
            rows.append([case, float(cap_db), analytic, rep.estimate, se, ok])
    return ["case", "interference_cap_db", "analytic_outage", "mc_outage",
            "se", "within_3se"], rows


def _validate_fig8(cfg: mc.McConfig) -> tuple[list[str], list[list]]:
    rows = []
    for case in sorted(presets.FULLDUPLEX_CASES):
        for rsi_db in presets.FULLDUPLEX_RSI_DB:
            for snr_db in np.linspace(0.0, 40.0, 5):
                sc = presets.fullduplex_scenario(case, rsi_db, float(snr_db))
                analytic = fullduplex_outage(sc)
                rep = mc.estimate_fd_outage(sc, cfg, exact_rsi=False)
                se = _null_se(analytic, cfg.trials)
                ok = abs(analytic - rep.estimate) <= 3.0 * se
                rows.append([case, rsi_db, float(snr_db), analytic, rep.estimate,
                             se, ok])
    return ["case", "rsi_db", "system_snr_db", "analytic_outage", "mc_outage",
            "se", "within_3se"], rows


_VALIDATORS = {
    "fig4": _validate_fig4,
    "fig5": _validate_fig5,
    "fig6": _validate_fig6,
    "fig7": _validate_fig7,
    "fig8": _validate_fig8,
}


def _cmd_validate(args) -> None:
    cfg = mc.McConfig(trials=args.trials, seed=args.seed, worker_count=args.workers)
    columns, rows = _VALIDATORS[args.preset](cfg)
    _write_table(args, {"command": "validate", "preset": args.preset,
                        "trials": args.trials, "seed": args.seed,
                        "workers": args.workers}, columns, rows)


# ---------------------------------------------------------------------------
# direct Fox H evaluation
# ---------------------------------------------------------------------------

def _parse_pairs(text: str) -> tuple[tuple[float, float], ...]:
    if not text:
        return ()
    out = []
    for chunk in text.split(","):
        a, _, b = chunk.partition(":")
        out.append((float(a), float(b)))
    return tuple(out)


def _cmd_foxh(args) -> None:
    if args.kernel is not None:
        if None in (args.mu1, args.mu2, args.k):
            raise ParameterError("--kernel requires --mu1, --mu2 and --k")
        series_fn = {"h1": foxh.foxh_series_h1, "h2": foxh.foxh_series_h2,
                     "h3": foxh.foxh_series_h3}[args.kernel]
        kernel_fn = {"h1": foxh.ratio_pdf_kernel, "h2": foxh.ratio_cdf_kernel,
                     "h3": foxh.series_twin_kernel}[args.kernel]
        params = kernel_fn(args.mu1, args.mu2, args.k)
        method = args.method
        if method == "auto":
            kind = "h2" if args.kernel == "h2" else "h1"
            safe = (args.k != 1.0 or abs(args.z - 1.0) >= 0.1) and \
                foxh.series_cancellation_exponent(kind, args.mu1, args.mu2,
                                                  args.k, args.z) <= 9.0
            method = "series" if safe else "contour"
        if method == "series":
            value = series_fn(args.mu1, args.mu2, args.k, args.z)
        else:
            value = foxh.foxh_contour(params, args.z)
        spec = {"command": "foxh", "kernel": args.kernel, "mu1": args.mu1,
                "mu2": args.mu2, "k": args.k, "method": method}
    else:
        if None in (args.m, args.n, args.p, args.q):
            raise ParameterError("explicit instances require --m --n --p --q")
        params = foxh.FoxHParams(args.m, args.n, args.p, args.q,
                                 _parse_pairs(args.upper), _parse_pairs(args.lower))
        value = foxh.foxh_contour(params, args.z)
        spec = {"command": "foxh", "m": args.m, "n": args.n, "p": args.p,
                "q": args.q, "upper": args.upper, "lower": args.lower,
                "method": "contour"}
    _write_table(args, spec, ["z", "value"], [[args.z, value]])


# ---------------------------------------------------------------------------
# parser assembly
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="amratio",
        description="Statistics of the quotient of two squared alpha-mu "
                    "fading variates, with applications and MC validation.",
        fromfile_prefix_chars="@",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for stat in ("pdf", "cdf", "mgf", "moment"):
        p = sub.add_parser(f"eval-{stat}", help=f"evaluate the quotient {stat} at a point")
        _add_pair_flags(p)
        axis = _STATS[stat][1]
        p.add_argument(f"--{axis}", type=float, required=True)
        _add_output_flags(p)
        p.set_defaults(func=_cmd_eval(stat))

    p = sub.add_parser("sweep", help="sweep a statistic over an axis")
    _add_pair_flags(p)
    p.add_argument("--stat", choices=tuple(_STATS), required=True)
    p.add_argument("--start", type=float, required=True)
    p.add_argument("--stop", type=float, required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--spacing", choices=("linear", "log", "db"), default="log")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("app-sop", help="secrecy outage lower bound vs main-link SNR")
    p.add_argument("--case", type=int, choices=sorted(presets.SECRECY_CASES), required=True)
    p.add_argument("--start", type=float, default=0.0, help="main SNR sweep start [dB]")
    p.add_argument("--stop", type=float, default=30.0)
    p.add_argument("--points", type=int, default=16)
    p.add_argument("--eve-snr-db", type=float, default=presets.SECRECY_EVE_SNR_DB)
    p.add_argument("--rate", type=float, default=presets.SECRECY_RATE)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_app_sop)

    p = sub.add_parser("app-cr", help="cognitive relaying outage vs interference cap")
    p.add_argument("--case", type=int, choices=sorted(presets.COGNITIVE_CASES), required=True)
    p.add_argument("--start", type=float, default=0.0, help="cap sweep start [dB]")
    p.add_argument("--stop", type=float, default=30.0)
    p.add_argument("--points", type=int, default=8)
    p.add_argument("--link-snr-db", type=float, default=presets.COGNITIVE_LINK_SNR_DB)
    p.add_argument("--rate", type=float, default=presets.COGNITIVE_RATE)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_app_cr)

    p = sub.add_parser("app-fd", help="full-duplex relaying outage vs system SNR")
    p.add_argument("--case", type=int, choices=sorted(presets.FULLDUPLEX_CASES), required=True)
    p.add_argument("--rsi-db", type=float, default=-20.0)
    p.add_argument("--start", type=float, default=0.0, help="system SNR sweep start [dB]")
    p.add_argument("--stop", type=float, default=40.0)
    p.add_argument("--points", type=int, default=9)
    p.add_argument("--link-snr-db", type=float, default=presets.FULLDUPLEX_LINK_SNR_DB)
    p.add_argument("--rate", type=float, default=presets.FULLDUPLEX_RATE)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_app_fd)

    p = sub.add_parser("validate", help="analytic-vs-MC agreement for a figure preset")
    p.add_argument("--preset", choices=sorted(_VALIDATORS), required=True)
    p.add_argument("--trials", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--workers", type=int, default=8)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("foxh", help="evaluate a Fox H instance directly")
    p.add_argument("--z", type=float, required=True)
    p.add_argument("--kernel", choices=("h1", "h2", "h3"))
    p.add_argument("--mu1", type=float)
    p.add_argument("--mu2", type=float)
    p.add_argument("--k", type=float)
    p.add_argument("--method", choices=("auto", "series", "contour"), default="auto")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--upper", default="", help='pairs "a:A,a:A" (may be empty)')
    p.add_argument("--lower", default="", help='pairs "b:B,b:B"')
    _add_output_flags(p)
    p.set_defaults(func=_cmd_foxh)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (DomainError, ParameterError, PoleError, ContourError) as exc:
        print(f"amratio: domain error: {exc}", file=sys.stderr)
        return _DOMAIN_EXIT
    except (NonConvergenceError, DivergenceError, NumericalError) as exc:
        print(f"amratio: numerical error: {exc}", file=sys.stderr)
        return _NUMERIC_EXIT
    except AmRatioError as exc:  # safety net for future subclasses
        print(f"amratio: error: {exc}", file=sys.stderr)
        return _DOMAIN_EXIT
    return 0


if __name__ == "__main__":
    sys.exit(main())
