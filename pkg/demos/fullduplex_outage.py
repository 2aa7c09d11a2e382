"""Full-duplex relaying outage vs system SNR for the severe- and weak-fading
cases at three residual self-interference levels.

The loop-back interference leaves an error floor at high SNR; the dashed
lines mark the analytic floor, which the system SNR cannot remove.
"""

import numpy as np
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

from amratio import mc, presets
from amratio.apps import fullduplex_floor, fullduplex_outage
from amratio.mc import McConfig

cfg = McConfig(trials=400_000, seed=23)
snr_db = np.linspace(0.0, 50.0, 11)

fig, axes = plt.subplots(1, 2, figsize=(11, 4.4), sharey=True)
for ax, case in zip(axes, sorted(presets.FULLDUPLEX_CASES)):
    for rsi_db in presets.FULLDUPLEX_RSI_DB:
        analytic = [fullduplex_outage(presets.fullduplex_scenario(case, rsi_db, float(v)))
                    for v in snr_db]
        sim = [mc.estimate_fd_outage(
            presets.fullduplex_scenario(case, rsi_db, float(v)), cfg).estimate
            for v in snr_db]
        (line,) = ax.semilogy(snr_db, analytic, label=f"RSI {rsi_db:g} dB")
        ax.semilogy(snr_db, sim, "o", ms=4, color=line.get_color(), alpha=0.6)
        floor = fullduplex_floor(presets.fullduplex_scenario(case, rsi_db, 10.0))
        ax.axhline(floor, color=line.get_color(), ls="--", lw=0.8, alpha=0.6)
    ax.set_xlabel("system SNR [dB]")
    ax.set_title(f"case {case} ({'severe' if case == 10 else 'weak'} fading)")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
axes[0].set_ylabel("outage probability")
fig.tight_layout()
fig.savefig("fullduplex_outage.png", dpi=150)
print("wrote fullduplex_outage.png")
