"""PDF and CDF of the SNR quotient for several fading-shape combinations,
with Monte Carlo histograms/empirical CDFs overlaid.

Left panel: densities for varying cluster numbers at shape pair (1.5, 1.1).
Right panel: CDFs for varying shape pairs at cluster numbers (3.5, 2.8).
Both sides use 0 dB mean SNR, like the showcase presets.
"""

import numpy as np
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

from amratio import mc, presets
from amratio.mc import McConfig
from amratio.ratio import ratio_cdf, ratio_pdf

TRIALS = 400_000
cfg = McConfig(trials=TRIALS, seed=42)
fig, (ax_pdf, ax_cdf) = plt.subplots(1, 2, figsize=(11, 4.2))

x = np.logspace(-2, 1.3, 160)
for name, (a1, a2, m1, m2) in presets.QUOTIENT_PDF_CASES.items():
    pair = presets.quotient_pair(a1, a2, m1, m2)
    (line,) = ax_pdf.plot(x, [ratio_pdf(pair, float(v)) for v in x],
                          label=f"$\\mu$=({m1}, {m2})")
    hist = mc.estimate_ratio_pdf(pair, cfg, (0.05, 8.0))
    step = max(len(hist.centers) // 25, 1)
    ax_pdf.plot(hist.centers[::step], hist.density[::step], "o", ms=3,
                color=line.get_color(), alpha=0.6)
ax_pdf.set_xscale("log")
ax_pdf.set_xlabel("x")
ax_pdf.set_ylabel("quotient density")
ax_pdf.set_title(r"PDF, $\alpha$ = (1.5, 1.1); dots: %.0e-draw MC" % TRIALS)
ax_pdf.legend()

for name, (a1, a2, m1, m2) in presets.QUOTIENT_CDF_CASES.items():
    pair = presets.quotient_pair(a1, a2, m1, m2)
    (line,) = ax_cdf.plot(x, [ratio_cdf(pair, float(v)) for v in x],
                          label=f"$\\alpha$=({a1}, {a2})")
    pts = np.logspace(-1.5, 1, 9)
    ests = [mc.estimate_ratio_cdf(pair, float(v), cfg).estimate for v in pts]
    ax_cdf.plot(pts, ests, "o", ms=4, color=line.get_color(), alpha=0.6)
ax_cdf.set_xscale("log")
ax_cdf.set_xlabel("x")
ax_cdf.set_ylabel("quotient CDF")
ax_cdf.set_title(r"CDF, $\mu$ = (3.5, 2.8)")
ax_cdf.legend()

fig.tight_layout()
fig.savefig("quotient_stats.png", dpi=150)
print("wrote quotient_stats.png")
