"""Outage of the underlay cognitive relaying network vs the interference cap
for the four link-quality cases, analytic curves against direct simulation.
"""

import numpy as np
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

from amratio import mc, presets
from amratio.apps import cognitive_outage
from amratio.mc import McConfig

cfg = McConfig(trials=400_000, seed=11)
cap_db = np.linspace(0.0, 30.0, 9)

plt.figure(figsize=(6.5, 4.5))
for case in sorted(presets.COGNITIVE_CASES):
    analytic = [cognitive_outage(presets.cognitive_scenario(case, float(v)))
                for v in cap_db]
    sim = [mc.estimate_cr_outage(presets.cognitive_scenario(case, float(v)), cfg).estimate
           for v in cap_db]
    (line,) = plt.semilogy(cap_db, analytic, label=f"case {case}")
    plt.semilogy(cap_db, sim, "o", ms=4, color=line.get_color(), alpha=0.6)

plt.xlabel("tolerated interference-to-noise ratio [dB]")
plt.ylabel("outage probability")
plt.title("decode-and-forward secondary network (dots: MC)")
plt.grid(True, which="both", alpha=0.3)
plt.legend()
plt.tight_layout()
plt.savefig("cognitive_relay_outage.png", dpi=150)
print("wrote cognitive_relay_outage.png")
