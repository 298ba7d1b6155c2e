"""
Ca2+ and H2O2 under a 200 Hz stimulus
=====================================

The full chain at default settings: cytosolic Ca2+ climbs from rest to a
plateau, apoplastic H2O2 follows, and activated PIN2 rises enough for the
link to call a 1.
"""

import numpy as np

from phytoacoustic import SimConfig, run_chain
from phytoacoustic.chain import zero_stimulus

cfg = SimConfig()
res = run_chain(cfg)

for t in (0, 10, 25, 50, 75, 100, 150):
    k = int(t / cfg.link.bio_dt)
    print(f"t = {t:3d} s  c_c = {res.c_c[k]:6.1f} nM  h = {res.h[k]:.3e} M")

print("APR:", round(res.apr, 2), "-> bit", int(res.apr > cfg.link.threshold))

# %%
# Without sound and without interference nothing moves.
quiet = run_chain(zero_stimulus(cfg), bit=0)
print("silent interval: c_c in", quiet.c_c.min(), quiet.c_c.max(), "APR", quiet.apr)

# %%
# Plateau spread across source realisations; each seed draws new tones.
plateaus = [run_chain(cfg, seed=s).c_c[100:].mean() for s in range(20)]
print("plateau over seeds: median %.1f nM, range %.1f-%.1f" % (np.median(plateaus), min(plateaus), max(plateaus)))
