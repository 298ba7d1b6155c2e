"""
Auxin on an 11x11 lattice
=========================

Sound-exposed cells (left five columns) get their PIN2 dissociation rate
scaled by the APR of a stimulated interval.  The xylem column makes twice
as much auxin as the rest.
"""

import numpy as np

from phytoacoustic import SimConfig, polarity_index, run_chain, simulate_grid

cfg = SimConfig()
apr = run_chain(cfg).apr

for label, mod in (("no sound", 1.0), (f"sound, delta_p x {apr:.1f}", apr)):
    g = simulate_grid(cfg.grid, delta_p_mod=mod)
    print(f"\n{label}: polarity index {polarity_index(g):+.3f}")
    scale = g.a.max()
    for row in g.a:
        print(" ".join(f"{v / scale:4.2f}" for v in row))

# %%
# Membrane PIN2 per cell: the exposed side loses most of its carriers,
# while its apoplast empties.
print("\nmembrane PIN2, middle row:", np.round(g.P.sum(-1)[5], 2))
print("apoplastic auxin, middle row:", np.round(g.A.mean(-1)[5], 3))
