"""
The root as a binary receiver
=============================

Bits are sent as 150 s intervals of water-flow sound (1) or silence (0).
The receiver compares APR with 5.  A small Monte Carlo shows how BER moves
with frequency, amplitude and interval length.
"""

from phytoacoustic import SimConfig, run_link
from phytoacoustic.acoustic_link import mean_ber, random_bits, sweep

cfg = SimConfig()

tx = [1, 0, 1, 1, 0]
rep = run_link(tx, cfg)
print("tx ", tx)
print("rx ", [int(b) for b in rep.rx_bits])
print("APR", [round(float(a), 2) for a in rep.apr_per_bit])

# %%
# Reduced-scale sweeps: 3 runs of 8 bits per point.
runs, bits = 3, 8
for param, values in (
    ("mean_freq", (200.0, 300.0, 800.0)),
    ("mean_amp", (2.0, 10.0, 40.0)),
    ("bit_duration", (10.0, 50.0, 150.0)),
):
    rows = sweep(param, values, runs, bits, cfg)
    print(param, {v: round(mean_ber(rows, v), 3) for v in values})

print("bits of run 0:", [int(b) for b in random_bits(bits, cfg.link.base_seed)])
