"""
From wall stress to Ca2+ influx
===============================

The cell wall turns stress into force on the MCA2 sensor; the channel
low-pass filters it, gates, and admits Ca2+ once per biological step.
"""

import numpy as np

from phytoacoustic.cell_wall import WallParams, channel_stress, sensor_force
from phytoacoustic.mca2_gate import GateParams, gate_chain, gate_current, open_probability
from phytoacoustic.traces import PressureTrace

wall, gate = WallParams(), GateParams()
dt = 5e-4

# %%
# A step of wall stress above the yield point: the sensor sees a brief
# overshoot of tau_w / tau_s = 20 before settling.
sigma = PressureTrace(0.0, dt, np.r_[np.full(20, wall.Y), np.full(200, wall.Y + 1e-3)])
F = sensor_force(sigma, wall)
ch = channel_stress(F, wall.A_M).samples
print(f"channel stress just after step {ch[20]:.3e} mmHg, settled {ch[-1]:.3e} mmHg")

# %%
# Resting gate: open probability and single-channel current.
print("P0 at rest:", open_probability(gate.V, 0.0, gate))
print("I at rest: %.3e A" % gate_current(0.0, gate, 150.0))

# %%
# Three stimulus shapes through the channel, expressed directly as channel
# stress.  Only stress above the resting level admits extra Ca2+.
n = int(40 / dt)
t = np.arange(n) * dt
shapes = {
    "impulse": np.where(np.arange(n) == int(10.2 / dt), 2000.0, 0.0),
    "step": np.where(t >= 10.0, 3.0, 0.0),
    "cosine 0.08 Hz": 3.0 * np.cos(2 * np.pi * 0.08 * t),
}
for name, x in shapes.items():
    cm = gate_chain(PressureTrace(0.0, dt, x), gate)
    marks = "".join("#" if v > 0 else "." for v in cm)
    print(f"{name:15s} {marks}")
