"""
Sound in soil
=============

Wave numbers of the Kelvin-Voigt soil, the received multi-tone signal and
the pink interference that rides on it.
"""

import numpy as np

from phytoacoustic.acoustic_channel import (
    SoilMedium, SourceSpec, pink_noise, synthesize_received, wave_numbers,
)
from phytoacoustic.sim_io import psd, rng_stream

soil = SoilMedium()

# %%
# Attenuation grows quickly with frequency.  At one metre a 200 Hz tone keeps
# about e^-6.7 of its amplitude, an 800 Hz tone essentially nothing.
for f in (50, 100, 200, 400, 800):
    wn = wave_numbers(soil, f)
    print(f"{f:4d} Hz  k1 = {wn.k1:7.3f} rad/m  k2 = {wn.k2:7.3f} Np/m  e^-k2 = {np.exp(-wn.k2):.2e}")

# %%
# A 100-tone source around 200 Hz, observed at increasing distance.
dt = 5e-4
for x in (0.0, 0.5, 1.0, 2.0):
    s = synthesize_received(soil, SourceSpec(), x, 10.0, dt, rng_stream(0, "source"))
    print(f"x = {x:3.1f} m  rms = {s.rms():.3e} Pa")

# %%
# The soil acts as a steep low-pass, so the received spectrum sits well below
# the source's mean frequency.
s = synthesize_received(soil, SourceSpec(), 1.0, 20.0, dt, rng_stream(0, "source"))
tab = psd(s)
print("received PSD peak at", tab.column("freq")[np.argmax(tab.column("psd"))], "Hz")

# %%
# Pink noise: the log-log PSD slope should be close to -1.
n = pink_noise(60.0, dt, 1e-6, rng_stream(0, "noise"))
tab = psd(n)
f, p = tab.column("freq"), tab.column("psd")
band = (f >= 10) & (f <= 500)
print("pink slope:", np.polyfit(np.log10(f[band]), np.log10(p[band]), 1)[0])
