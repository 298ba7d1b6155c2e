"""Underground sound source, Kelvin-Voigt soil propagation and pink interference."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .traces import PressureTrace, same_sampling


@dataclass(frozen=True)
class SoilMedium:
    """Soil described as a Kelvin-Voigt solid.

    Parameters
    ----------
    rho : float
        Bulk density in g/cm^3.
    eta : float
        Viscosity in Pa s.
    G : float
        Shear modulus in MPa.
    """

    rho: float = 1.30
    eta: float = 1019.0
    G: float = 2.4

    def __post_init__(self):
        for name in ("rho", "G"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be positive, got {v}")
        # eta = 0 is allowed as the lossless limit
        if not (math.isfinite(self.eta) and self.eta >= 0):
            raise ValueError(f"eta must be non-negative, got {self.eta}")

    @property
    def rho_si(self) -> float:
        return self.rho * 1000.0

    @property
    def G_si(self) -> float:
        return self.G * 1e6


@dataclass(frozen=True)
class SourceSpec:
    """Statistics of the multi-tone water-flow source (Hz and µPa)."""

    mean_freq: float = 200.0
    std_freq: float = 60.0
    mean_amp: float = 20.0
    std_amp: float = 1.0
    n_components: int = 100

    def __post_init__(self):
        if not self.mean_freq > 0:
            raise ValueError("mean_freq must be positive")
        if self.std_freq < 0 or self.std_amp < 0:
            raise ValueError("standard deviations must be non-negative")
        if int(self.n_components) < 1:
            raise ValueError("n_components must be at least 1")


@dataclass(frozen=True)
class WaveNumbers:
    k1: np.ndarray | float
    k2: np.ndarray | float
    zeta: np.ndarray | float


def _check_freq(f, strict: bool):
    f = np.asarray(f, dtype=float)
    if not np.all(np.isfinite(f)):
        raise ValueError("frequency must be finite")
    if strict and np.any(f <= 0):
        raise ValueError("frequency must be positive")
    if np.any(f < 0):
        raise ValueError("frequency must be non-negative")
    return f


def damping_ratio(medium: SoilMedium, f):
    """zeta = eta * omega / (2 G), SI units."""
    f = _check_freq(f, strict=False)
    zeta = medium.eta * 2.0 * np.pi * f / (2.0 * medium.G_si)
    return float(zeta) if zeta.ndim == 0 else zeta


def wave_numbers(medium: SoilMedium, f) -> WaveNumbers:
    """Phase (k1, rad/m) and attenuation (k2, Np/m) wave numbers.

    Both are the non-negative real roots of the Kelvin-Voigt dispersion
    relation.  ``f`` may be a scalar or an array.
    """
    f = _check_freq(f, strict=True)
    omega = 2.0 * np.pi * f
    zeta = medium.eta * omega / (2.0 * medium.G_si)
    root = np.sqrt(1.0 + 4.0 * zeta**2)
    pref = medium.rho_si * omega**2 / (2.0 * medium.G_si * (1.0 + 4.0 * zeta**2))
    k1 = np.sqrt(pref * (root + 1.0))
    # root - 1 = 4 zeta^2 / (root + 1); taking the square root before
    # multiplying avoids both cancellation and underflow at tiny zeta
    k2 = np.sqrt(pref) * 2.0 * zeta / np.sqrt(root + 1.0)
    if f.ndim == 0:
        return WaveNumbers(float(k1), float(k2), float(zeta))
    return WaveNumbers(k1, k2, zeta)


def _n_samples(duration: float, dt: float) -> int:
    if not (duration > 0 and dt > 0):
        raise ValueError("duration and dt must be positive")
    return max(1, int(round(duration / dt)))


def draw_components(spec: SourceSpec, rng: np.random.Generator):
    """Draw (frequency Hz, amplitude Pa, phase rad) for every tone.

    Non-positive frequencies from the Gaussian tail are redrawn.
    """
    n = int(spec.n_components)
    freqs = rng.normal(spec.mean_freq, spec.std_freq, n)
    bad = freqs <= 0
    while bad.any():
        freqs[bad] = rng.normal(spec.mean_freq, spec.std_freq, int(bad.sum()))
        bad = freqs <= 0
    amps = rng.normal(spec.mean_amp, spec.std_amp, n) * 1e-6
    phases = rng.uniform(0.0, 2.0 * np.pi, n)
    return freqs, amps, phases


def tone_sum(freqs, amps, phases, n: int, dt: float, chunk: int = 4000) -> np.ndarray:
    """Real part of sum_n amps_n exp(i(omega_n t + phases_n)) on a uniform grid.

    Evaluated chunk-wise as a complex matrix-vector product: a fixed block of
    phasors exp(i omega k dt) is reused and rotated by the chunk start phase,
    which avoids one ``cos`` call per sample and tone.
    """
    freqs = np.asarray(freqs, dtype=float)
    weights = np.asarray(amps, dtype=float) * np.exp(1j * np.asarray(phases, dtype=float))
    omega = 2.0 * np.pi * freqs
    chunk = min(chunk, n)
    block = np.exp(1j * np.outer(np.arange(chunk) * dt, omega))
    out = np.empty(n)
    for start in range(0, n, chunk):
        stop = min(start + chunk, n)
        rot = weights * np.exp(1j * omega * (start * dt))
        out[start:stop] = (block[: stop - start] @ rot).real
    return out


def synthesize_received(
    medium: SoilMedium,
    spec: SourceSpec,
    x_m: float,
    duration: float,
    dt: float,
    rng: np.random.Generator,
) -> PressureTrace:
    """Multi-tone pressure after travelling ``x_m`` metres of soil (Pa).

    Each tone keeps its drawn amplitude and phase, loses e^(-k2 x) in
    amplitude and lags by k1 x in phase.
    """
    if x_m < 0:
        raise ValueError("x_m must be non-negative")
    n = _n_samples(duration, dt)
    freqs, amps, phases = draw_components(spec, rng)
    wn = wave_numbers(medium, freqs)
    amps = amps * np.exp(-wn.k2 * x_m)
    phases = phases - wn.k1 * x_m
    return PressureTrace(0.0, dt, tone_sum(freqs, amps, phases, n, dt))


def pink_noise(duration: float, dt: float, rms_level: float, rng: np.random.Generator) -> PressureTrace:
    """Gaussian noise with 1/f power between 1 Hz and Nyquist, scaled to ``rms_level`` Pa."""
    if rms_level < 0:
        raise ValueError("rms_level must be non-negative")
    n = _n_samples(duration, dt)
    m = n // 2 + 1
    spec = rng.standard_normal(m) + 1j * rng.standard_normal(m)
    if rms_level == 0:
        return PressureTrace(0.0, dt, np.zeros(n))
    f = np.fft.rfftfreq(n, dt)
    shape = np.zeros(m)
    band = f >= 1.0
    shape[band] = 1.0 / np.sqrt(f[band])
    x = np.fft.irfft(spec * shape, n)
    rms = np.sqrt(np.mean(x**2))
    if rms == 0:
        # too short to contain any component above 1 Hz
        return PressureTrace(0.0, dt, np.zeros(n))
    return PressureTrace(0.0, dt, x * (rms_level / rms))


def received_stress(signal: PressureTrace, noise: PressureTrace, gain: float = 1.0) -> PressureTrace:
    """Wall stress sigma(t) = gain * |signal + noise|.

    ``gain`` is the pressure-to-wall-stress coupling; 1 reproduces the bare
    rectified sum.
    """
    if not same_sampling(signal, noise):
        raise ValueError("signal and noise must share dt and length")
    if gain < 0:
        raise ValueError("gain must be non-negative")
    return signal.with_samples(gain * np.abs(signal.samples + noise.samples))


@dataclass(frozen=True)
class ChannelParams:
    """Propagation geometry and receiver-side knobs.

    ``coupling_gain`` converts received pressure into effective wall stress;
    ``noise_rms_pa`` sets the interference level.
    """

    x_m: float = 1.0
    noise_rms_pa: float = 1e-6
    coupling_gain: float = 2.0e5

    def __post_init__(self):
        if self.x_m < 0:
            raise ValueError("x_m must be non-negative")
        if self.noise_rms_pa < 0:
            raise ValueError("noise_rms_pa must be non-negative")
        if self.coupling_gain < 0:
            raise ValueError("coupling_gain must be non-negative")
