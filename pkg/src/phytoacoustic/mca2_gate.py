"""MCA2 mechanosensitive channel: filtering, gating, electrodiffusion and Ca2+ influx."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.signal import butter, sosfilt, sosfilt_zi
from scipy.special import expit

from .constants import FARADAY, GAS_CONSTANT, MMHG_TO_PA, TEMPERATURE, Z_CA
from .traces import PressureTrace


@dataclass(frozen=True)
class GateParams:
    """MCA2 gating and transport constants.

    Voltages in mV except ``DeltaE`` (V); stresses in mmHg; ``D0`` in
    cm^2/s; ``V_cyt`` in litres.  ``c_cyt_ref`` only seeds stand-alone calls.
    """

    V: float = 150.0
    V_h: float = 238.15
    k_V: float = 32.64
    sigma_h: float = 72.32
    k_sigma: float = 16.13
    l: float = 15.6871
    DeltaE: float = 150e-3
    Delta_xd: float = 7e-9
    Delta_c: float = 1.0
    A_C: float = 1.9635e-17
    n_C: float = 40.0
    D0: float = 0.79e-5
    k_d: float = 0.01
    V_cyt: float = 1e-5
    cutoff_hz: float = 250.0
    lpf_order: int = 2
    bio_dt: float = 0.5
    dimensional_influx: bool = False
    evoked_influx: bool = True

    def __post_init__(self):
        for name in ("k_V", "k_sigma", "l", "Delta_xd", "A_C", "D0", "V_cyt", "cutoff_hz", "bio_dt"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be positive, got {v}")
        if self.n_C < 1:
            raise ValueError("n_C must be at least 1")
        if int(self.lpf_order) < 1:
            raise ValueError("lpf_order must be at least 1")


def _butter(cutoff_hz: float, dt: float, order: int):
    nyq = 0.5 / dt
    if not 0 < cutoff_hz < nyq:
        raise ValueError(f"cutoff {cutoff_hz} Hz must lie in (0, {nyq}) Hz")
    return butter(int(order), cutoff_hz, btype="low", fs=1.0 / dt, output="sos")


def lowpass(trace: PressureTrace, cutoff_hz: float, order: int = 2) -> PressureTrace:
    """Causal Butterworth low-pass, started in steady state at the first sample."""
    sos = _butter(cutoff_hz, trace.dt, order)
    x = trace.samples
    y, _ = sosfilt(sos, x, zi=sosfilt_zi(sos) * x[0])
    return trace.with_samples(y)


def open_probability(V, sigma, p: GateParams):
    """P0 = clamp(l * logistic((V-V_h)/k_V) * logistic((sigma-sigma_h)/k_sigma), 0, 1)."""
    raw = p.l * expit((np.asarray(V, float) - p.V_h) / p.k_V) * expit((np.asarray(sigma, float) - p.sigma_h) / p.k_sigma)
    out = np.clip(raw, 0.0, 1.0)
    return float(out) if out.ndim == 0 else out


def diffusion_coefficient(sigma_f, p: GateParams):
    """Pressure-dependent Ca2+ diffusivity in m^2/s (floored at zero)."""
    sigma_pa = np.asarray(sigma_f, float) * MMHG_TO_PA
    return np.maximum(p.D0 * 1e-4 * (1.0 + p.k_d * sigma_pa), 0.0)


def gate_current(sigma_f, p: GateParams, c_c: float):
    """Single-channel Nernst-Planck current (A); negative means inward.

    ``sigma_f`` in mmHg, ``c_c`` in nM.
    """
    if np.any(np.asarray(c_c) < 0):
        raise ValueError("c_c must be non-negative")
    c_si = np.asarray(c_c, float) * 1e-6  # nM -> mol/m^3
    D = diffusion_coefficient(sigma_f, p)
    drive = p.Delta_c / p.Delta_xd + FARADAY * Z_CA * c_si * p.DeltaE / (GAS_CONSTANT * TEMPERATURE * p.Delta_xd)
    out = -Z_CA * FARADAY * D * drive * p.A_C
    return float(out) if np.ndim(out) == 0 else out


def influx_concentration(I, P0, p: GateParams, t: float):
    """Ca2+ admitted by ``n_C`` channels over ``t`` seconds, in nM.

    With ``dimensional_influx`` off this is |I| t / (z V) * P0 * n_C taken
    as mol/L; switching it on divides by the Faraday constant.
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    c = np.abs(I) * t / (Z_CA * p.V_cyt) * np.asarray(P0, float) * p.n_C
    if p.dimensional_influx:
        c = c / FARADAY
    c = c * 1e9
    return float(c) if np.ndim(c) == 0 else c


def downsample_bio(trace: PressureTrace, bio_dt: float) -> np.ndarray:
    """Mean of ``trace`` over consecutive windows of ``bio_dt`` seconds.

    A trailing partial window is dropped.
    """
    ratio = bio_dt / trace.dt
    m = int(round(ratio))
    if m < 1 or abs(ratio - m) > 1e-9 * ratio:
        raise ValueError(f"bio_dt={bio_dt} is not a multiple of dt={trace.dt}")
    k = len(trace) // m
    return trace.samples[: k * m].reshape(k, m).mean(axis=1)


def step_influx(sigma_f, c_c, p: GateParams):
    """Per-step MCA2 influx (nM) for filtered stress ``sigma_f`` (mmHg).

    With ``evoked_influx`` the unstressed channel's contribution is
    subtracted and negative excess is cut, so only stress above the resting
    level admits Ca2+ (the resting leak is taken as already balanced).
    """
    def literal(s):
        return influx_concentration(gate_current(s, p, c_c), open_probability(p.V, s, p), p, p.bio_dt)

    c = literal(sigma_f)
    if p.evoked_influx:
        c = np.maximum(c - literal(0.0), 0.0)
    return float(c) if np.ndim(c) == 0 else c


def gate_chain(stress: PressureTrace, p: GateParams, c_c: float = 150.0) -> np.ndarray:
    """Channel stress trace (mmHg) to per-step influx (nM) at fixed ``c_c``."""
    filtered = lowpass(stress, p.cutoff_hz, p.lpf_order)
    return step_influx(downsample_bio(filtered, p.bio_dt), c_c, p)
