"""Viscoelastoplastic cell wall: wall stress to MCA2 sensor force and channel stress."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.signal import lfilter

from .constants import ANGSTROM2_TO_M2, MMHG_TO_PA
from .traces import PressureTrace


@dataclass(frozen=True)
class WallParams:
    """Wall and sensor constants.

    Parameters
    ----------
    mu_s, mu_w : float
        Sensor and wall viscosities (Pa s).
    tau_w, tau_s : float
        Wall relaxation time and sensor averaging time (s).
    Y : float
        Yield stress (Pa).
    A_M : float
        MCA2 cross-section (m^2).
    force_area : float
        Area (m^2) over which the wall bracket acts on one sensor.  The
        default of 1 m^2 reads the bracket directly as a force; setting it
        to ``A_M`` makes the channel stress equal to the bracket itself.
    """

    mu_s: float = 0.01
    mu_w: float = 13e10
    tau_w: float = 0.02
    tau_s: float = 0.001
    Y: float = 0.5
    A_M: float = 91106.18695 * ANGSTROM2_TO_M2
    force_area: float = 1.0

    def __post_init__(self):
        for name in ("mu_s", "mu_w", "tau_w", "tau_s", "Y", "A_M", "force_area"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be positive, got {v}")

    @property
    def transfer(self) -> float:
        """Channel stress per unit of wall bracket (Pa/Pa)."""
        return self.mu_s / self.mu_w * self.force_area / self.A_M


def ema_alpha(dt: float, tau: float) -> float:
    return -math.expm1(-dt / tau)


def slow_trend(sigma_tilde: PressureTrace, tau_s: float) -> PressureTrace:
    """Causal exponential moving average with time constant ``tau_s``.

    The accumulator starts at the first sample, so a constant input is
    returned unchanged.
    """
    if tau_s <= 0:
        raise ValueError("tau_s must be positive")
    if sigma_tilde.dt > tau_s:
        warnings.warn("dt exceeds tau_s; the trend is coarsely resolved", RuntimeWarning, stacklevel=2)
    a = ema_alpha(sigma_tilde.dt, tau_s)
    x = sigma_tilde.samples
    y, _ = lfilter([a], [1.0, a - 1.0], x, zi=[(1.0 - a) * x[0]])
    return sigma_tilde.with_samples(y)


class SlowTrend:
    """Streaming form of :func:`slow_trend` for chunked processing."""

    def __init__(self, dt: float, tau_s: float):
        self.alpha = ema_alpha(dt, tau_s)
        self.value: float | None = None

    def __call__(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if x.size == 0:
            return x.copy()
        a = self.alpha
        prev = x[0] if self.value is None else self.value
        y, _ = lfilter([a], [1.0, a - 1.0], x, zi=[(1.0 - a) * prev])
        self.value = float(y[-1])
        return y


def wall_bracket(sigma: PressureTrace, params: WallParams) -> np.ndarray:
    """(tau_w/tau_s) * (sigma~ - <sigma~>) + <sigma~>, with sigma~ = sigma - Y (Pa)."""
    tilde = sigma.samples - params.Y
    trend = slow_trend(sigma.with_samples(tilde), params.tau_s).samples
    return (params.tau_w / params.tau_s) * (tilde - trend) + trend


def sensor_force(sigma: PressureTrace, params: WallParams) -> PressureTrace:
    """Force on one MCA2 sensor (N)."""
    F = params.mu_s / params.mu_w * wall_bracket(sigma, params) * params.force_area
    return sigma.with_samples(F, units="N")


def channel_stress(force: PressureTrace, A_M: float) -> PressureTrace:
    """Per-channel stress F / A_M in mmHg."""
    if not A_M > 0:
        raise ValueError("A_M must be positive")
    return force.with_samples(force.samples / A_M / MMHG_TO_PA, units="mmHg")
