"""Cytosolic Ca2+ / apoplastic H2O2 positive-feedback hub."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .constants import AVOGADRO, FARADAY, GAS_CONSTANT, TEMPERATURE, Z_CA


@dataclass(frozen=True)
class HubParams:
    """Hub constants.

    Concentrations follow their natural units: ``c_ss`` in nM, everything
    else in mol/L.  ``rbohc_gain`` and ``annexin_gain`` are coupling
    multipliers on the activated RBOHC pool and on the annexin influx; with
    ``evoked_rbohc`` only activation above the resting level counts.
    """

    c_ss: float = 150.0
    k_eff1: float = 0.3
    k_eff2: float = 0.16
    k_C: float = 1e-7
    R_total: float = 1.420265781e-8
    v_Hm: float = 4e-5
    m_H: float = 1e-9
    v_sm: float = 1e-5
    m_s: float = 1e-4
    G_a: float = 17e-12
    k_a: float = 1.336e-8
    z_hill: float = 2.0
    n_a: float = 40.0
    c_ap: float = 1e-3
    DeltaE: float = 150e-3
    V_cyt: float = 1e-5
    bio_dt: float = 0.5
    rbohc_gain: float = 20.0
    annexin_gain: float = 0.0125
    evoked_rbohc: bool = True
    dimensional_influx: bool = False

    def __post_init__(self):
        for name in ("k_C", "m_H", "m_s", "k_a", "c_ap", "V_cyt", "bio_dt"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be positive, got {v}")
        if self.z_hill < 1:
            raise ValueError("z_hill must be at least 1")
        for name in ("k_eff1", "k_eff2", "R_total", "v_Hm", "v_sm", "G_a", "n_a", "rbohc_gain", "annexin_gain"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")


@dataclass(frozen=True)
class HubState:
    c_c: float = 150.0  # nM
    h: float = 0.0  # mol/L
    t: float = 0.0  # s

    def __post_init__(self):
        if self.c_c < 0 or self.h < 0:
            raise ValueError("hub concentrations must be non-negative")


def efflux(c_c: float, p: HubParams) -> float:
    """Per-step Ca2+ removal (nM); zero below 165 nM."""
    if c_c >= 200.0:
        return max(p.k_eff1 * (c_c - 195.0), p.k_eff2 * (c_c - 155.0))
    if c_c >= 165.0:
        return p.k_eff2 * (c_c - 155.0)
    return 0.0


def rbohc_fraction(c_c, k_C: float):
    """Two-site Hill fraction c^2 / (k_C + c^2), ``c_c`` in nM converted to mol/L."""
    c2 = (np.asarray(c_c, float) * 1e-9) ** 2
    out = c2 / (k_C + c2)
    return float(out) if out.ndim == 0 else out


def total_from_ppm(ab: float, k_ppm: float) -> float:
    """Total protein concentration k_ppm * AB / N_A."""
    if ab < 0:
        raise ValueError("abundance must be non-negative")
    return k_ppm * ab / AVOGADRO


def activated_rbohc(c_c: float, p: HubParams) -> float:
    frac = rbohc_fraction(c_c, p.k_C)
    if p.evoked_rbohc:
        frac = max(frac - rbohc_fraction(p.c_ss, p.k_C), 0.0)
    return p.rbohc_gain * p.R_total * frac


def h2o2_production_rate(C_ac: float, p: HubParams) -> float:
    return p.v_Hm * C_ac / (p.m_H + C_ac)


def h2o2_scavenging_rate(h: float, p: HubParams) -> float:
    return p.v_sm * h / (p.m_s + h)


def nernst_potential(c_ap: float, c_c: float) -> float:
    """Ca2+ reversal potential (V); both concentrations in the same unit."""
    if c_ap <= 0 or c_c <= 0:
        raise ValueError("concentrations must be positive")
    return GAS_CONSTANT * TEMPERATURE / (Z_CA * FARADAY) * math.log(c_ap / c_c)


def annexin_current(h: float, c_c: float, p: HubParams) -> float:
    """Annexin channel current (A) for H2O2 ``h`` (mol/L) and ``c_c`` (nM)."""
    if h < 0:
        raise ValueError("h must be non-negative")
    if h == 0:
        return 0.0
    hz = h**p.z_hill
    act = hz / (hz + p.k_a**p.z_hill)
    return p.G_a * act * (nernst_potential(p.c_ap, c_c * 1e-9) - p.DeltaE)


def annexin_influx(I_a: float, p: HubParams, t: float) -> float:
    """Ca2+ admitted through annexin channels over ``t`` seconds (nM)."""
    if t < 0:
        raise ValueError("t must be non-negative")
    c = abs(I_a) * t / (Z_CA * p.V_cyt) * p.n_a * p.annexin_gain
    if p.dimensional_influx:
        c /= FARADAY
    return c * 1e9


def hub_step(state: HubState, c_M: float, p: HubParams) -> HubState:
    """Advance one biological step given MCA2 influx ``c_M`` (nM)."""
    c, h = state.c_c, state.h
    c_a = annexin_influx(annexin_current(h, max(c, 1e-12), p), p, p.bio_dt) if h > 0 else 0.0
    c_next = c + c_M + c_a - efflux(c, p)
    rate = h2o2_production_rate(activated_rbohc(c, p), p) - h2o2_scavenging_rate(h, p)
    h_next = h + rate * p.bio_dt
    return HubState(max(c_next, 0.0), max(h_next, 0.0), state.t + p.bio_dt)


def run_hub(c_M, p: HubParams, state: HubState | None = None):
    """Integrate the hub over an influx sequence.

    Returns
    -------
    c, h : ndarray
        Trajectories including the initial state, length ``len(c_M) + 1``.
    """
    state = HubState(c_c=p.c_ss) if state is None else state
    c_M = np.asarray(c_M, float)
    c = np.empty(c_M.size + 1)
    h = np.empty(c_M.size + 1)
    c[0], h[0] = state.c_c, state.h
    for i, cm in enumerate(c_M):
        state = hub_step(state, float(cm), p)
        c[i + 1], h[i + 1] = state.c_c, state.h
    return c, h


def literal(p: HubParams) -> HubParams:
    """Copy of ``p`` with all coupling calibration switched off."""
    return replace(p, rbohc_gain=1.0, annexin_gain=1.0, evoked_rbohc=False)
