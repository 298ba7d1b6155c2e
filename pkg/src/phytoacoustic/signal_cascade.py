"""Kinase cascades that turn hub activity into PIN2 carrier modifiers.

Two branches are modelled.  Cytosolic Ca2+ activates CPK29, which
phosphorylates PIN2 and raises its membrane dissociation rate (delta_p).
Apoplastic auxin activates FERONIA, then ROPGEF4 and ROP6, which slows PIN2
internalisation (omega_p).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class CascadeParams:
    k_K: float = 1e-23
    gain: float = 8e11
    nu1P: float = 5.0
    j1P: float = 0.1
    j2P: float = 5.0
    k_F: float = 1e-6
    nu1R: float = 5.0
    j1R: float = 0.1
    j2R: float = 5.0
    v_Pm: float = 0.1
    k_P: float = 0.05
    CPK29_total: float = 1.724252492e-7
    PIN2_total: float = 3.518272425e-8
    FER_total: float = 4.370431894e-7
    ROPGEF4_total: float = 4.634551495e-9
    ROP6_total: float = 5.830564784e-8
    rop6_init_fraction: float = 0.5
    apoplastic_auxin: float = 0.096  # µM, receiver-cell mean over faces
    eps: float = 1e-30

    def __post_init__(self):
        for name in ("k_K", "gain", "nu1P", "j1P", "j2P", "k_F", "nu1R", "j1R", "j2R", "v_Pm", "k_P"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be positive, got {v}")
        if not 0 <= self.rop6_init_fraction <= 1:
            raise ValueError("rop6_init_fraction must lie in [0, 1]")
        if self.apoplastic_auxin < 0:
            raise ValueError("apoplastic_auxin must be non-negative")


@dataclass(frozen=True)
class CascadeOutputs:
    K_ac: np.ndarray
    P_a: np.ndarray
    F_a: np.ndarray
    G_a_ropgef: np.ndarray
    O_a: np.ndarray
    delta_p_mod: float
    omega_p_mod: float

    @property
    def apr(self) -> float:
        return self.delta_p_mod


def cpk29_fraction(c_c, k_K: float):
    """Four-site Hill fraction c^4 / (k_K + c^4), ``c_c`` in nM converted to mol/L."""
    c4 = (np.asarray(c_c, float) * 1e-9) ** 4
    out = c4 / (k_K + c4)
    return float(out) if out.ndim == 0 else out


def goldbeter_koshland(nu1, nu2, j1, j2):
    """Steady-state unmodified fraction of a two-enzyme covalent cycle.

    Solves (nu2 - nu1) G^2 - B G + nu1 j2 = 0 for the root in (0, 1), with
    B = nu2 - nu1 + j1 nu2 + j2 nu1.  The two algebraically equal forms of
    that root are picked by the sign of B so neither suffers cancellation.
    """
    nu1, nu2, j1, j2 = (np.asarray(v, float) for v in (nu1, nu2, j1, j2))
    if np.any(nu1 <= 0) or np.any(j1 <= 0) or np.any(j2 <= 0) or np.any(nu2 < 0):
        raise ValueError("Goldbeter-Koshland arguments must be positive")
    d = nu2 - nu1
    B = d + j1 * nu2 + j2 * nu1
    disc = B * B - 4.0 * d * nu1 * j2
    if np.any(disc < 0):
        raise ArithmeticError("negative discriminant in Goldbeter-Koshland function")
    root = np.sqrt(disc)
    with np.errstate(divide="ignore", invalid="ignore"):
        G = np.where(B >= 0, 2.0 * nu1 * j2 / (B + root), (B - root) / (2.0 * np.where(d == 0, 1.0, d)))
    return float(G) if G.ndim == 0 else G


def pin2_activation(K_ac, p: CascadeParams):
    """Phosphorylated PIN2 (mol/L) for activated CPK29 ``K_ac`` (mol/L)."""
    nu2 = p.gain * np.asarray(K_ac, float)
    return (1.0 - goldbeter_koshland(p.nu1P, nu2, p.j1P, p.j2P)) * p.PIN2_total


def fer_fraction(A_mean, k_F: float):
    """FERONIA activation A^2 / (k_F + A^2) for mean apoplastic auxin in µM."""
    a2 = np.asarray(A_mean, float) ** 2
    out = a2 / (k_F + a2)
    return float(out) if out.ndim == 0 else out


def ropgef_activation(F_a, p: CascadeParams):
    nu2 = p.gain * np.asarray(F_a, float)
    return (1.0 - goldbeter_koshland(p.nu1R, nu2, p.j1R, p.j2R)) * p.ROPGEF4_total


def rop6_step(O_a: float, G_a_ropgef: float, dt: float, p: CascadeParams, G_ref: float = 0.0) -> float:
    """One Euler step of ROP6 activation, clamped to [0, ROP6_total].

    ``G_ref`` is the ROPGEF level treated as the unperturbed drive; only the
    excess over it activates ROP6.  The default 0 uses the absolute level.
    """
    if O_a < 0 or G_a_ropgef < 0 or dt < 0:
        raise ValueError("rop6_step arguments must be non-negative")
    drive = G_a_ropgef - G_ref
    rate = p.v_Pm * drive / (p.k_P + abs(drive)) if drive != 0 else 0.0
    return min(max(O_a + dt * rate, 0.0), p.ROP6_total)


def _ratio(start: float, end: float, what: str) -> float:
    if start <= 0:
        warnings.warn(f"{what} starts at zero; modifier set to 1", RuntimeWarning, stacklevel=3)
        return 1.0
    return end / start


def delta_p_modifier(P_a_start: float, P_a_end: float) -> float:
    """End-over-start ratio of activated PIN2 (the APR)."""
    return _ratio(P_a_start, P_a_end, "activated PIN2")


def omega_p_modifier(O_a_start: float, O_a_end: float) -> float:
    return _ratio(O_a_start, O_a_end, "activated ROP6")


def run_cascade(c_c, p: CascadeParams, dt: float, A_mean=None) -> CascadeOutputs:
    """Drive both branches with a Ca2+ trajectory (nM) sampled every ``dt`` s.

    ``A_mean`` is the receiver cell's apoplastic auxin (µM), a scalar or a
    trajectory the same length as ``c_c``; it defaults to the configured
    constant.  P_a is floored at ``p.eps`` before forming the APR.
    """
    c_c = np.asarray(c_c, float)
    K_ac = cpk29_fraction(c_c, p.k_K) * p.CPK29_total
    P_a = np.atleast_1d(pin2_activation(K_ac, p))
    A = np.broadcast_to(np.asarray(p.apoplastic_auxin if A_mean is None else A_mean, float), c_c.shape)
    F_a = np.atleast_1d(fer_fraction(A, p.k_F) * p.FER_total)
    G_r = np.atleast_1d(ropgef_activation(F_a, p))
    O_a = np.empty_like(c_c)
    O_a[0] = p.rop6_init_fraction * p.ROP6_total
    for i in range(1, c_c.size):
        O_a[i] = rop6_step(O_a[i - 1], float(G_r[i - 1]), dt, p, G_ref=float(G_r[0]))
    d_mod = delta_p_modifier(max(P_a[0], p.eps), max(P_a[-1], p.eps))
    w_mod = omega_p_modifier(O_a[0], O_a[-1])
    return CascadeOutputs(np.atleast_1d(K_ac), P_a, F_a, G_r, O_a, d_mod, w_mod)
