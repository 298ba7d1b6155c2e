"""Flux-based auxin transport on a square lattice of root cells.

Each cell holds cytosolic auxin ``a`` and free PIN2/AUX1 pools ``p`` and
``u``.  Each of its four faces (N, S, W, E) holds apoplastic auxin ``A`` and
membrane-bound carriers ``P`` and ``U``.  Apoplast compartments on the two
sides of an interior wall exchange auxin by diffusion; outer walls are
closed.  PIN2 is delivered preferentially to faces that already carry a
large efflux (canalisation).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields, replace

import numpy as np

from .errors import NumericAbort

N, S, W, E = range(4)
DIRS = ("N", "S", "W", "E")
# (row offset, col offset, face index seen from the neighbour)
NEIGHBOUR = ((-1, 0, S), (1, 0, N), (0, -1, E), (0, 1, W))

# Transcriptional sub-network constants (µM, min).  Ingested for reporting
# only: PIN2 and AUX1 pools here use constant synthesis instead.
GENE_NETWORK = {
    "gamma_a": 5.0, "beta_a": 0.5, "alpha_m": 0.5, "phi_m": 0.1, "theta_f": 1.0,
    "theta_w": 10.0, "theta_g": 1.0, "psi_f": 0.1, "psi_g": 0.1, "alpha_r": 5.0,
    "beta_r": 5.0, "gamma_r": 5.0, "beta_g": 0.5, "gamma_g": 5.0, "beta_p": 100.0,
    "gamma_p": 5.0, "beta_f": 0.5, "gamma_f": 5.0, "mu_r": 5.0,
}


@dataclass(frozen=True)
class GridParams:
    """Transport constants (µM, µm, min) plus lattice geometry and run control.

    The gene-network constants of the full model live in
    :data:`GENE_NETWORK`; the reduced model does not read them.
    """

    alpha_a: float = 0.5
    mu_a: float = 0.5
    alpha_p: float = 5.0
    mu_p: float = 5.0
    alpha_u: float = 5.0
    mu_u: float = 5.0
    omega_p: float = 0.5
    delta_p: float = 0.05
    omega_u: float = 0.5
    delta_u: float = 0.05
    kappa_a_ef: float = 0.004
    kappa_a_in: float = 0.24
    kappa_p_ef: float = 4.67
    kappa_u_in: float = 3.56
    phi_a: float = 0.55
    phi_p: float = 0.27
    phi_u: float = 0.55
    phi_A: float = 67.0
    h: float = 50.0
    theta: float = 2.0
    rows: int = 11
    cols: int = 11
    xylem_col: int = 5
    xylem_factor: float = 2.0
    exposed_cols: int = 5
    dt: float = 0.01
    steps: int = 2000
    a0: float = 0.0

    def __post_init__(self):
        for f in fields(self):
            if f.name in ("a0", "xylem_col", "exposed_cols"):
                continue
            v = getattr(self, f.name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{f.name} must be positive, got {v}")
        if not 0 <= self.xylem_col < self.cols:
            raise ValueError("xylem_col outside the grid")
        if not 0 <= self.exposed_cols <= self.cols:
            raise ValueError("exposed_cols outside the grid")
        if self.a0 < 0:
            raise ValueError("a0 must be non-negative")


@dataclass
class AuxinGrid:
    """Lattice state; cell arrays are (rows, cols), face arrays (rows, cols, 4)."""

    a: np.ndarray
    p: np.ndarray
    u: np.ndarray
    A: np.ndarray
    P: np.ndarray
    U: np.ndarray
    alpha_a: np.ndarray
    omega_p: np.ndarray
    delta_p: np.ndarray
    xylem: np.ndarray
    exposed: np.ndarray
    params: GridParams
    time: float = 0.0

    @property
    def shape(self):
        return self.a.shape

    def copy(self) -> "AuxinGrid":
        arrays = {k: getattr(self, k).copy() for k in ("a", "p", "u", "A", "P", "U", "alpha_a", "omega_p", "delta_p", "xylem", "exposed")}
        return AuxinGrid(**arrays, params=self.params, time=self.time)

    def total_auxin(self) -> float:
        return float(self.a.sum() + self.A.sum())


def face_sum(x: np.ndarray) -> np.ndarray:
    """Sum over the face axis, grouped (N+S)+(W+E) so mirrored cells agree bit for bit."""
    return (x[..., N] + x[..., S]) + (x[..., W] + x[..., E])


def partner_faces(X: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Value on the other side of each wall, and a mask of interior faces."""
    out = np.zeros_like(X)
    mask = np.zeros(X.shape, dtype=bool)
    out[1:, :, N] = X[:-1, :, S]
    out[:-1, :, S] = X[1:, :, N]
    out[:, 1:, W] = X[:, :-1, E]
    out[:, :-1, E] = X[:, 1:, W]
    mask[1:, :, N] = mask[:-1, :, S] = True
    mask[:, 1:, W] = mask[:, :-1, E] = True
    return out, mask


def build_grid(params: GridParams, delta_p_mod: float = 1.0, omega_p_mod: float = 1.0) -> AuxinGrid:
    """Uniform initial lattice with the modifiers applied to sound-exposed cells.

    Free pools start at their synthesis/decay balance, membrane carriers at
    the localisation/dissociation balance for an even split over faces, and
    auxin at ``params.a0`` with an empty apoplast.
    """
    if delta_p_mod <= 0 or omega_p_mod <= 0:
        raise ValueError("modifiers must be positive")
    shape = (params.rows, params.cols)
    cols = np.broadcast_to(np.arange(params.cols), shape)
    xylem = cols == params.xylem_col
    exposed = cols < params.exposed_cols
    alpha_a = np.where(xylem, params.alpha_a * params.xylem_factor, params.alpha_a)
    omega_p = np.where(exposed, params.omega_p * omega_p_mod, params.omega_p)
    delta_p = np.where(exposed, params.delta_p * delta_p_mod, params.delta_p)
    p = np.full(shape, params.alpha_p / params.mu_p)
    u = np.full(shape, params.alpha_u / params.mu_u)
    P = np.repeat((omega_p * 0.25 * p / delta_p)[..., None], 4, axis=2)
    U = np.full(shape + (4,), params.omega_u * u[0, 0] / params.delta_u)
    return AuxinGrid(
        a=np.full(shape, params.a0), p=p, u=u, A=np.zeros(shape + (4,)), P=P, U=U,
        alpha_a=alpha_a, omega_p=omega_p, delta_p=delta_p, xylem=xylem, exposed=exposed, params=params,
    )


def carrier_flux(a, A, P, U, params: GridParams):
    """Net auxin flux from a cell into one of its face compartments."""
    a = np.asarray(a, float)
    return (
        params.phi_a * (params.kappa_a_ef * a - params.kappa_a_in * A)
        + params.phi_p * P * params.kappa_p_ef * a
        - params.phi_u * U * params.kappa_u_in * A
    )


def localization_weights(J, omega_p, params: GridParams) -> np.ndarray:
    """Face weights logistic(h (J/omega_p - theta)) normalised to sum to 1 per cell.

    Evaluated in log space; at h = 50 the raw logistic underflows for
    ordinary fluxes, but the normalised weights stay well defined.
    """
    x = params.h * (J / np.asarray(omega_p, float)[..., None] - params.theta)
    logw = -np.logaddexp(0.0, -x)
    m = np.maximum(np.maximum(logw[..., N], logw[..., S]), np.maximum(logw[..., W], logw[..., E]))
    w = np.exp(logw - m[..., None])
    return w / face_sum(w)[..., None]


def pin_localization(p, P, J, omega_p, delta_p, params: GridParams):
    """Net PIN2 delivery rate to each face: omega_p H p - delta_p P."""
    H = localization_weights(J, omega_p, params)
    return np.asarray(omega_p)[..., None] * H * np.asarray(p)[..., None] - np.asarray(delta_p)[..., None] * P


def aux1_flux(u, U, params: GridParams):
    """Net AUX1 delivery rate to a face: omega_u u - delta_u U."""
    return params.omega_u * np.asarray(u)[..., None] - params.delta_u * U


def derivatives(g: AuxinGrid, synthesis: bool = True, carriers: bool = True):
    """Time derivatives of every pool from a frozen snapshot."""
    pr = g.params
    J = carrier_flux(g.a[..., None], g.A, g.P, g.U, pr)
    A_other, interior = partner_faces(g.A)
    diff = np.where(interior, pr.phi_A * (g.A - A_other), 0.0)
    mu_a = pr.mu_a if synthesis else 0.0
    alpha = g.alpha_a if synthesis else 0.0
    da = alpha - mu_a * g.a - face_sum(J)
    dA = J - diff - mu_a * g.A
    if carriers:
        LP = pin_localization(g.p, g.P, J, g.omega_p, g.delta_p, pr)
        LU = aux1_flux(g.u, g.U, pr)
        dp = pr.alpha_p - pr.mu_p * g.p - face_sum(LP)
        du = pr.alpha_u - pr.mu_u * g.u - face_sum(LU)
    else:
        LP = LU = np.zeros_like(g.P)
        dp = du = np.zeros_like(g.p)
    return da, dA, dp, LP, du, LU


def grid_step(g: AuxinGrid, dt: float | None = None, synthesis: bool = True, carriers: bool = True) -> AuxinGrid:
    """One explicit Euler step; returns a new grid.

    Pools are clamped at zero.  A clamp that removes more than round-off,
    or any non-finite value, means the step is unstable and aborts.
    """
    dt = g.params.dt if dt is None else dt
    if not dt > 0:
        raise ValueError("dt must be positive")
    da, dA, dp, dP, du, dU = derivatives(g, synthesis, carriers)
    new = g.copy()
    new.time = g.time + dt
    for name, d in (("a", da), ("A", dA), ("p", dp), ("P", dP), ("u", du), ("U", dU)):
        x = getattr(g, name) + dt * d
        if not np.all(np.isfinite(x)):
            raise NumericAbort(f"non-finite {name} at t={new.time:g} min")
        scale = max(float(np.max(np.abs(getattr(g, name)))), 1.0)
        if x.min() < -1e-9 * scale:
            raise NumericAbort(f"{name} went negative ({x.min():.3g}) at t={new.time:g} min; reduce dt")
        setattr(new, name, np.maximum(x, 0.0))
    return new


def simulate_grid(params: GridParams, delta_p_mod: float = 1.0, omega_p_mod: float = 1.0, steps: int | None = None) -> AuxinGrid:
    g = build_grid(params, delta_p_mod, omega_p_mod)
    for _ in range(params.steps if steps is None else steps):
        g = grid_step(g)
    return g


def polarity_index(g: AuxinGrid) -> float:
    """(right-half mean a - left-half mean a) / mean a over non-xylem cells.

    Halves are the columns on either side of the xylem column.
    """
    xc = g.params.xylem_col
    left = g.a[:, :xc].mean()
    right = g.a[:, xc + 1:].mean()
    ref = g.a[~g.xylem].mean()
    if ref == 0:
        return 0.0
    return float((right - left) / ref)


def mirror(g: AuxinGrid) -> AuxinGrid:
    """Left-right reflection, swapping W and E faces."""
    m = g.copy()
    for name in ("a", "p", "u", "alpha_a", "omega_p", "delta_p", "xylem", "exposed"):
        setattr(m, name, getattr(g, name)[:, ::-1].copy())
    for name in ("A", "P", "U"):
        x = getattr(g, name)[:, ::-1][..., [N, S, E, W]]
        setattr(m, name, x.copy())
    return m


def symmetric(params: GridParams) -> GridParams:
    """Variant whose xylem column sits in the centre."""
    return replace(params, xylem_col=params.cols // 2)
