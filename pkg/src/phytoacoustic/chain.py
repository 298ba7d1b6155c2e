"""End-to-end run of the sensing chain for one stimulus interval."""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from . import acoustic_channel as ac
from .ca_ros_hub import HubState, hub_step
from .cell_wall import channel_stress, sensor_force
from .errors import NumericAbort
from .mca2_gate import downsample_bio, lowpass, step_influx
from .signal_cascade import CascadeOutputs, run_cascade
from .sim_io.config import SimConfig
from .sim_io.rng import rng_stream
from .traces import PressureTrace


@dataclass(frozen=True)
class ChainResult:
    """Outputs of one interval.

    Fast traces are kept only when requested; the biological-rate arrays
    include the initial state, so they hold one more entry than ``c_M``.
    """

    t_bio: np.ndarray
    sigma_f: np.ndarray  # filtered channel stress per step, mmHg
    c_M: np.ndarray  # MCA2 influx per step, nM
    c_c: np.ndarray  # cytosolic Ca2+, nM
    h: np.ndarray  # apoplastic H2O2, mol/L
    cascade: CascadeOutputs
    pressure: PressureTrace | None = None
    stress: PressureTrace | None = None
    force: PressureTrace | None = None
    channel: PressureTrace | None = None

    @property
    def apr(self) -> float:
        return self.cascade.delta_p_mod


def received_pressure(cfg: SimConfig, seed: int, bit: int, duration: float, prefix: str = "") -> tuple[PressureTrace, PressureTrace]:
    """Signal (zero for bit 0) and pink noise for one interval."""
    dt = cfg.link.fast_dt
    if bit:
        sig = ac.synthesize_received(cfg.soil, cfg.source, cfg.channel.x_m, duration, dt, rng_stream(seed, prefix + "source"))
    else:
        n = max(1, int(round(duration / dt)))
        sig = PressureTrace(0.0, dt, np.zeros(n))
    noise = ac.pink_noise(duration, dt, cfg.channel.noise_rms_pa, rng_stream(seed, prefix + "noise"))
    return sig, noise


def run_chain(
    cfg: SimConfig,
    seed: int | None = None,
    bit: int = 1,
    duration: float | None = None,
    stream_prefix: str = "",
    keep_traces: bool = False,
    state: HubState | None = None,
) -> ChainResult:
    """Simulate sound reception through to the PIN2 and ROP6 modifiers."""
    seed = cfg.link.base_seed if seed is None else seed
    duration = cfg.link.bit_duration if duration is None else duration
    gate = cfg.gate_params()
    hub = cfg.hub_params()

    sig, noise = received_pressure(cfg, seed, bit, duration, stream_prefix)
    sigma = ac.received_stress(sig, noise, cfg.channel.coupling_gain)
    force = sensor_force(sigma, cfg.wall)
    chan = channel_stress(force, cfg.wall.A_M)
    sigma_f = downsample_bio(lowpass(chan, gate.cutoff_hz, gate.lpf_order), gate.bio_dt)

    state = HubState(c_c=hub.c_ss) if state is None else state
    n = sigma_f.size
    c_c = np.empty(n + 1)
    h = np.empty(n + 1)
    c_M = np.empty(n)
    c_c[0], h[0] = state.c_c, state.h
    for k in range(n):
        c_M[k] = step_influx(sigma_f[k], state.c_c, gate)
        state = hub_step(state, c_M[k], hub)
        c_c[k + 1], h[k + 1] = state.c_c, state.h
    if not (np.all(np.isfinite(c_c)) and np.all(np.isfinite(h))):
        raise NumericAbort("hub trajectory became non-finite")
    cascade = run_cascade(c_c, cfg.cascade, gate.bio_dt)
    t_bio = np.arange(n + 1) * gate.bio_dt
    if keep_traces:
        return ChainResult(t_bio, sigma_f, c_M, c_c, h, cascade, sig.with_samples(sig.samples + noise.samples), sigma, force, chan)
    return ChainResult(t_bio, sigma_f, c_M, c_c, h, cascade)


def zero_stimulus(cfg: SimConfig) -> SimConfig:
    """Same configuration with the interference switched off."""
    return replace(cfg, channel=replace(cfg.channel, noise_rms_pa=0.0))
