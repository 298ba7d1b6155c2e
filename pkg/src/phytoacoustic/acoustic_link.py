"""The sensing chain viewed as a binary link: bits, APR decisions and BER sweeps."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .sim_io.rng import rng_stream

SWEEP_PARAMS = ("mean_freq", "mean_amp", "bit_duration")


@dataclass(frozen=True)
class LinkConfig:
    """Link timing, decision and sweep settings.

    ``amp_values_printed`` keeps the amplitude list exactly as tabulated
    (including its out-of-order 1 µPa entry); ``amp_values`` is the list
    swept by default.
    """

    bit_duration: float = 150.0
    n_bits: int = 5
    threshold: float = 5.0
    fast_dt: float = 0.0005
    bio_dt: float = 0.5
    runs: int = 20
    base_seed: int = 0
    reset_between_bits: bool = True
    freq_values: tuple = (200.0, 300.0, 400.0, 500.0, 600.0, 700.0, 800.0)
    amp_values: tuple = (2.0, 5.0, 10.0, 20.0, 40.0)
    amp_values_printed: tuple = (2.0, 5.0, 1.0, 20.0, 40.0)
    duration_values: tuple = (10.0, 50.0, 100.0, 150.0, 200.0)

    def __post_init__(self):
        if not (self.fast_dt > 0 and self.bio_dt > 0):
            raise ValueError("fast_dt and bio_dt must be positive")
        ratio = self.bio_dt / self.fast_dt
        if abs(ratio - round(ratio)) > 1e-9 * ratio:
            raise ValueError("bio_dt must be a multiple of fast_dt")
        _check_multiple(self.bit_duration, self.bio_dt, "bit_duration")
        for v in self.duration_values:
            _check_multiple(v, self.bio_dt, "duration_values")
        if not self.threshold > 0:
            raise ValueError("threshold must be positive")
        if self.n_bits < 1 or self.runs < 1:
            raise ValueError("n_bits and runs must be at least 1")
        if self.base_seed < 0:
            raise ValueError("base_seed must be non-negative")
        if not self.reset_between_bits:
            raise ValueError("reset_between_bits=false is not supported")


def _check_multiple(value: float, step: float, name: str):
    k = value / step
    if not (value > 0 and abs(k - round(k)) <= 1e-9 * k):
        raise ValueError(f"{name} value {value} is not a positive multiple of bio_dt={step}")


@dataclass(frozen=True)
class LinkReport:
    tx_bits: np.ndarray
    rx_bits: np.ndarray
    apr_per_bit: np.ndarray

    @property
    def n_bits(self) -> int:
        return int(self.tx_bits.size)

    @property
    def errors(self) -> int:
        return int(np.count_nonzero(self.tx_bits != self.rx_bits))

    @property
    def ber(self) -> float:
        return self.errors / self.n_bits


def decide(apr: float, threshold: float = 5.0) -> int:
    """1 when the APR strictly exceeds ``threshold``."""
    if apr < 0:
        raise ValueError("apr must be non-negative")
    return int(apr > threshold)


def run_bit(bit: int, config, rng_seed: int, index: int = 0) -> float:
    """APR of one bit interval starting from the resting state."""
    from .chain import run_chain

    if bit not in (0, 1):
        raise ValueError("bit must be 0 or 1")
    res = run_chain(config, seed=rng_seed, bit=bit, stream_prefix=f"bit{index}/")
    return res.apr


def run_link(tx_bits, config, seed: int | None = None) -> LinkReport:
    """Send ``tx_bits`` through the chain, one independent interval per bit."""
    tx = np.asarray(tx_bits, dtype=np.int64)
    if tx.ndim != 1 or tx.size < 1:
        raise ValueError("tx_bits must be a non-empty bit vector")
    seed = config.link.base_seed if seed is None else seed
    apr = np.array([run_bit(int(b), config, seed, i) for i, b in enumerate(tx)])
    rx = np.array([decide(a, config.link.threshold) for a in apr], dtype=np.int64)
    return LinkReport(tx, rx, apr)


def random_bits(n: int, seed: int) -> np.ndarray:
    """Equiprobable transmit bits from the run's ``bits`` stream."""
    return rng_stream(seed, "bits").integers(0, 2, size=n)


def with_parameter(config, param: str, value: float):
    """Copy of ``config`` with one sweepable parameter replaced."""
    if param == "mean_freq":
        return replace(config, source=replace(config.source, mean_freq=float(value)))
    if param == "mean_amp":
        return replace(config, source=replace(config.source, mean_amp=float(value)))
    if param == "bit_duration":
        return replace(config, link=replace(config.link, bit_duration=float(value)))
    raise ValueError(f"unknown sweep parameter {param!r}; choose from {', '.join(SWEEP_PARAMS)}")


def default_values(config, param: str) -> tuple:
    return {
        "mean_freq": config.link.freq_values,
        "mean_amp": config.link.amp_values,
        "bit_duration": config.link.duration_values,
    }[param]


@dataclass(frozen=True)
class SweepRow:
    param: str
    value: float
    run: int
    bits: int
    errors: int

    @property
    def ber(self) -> float:
        return self.errors / self.bits


def sweep(param: str, values, runs: int, bits_per_run: int, config) -> list[SweepRow]:
    """BER over a grid of values; run ``i`` uses seed ``base_seed + i``.

    The transmitted bits depend only on the run seed, so every value sees
    the same bit pattern for a given run.
    """
    values = list(values)
    if not values:
        raise ValueError("values must be non-empty")
    if runs < 1 or bits_per_run < 1:
        raise ValueError("runs and bits_per_run must be at least 1")
    rows = []
    for v in values:
        cfg = with_parameter(config, param, v)
        for r in range(runs):
            seed = config.link.base_seed + r
            rep = run_link(random_bits(bits_per_run, seed), cfg, seed)
            rows.append(SweepRow(param, float(v), r, rep.n_bits, rep.errors))
    return rows


def summarize(rows: list[SweepRow]) -> list[tuple[str, float, float, float]]:
    """Per-value mean and population standard deviation of the run BERs."""
    out = {}
    for row in rows:
        out.setdefault((row.param, row.value), []).append(row.ber)
    return [(p, v, float(np.mean(b)), float(np.std(b))) for (p, v), b in out.items()]


def mean_ber(rows: list[SweepRow], value: float) -> float:
    bers = [r.ber for r in rows if math.isclose(r.value, value)]
    if not bers:
        raise KeyError(value)
    return float(np.mean(bers))
