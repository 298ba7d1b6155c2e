"""Uniformly sampled time series container."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class PressureTrace:
    """A uniformly sampled signal.

    Despite the name the container is used for every sampled quantity in the
    chain (pressure, wall stress, sensor force, channel stress); ``units``
    records which one.
    """

    t0: float
    dt: float
    samples: np.ndarray
    units: str = "Pa"

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=float)
        if samples.ndim != 1:
            raise ValueError("samples must be one-dimensional")
        if samples.size < 1:
            raise ValueError("a trace needs at least one sample")
        if not np.isfinite(self.dt) or self.dt <= 0:
            raise ValueError(f"dt must be positive, got {self.dt}")
        if not np.all(np.isfinite(samples)):
            raise ValueError("trace contains non-finite samples")
        object.__setattr__(self, "samples", samples)

    def __len__(self) -> int:
        return self.samples.size

    @property
    def times(self) -> np.ndarray:
        return self.t0 + self.dt * np.arange(self.samples.size)

    @property
    def duration(self) -> float:
        return self.samples.size * self.dt

    @property
    def rate(self) -> float:
        return 1.0 / self.dt

    def with_samples(self, samples, units: str | None = None) -> "PressureTrace":
        return PressureTrace(self.t0, self.dt, samples, self.units if units is None else units)

    def rms(self) -> float:
        return float(np.sqrt(np.mean(self.samples**2)))


def same_sampling(a: PressureTrace, b: PressureTrace, rtol: float = 1e-12) -> bool:
    return len(a) == len(b) and abs(a.dt - b.dt) <= rtol * max(a.dt, b.dt)
