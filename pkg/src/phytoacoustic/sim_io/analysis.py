"""Spectral and correlation summaries of traces, returned as tables."""

from __future__ import annotations

import numpy as np
from scipy import signal

from ..traces import PressureTrace, same_sampling
from .csvio import Table

NPERSEG = 4096


def _check_length(trace: PressureTrace):
    if len(trace) < NPERSEG:
        raise ValueError(f"trace has {len(trace)} samples; at least {NPERSEG} are needed")


def psd(trace: PressureTrace) -> Table:
    """Welch estimate: Hann window of 4096 samples, 50% overlap."""
    _check_length(trace)
    f, pxx = signal.welch(trace.samples, fs=trace.rate, window="hann", nperseg=NPERSEG, noverlap=NPERSEG // 2)
    return Table(("freq", "psd"), (f, pxx))


def spectrogram(trace: PressureTrace) -> Table:
    """STFT magnitudes in long format (time, freq, magnitude)."""
    _check_length(trace)
    f, t, Z = signal.stft(trace.samples, fs=trace.rate, window="hann", nperseg=NPERSEG, noverlap=NPERSEG // 2, boundary=None, padded=False)
    tt, ff = np.meshgrid(t + trace.t0, f, indexing="ij")
    return Table(("time", "freq", "magnitude"), (tt.ravel(), ff.ravel(), np.abs(Z).T.ravel()))


def xcorr(x: PressureTrace, y: PressureTrace, max_lag_s: float = 1.0) -> Table:
    """Biased, normalised cross-correlation of the de-meaned traces.

    Entry at lag k estimates corr(x[n + k], y[n]); a trace correlated with
    itself peaks at 1 at lag 0.
    """
    if not same_sampling(x, y):
        raise ValueError("xcorr needs two traces with the same dt and length")
    a = x.samples - x.samples.mean()
    b = y.samples - y.samples.mean()
    n = a.size
    denom = np.sqrt(np.dot(a, a) * np.dot(b, b))
    K = min(int(round(max_lag_s / x.dt)), n - 1)
    full = signal.correlate(a, b, mode="full", method="fft")
    mid = n - 1
    r = full[mid - K: mid + K + 1] / denom if denom > 0 else np.zeros(2 * K + 1)
    lags = np.arange(-K, K + 1) * x.dt
    return Table(("lag", "xcorr"), (lags, r))


def analyze(trace: PressureTrace, op: str, other: PressureTrace | None = None) -> Table:
    if op == "psd":
        return psd(trace)
    if op == "spectrogram":
        return spectrogram(trace)
    if op == "xcorr":
        if other is None:
            raise ValueError("xcorr needs a second trace")
        return xcorr(trace, other)
    raise ValueError(f"unknown analysis {op!r}")
