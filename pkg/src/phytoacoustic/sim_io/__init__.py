"""Configuration, random streams, CSV output and trace analysis."""

from .analysis import analyze, psd, spectrogram, xcorr
from .csvio import Table, export_csv, read_table, read_trace, write_table
from .rng import rng_stream

_CONFIG_NAMES = ("SimConfig", "echo_config", "load_config", "parse_config")


def __getattr__(name):
    # config imports every model module, which in turn import rng from here
    if name in _CONFIG_NAMES:
        from . import config

        return getattr(config, name)
    raise AttributeError(name)


__all__ = [
    "SimConfig", "Table", "analyze", "echo_config", "export_csv", "load_config", "parse_config",
    "psd", "read_table", "read_trace", "rng_stream", "spectrogram", "write_table", "xcorr",
]
