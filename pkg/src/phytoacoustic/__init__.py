"""Simulation of acoustic sensing in plant roots.

The chain runs from an underground multi-tone sound source through soil
propagation, cell-wall mechanics, MCA2 channel gating and the Ca2+/H2O2 hub
to the kinase cascades that set PIN2 carrier dynamics, and finally to auxin
transport on a lattice of root cells.  :mod:`phytoacoustic.acoustic_link`
treats the whole chain as a binary detector.
"""

from .acoustic_channel import ChannelParams, SoilMedium, SourceSpec
from .acoustic_link import LinkConfig, LinkReport, decide, run_link, sweep
from .auxin_grid import GridParams, build_grid, polarity_index, simulate_grid
from .ca_ros_hub import HubParams, HubState, hub_step
from .cell_wall import WallParams
from .chain import ChainResult, run_chain
from .errors import ConfigError, NumericAbort
from .mca2_gate import GateParams
from .signal_cascade import CascadeOutputs, CascadeParams
from .sim_io.config import SimConfig, load_config
from .traces import PressureTrace

__version__ = "0.1.0"

__all__ = [
    "CascadeOutputs", "CascadeParams", "ChainResult", "ChannelParams", "ConfigError", "GateParams",
    "GridParams", "HubParams", "HubState", "LinkConfig", "LinkReport", "NumericAbort", "PressureTrace",
    "SimConfig", "SoilMedium", "SourceSpec", "WallParams", "build_grid", "decide", "hub_step",
    "load_config", "polarity_index", "run_chain", "run_link", "simulate_grid", "sweep",
]
