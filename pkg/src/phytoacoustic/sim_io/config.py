"""Flat ``section.key = value`` configuration files.

Blank lines and ``#`` comments are ignored.  Every key must name a field of
one of the sections below; omitted keys keep their defaults.  Lists are
comma separated, booleans are ``true``/``false``.  The biological time step
is owned by ``link.bio_dt`` and copied into the gate and hub at run time.
"""

from __future__ import annotations

import dataclasses
import io
from dataclasses import dataclass, field
from pathlib import Path

from ..acoustic_channel import ChannelParams, SoilMedium, SourceSpec
from ..acoustic_link import LinkConfig
from ..auxin_grid import GridParams
from ..ca_ros_hub import HubParams
from ..cell_wall import WallParams
from ..errors import ConfigError
from ..mca2_gate import GateParams
from ..signal_cascade import CascadeParams

SECTIONS = {
    "soil": SoilMedium,
    "source": SourceSpec,
    "channel": ChannelParams,
    "wall": WallParams,
    "gate": GateParams,
    "hub": HubParams,
    "cascade": CascadeParams,
    "grid": GridParams,
    "link": LinkConfig,
}
# fields that are derived from another section and so not settable
HIDDEN = {("gate", "bio_dt"), ("hub", "bio_dt"), ("hub", "dimensional_influx")}


@dataclass(frozen=True)
class SimConfig:
    soil: SoilMedium = field(default_factory=SoilMedium)
    source: SourceSpec = field(default_factory=SourceSpec)
    channel: ChannelParams = field(default_factory=ChannelParams)
    wall: WallParams = field(default_factory=WallParams)
    gate: GateParams = field(default_factory=GateParams)
    hub: HubParams = field(default_factory=HubParams)
    cascade: CascadeParams = field(default_factory=CascadeParams)
    grid: GridParams = field(default_factory=GridParams)
    link: LinkConfig = field(default_factory=LinkConfig)

    def gate_params(self) -> GateParams:
        return dataclasses.replace(self.gate, bio_dt=self.link.bio_dt)

    def hub_params(self) -> HubParams:
        return dataclasses.replace(self.hub, bio_dt=self.link.bio_dt, dimensional_influx=self.gate.dimensional_influx)


def keys(section: str):
    return [f.name for f in dataclasses.fields(SECTIONS[section]) if (section, f.name) not in HIDDEN]


def _parse_value(text: str, default, where: str):
    text = text.strip()
    try:
        if isinstance(default, bool):
            low = text.lower()
            if low not in ("true", "false"):
                raise ValueError(f"expected true or false, got {text!r}")
            return low == "true"
        if isinstance(default, int):
            v = float(text)
            if v != int(v):
                raise ValueError(f"expected an integer, got {text!r}")
            return int(v)
        if isinstance(default, float):
            return float(text)
        if isinstance(default, tuple):
            return tuple(float(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise ConfigError(f"{where}: {exc}") from None
    raise ConfigError(f"{where}: unsupported value type")


def parse_config(text: str, source: str = "<string>") -> SimConfig:
    overrides: dict[str, dict] = {s: {} for s in SECTIONS}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"{source}:{lineno}"
        if "=" not in line:
            raise ConfigError(f"{where}: expected 'section.key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        section, _, name = key.partition(".")
        if section not in SECTIONS or not name or name not in keys(section):
            raise ConfigError(f"{where}: unknown key {key!r}")
        if name in overrides[section]:
            raise ConfigError(f"{where}: duplicate key {key!r}")
        default = getattr(SECTIONS[section](), name)
        overrides[section][name] = _parse_value(value, default, f"{where} ({key})")
    parts = {}
    for section, cls in SECTIONS.items():
        try:
            parts[section] = cls(**overrides[section])
        except (ValueError, TypeError) as exc:
            raise ConfigError(f"{source}: invalid value in section {section!r}: {exc}") from None
    return SimConfig(**parts)


def load_config(path: str | Path | None) -> SimConfig:
    """Read a config file; ``None`` gives the defaults."""
    if path is None:
        return SimConfig()
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    return parse_config(text, str(path))


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, tuple):
        return ", ".join(repr(float(x)) for x in v)
    return repr(v)


def echo_config(cfg: SimConfig) -> str:
    """Every effective value, one per line, in a form :func:`parse_config` reads back exactly."""
    buf = io.StringIO()
    for section in SECTIONS:
        obj = getattr(cfg, section)
        buf.write(f"# {section}\n")
        for name in keys(section):
            buf.write(f"{section}.{name} = {_fmt(getattr(obj, name))}\n")
    return buf.getvalue()
