"""
Command line round trip
=======================

Run a simulation through the command line entry point, then analyse the
emitted stress trace.  Equivalent shell commands::

    phytoacoustic simulate --config configs/default.conf --seed 0 --out out/sim
    phytoacoustic analyze --op psd --in out/sim/stress.csv --out out/psd.csv
"""

import tempfile
from pathlib import Path

from phytoacoustic.cli import main
from phytoacoustic.sim_io import read_table

root = Path(__file__).resolve().parents[1]
with tempfile.TemporaryDirectory() as tmp:
    out = Path(tmp)
    main(["simulate", "--config", str(root / "configs" / "default.conf"), "--seed", "0", "--out", str(out / "sim")])
    main(["analyze", "--op", "xcorr", "--in", str(out / "sim" / "stress.csv"), "--in2", str(out / "sim" / "channel_stress.csv"), "--out", str(out / "xc.csv")])
    summary = read_table(out / "sim" / "summary.csv")
    for k, v in zip(summary.column("key"), summary.column("value")):
        print(f"{k:15s} {v:.4g}")
    xc = read_table(out / "xc.csv")
    print("stress vs channel stress: peak correlation %.3f" % xc.column("xcorr").max())
