"""Command line entry point: ``simulate``, ``sweep`` and ``analyze``."""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from .errors import ConfigError, NumericAbort


def _simulate(args) -> None:
    from .auxin_grid import simulate_grid, polarity_index
    from .chain import run_chain
    from .sim_io.config import echo_config, load_config
    from .sim_io.csvio import Table, export_csv, write_table

    cfg = load_config(args.config)
    if args.seed is not None:
        cfg = replace(cfg, link=replace(cfg.link, base_seed=args.seed))
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    res = run_chain(cfg, keep_traces=True)
    cas = res.cascade
    grid = simulate_grid(cfg.grid, cas.delta_p_mod, cas.omega_p_mod)

    (out / "config_echo.txt").write_text(echo_config(cfg), encoding="utf-8")
    export_csv(res.stress, out / "stress.csv")
    export_csv(res.channel, out / "channel_stress.csv")
    t = res.t_bio
    c_M = list(res.c_M) + [float("nan")]
    write_table(Table(("t", "c_c", "c_M"), (t, res.c_c, c_M)), out / "ca.csv")
    write_table(Table(("t", "h"), (t, res.h)), out / "h2o2.csv")
    write_table(Table(("t", "K_ac", "P_a", "F_a", "G_a_ropgef", "O_a"), (t, cas.K_ac, cas.P_a, cas.F_a, cas.G_a_ropgef, cas.O_a)), out / "cascade.csv")
    export_csv(grid, out / "grid_cells.csv", out / "grid_faces.csv")
    summary = {
        "apr": res.apr,
        "delta_p_mod": cas.delta_p_mod,
        "omega_p_mod": cas.omega_p_mod,
        "decided_bit": float(res.apr > cfg.link.threshold),
        "polarity_index": polarity_index(grid),
    }
    write_table(Table(("key", "value"), (list(summary), list(summary.values()))), out / "summary.csv")


def _sweep(args) -> None:
    from .acoustic_link import default_values, sweep
    from .sim_io.config import echo_config, load_config
    from .sim_io.csvio import sweep_tables, write_table

    cfg = load_config(args.config)
    if args.seed is not None:
        cfg = replace(cfg, link=replace(cfg.link, base_seed=args.seed))
    values = args.values if args.values else default_values(cfg, args.param)
    runs = args.runs if args.runs is not None else cfg.link.runs
    bits = args.bits if args.bits is not None else cfg.link.n_bits
    rows = sweep(args.param, values, runs, bits, cfg)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    raw, summary = sweep_tables(rows)
    (out / "config_echo.txt").write_text(echo_config(cfg), encoding="utf-8")
    write_table(raw, out / "sweep.csv")
    write_table(summary, out / "summary.csv")


def _analyze(args) -> None:
    from .sim_io.analysis import analyze
    from .sim_io.csvio import read_trace, write_table

    trace = read_trace(args.inp)
    other = read_trace(args.in2) if args.in2 else None
    write_table(analyze(trace, args.op, other), args.out)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="phytoacoustic", description="Acoustic sensing chain simulator")
    sub = ap.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="run one stimulus interval and the auxin grid")
    sim.add_argument("--config", default=None)
    sim.add_argument("--seed", type=int, default=None)
    sim.add_argument("--out", required=True)
    sim.set_defaults(func=_simulate)

    sw = sub.add_parser("sweep", help="BER over a parameter sweep")
    sw.add_argument("--param", required=True, choices=("mean_freq", "mean_amp", "bit_duration"))
    sw.add_argument("--config", default=None)
    sw.add_argument("--runs", type=int, default=None)
    sw.add_argument("--bits", type=int, default=None)
    sw.add_argument("--seed", type=int, default=None)
    sw.add_argument("--values", type=float, nargs="+", default=None)
    sw.add_argument("--out", required=True)
    sw.set_defaults(func=_sweep)

    an = sub.add_parser("analyze", help="PSD, spectrogram or cross-correlation of trace CSVs")
    an.add_argument("--op", required=True, choices=("psd", "spectrogram", "xcorr"))
    an.add_argument("--in", dest="inp", required=True)
    an.add_argument("--in2", default=None)
    an.add_argument("--out", required=True)
    an.set_defaults(func=_analyze)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return ConfigError.exit_code
    except NumericAbort as exc:
        print(f"numeric abort: {exc}", file=sys.stderr)
        return NumericAbort.exit_code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
