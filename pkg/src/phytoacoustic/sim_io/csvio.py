"""Deterministic CSV tables.

Floats are written with 9 significant digits (``%.9g``), integers and
strings verbatim, rows separated by ``\\n``.  The same object therefore
always serializes to the same bytes.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ..traces import PressureTrace


@dataclass(frozen=True)
class Table:
    header: tuple
    columns: tuple  # one sequence per header entry

    def __post_init__(self):
        if len(self.header) != len(self.columns):
            raise ValueError("header and columns differ in length")
        lengths = {len(c) for c in self.columns}
        if len(lengths) > 1:
            raise ValueError("columns differ in length")

    def __len__(self) -> int:
        return len(self.columns[0]) if self.columns else 0

    def column(self, name: str) -> np.ndarray:
        return np.asarray(self.columns[self.header.index(name)])


def _cell(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return str(int(v))
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return "%.9g" % v
    return str(v)


def write_table(table: Table, path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(table.header)
        for row in zip(*table.columns):
            w.writerow([_cell(v) for v in row])


def read_table(path: str | Path) -> Table:
    """Read a CSV; columns that parse as numbers become float arrays."""
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise ValueError(f"{path} is empty")
    header, body = tuple(rows[0]), rows[1:]
    cols = []
    for j in range(len(header)):
        raw = [r[j] for r in body]
        try:
            cols.append(np.array([float(x) for x in raw]))
        except ValueError:
            cols.append(raw)
    return Table(header, tuple(cols))


def trace_table(trace: PressureTrace, name: str = "value") -> Table:
    return Table(("t", name), (trace.times, trace.samples))


def read_trace(path: str | Path) -> PressureTrace:
    """Rebuild a trace from a two-column ``t,value`` CSV."""
    tab = read_table(path)
    if len(tab.header) < 2:
        raise ValueError(f"{path}: expected a time column and a value column")
    t, x = tab.column(tab.header[0]), tab.column(tab.header[1])
    if x.size < 2:
        raise ValueError(f"{path}: need at least two samples to infer dt")
    dt = (t[-1] - t[0]) / (t.size - 1)
    return PressureTrace(float(t[0]), float(dt), x, units=tab.header[1])


def grid_tables(grid) -> tuple[Table, Table]:
    """Cell table ``row,col,a,p,u`` and face table ``row,col,dir,A,P,U``."""
    from ..auxin_grid import DIRS

    R, C = grid.shape
    rr, cc = np.meshgrid(np.arange(R), np.arange(C), indexing="ij")
    cells = Table(("row", "col", "a", "p", "u"), (rr.ravel(), cc.ravel(), grid.a.ravel(), grid.p.ravel(), grid.u.ravel()))
    fr = np.repeat(rr.ravel(), 4)
    fc = np.repeat(cc.ravel(), 4)
    fd = list(DIRS) * (R * C)
    faces = Table(("row", "col", "dir", "A", "P", "U"), (fr, fc, fd, grid.A.ravel(), grid.P.ravel(), grid.U.ravel()))
    return cells, faces


def sweep_tables(rows) -> tuple[Table, Table]:
    """Raw per-run table and per-value summary for :func:`acoustic_link.sweep` rows."""
    from ..acoustic_link import summarize

    raw = Table(
        ("param", "value", "run", "bits", "errors", "ber"),
        ([r.param for r in rows], [r.value for r in rows], [r.run for r in rows],
         [r.bits for r in rows], [r.errors for r in rows], [r.ber for r in rows]),
    )
    summ = summarize(rows)
    summary = Table(("param", "value", "mean_ber", "std_ber"), tuple(list(c) for c in zip(*summ)) if summ else ([], [], [], []))
    return raw, summary


def export_csv(obj, path: str | Path, faces_path: str | Path | None = None) -> None:
    """Write a trace, table, grid or list of sweep rows.

    A grid writes its cell table to ``path`` and its face table to
    ``faces_path`` (default: ``<stem>_faces.csv`` next to it).  Sweep rows
    write the raw table only; use :func:`sweep_tables` for the summary.
    """
    from ..auxin_grid import AuxinGrid

    if isinstance(obj, Table):
        write_table(obj, path)
    elif isinstance(obj, PressureTrace):
        write_table(trace_table(obj, obj.units), path)
    elif isinstance(obj, AuxinGrid):
        cells, faces = grid_tables(obj)
        write_table(cells, path)
        p = Path(path)
        write_table(faces, faces_path or p.with_name(p.stem + "_faces.csv"))
    elif isinstance(obj, list):
        write_table(sweep_tables(obj)[0], path)
    else:
        raise TypeError(f"cannot export {type(obj).__name__}")
