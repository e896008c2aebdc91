"""CSV writers and readers for scan, curve and volume output.

Floats are written with 17 significant digits so files round-trip exactly.
"""
from __future__ import annotations

import csv
from pathlib import Path

from .classify import ClassLabel, Label
from .sampling import VolumeRecord
from .scan import ScanCell

SCAN_COLUMNS = ["alpha", "beta", "gamma", "family", "label", "cqp", "negativity", "purity"]
VOLUME_COLUMNS = ["eps", "sample", "cqp", "negativity", "ppt", "label"]
CURVE_COLUMNS = ["alpha", "beta_ent_lo", "beta_ent_hi", "beta_ppt_lo", "beta_ppt_hi"]
SUMMARY_COLUMNS = ["eps", "n", "frac_ppt", "frac_bound"]
HISTOGRAM_COLUMNS = ["eps", "quantity", "bin_lo", "bin_hi", "count"]


def fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        return format(x, ".17g")
    return str(x)


def _write(path, columns, rows) -> None:
    with open(Path(path), "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(columns)
        for row in rows:
            w.writerow([fmt(v) for v in row])


def _read(path, columns):
    with open(Path(path), newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header != columns:
            raise ValueError(f"unexpected header {header}")
        yield from reader


def write_scan(path, cells: list[ScanCell]) -> None:
    _write(path, SCAN_COLUMNS, (
        (c.alpha, c.beta, c.gamma, c.family, c.result.tag.value,
         c.result.cqp_value, c.result.negativity, c.result.purity)
        for c in cells
    ))


def read_scan(path) -> list[ScanCell]:
    out = []
    for a, b, g, fam, label, cq, neg, pur in _read(path, SCAN_COLUMNS):
        res = ClassLabel(Label(label), float(cq), float(neg), float(pur))
        out.append(ScanCell(float(a), float(b), float(g), fam, res))
    return out


def write_curves(path, rows) -> None:
    _write(path, CURVE_COLUMNS, rows)


def read_curves(path) -> list[tuple]:
    return [tuple(float(v) if v else None for v in row) for row in _read(path, CURVE_COLUMNS)]


def write_volume(path, records: list[VolumeRecord]) -> None:
    _write(path, VOLUME_COLUMNS, (
        (r.eps, r.sample, r.cqp, r.negativity, r.ppt, r.label.value) for r in records
    ))


def read_volume(path) -> list[VolumeRecord]:
    out = []
    for eps, j, cq, neg, ppt, label in _read(path, VOLUME_COLUMNS):
        out.append(VolumeRecord(float(eps), int(j), float(cq), float(neg), ppt == "true", Label(label)))
    return out


def write_dicts(path, columns, rows: list[dict]) -> None:
    _write(path, columns, ([row[c] for c in columns] for row in rows))
