"""Bit-stable CSV and manifest output.

Long format, one observable scalar per row: (sample, t, key, index, value);
ensemble-averaged files carry (t, key, index, mean, stderr, n).  Values are
printed with 17 significant digits so a round-trip reproduces the doubles
bit for bit; rerunning an identical config yields byte-identical files.
"""

import csv
import json
from collections import OrderedDict

import numpy as np

LONG_HEADER = ["sample", "t", "key", "index", "value"]
AVG_HEADER = ["t", "key", "index", "mean", "stderr", "n"]


def _fmt(x) -> str:
    return "%.17g" % float(x)


def write_long_csv(path, rows):
    """rows: iterable of (sample, t, key, index, value)."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(LONG_HEADER)
        for sample, t, key, index, value in rows:
            w.writerow([int(sample), _fmt(t), key, int(index), _fmt(value)])


def read_long_csv(path):
    out = []
    with open(path, newline="") as fh:
        r = csv.reader(fh)
        header = next(r)
        if header != LONG_HEADER:
            raise ValueError(f"{path}: expected header {LONG_HEADER}, got {header}")
        for sample, t, key, index, value in r:
            out.append((int(sample), float(t), key, int(index), float(value)))
    return out


def average_ensemble(files):
    """Per-(key, t, index) mean and standard error across sample files.

    Cell order follows the first file; every file must provide exactly the
    same cells (homogeneous schema).
    """
    cells = OrderedDict()
    for i, path in enumerate(files):
        seen = set()
        for sample, t, key, index, value in read_long_csv(path):
            cell = (key, _fmt(t), index)
            seen.add(cell)
            if i == 0:
                cells.setdefault(cell, []).append(value)
            else:
                if cell not in cells:
                    raise ValueError(f"{path}: unexpected cell {cell} (schema mismatch)")
                cells[cell].append(value)
        if i > 0 and seen != set(cells):
            raise ValueError(f"{path}: missing cells (schema mismatch)")
    rows = []
    for (key, t_str, index), values in cells.items():
        arr = np.asarray(values, dtype=np.float64)
        n = arr.size
        stderr = float(arr.std(ddof=1) / np.sqrt(n)) if n > 1 else 0.0
        rows.append((float(t_str), key, index, float(arr.mean()), stderr, n))
    return rows


def write_averaged_csv(path, rows, keys=None):
    """rows from `average_ensemble`; optionally restricted to some keys."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(AVG_HEADER)
        for t, key, index, mean, stderr, n in rows:
            if keys is not None and key not in keys:
                continue
            w.writerow([_fmt(t), key, int(index), _fmt(mean), _fmt(stderr), int(n)])


def read_averaged_csv(path):
    out = []
    with open(path, newline="") as fh:
        r = csv.reader(fh)
        header = next(r)
        if header != AVG_HEADER:
            raise ValueError(f"{path}: expected header {AVG_HEADER}, got {header}")
        for t, key, index, mean, stderr, n in r:
            out.append((float(t), key, int(index), float(mean), float(stderr), int(n)))
    return out


def write_manifest(path, payload):
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True, default=_json_default)
        fh.write("\n")


def _json_default(obj):
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"not JSON serializable: {type(obj)}")
