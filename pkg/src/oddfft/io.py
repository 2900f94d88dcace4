"""CSV readers and writers for states, phase-space tables and bench records.

Formats (centered indices throughout):

* state:  ``index,real,imag``, one row per ``J`` in ascending order
* table:  ``A,B,real,imag`` (or ``A,B,value`` for real-only Wigner output),
  ``B`` in the outer loop and ``A`` inner
* bench:  ``D,backend,time_seconds,mult_count,ratio_t_over_d2,ratio_tf_over_dlogd``

Floats are written with 17 significant digits so values round-trip exactly.
"""
from __future__ import annotations

import csv
import math
from pathlib import Path

import numpy as np

from .errors import FileFormatError
from .numtheory import centered_range
from .phase_space import WIGNER, PhaseSpaceTable
from .reference import StateVector

__all__ = [
    "STATE_HEADER", "TABLE_HEADER", "REAL_TABLE_HEADER", "BENCH_HEADER",
    "write_state", "read_state", "write_table", "read_table",
    "write_bench", "read_bench",
]

STATE_HEADER = ["index", "real", "imag"]
TABLE_HEADER = ["A", "B", "real", "imag"]
REAL_TABLE_HEADER = ["A", "B", "value"]
BENCH_HEADER = ["D", "backend", "time_seconds", "mult_count",
                "ratio_t_over_d2", "ratio_tf_over_dlogd"]


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _read_rows(path, header):
    try:
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
    except UnicodeDecodeError as exc:
        raise FileFormatError(f"{path}: not a text CSV file") from exc
    if not rows or [c.strip() for c in rows[0]] != header:
        got = rows[0] if rows else "empty file"
        raise FileFormatError(f"{path}: expected header {','.join(header)}, got {got}")
    body = [r for r in rows[1:] if r]
    for lineno, r in enumerate(body, start=2):
        if len(r) != len(header):
            raise FileFormatError(
                f"{path}:{lineno}: expected {len(header)} fields, got {len(r)}")
    return body


def _parse_float(text, where):
    try:
        x = float(text)
    except ValueError:
        raise FileFormatError(f"{where}: not a number: {text!r}") from None
    if not math.isfinite(x):
        raise FileFormatError(f"{where}: non-finite value {text!r}")
    return x


def _parse_int(text, where):
    try:
        return int(text)
    except ValueError:
        raise FileFormatError(f"{where}: not an integer: {text!r}") from None


def write_state(path, s) -> None:
    s = s if isinstance(s, StateVector) else StateVector(s)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(STATE_HEADER)
        for J, z in zip(s.indices.tolist(), s.amplitudes.tolist()):
            w.writerow([J, _fmt(z.real), _fmt(z.imag)])


def read_state(path, D: int | None = None) -> StateVector:
    """Read a state CSV, checking indices, length and finiteness.

    ``D``, when given, is the required dimension.
    """
    body = _read_rows(path, STATE_HEADER)
    n = len(body)
    if n == 0 or n % 2 == 0:
        raise FileFormatError(f"{path}: state needs an odd number of rows, got {n}")
    if D is not None and n != D:
        raise FileFormatError(f"{path}: expected {D} rows, got {n}")
    expected = centered_range(n).tolist()
    amps = np.empty(n, dtype=np.complex128)
    for t, (r, J) in enumerate(zip(body, expected)):
        where = f"{path}:{t + 2}"
        if _parse_int(r[0], where) != J:
            raise FileFormatError(f"{where}: expected index {J}, got {r[0]}")
        amps[t] = complex(_parse_float(r[1], where), _parse_float(r[2], where))
    return StateVector(amps)


def write_table(path, table: PhaseSpaceTable, real_only=False, tol=1e-9) -> None:
    """Write a phase-space table.

    ``real_only`` (Wigner tables only) drops the imaginary column after
    checking every imaginary part is within ``tol``.
    """
    if real_only and table.kind != WIGNER:
        raise ValueError("real-only output is only offered for Wigner tables")
    grid = table.real(tol) if real_only else table.grid
    idx = centered_range(table.D).tolist()
    h = (table.D - 1) // 2
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(REAL_TABLE_HEADER if real_only else TABLE_HEADER)
        for B in idx:
            col = grid[:, B + h].tolist()
            for A, v in zip(idx, col):
                if real_only:
                    w.writerow([A, B, _fmt(v)])
                else:
                    w.writerow([A, B, _fmt(v.real), _fmt(v.imag)])


def read_table(path, kind: str) -> PhaseSpaceTable:
    """Read either table layout back into a :class:`PhaseSpaceTable`."""
    with open(path, newline="") as fh:
        first = fh.readline().strip().split(",")
    header = REAL_TABLE_HEADER if first == REAL_TABLE_HEADER else TABLE_HEADER
    body = _read_rows(path, header)
    D = math.isqrt(len(body))
    if D * D != len(body) or D % 2 == 0:
        raise FileFormatError(f"{path}: {len(body)} rows is not an odd square")
    h = (D - 1) // 2
    grid = np.empty((D, D), dtype=np.complex128)
    idx = centered_range(D).tolist()
    t = 0
    for B in idx:
        for A in idx:
            r = body[t]
            where = f"{path}:{t + 2}"
            if (_parse_int(r[0], where), _parse_int(r[1], where)) != (A, B):
                raise FileFormatError(f"{where}: expected A={A}, B={B}")
            im = 0.0 if header is REAL_TABLE_HEADER else _parse_float(r[3], where)
            grid[A + h, B + h] = complex(_parse_float(r[2], where), im)
            t += 1
    return PhaseSpaceTable(kind, grid)


def write_bench(path, records) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(BENCH_HEADER)
        for rec in records:
            w.writerow([rec.D, rec.backend, _fmt(rec.time_seconds), rec.mult_count,
                        _fmt(rec.ratio_t_over_d2), _fmt(rec.ratio_tf_over_dlogd)])


def read_bench(path) -> list:
    """Rows of a bench CSV as dicts with numeric fields converted."""
    out = []
    for t, r in enumerate(_read_rows(path, BENCH_HEADER), start=2):
        where = f"{path}:{t}"
        out.append({
            "D": _parse_int(r[0], where),
            "backend": r[1],
            "time_seconds": _parse_float(r[2], where),
            "mult_count": _parse_int(r[3], where),
            "ratio_t_over_d2": _parse_float(r[4], where),
            "ratio_tf_over_dlogd": _parse_float(r[5], where),
        })
    return out


def ensure_dir(path) -> Path:
    p = Path(path)
    p.mkdir(parents=True, exist_ok=True)
    return p
