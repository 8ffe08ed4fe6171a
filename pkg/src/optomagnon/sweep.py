"""Parameter-grid orchestration and CSV persistence.

Every grid cell is an independent pure solve, so execution order is
irrelevant; results are stored in grid order, which makes serial and
threaded runs byte-identical.  Failed cells become labeled sentinel rows
(status column) with zero-filled numerics, never gaps or NaNs.
"""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from . import __version__
from .analytics import lobe_boundary_mu
from .errors import TruncationLimitError
from .meanfield import (
    PSI_TOL,
    MINIMIZER_TOL,
    COARSE_POINTS,
    effective_repulsion,
    minimize_order_parameter,
)
from .model import ModelParams, params_as_dict, validate_params

AXIS_FIELDS = ("kappa", "zkappa", "mu", "delta_a", "delta_m", "g_m")


@dataclass(frozen=True)
class Axis:
    """Uniform grid definition for one swept quantity."""

    name: str
    min: float
    max: float
    count: int

    def __post_init__(self):
        if self.name not in AXIS_FIELDS:
            raise ValueError(f"unknown axis {self.name!r}; expected one of {AXIS_FIELDS}")
        if self.count < 1:
            raise ValueError(f"axis {self.name!r} needs count >= 1, got {self.count}")

    def values(self) -> np.ndarray:
        return np.linspace(self.min, self.max, self.count)


@dataclass(frozen=True)
class SweepResult:
    """Grid output: axis definitions, column names, rows, run metadata."""

    axes: tuple[Axis, ...]
    columns: tuple[str, ...]
    rows: list[tuple]
    metadata: dict

    def column(self, name: str) -> list:
        k = self.columns.index(name)
        return [row[k] for row in self.rows]


def apply_axis_value(p: ModelParams, name: str, value: float) -> ModelParams:
    """Parameter point with one swept quantity replaced."""
    if name == "zkappa":
        return replace(p, kappa=value / p.z)
    return replace(p, **{name: value})


def _fmt(x) -> str:
    if isinstance(x, str):
        return x
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return format(float(x), ".17g")


def _run_cells(task, cells, threads: int) -> list[tuple]:
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(task, cells))
    return [task(c) for c in cells]


def _base_metadata(p: ModelParams, command: str, axes, psi_tol: float) -> dict:
    return {
        "engine": f"optomagnon {__version__}",
        "command": command,
        "params": params_as_dict(p),
        "axes": [f"{a.name}[{_fmt(a.min)},{_fmt(a.max)},{a.count}]" for a in axes],
        "psi_tol": psi_tol,
        "minimizer_tol": MINIMIZER_TOL,
        "coarse_points": COARSE_POINTS,
    }


def _solve_columns(p: ModelParams, psi_tol: float):
    """Solve one point; on solver failure return a labeled sentinel tuple."""
    try:
        pt = minimize_order_parameter(p, psi_tol)
        return (
            pt.psi_star,
            pt.ground_energy,
            pt.ntot_avg,
            pt.n_avg,
            pt.m_avg,
            pt.sigma_avg,
            pt.phase,
            pt.sc_residual,
            "ok",
        )
    except (TruncationLimitError, ValueError, ArithmeticError) as exc:
        return (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, "error", 0.0, f"error:{type(exc).__name__}")

_SOLVE_COLUMNS = (
    "psi", "energy", "n_total", "n_photon", "n_magnon", "n_atom", "phase",
    "sc_residual", "status",
)


def sweep_phase_diagram(
    p: ModelParams,
    kappa_axis: Axis,
    mu_axis: Axis,
    psi_tol: float = PSI_TOL,
    threads: int = 1,
) -> SweepResult:
    """Order parameter and observables over a (hopping, mu) grid."""
    validate_params(p)
    if kappa_axis.name not in ("kappa", "zkappa") or mu_axis.name != "mu":
        raise ValueError("phase diagram needs a kappa/zkappa axis and a mu axis")
    t0 = time.perf_counter()
    kv, mv = kappa_axis.values(), mu_axis.values()
    cells = [(i, j) for i in range(len(kv)) for j in range(len(mv))]

    def task(cell):
        i, j = cell
        pij = apply_axis_value(apply_axis_value(p, kappa_axis.name, kv[i]), "mu", mv[j])
        return (kv[i], mv[j], *_solve_columns(pij, psi_tol))

    rows = _run_cells(task, cells, threads)
    meta = _base_metadata(p, "phase-diagram", (kappa_axis, mu_axis), psi_tol)
    meta["status"] = _overall_status(rows)
    meta["wall_time_s"] = f"{time.perf_counter() - t0:.3f}"
    return SweepResult(
        axes=(kappa_axis, mu_axis),
        columns=(kappa_axis.name, "mu", *_SOLVE_COLUMNS),
        rows=rows,
        metadata=meta,
    )


def sweep_observables(
    p: ModelParams,
    mu_axis: Axis,
    psi_tol: float = PSI_TOL,
    threads: int = 1,
) -> SweepResult:
    """Excitation staircase: per-site averages along a mu scan at fixed kappa."""
    validate_params(p)
    if mu_axis.name != "mu":
        raise ValueError("observables sweep needs a mu axis")
    t0 = time.perf_counter()
    mv = mu_axis.values()

    def task(j):
        return (mv[j], *_solve_columns(apply_axis_value(p, "mu", mv[j]), psi_tol))

    rows = _run_cells(task, range(len(mv)), threads)
    meta = _base_metadata(p, "observables", (mu_axis,), psi_tol)
    meta["status"] = _overall_status(rows)
    meta["wall_time_s"] = f"{time.perf_counter() - t0:.3f}"
    return SweepResult(
        axes=(mu_axis,), columns=("mu", *_SOLVE_COLUMNS), rows=rows, metadata=meta
    )


def sweep_lobes(
    p: ModelParams,
    delta_a_axis: Axis,
    n_list: tuple[int, ...] = (0, 1, 2, 3),
    threads: int = 1,
) -> SweepResult:
    """kappa -> 0 Mott-lobe boundaries mu_N(delta_a), one column per N."""
    validate_params(p)
    if delta_a_axis.name != "delta_a":
        raise ValueError("lobe sweep needs a delta_a axis")
    if max(n_list) + 1 > p.n_max:
        raise ValueError(f"n_list {n_list} needs sectors up to n_max={p.n_max}")
    t0 = time.perf_counter()
    dv = delta_a_axis.values()

    def task(j):
        pj = apply_axis_value(p, "delta_a", dv[j])
        return (dv[j], *[lobe_boundary_mu(pj, N) for N in n_list])

    rows = _run_cells(task, range(len(dv)), threads)
    meta = _base_metadata(p, "lobes", (delta_a_axis,), PSI_TOL)
    meta["n_list"] = list(n_list)
    meta["status"] = "complete"
    meta["wall_time_s"] = f"{time.perf_counter() - t0:.3f}"
    return SweepResult(
        axes=(delta_a_axis,),
        columns=("delta_a", *[f"mu_boundary_n{N}" for N in n_list]),
        rows=rows,
        metadata=meta,
    )


def sweep_repulsion(
    p: ModelParams,
    axis: Axis,
    n_list: tuple[int, ...] = (1, 2, 3),
    threads: int = 1,
) -> SweepResult:
    """Effective on-site repulsion U_N against g_m or delta_m."""
    validate_params(p)
    if axis.name not in ("g_m", "delta_m"):
        raise ValueError("repulsion sweep needs a g_m or delta_m axis")
    if max(n_list) + 1 > p.n_max:
        raise ValueError(f"n_list {n_list} needs sectors up to n_max={p.n_max}")
    t0 = time.perf_counter()
    vv = axis.values()

    def task(j):
        pj = apply_axis_value(p, axis.name, vv[j])
        return (vv[j], *[effective_repulsion(pj, N) for N in n_list])

    rows = _run_cells(task, range(len(vv)), threads)
    meta = _base_metadata(p, "repulsion", (axis,), PSI_TOL)
    meta["n_list"] = list(n_list)
    meta["status"] = "complete"
    meta["wall_time_s"] = f"{time.perf_counter() - t0:.3f}"
    return SweepResult(
        axes=(axis,),
        columns=(axis.name, *[f"u_n{N}" for N in n_list]),
        rows=rows,
        metadata=meta,
    )


def _overall_status(rows) -> str:
    bad = sum(1 for r in rows if r[-1] != "ok")
    return "complete" if bad == 0 else f"partial ({bad} failed cells)"


def write_csv(result: SweepResult, path) -> None:
    """Metadata comment block ('#' lines), header row, full-precision cells."""
    lines = []
    for key, value in result.metadata.items():
        if key == "params":
            body = " ".join(f"{k}={_fmt(v)}" for k, v in value.items())
        elif isinstance(value, list):
            body = " ".join(str(v) for v in value)
        else:
            body = _fmt(value)
        lines.append(f"# {key}: {body}")
    lines.append(",".join(result.columns))
    for row in result.rows:
        lines.append(",".join(_fmt(x) for x in row))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def read_csv_rows(path) -> tuple[list[str], list[list[str]]]:
    """Header and raw string rows of a sweep CSV (metadata skipped)."""
    with open(path) as fh:
        lines = [ln.rstrip("\n") for ln in fh if not ln.startswith("#")]
    header = lines[0].split(",")
    return header, [ln.split(",") for ln in lines[1:] if ln]
