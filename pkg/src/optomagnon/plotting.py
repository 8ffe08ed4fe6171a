"""Minimal static SVG renderings of sweep results.

The CSV is the artifact of record; these plots are quick-look views
(order-parameter heatmap, boundary polylines, staircases, repulsion
curves), not publication figures.
"""
from __future__ import annotations

import numpy as np

from .sweep import SweepResult


def save_plot(result: SweepResult, path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    command = result.metadata.get("command", "")
    fig, ax = plt.subplots(figsize=(5.2, 4.0), constrained_layout=True)
    if command == "phase-diagram":
        kaxis, maxis = result.axes
        z = np.array(result.column("psi"), dtype=float).reshape(kaxis.count, maxis.count)
        mesh = ax.pcolormesh(kaxis.values(), maxis.values(), z.T, shading="nearest")
        fig.colorbar(mesh, ax=ax, label="psi")
        ax.set_xlabel(kaxis.name)
        ax.set_ylabel("mu")
    elif command == "lobes":
        dv = np.array(result.column("delta_a"), dtype=float)
        for name in result.columns[1:]:
            ax.plot(dv, result.column(name), label=name)
        ax.set_xlabel("delta_a")
        ax.set_ylabel("mu boundary")
        ax.legend(fontsize=8)
    elif command == "observables":
        mv = np.array(result.column("mu"), dtype=float)
        for name in ("n_total", "n_photon", "n_magnon"):
            ax.plot(mv, result.column(name), label=name)
        ax.set_xlabel("mu")
        ax.set_ylabel("per-site average")
        ax.legend(fontsize=8)
    elif command == "repulsion":
        xname = result.columns[0]
        xv = np.array(result.column(xname), dtype=float)
        for name in result.columns[1:]:
            ax.plot(xv, result.column(name), label=name)
        ax.set_xlabel(xname)
        ax.set_ylabel("U_N")
        ax.legend(fontsize=8)
    else:
        raise ValueError(f"no plot layout for command {command!r}")
    ax.set_title(result.metadata.get("preset") or command)
    fig.savefig(path)
    plt.close(fig)
