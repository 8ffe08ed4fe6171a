"""Figure-reproduction presets.

Each preset bundles the command, parameter overrides and grid axes for
one panel of the standard output set: kappa -> 0 lobe boundaries (fig2*,
fig3*), (hopping, mu) phase diagrams (fig5*, fig6*), excitation
staircases (fig7*) and effective-repulsion curves (fig8*).  Energies are
in units of g_a with omega_c = 0, so mu is read as mu - omega_c; hopping
axes are in z*kappa units.  Cutoff n_max = 8 keeps one panel at desk
scale; pass --n-max 20 for production-quality large-occupation corners.
"""
from __future__ import annotations

_LOBE_AXIS = {"name": "delta_a", "min": -2.0, "max": 2.0, "count": 81}
_PHASE_AXES = [
    {"name": "zkappa", "min": 0.0, "max": 2.0, "count": 60},
    {"name": "mu", "min": -3.5, "max": 0.0, "count": 60},
]
_STAIRCASE_AXIS = {"name": "mu", "min": -3.5, "max": -0.5, "count": 301}


def _lobes(g_m: float, delta_m: float, desc: str) -> dict:
    return {
        "command": "lobes",
        "description": desc,
        "params": {"g_m": g_m, "delta_m": delta_m},
        "axes": [dict(_LOBE_AXIS)],
        "n_list": [0, 1, 2, 3],
    }


def _phase(g_m: float, delta_a: float, delta_m: float, desc: str) -> dict:
    return {
        "command": "phase-diagram",
        "description": desc,
        "params": {"g_m": g_m, "delta_a": delta_a, "delta_m": delta_m},
        "axes": [dict(a) for a in _PHASE_AXES],
    }


def _staircase(g_m: float, delta_a: float, delta_m: float, desc: str) -> dict:
    return {
        "command": "observables",
        "description": desc,
        # z*kappa = 0.01 at z = 4
        "params": {"g_m": g_m, "delta_a": delta_a, "delta_m": delta_m, "kappa": 0.0025},
        "axes": [dict(_STAIRCASE_AXIS)],
    }


PRESETS: dict[str, dict] = {
    "fig2a": _lobes(0.8, 0.0, "lobe boundaries vs delta_a, g_m=0.8, delta_m=0"),
    "fig2b": _lobes(0.8, 0.5, "lobe boundaries vs delta_a, g_m=0.8, delta_m=0.5"),
    "fig2c": _lobes(0.8, 1.0, "lobe boundaries vs delta_a, g_m=0.8, delta_m=1"),
    "fig2d": _lobes(0.8, -0.5, "lobe boundaries vs delta_a, g_m=0.8, delta_m=-0.5"),
    "fig2e": _lobes(0.8, -1.0, "lobe boundaries vs delta_a, g_m=0.8, delta_m=-1"),
    "fig3a": _lobes(0.0, 0.5, "lobe boundaries vs delta_a, g_m=0, delta_m=0.5"),
    "fig3b": _lobes(0.5, 0.5, "lobe boundaries vs delta_a, g_m=0.5, delta_m=0.5"),
    "fig3c": _lobes(1.0, 0.5, "lobe boundaries vs delta_a, g_m=1, delta_m=0.5"),
    "fig3d": _lobes(1.2, 0.5, "lobe boundaries vs delta_a, g_m=1.2, delta_m=0.5"),
    "fig5a": _phase(0.0, 0.0, 0.0, "phase diagram at resonance, g_m=0"),
    "fig5b": _phase(0.2, 0.0, 0.0, "phase diagram at resonance, g_m=0.2"),
    "fig5c": _phase(0.8, 0.0, 0.0, "phase diagram at resonance, g_m=0.8"),
    "fig5d": _phase(1.2, 0.0, 0.0, "phase diagram at resonance, g_m=1.2"),
    "fig6a": _phase(0.2, 0.5, 0.0, "phase diagram, g_m=0.2, delta_a=0.5, delta_m=0"),
    "fig6b": _phase(0.2, 0.5, -0.5, "phase diagram, g_m=0.2, delta_a=0.5, delta_m=-0.5"),
    "fig6c": _phase(0.2, 0.5, 0.5, "phase diagram, g_m=0.2, delta_a=0.5, delta_m=0.5"),
    "fig6d": _phase(0.2, 0.5, -1.0, "phase diagram, g_m=0.2, delta_a=0.5, delta_m=-1"),
    "fig6e": _phase(0.2, 0.5, 1.0, "phase diagram, g_m=0.2, delta_a=0.5, delta_m=1"),
    "fig7a": _staircase(0.8, 0.5, 0.5, "staircase vs mu, g_m=0.8, delta_a=delta_m=0.5"),
    "fig7b": _staircase(0.2, 0.5, 0.0, "staircase vs mu, g_m=0.2, delta_a=0.5, delta_m=0"),
    "fig8a": {
        "command": "repulsion",
        "description": "effective repulsion U_N vs g_m at resonance",
        "params": {"delta_a": 0.0, "delta_m": 0.0},
        "axes": [{"name": "g_m", "min": 0.0, "max": 1.2, "count": 61}],
        "n_list": [1, 2, 3],
    },
    "fig8b": {
        "command": "repulsion",
        "description": "effective repulsion U_N vs delta_m, g_m=0.2, delta_a=0.5",
        "params": {"g_m": 0.2, "delta_a": 0.5},
        "axes": [{"name": "delta_m", "min": -1.0, "max": 1.0, "count": 61}],
        "n_list": [1, 2, 3],
    },
}
