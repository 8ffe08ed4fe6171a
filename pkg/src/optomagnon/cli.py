"""Command-line entry point.

Subcommands: phase-diagram, lobes, observables, repulsion (grid sweeps
that persist CSV and optionally an SVG quick-look), analytic (closed-form
values at one parameter point) and verify (the analytic-vs-numeric oracle
suite).  Settings resolve with precedence CLI flags > --config JSON >
--preset defaults.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field, replace
from pathlib import Path

from .analytics import (
    critical_hopping,
    detuned_n1_spectrum,
    order_parameter_analytic,
    polariton_splitting,
    resonant_spectrum,
)
from .errors import DegenerateGapError, LobeBranchError
from .meanfield import PSI_TOL, effective_repulsion
from .model import ModelParams, params_as_dict, validate_params
from .presets import PRESETS
from .sweep import (
    Axis,
    sweep_lobes,
    sweep_observables,
    sweep_phase_diagram,
    sweep_repulsion,
    write_csv,
)
from .verify import run_verification

PARAM_FIELDS = ("omega_c", "delta_a", "delta_m", "g_a", "g_m", "mu", "kappa", "z", "n_max")
SWEEP_COMMANDS = ("phase-diagram", "lobes", "observables", "repulsion")


class ConfigError(Exception):
    """Bad configuration; carries one message per offending field."""

    def __init__(self, problems: list[str]):
        self.problems = problems
        super().__init__("; ".join(problems))


@dataclass
class RunConfig:
    command: str
    params: ModelParams
    axes: tuple[Axis, ...] = ()
    n_list: tuple[int, ...] = ()
    output_path: str | None = None
    emit_plot: bool = False
    threads: int = 1
    psi_tol: float = PSI_TOL
    preset: str | None = None


def _parse_axis_spec(spec: str) -> Axis:
    try:
        name, rest = spec.split("=", 1)
        lo, hi, count = rest.split(":")
        return Axis(name=name.strip(), min=float(lo), max=float(hi), count=int(count))
    except ValueError as exc:
        raise ConfigError([f"axis spec {spec!r} (expected NAME=MIN:MAX:COUNT): {exc}"])


def _merge_axes(axes: list[dict], extra: list[Axis]) -> list[dict]:
    out = [dict(a) for a in axes]
    for ax in extra:
        for slot in out:
            if slot["name"] == ax.name:
                slot.update(min=ax.min, max=ax.max, count=ax.count)
                break
        else:
            out.append({"name": ax.name, "min": ax.min, "max": ax.max, "count": ax.count})
    return out


def build_config(command: str, args: argparse.Namespace) -> RunConfig:
    """Resolve preset, config file and CLI flags into a validated RunConfig."""
    problems: list[str] = []
    settings: dict = {"params": {}, "axes": [], "n_list": None}

    preset_name = getattr(args, "preset", None)
    if preset_name:
        preset = PRESETS.get(preset_name)
        if preset is None:
            raise ConfigError([f"unknown preset {preset_name!r}"])
        if preset["command"] != command:
            raise ConfigError(
                [f"preset {preset_name!r} belongs to command {preset['command']!r}"]
            )
        settings["params"].update(preset.get("params", {}))
        settings["axes"] = [dict(a) for a in preset.get("axes", [])]
        if preset.get("n_list"):
            settings["n_list"] = list(preset["n_list"])

    config_path = getattr(args, "config", None)
    if config_path:
        try:
            doc = json.loads(Path(config_path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError([f"config {config_path}: {exc}"])
        if doc.get("command") not in (None, command):
            problems.append(
                f"config command {doc.get('command')!r} does not match {command!r}"
            )
        unknown = set(doc.get("params", {})) - set(PARAM_FIELDS)
        if unknown:
            problems.append(f"config params: unknown fields {sorted(unknown)}")
        else:
            settings["params"].update(doc.get("params", {}))
        if "axes" in doc:
            settings["axes"] = [dict(a) for a in doc["axes"]]
        if "n_list" in doc:
            settings["n_list"] = list(doc["n_list"])
        for key in ("output", "plot", "threads", "psi_tol"):
            if key in doc:
                settings[key] = doc[key]

    for name in PARAM_FIELDS:
        flag = getattr(args, name, None)
        if flag is not None:
            settings["params"][name] = flag
    cli_axes = [_parse_axis_spec(s) for s in (getattr(args, "axis", None) or [])]
    settings["axes"] = _merge_axes(settings["axes"], cli_axes)
    if getattr(args, "n_list", None):
        settings["n_list"] = [int(tok) for tok in args.n_list.split(",")]

    try:
        params = validate_params(ModelParams(**settings["params"]))
    except (TypeError, ValueError) as exc:
        raise ConfigError(problems + [str(exc)])

    try:
        axes = tuple(Axis(**a) for a in settings["axes"])
    except (TypeError, ValueError) as exc:
        raise ConfigError(problems + [f"axes: {exc}"])

    problems.extend(_axis_problems(command, axes))
    if problems:
        raise ConfigError(problems)

    return RunConfig(
        command=command,
        params=params,
        axes=axes,
        n_list=tuple(settings["n_list"] or ()),
        output_path=getattr(args, "out", None) or settings.get("output"),
        emit_plot=bool(getattr(args, "plot", False) or settings.get("plot", False)),
        threads=int(getattr(args, "threads", None) or settings.get("threads", 1)),
        psi_tol=float(
            getattr(args, "psi_tol", None) or settings.get("psi_tol", PSI_TOL)
        ),
        preset=preset_name,
    )


def _axis_problems(command: str, axes: tuple[Axis, ...]) -> list[str]:
    names = [a.name for a in axes]
    need = {
        "phase-diagram": "a kappa (or zkappa) axis and a mu axis",
        "lobes": "a delta_a axis",
        "observables": "a mu axis",
        "repulsion": "a g_m or delta_m axis",
    }
    if command == "phase-diagram":
        if not (("kappa" in names or "zkappa" in names) and "mu" in names):
            return [f"phase-diagram requires {need[command]}; got {names}"]
    elif command == "lobes" and "delta_a" not in names:
        return [f"lobes requires {need[command]}; got {names}"]
    elif command == "observables" and "mu" not in names:
        return [f"observables requires {need[command]}; got {names}"]
    elif command == "repulsion" and not ("g_m" in names or "delta_m" in names):
        return [f"repulsion requires {need[command]}; got {names}"]
    return []


def _axis_by_name(cfg: RunConfig, *names: str) -> Axis:
    for ax in cfg.axes:
        if ax.name in names:
            return ax
    raise ConfigError([f"missing axis {names}"])


def run_sweep(cfg: RunConfig) -> int:
    if cfg.command == "phase-diagram":
        result = sweep_phase_diagram(
            cfg.params,
            _axis_by_name(cfg, "kappa", "zkappa"),
            _axis_by_name(cfg, "mu"),
            psi_tol=cfg.psi_tol,
            threads=cfg.threads,
        )
    elif cfg.command == "lobes":
        result = sweep_lobes(
            cfg.params,
            _axis_by_name(cfg, "delta_a"),
            n_list=cfg.n_list or (0, 1, 2, 3),
            threads=cfg.threads,
        )
    elif cfg.command == "observables":
        result = sweep_observables(
            cfg.params, _axis_by_name(cfg, "mu"), psi_tol=cfg.psi_tol, threads=cfg.threads
        )
    else:
        result = sweep_repulsion(
            cfg.params,
            _axis_by_name(cfg, "g_m", "delta_m"),
            n_list=cfg.n_list or (1, 2, 3),
            threads=cfg.threads,
        )
    if cfg.preset:
        result.metadata["preset"] = cfg.preset
    out = Path(cfg.output_path or f"{cfg.preset or cfg.command}.csv")
    write_csv(result, out)
    print(f"wrote {out} ({len(result.rows)} rows, {result.metadata['status']})")
    if cfg.emit_plot:
        from .plotting import save_plot

        svg = out.with_suffix(".svg")
        save_plot(result, svg)
        print(f"wrote {svg}")
    return 0 if result.metadata["status"] == "complete" else 1


def run_analytic(cfg: RunConfig) -> int:
    p = cfg.params
    lines: list[tuple[str, object]] = []
    lines.append(("params", " ".join(f"{k}={v}" for k, v in params_as_dict(p).items())))
    if abs(p.delta_a - p.delta_m) <= 1e-12:
        e0, em, ep = detuned_n1_spectrum(p)
        lines.append(("single-excitation energies (E0, E-, E+)", (e0, em, ep)))
        lines.append(("polariton splitting", polariton_splitting(p)))
        lines.append((
            "convention",
            "single-excitation closed forms keep the bare photon frequency "
            "on the photon row",
        ))
    if p.resonant:
        for N in (0, 1, 2):
            lines.append((f"resonant sector {N} spectrum", resonant_spectrum(p, N)))
        if p.n_max >= 2:
            lines.append(("effective repulsion U_1", effective_repulsion(p, 1)))
        for branch in ("N0", "N1"):
            try:
                kc = critical_hopping(p, branch)
                lines.append((f"critical hopping kappa_c ({branch})", kc))
                lines.append((f"z*kappa_c ({branch})", p.z * kc))
            except (LobeBranchError, DegenerateGapError) as exc:
                lines.append((f"critical hopping ({branch})", f"not applicable: {exc}"))
        if p.kappa > 0:
            try:
                psi = order_parameter_analytic(p)
                lines.append(("analytic order parameter", psi if psi else "0 (insulating)"))
            except DegenerateGapError as exc:
                lines.append(("analytic order parameter", f"not applicable: {exc}"))
    for name, value in lines:
        if isinstance(value, tuple):
            value = ", ".join(f"{v:.12g}" for v in value)
        elif isinstance(value, float):
            value = f"{value:.12g}"
        print(f"{name}: {value}")
    if cfg.output_path:
        with open(cfg.output_path, "w") as fh:
            fh.write("name,value\n")
            for name, value in lines:
                if isinstance(value, tuple):
                    value = " ".join(f"{v:.17g}" for v in value)
                fh.write(f"\"{name}\",\"{value}\"\n")
    return 0


def run_verify(cfg: RunConfig) -> int:
    checks = run_verification()
    gated = [c for c in checks if c.tol != float("inf")]
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        tol = "report-only" if c.tol == float("inf") else f"tol {c.tol:.0e}"
        note = f"  [{c.note}]" if c.note else ""
        print(f"{status}  {c.name}: max deviation {c.max_dev:.3e} ({tol}){note}")
    ok = all(c.passed for c in gated)
    print(
        f"{'all checks passed' if ok else 'CHECK FAILURES'}: "
        f"max gated deviation {max(c.max_dev for c in gated):.3e}"
    )
    if cfg.output_path:
        with open(cfg.output_path, "w") as fh:
            fh.write("name,max_dev,tol,passed\n")
            for c in checks:
                fh.write(f"\"{c.name}\",{c.max_dev:.17g},{c.tol:.17g},{c.passed}\n")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="optomagnon",
        description="Mean-field Mott/superfluid solver for an optomagnonic cavity lattice",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for command in (*SWEEP_COMMANDS, "analytic", "verify"):
        sp = sub.add_parser(command)
        sp.add_argument("--config", help="JSON settings file")
        sp.add_argument("--preset", help="named preset, e.g. fig5c")
        sp.add_argument("--out", help="output CSV path")
        sp.add_argument("--plot", action="store_true", help="also write an SVG plot")
        sp.add_argument("--threads", type=int, help="worker threads (default 1)")
        sp.add_argument("--psi-tol", dest="psi_tol", type=float,
                        help="Mott classification threshold")
        sp.add_argument("--axis", action="append", metavar="NAME=MIN:MAX:COUNT",
                        help="override or add a sweep axis (repeatable)")
        sp.add_argument("--n-list", dest="n_list",
                        help="comma-separated lobe/repulsion indices")
        for name in PARAM_FIELDS:
            flag = "--" + name.replace("_", "-")
            kind = int if name in ("z", "n_max") else float
            sp.add_argument(flag, dest=name, type=kind)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = build_config(args.command, args)
    except ConfigError as exc:
        for problem in exc.problems:
            print(f"config error: {problem}", file=sys.stderr)
        return 2
    if cfg.command in SWEEP_COMMANDS:
        return run_sweep(cfg)
    if cfg.command == "analytic":
        return run_analytic(cfg)
    return run_verify(cfg)


if __name__ == "__main__":
    sys.exit(main())
