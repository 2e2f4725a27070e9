"""Command line entry point: ``saddle-walk {plan,grid,audit,fit}``."""
from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import replace
from pathlib import Path

from .audit import audit_trajectory
from .errors import ConfigError, SaddleWalkError
from .grid import run_grid, summary_table
from .io import (RunConfig, fmt, format_config, parse_config, parse_config_text,
                 write_bos_csv, write_energy_csv, write_report, write_swing_csv,
                 write_trajectory_csv)
from .mocap import extract_gait_parameters, fit_trials, ingest_mocap
from .planner import plan_walk

# flags that mirror config keys; None means "keep the config value"
_OVERRIDES = (
    ("v_des", float), ("n_steps", int), ("body_height", float), ("mass", float),
    ("hs_angle_deg", float), ("dt", float), ("d_h", float), ("swing_clearance", float),
    ("w_budget", float), ("first_support", str), ("output_dir", str),
)


def _floats(text: str) -> tuple[float, ...]:
    return tuple(float(p) for p in text.split(",") if p.strip())


def _add_run_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", type=Path, help="key=value config file")
    for key, typ in _OVERRIDES:
        p.add_argument(f"--{key.replace('_', '-')}", dest=key, type=typ, default=None)
    p.add_argument("--rigid", action="store_true", help="disable both ankle strategies")


def _config(args, grid: bool = False) -> RunConfig:
    if args.config is not None:
        cfg = parse_config(args.config)
    else:
        cfg = RunConfig()
    over = {k: getattr(args, k) for k, _ in _OVERRIDES if getattr(args, k) is not None}
    if args.rigid:
        over["ankle_strategies"] = False
    if grid:
        if args.velocities:
            over["velocities"] = _floats(args.velocities)
        if args.hs_angles_deg:
            over["hs_angles_deg"] = _floats(args.hs_angles_deg)
    cfg = replace(cfg, **over)
    if grid and not cfg.is_grid:
        cfg = replace(cfg, velocities=(0.7, 1.0, 1.2, 1.6), hs_angles_deg=(5.0, 10.0, 15.0))
    # re-run the file validation on the merged values; its line numbers are meaningless here
    try:
        return parse_config_text(format_config(cfg))
    except ConfigError as exc:
        raise ConfigError(exc.detail) from None


def cmd_plan(args) -> int:
    cfg = _config(args)
    log = plan_walk(cfg.request())
    out = Path(cfg.output_dir)
    write_trajectory_csv(log, out / "trajectory.csv")
    write_energy_csv(log, out / "energy.csv")
    write_swing_csv(log, out / "swing.csv")
    if args.bos:
        write_bos_csv(log, out / "bos.csv")
    txt, _ = write_report(log.report, out / "report", log.request)
    print(txt.read_text(encoding="utf-8"), end="")
    return 0


def cmd_grid(args) -> int:
    cfg = _config(args, grid=True)
    cells = run_grid(cfg, timing=not args.no_timing)
    print(summary_table(cells))
    return 0 if all(c.status == "ok" for c in cells) else 1


def cmd_audit(args) -> int:
    res = audit_trajectory(args.trajectory, body_height=args.body_height, mass=args.mass,
                           v=args.v_des, d_h=args.d_h, e_p=args.e_p)
    for k, v in res.summary().items():
        print(f"{k:<28}{fmt(v)}")
    return 0


def cmd_fit(args) -> int:
    params = [extract_gait_parameters(ingest_mocap(p)) for p in args.trials]
    for path, p in zip(args.trials, params):
        print(f"{path}: v={p.v:.4f} d_SL={p.d_SL:.4f} d_SW={p.d_SW:.4f} dZ={p.dZ_CoM:.4f}")
    fits = fit_trials(params)
    rows = [("quantity", "slope", "intercept", "r_squared", "n_points")]
    for name, f in fits.items():
        rows.append((name, fmt(f.slope), fmt(f.intercept), fmt(f.r_squared), f.n_points))
        print(f"{name:<10} = {f.slope:.6f} v + {f.intercept:.6f}   R^2={f.r_squared:.4f}")
    if args.out is not None:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            csv.writer(fh, lineterminator="\n").writerows(rows)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="saddle-walk",
                                 description="Saddle-point gait planning for straight walking.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("plan", help="plan a single walk")
    _add_run_flags(p)
    p.add_argument("--bos", action="store_true", help="also write BoS outlines")
    p.set_defaults(func=cmd_plan)

    g = sub.add_parser("grid", help="run the speed by heel-strike-angle grid")
    _add_run_flags(g)
    g.add_argument("--velocities", help="comma-separated speeds, m/s")
    g.add_argument("--hs-angles-deg", dest="hs_angles_deg", help="comma-separated angles, deg")
    g.add_argument("--no-timing", action="store_true",
                   help="omit wall-clock columns so outputs are byte-reproducible")
    g.set_defaults(func=cmd_grid)

    a = sub.add_parser("audit", help="recompute stability metrics of a trajectory CSV")
    a.add_argument("trajectory", type=Path)
    a.add_argument("--body-height", type=float, default=1.79)
    a.add_argument("--mass", type=float, default=63.3)
    a.add_argument("--v-des", type=float, default=None, help="default: fitted from com_x")
    a.add_argument("--d-h", type=float, default=0.1)
    a.add_argument("--e-p", type=float, default=0.0, help="perturbation energy, J")
    a.set_defaults(func=cmd_audit)

    f = sub.add_parser("fit", help="fit speed regressions to marker trials")
    f.add_argument("trials", type=Path, nargs="+")
    f.add_argument("--out", type=Path, default=None)
    f.set_defaults(func=cmd_fit)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SaddleWalkError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
