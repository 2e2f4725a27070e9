"""Speed by heel-strike-angle simulation grid."""
from __future__ import annotations

import csv
import math
import time
from dataclasses import dataclass, replace
from pathlib import Path

from .errors import SaddleWalkError
from .io import RunConfig, fmt, write_report, write_trajectory_csv
from .planner import plan_walk

SUMMARY_HEADER = (
    "v_des", "hs_angle_deg", "status", "n_samples", "min_S_SL_pend", "min_S_SL_jump",
    "min_S_SW", "bos_fraction", "bos_exits_outside_transitions", "dz_target",
    "dz_achieved", "dz_achieved_dense", "dz_rel_error", "dz_rel_error_rigid",
    "max_handoff_jump", "time_1_stride_s", "time_10_strides_s",
)
TIMING_COLUMNS = ("time_1_stride_s", "time_10_strides_s")


@dataclass
class GridCell:
    v_des: float
    hs_angle_deg: float
    status: str
    row: dict
    error: str = ""


def _timed(req) -> float:
    t0 = time.perf_counter()
    plan_walk(req)
    return time.perf_counter() - t0


def run_cell(cfg: RunConfig, v: float, angle: float, out_dir: Path | None,
             timing: bool = True) -> GridCell:
    try:
        req = cfg.request(v, angle)
        log = plan_walk(req)
        rigid = plan_walk(replace(req, ankle_strategies=False)).report
    except SaddleWalkError as exc:
        return GridCell(v, angle, "error", {}, str(exc))
    r = log.report
    tag = f"v{v:.2f}_hs{angle:g}"
    if out_dir is not None:
        write_trajectory_csv(log, out_dir / f"trajectory_{tag}.csv")
        write_report(r, out_dir / f"report_{tag}", req, include_timing=False)
    row = dict(
        n_samples=r.n_samples, min_S_SL_pend=r.min_S_SL_Pend, min_S_SL_jump=r.min_S_SL_Jump,
        min_S_SW=r.min_S_SW, bos_fraction=r.bos_fraction,
        bos_exits_outside_transitions=r.bos_exits_outside_transitions,
        dz_target=r.dz_target, dz_achieved=r.dz_achieved,
        dz_achieved_dense=r.dz_achieved_dense,
        dz_rel_error=(r.dz_achieved_dense - r.dz_target) / r.dz_target,
        dz_rel_error_rigid=(rigid.dz_achieved_dense - rigid.dz_target) / rigid.dz_target,
        max_handoff_jump=r.max_handoff_jump,
    )
    if timing:
        row["time_1_stride_s"] = _timed(replace(req, n_steps=2))
        row["time_10_strides_s"] = _timed(replace(req, n_steps=20))
    return GridCell(v, angle, "ok", row)


def run_grid(cfg: RunConfig, out_dir=None, timing: bool = True) -> list[GridCell]:
    """Plan every (speed, angle) cell; failures are recorded and the rest continue.

    Writes one trajectory CSV and one report per cell plus ``summary.csv``.
    With ``timing=False`` the wall-clock columns are left out so that the
    whole output directory is byte-reproducible.
    """
    out = Path(out_dir if out_dir is not None else cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    velocities = cfg.velocities or (cfg.v_des,)
    angles = cfg.hs_angles_deg or (cfg.hs_angle_deg,)
    cells = [run_cell(cfg, v, a, out, timing) for v in velocities for a in angles]
    header = [h for h in SUMMARY_HEADER if timing or h not in TIMING_COLUMNS]
    with open(out / "summary.csv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header + ["error"])
        for c in cells:
            vals = [fmt(c.v_des), fmt(c.hs_angle_deg), c.status]
            vals += [fmt(c.row[h]) if h in c.row else "" for h in header[3:]]
            w.writerow(vals + [c.error])
    return cells


def summary_table(cells: list[GridCell]) -> str:
    lines = [f"{'v':>5} {'hs':>4} {'status':>6} {'minS_SW':>8} {'BoS':>5} "
             f"{'dz_tgt':>7} {'dz_ach':>7} {'err':>7} {'rigid':>7} {'t10[s]':>7}"]
    for c in cells:
        if c.status != "ok":
            lines.append(f"{c.v_des:5.2f} {c.hs_angle_deg:4g} {'error':>6}  {c.error}")
            continue
        r = c.row
        t10 = r.get("time_10_strides_s", math.nan)
        lines.append(
            f"{c.v_des:5.2f} {c.hs_angle_deg:4g} {'ok':>6} {r['min_S_SW']:8.4f} "
            f"{r['bos_fraction']:5.2f} {r['dz_target']:7.4f} {r['dz_achieved_dense']:7.4f} "
            f"{r['dz_rel_error']:+7.3f} {r['dz_rel_error_rigid']:+7.3f} {t10:7.3f}")
    return "\n".join(lines)
