"""Stability audit of an externally produced trajectory CSV.

Only the CoM and CoP columns are read; every metric is recomputed here, so
the audit also serves as a cross-check of a planner-written file.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bos import bos_contains, bos_region
from .energy import (com_velocity, default_work_budget, energy_state, lyapunov_margin,
                     mos_height, static_capture)
from .errors import InsufficientDataError, InvalidInputError
from .io import read_trajectory_csv
from .metrics import measured_half_step, ml_stability, step_stability
from .params import AnthroProfile, speed_models, step_bounds

AUDIT_COLUMNS = ("t", "com_x", "com_y", "com_z", "copL_x", "copL_y", "copR_x", "copR_y")


@dataclass
class AuditResult:
    v: float
    n_samples: int
    S_SL_Pend: np.ndarray
    S_SL_Jump: np.ndarray
    S_SW: np.ndarray
    in_bos: np.ndarray
    capture: np.ndarray
    lyapunov: np.ndarray
    stored_mismatches: int

    def summary(self) -> dict:
        return {
            "v": self.v,
            "n_samples": self.n_samples,
            "min_S_SL_Pend": float(self.S_SL_Pend.min()),
            "min_S_SL_Jump": float(self.S_SL_Jump.min()),
            "min_S_SW": float(self.S_SW.min()),
            "bos_fraction": float(self.in_bos.mean()),
            "capture_fraction": float(self.capture.mean()),
            "min_lyapunov_margin": float(np.min(self.lyapunov)) if len(self.lyapunov) else float("nan"),
            "stored_in_bos_mismatches": self.stored_mismatches,
        }


def audit_columns(cols: dict, body_height: float = 1.79, mass: float = 63.3,
                  v: float | None = None, d_h: float = 0.1, e_p: float = 0.0,
                  w_budget: float | None = None) -> AuditResult:
    missing = [c for c in AUDIT_COLUMNS if c not in cols]
    if missing:
        raise InvalidInputError(f"trajectory is missing columns: {', '.join(missing)}")
    a = {c: np.asarray(cols[c], dtype=float) for c in AUDIT_COLUMNS}
    t = a["t"]
    if len(t) < 3:
        raise InsufficientDataError("need at least 3 samples to audit")
    if np.any(np.diff(t) <= 0):
        raise InvalidInputError("timestamps must increase")
    if v is None:
        v = float(np.polyfit(t, a["com_x"], 1)[0])
    profile = AnthroProfile.from_height(body_height, mass, d_h)
    models = speed_models(v, profile)
    bounds = step_bounds(v, profile)
    cl = np.column_stack([a["copL_x"], a["copL_y"]])
    cr = np.column_stack([a["copR_x"], a["copR_y"]])
    com = np.column_stack([a["com_x"], a["com_y"], a["com_z"]])
    y_center = 0.5 * (cl[0, 1] + cr[0, 1])

    M = measured_half_step(t, com[:, 0], v)
    pend, jump = step_stability(M, v, models.d_SL_half, bounds)
    s_sw = ml_stability(com[:, 1] - y_center, v, models.d_SW)
    vel, _ = com_velocity(t, com)
    speed = np.linalg.norm(vel, axis=1)
    w = default_work_budget(mass) if w_budget is None else w_budget

    support = cols.get("support")
    in_bos = np.zeros(len(t), dtype=bool)
    capture = np.zeros(len(t), dtype=bool)
    states = []
    for i in range(len(t)):
        region = bos_region(cl[i], cr[i], d_h)
        in_bos[i] = bos_contains(com[i, :2], region)
        if support is not None:
            cop = cl[i] if support[i] == "left" else cr[i]
        else:
            cop = min((cl[i], cr[i]), key=lambda c: float(np.sum((com[i, :2] - c) ** 2)))
        z_mos = mos_height(com[i, :2], cop, profile.l_p, region)
        st = energy_state(com[i, 2], speed[i], mass, w, z_mos, v, e_p)
        capture[i] = static_capture(st)
        states.append(st)
    lyap = np.array([lyapunov_margin(x, y, w) for x, y in zip(states[:-1], states[1:])])

    mismatches = 0
    if "in_bos" in cols:
        stored = np.asarray(cols["in_bos"], dtype=float) > 0.5
        mismatches = int(np.sum(stored != in_bos))
    return AuditResult(v, len(t), pend, jump, s_sw, in_bos, capture, lyap, mismatches)


def audit_trajectory(path, **kwargs) -> AuditResult:
    return audit_columns(read_trajectory_csv(path), **kwargs)
