"""Marker-based gait parameter extraction and linear regression.

Marker CSVs have a ``t`` column plus ``<MARKER>_x``, ``<MARKER>_y`` and
``<MARKER>_z`` columns for every marker in ``MARKERS``. The CoM is the centre
of the four iliac markers; a foot CoP is the midpoint between the heel and the
middle of the two metatarsal markers.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import InsufficientDataError, InvalidInputError, MocapError
from .io import fmt

PELVIS = ("L_ASI", "R_ASI", "L_PSI", "R_PSI")
FEET = ("L_HEEL", "R_HEEL", "L_MET_MED", "L_MET_LAT", "R_MET_MED", "R_MET_LAT")
MARKERS = PELVIS + FEET
AXES = ("x", "y", "z")

# synthetic marker layout around the CoM / CoP, m
PELVIS_HALF_DEPTH = 0.10
PELVIS_HALF_WIDTH = 0.12
FOOT_HALF_LENGTH = 0.10
MET_HALF_SPREAD = 0.04


@dataclass(frozen=True)
class MarkerFrame:
    t: float
    markers: dict[str, np.ndarray]

    @property
    def com(self) -> np.ndarray:
        m = self.markers
        front = 0.5 * (m["L_ASI"] + m["R_ASI"])
        rear = 0.5 * (m["L_PSI"] + m["R_PSI"])
        return 0.5 * (front + rear)

    def cop(self, side: str) -> np.ndarray:
        p = "L" if side == "left" else "R"
        m = self.markers
        met = 0.5 * (m[f"{p}_MET_MED"] + m[f"{p}_MET_LAT"])
        return 0.5 * (met + m[f"{p}_HEEL"])


@dataclass(frozen=True)
class RegressionFit:
    slope: float
    intercept: float
    r_squared: float
    n_points: int

    def __call__(self, x):
        return self.slope * np.asarray(x, dtype=float) + self.intercept


@dataclass(frozen=True)
class GaitParameters:
    v: float
    d_SL: float
    d_SW: float
    dZ_CoM: float
    n_footholds: int

    @property
    def d_SL_half(self) -> float:
        return 0.5 * self.d_SL


def fit_linear(xs, ys) -> RegressionFit:
    """Ordinary least squares line. Constant ``ys`` give R^2 = 0 by convention."""
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise InvalidInputError("xs and ys must be 1-D sequences of equal length")
    if len(x) < 3:
        raise InsufficientDataError(f"need at least 3 points, got {len(x)}")
    xm, ym = x.mean(), y.mean()
    sxx = np.sum((x - xm) ** 2)
    if sxx <= 1e-12 * max(1.0, np.sum(x * x)):
        raise InvalidInputError("xs are all equal; the slope is undefined")
    slope = float(np.sum((x - xm) * (y - ym)) / sxx)
    intercept = float(ym - slope * xm)
    ss_tot = float(np.sum((y - ym) ** 2))
    ss_res = float(np.sum((y - (slope * x + intercept)) ** 2))
    r2 = 0.0 if ss_tot == 0.0 else min(1.0, max(0.0, 1.0 - ss_res / ss_tot))
    return RegressionFit(slope, intercept, r2, len(x))


def ingest_mocap(path) -> list[MarkerFrame]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        names = reader.fieldnames or []
        required = ["t"] + [f"{m}_{a}" for m in MARKERS for a in AXES]
        missing = [c for c in required if c not in names]
        if missing:
            raise MocapError(f"{path}: missing marker columns: {', '.join(missing)}")
        frames = []
        for line, row in enumerate(reader, start=2):
            try:
                t = float(row["t"])
                markers = {m: np.array([float(row[f"{m}_{a}"]) for a in AXES]) for m in MARKERS}
            except (TypeError, ValueError):
                raise MocapError(f"{path}: line {line}: non-numeric marker value") from None
            if frames and not t > frames[-1].t:
                raise MocapError(f"{path}: line {line}: time {t} does not increase")
            frames.append(MarkerFrame(t, markers))
    if not frames:
        raise MocapError(f"{path}: no frames")
    return frames


def synthesize_frames(log) -> list[MarkerFrame]:
    """Marker frames whose derived CoM and CoPs reproduce a planned walk."""
    frames = []
    for s in log.samples:
        com = np.array(s.com)
        m = {
            "L_ASI": com + [PELVIS_HALF_DEPTH, PELVIS_HALF_WIDTH, 0.0],
            "R_ASI": com + [PELVIS_HALF_DEPTH, -PELVIS_HALF_WIDTH, 0.0],
            "L_PSI": com + [-PELVIS_HALF_DEPTH, PELVIS_HALF_WIDTH, 0.0],
            "R_PSI": com + [-PELVIS_HALF_DEPTH, -PELVIS_HALF_WIDTH, 0.0],
        }
        for p, cop, side in (("L", s.cop_left, "left"), ("R", s.cop_right, "right")):
            z = 0.0
            if s.swing_foot is not None and s.support != side:
                z = s.swing_foot[2]
            c = np.array([cop[0], cop[1], z])
            m[f"{p}_HEEL"] = c - [FOOT_HALF_LENGTH, 0.0, 0.0]
            m[f"{p}_MET_MED"] = c + [FOOT_HALF_LENGTH, MET_HALF_SPREAD, 0.0]
            m[f"{p}_MET_LAT"] = c + [FOOT_HALF_LENGTH, -MET_HALF_SPREAD, 0.0]
        frames.append(MarkerFrame(s.t, m))
    return frames


def write_mocap_csv(frames: list[MarkerFrame], path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["t"] + [f"{m}_{a}" for m in MARKERS for a in AXES])
        for f in frames:
            w.writerow([fmt(f.t)] + [fmt(f.markers[m][i]) for m in MARKERS for i in range(3)])
    return path


def synthesize_mocap(log, path) -> Path:
    return write_mocap_csv(synthesize_frames(log), path)


def _footholds(t, cop, vel_tol):
    """(start time, x, y) of every stationary stretch of one foot."""
    speed = np.zeros(len(t))
    speed[1:] = np.linalg.norm(np.diff(cop[:, :2], axis=0), axis=1) / np.diff(t)
    still = speed <= vel_tol
    still[0] = still[1] if len(t) > 1 else True
    holds, i = [], 0
    while i < len(t):
        if still[i]:
            j = i
            while j + 1 < len(t) and still[j + 1]:
                j += 1
            seg = cop[i:j + 1]
            holds.append((t[i], float(np.median(seg[:, 0])), float(np.median(seg[:, 1]))))
            i = j + 1
        else:
            i += 1
    return holds


def extract_gait_parameters(frames: list[MarkerFrame], vel_tol: float = 0.05) -> GaitParameters:
    """Speed, step length, step width and CoM vertical excursion of one trial.

    Footholds of both feet are merged in time order; the step length and the
    step width are the medians over consecutive footholds that were planted
    after the trial started.
    """
    if len(frames) < 3:
        raise InsufficientDataError("need at least 3 frames")
    t = np.array([f.t for f in frames])
    com = np.array([f.com for f in frames])
    v = fit_linear(t, com[:, 0]).slope
    holds = []
    for side in ("left", "right"):
        cop = np.array([f.cop(side) for f in frames])
        holds += [(h[0], h[1], h[2], side) for h in _footholds(t, cop, vel_tol)]
    holds.sort(key=lambda h: (h[0], h[3]))
    steps, widths = [], []
    for a, b in zip(holds, holds[1:]):
        if b[3] == a[3] or b[0] <= t[0]:
            continue
        steps.append(b[1] - a[1])
        widths.append(abs(b[2] - a[2]))
    if not steps:
        raise InsufficientDataError("no complete step found in the trial")
    return GaitParameters(v=float(v), d_SL=float(np.median(steps)),
                          d_SW=float(np.median(widths)),
                          dZ_CoM=float(com[:, 2].max() - com[:, 2].min()),
                          n_footholds=len(holds))


def fit_trials(params: list[GaitParameters]) -> dict[str, RegressionFit]:
    """Speed regressions of the half step length, step width and CoM excursion."""
    v = [p.v for p in params]
    return {
        "d_SL_half": fit_linear(v, [p.d_SL_half for p in params]),
        "d_SW": fit_linear(v, [p.d_SW for p in params]),
        "dZ_CoM": fit_linear(v, [p.dZ_CoM for p in params]),
    }
