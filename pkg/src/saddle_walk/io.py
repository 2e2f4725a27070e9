"""Config files, trajectory CSVs and stability reports.

Config files are line-oriented ``key=value`` pairs with ``#`` comments.
Lengths are metres and angles are degrees in the file; angles become
radians once parsed. CSV floats are written with 9 significant digits
through ``%``-formatting, which ignores the locale.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field, fields
from pathlib import Path

from .bos import bos_boundary, bos_region
from .errors import ConfigError, InvalidInputError
from .planner import DEFAULT_DT, GaitRequest, StabilityReport, TrajectoryLog

TRAJECTORY_HEADER = (
    "t", "com_x", "com_y", "com_z", "copL_x", "copL_y", "copR_x", "copR_y",
    "phase", "support", "theta_TO_deg", "theta_HS_deg",
    "S_SL_pend", "S_SL_jump", "S_SW", "in_bos",
)
ENERGY_HEADER = ("t", "U", "K", "E", "leg_length", "capture", "capture_ebos",
                 "lyapunov_margin", "edot_ok", "velocity_one_sided")
REQUIRED_KEYS = ("v_des", "n_steps", "body_height", "mass", "hs_angle_deg")
GRID_KEYS = ("velocities", "hs_angles_deg")
DEFAULT_VELOCITIES = (0.7, 1.0, 1.2, 1.6)
DEFAULT_HS_ANGLES = (5.0, 10.0, 15.0)


def fmt(x) -> str:
    """Locale-independent float text with 9 significant digits."""
    if isinstance(x, bool):
        return "1" if x else "0"
    if isinstance(x, int):
        return str(x)
    x = float(x)
    if math.isnan(x):
        return "nan"
    if x == 0.0:
        x = 0.0  # no negative zero
    return "%.9g" % x


@dataclass(frozen=True)
class RunConfig:
    v_des: float | None = None
    n_steps: int = 2
    body_height: float = 1.79
    mass: float = 63.3
    hs_angle_deg: float | None = None
    dt: float = DEFAULT_DT
    d_h: float = 0.1
    swing_clearance: float = 0.05
    w_budget: float | None = None
    first_support: str = "left"
    cop_left_x: float | None = None
    cop_left_y: float | None = None
    cop_right_x: float | None = None
    cop_right_y: float | None = None
    ankle_strategies: bool = True
    velocities: tuple[float, ...] = ()
    hs_angles_deg: tuple[float, ...] = ()
    output_dir: str = "out"

    def request(self, v_des: float | None = None, hs_angle_deg: float | None = None,
                **overrides) -> GaitRequest:
        v = self.v_des if v_des is None else v_des
        a = self.hs_angle_deg if hs_angle_deg is None else hs_angle_deg
        if v is None or a is None:
            raise ConfigError("v_des and hs_angle_deg are needed to build a walk request")
        cl = cr = None
        if self.cop_left_x is not None:
            cl = (self.cop_left_x, self.cop_left_y)
            cr = (self.cop_right_x, self.cop_right_y)
        kw = dict(
            v_des=v, max_theta_HS=math.radians(a), n_steps=self.n_steps,
            body_height=self.body_height, mass=self.mass, dt=self.dt, cop_left=cl,
            cop_right=cr, first_support=self.first_support,
            swing_clearance=self.swing_clearance, w_budget=self.w_budget, d_h=self.d_h,
            ankle_strategies=self.ankle_strategies,
        )
        kw.update(overrides)
        return GaitRequest(**kw)

    @property
    def is_grid(self) -> bool:
        return bool(self.velocities) or bool(self.hs_angles_deg)


_FIELDS = {f.name: f for f in fields(RunConfig)}
_INT_KEYS = {"n_steps"}
_BOOL_KEYS = {"ankle_strategies"}
_STR_KEYS = {"first_support", "output_dir"}
_LIST_KEYS = set(GRID_KEYS)
_COP_KEYS = ("cop_left_x", "cop_left_y", "cop_right_x", "cop_right_y")


def _convert(key: str, raw: str, line: int):
    try:
        if key in _INT_KEYS:
            val = float(raw)
            if val != int(val):
                raise ValueError
            return int(val)
        if key in _BOOL_KEYS:
            low = raw.lower()
            if low in ("1", "true", "yes", "on"):
                return True
            if low in ("0", "false", "no", "off"):
                return False
            raise ValueError
        if key in _STR_KEYS:
            if not raw:
                raise ValueError
            return raw
        if key in _LIST_KEYS:
            vals = tuple(float(p) for p in raw.split(",") if p.strip())
            if not vals:
                raise ValueError
            return vals
        val = float(raw)
        if not math.isfinite(val):
            raise ValueError
        return val
    except ValueError:
        raise ConfigError(f"cannot parse value {raw!r} for key {key!r}", line) from None


def _check_ranges(values: dict, lines: dict) -> None:
    def bad(key, msg):
        raise ConfigError(f"{key}={values[key]!r}: {msg}", lines.get(key))

    if values.get("v_des") is not None and not 0.0 < values["v_des"] < 3.0:
        bad("v_des", "walking speed must lie in (0, 3) m/s")
    if values.get("hs_angle_deg") is not None and not 0.0 < values["hs_angle_deg"] <= 30.0:
        bad("hs_angle_deg", "heel-strike angle must lie in (0, 30] deg")
    for key in ("body_height", "mass", "dt", "d_h"):
        if key in values and not values[key] > 0:
            bad(key, "must be positive")
    if "n_steps" in values and values["n_steps"] < 1:
        bad("n_steps", "must be at least 1")
    if "swing_clearance" in values and values["swing_clearance"] < 0:
        bad("swing_clearance", "must be non-negative")
    if values.get("first_support", "left") not in ("left", "right"):
        bad("first_support", "must be left or right")
    for v in values.get("velocities", ()):
        if not 0.0 < v < 3.0:
            bad("velocities", "every speed must lie in (0, 3) m/s")
    for a in values.get("hs_angles_deg", ()):
        if not 0.0 < a <= 30.0:
            bad("hs_angles_deg", "every angle must lie in (0, 30] deg")
    cops = [k for k in _COP_KEYS if k in values]
    if cops and len(cops) != len(_COP_KEYS):
        missing = [k for k in _COP_KEYS if k not in values]
        raise ConfigError(f"initial feet need all of {', '.join(_COP_KEYS)}; "
                          f"missing {', '.join(missing)}")


def parse_config_text(text: str) -> RunConfig:
    values, lines = {}, {}
    for no, raw_line in enumerate(text.splitlines(), start=1):
        body = raw_line.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise ConfigError(f"expected key=value, got {body!r}", no)
        key, raw = (s.strip() for s in body.split("=", 1))
        if key not in _FIELDS:
            raise ConfigError(f"unknown key {key!r}", no)
        if key in values:
            raise ConfigError(f"duplicate key {key!r}", no)
        values[key] = _convert(key, raw, no)
        lines[key] = no
    grid = any(k in values for k in GRID_KEYS)
    required = [k for k in REQUIRED_KEYS if not (grid and k in ("v_des", "hs_angle_deg"))]
    missing = [k for k in required if k not in values]
    if missing:
        raise ConfigError(f"missing required keys: {', '.join(missing)}")
    _check_ranges(values, lines)
    if grid:
        values.setdefault("velocities", DEFAULT_VELOCITIES)
        values.setdefault("hs_angles_deg", DEFAULT_HS_ANGLES)
    return RunConfig(**values)


def parse_config(path) -> RunConfig:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return parse_config_text(text)


def format_config(cfg: RunConfig) -> str:
    """Serialize a config so that ``parse_config_text`` returns it unchanged."""
    out = []
    for f in fields(RunConfig):
        val = getattr(cfg, f.name)
        if val is None or (f.name in _LIST_KEYS and not val):
            continue
        if isinstance(val, tuple):
            text = ",".join(repr(float(v)) for v in val)
        elif isinstance(val, bool):
            text = "true" if val else "false"
        elif isinstance(val, float):
            text = repr(val)
        else:
            text = str(val)
        out.append(f"{f.name}={text}")
    return "\n".join(out) + "\n"


def _writer(path):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fh = open(path, "w", newline="", encoding="utf-8")
    return fh, csv.writer(fh, lineterminator="\n")


def write_trajectory_csv(log: TrajectoryLog, path) -> Path:
    fh, w = _writer(path)
    with fh:
        w.writerow(TRAJECTORY_HEADER)
        for s in log.samples:
            w.writerow([
                fmt(s.t), fmt(s.com[0]), fmt(s.com[1]), fmt(s.com[2]),
                fmt(s.cop_left[0]), fmt(s.cop_left[1]), fmt(s.cop_right[0]), fmt(s.cop_right[1]),
                s.phase.phase_label, s.support,
                fmt(math.degrees(s.theta_TO)), fmt(math.degrees(s.theta_HS)),
                fmt(s.S_SL_Pend), fmt(s.S_SL_Jump), fmt(s.S_SW), fmt(bool(s.in_bos)),
            ])
    return Path(path)


def read_trajectory_csv(path) -> dict[str, list]:
    """Columns of a trajectory CSV; numeric columns become floats."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise InvalidInputError(f"{path}: empty trajectory file")
        cols = {name: [] for name in reader.fieldnames}
        for row in reader:
            for name in reader.fieldnames:
                raw = row[name]
                try:
                    cols[name].append(float(raw))
                except (TypeError, ValueError):
                    cols[name].append(raw)
    return cols


def write_energy_csv(log: TrajectoryLog, path) -> Path:
    fh, w = _writer(path)
    with fh:
        w.writerow(ENERGY_HEADER)
        for s in log.samples:
            w.writerow([fmt(s.t), fmt(s.U), fmt(s.K), fmt(s.U + s.K), fmt(s.leg_length),
                        fmt(s.capture), fmt(s.capture_ebos), fmt(s.lyapunov_margin),
                        fmt(s.edot_ok), fmt(s.velocity_one_sided)])
    return Path(path)


def write_bos_csv(log: TrajectoryLog, path, n: int = 72, every: int = 1) -> Path:
    """Plot-ready I-BoS outlines, one closed polyline per selected sample."""
    fh, w = _writer(path)
    with fh:
        w.writerow(("sample", "t", "vertex", "x", "y"))
        for i, s in enumerate(log.samples[::every]):
            poly = bos_boundary(bos_region(s.cop_left, s.cop_right, log.request.d_h), n)
            for j, (x, y) in enumerate(poly):
                w.writerow((i * every, fmt(s.t), j, fmt(x), fmt(y)))
    return Path(path)


def write_swing_csv(log: TrajectoryLog, path) -> Path:
    fh, w = _writer(path)
    with fh:
        w.writerow(("t", "swing_x", "swing_y", "swing_z"))
        for s in log.samples:
            if s.swing_foot is not None:
                w.writerow((fmt(s.t), *(fmt(c) for c in s.swing_foot)))
    return Path(path)


REPORT_FIELDS = (
    "n_samples", "min_S_SL_Pend", "min_S_SL_Jump", "min_S_SW", "bos_fraction",
    "ebos_fraction", "bos_exits_outside_transitions", "ebos_via_points_ok",
    "capture_fraction", "capture_ebos_fraction", "min_lyapunov_margin",
    "edot_violations", "dz_target", "dz_achieved", "dz_achieved_dense",
    "max_handoff_jump", "planning_time_s",
)


def write_report(report: StabilityReport, path, request: GaitRequest | None = None,
                 include_timing: bool = True) -> tuple[Path, Path]:
    """Write ``<path>.txt`` (readable) and ``<path>.csv`` (one key,value row each)."""
    base = Path(path)
    base.parent.mkdir(parents=True, exist_ok=True)
    d = report.as_dict()
    keys = [k for k in REPORT_FIELDS if include_timing or k != "planning_time_s"]
    txt = base.parent / (base.name + ".txt")
    lines = ["Stability report"]
    if request is not None:
        lines.append(f"  v_des          {fmt(request.v_des)} m/s")
        lines.append(f"  hs_angle       {fmt(math.degrees(request.max_theta_HS))} deg")
        lines.append(f"  n_steps        {request.n_steps}")
        lines.append(f"  dt             {fmt(request.dt)} s")
    err = (d["dz_achieved_dense"] - d["dz_target"]) / d["dz_target"]
    lines.append("")
    for k in keys:
        lines.append(f"  {k:<32}{fmt(d[k])}")
    lines.append(f"  {'dz_relative_error_dense':<32}{fmt(err)}")
    txt.write_text("\n".join(lines) + "\n", encoding="utf-8")
    csv_path = base.parent / (base.name + ".csv")
    fh, w = _writer(csv_path)
    with fh:
        w.writerow(("key", "value"))
        for k in keys:
            w.writerow((k, fmt(d[k])))
    return txt, csv_path
