"""Swing-foot landing placement and swing path."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError, UndefinedTargetError

MIN_SLOPE = 1e-6
DEFAULT_CLEARANCE = 0.05


@dataclass(frozen=True)
class FeetState:
    cop_left: tuple[float, float]
    cop_right: tuple[float, float]
    support_side: str
    swing_progress: float = 0.0
    swing_clearance: float = DEFAULT_CLEARANCE


def swing_target(stance_cop, d_SW: float, m_slope: float, swing_side: str = "left"):
    """Landing CoP on the line through the stance CoP with slope ``m_slope``.

    The landing sits ``d_SW`` to the swing side of the stance CoP; its x is
    wherever that lateral offset meets the line. An infinite slope (feet
    abreast) keeps x unchanged.
    """
    if swing_side not in ("left", "right"):
        raise InvalidInputError(f"swing side must be 'left' or 'right', got {swing_side!r}")
    if not math.isinf(m_slope) and abs(m_slope) < MIN_SLOPE:
        raise UndefinedTargetError(
            f"slope {m_slope:.3g}: CoM is laterally level with the stance CoP")
    dy = d_SW if swing_side == "left" else -d_SW
    dx = 0.0 if math.isinf(m_slope) else dy / m_slope
    return (float(stance_cop[0]) + dx, float(stance_cop[1]) + dy)


def _min_jerk(u):
    return u * u * u * (10.0 + u * (-15.0 + 6.0 * u))


def swing_trajectory(t: float, lift, land, t_lift: float, t_land: float,
                     clearance: float = DEFAULT_CLEARANCE) -> np.ndarray:
    """Foot position during swing; ``t`` outside the window is clamped."""
    if not t_lift < t_land:
        raise InvalidInputError(f"swing window empty: t_lift={t_lift}, t_land={t_land}")
    lift = np.asarray(lift, dtype=float)
    land = np.asarray(land, dtype=float)
    u = min(max((t - t_lift) / (t_land - t_lift), 0.0), 1.0)
    s = _min_jerk(u)
    out = lift + (land - lift) * s
    out[2] = lift[2] + (land[2] - lift[2]) * u + clearance * math.sin(math.pi * u)
    return out
