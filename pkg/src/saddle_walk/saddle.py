"""Posture-dependent Saddle Space frame.

The saddle y-axis joins the two CoPs (pointing from right to left foot), the
x-axis is that direction rotated by -90 degrees, and the origin sits at the
midpoint of the CoP segment. ``lam`` is the angle from the task x-axis to the
saddle x-axis, in (-pi, pi].
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegeneratePostureError

MIN_COP_DISTANCE = 1e-6


@dataclass(frozen=True)
class SaddleFrame:
    origin: tuple[float, float]
    lam: float
    m_slope: float  # +inf when the feet are side by side
    Y_sLF: float
    Y_sRF: float

    def rotation(self) -> np.ndarray:
        c, s = math.cos(self.lam), math.sin(self.lam)
        return np.array([[c, -s], [s, c]])


def build_frame(cop_left, cop_right) -> SaddleFrame:
    xl, yl = float(cop_left[0]), float(cop_left[1])
    xr, yr = float(cop_right[0]), float(cop_right[1])
    dx, dy = xl - xr, yl - yr
    dist = math.hypot(dx, dy)
    if dist <= MIN_COP_DISTANCE:
        raise DegeneratePostureError(
            f"CoPs coincide (distance {dist:.3g} m); saddle frame undefined")
    # saddle x-axis = (dy, -dx)/dist
    lam = math.atan2(-dx, dy)
    if lam == -math.pi:
        lam = math.pi
    m_slope = dy / dx if dx != 0.0 else math.inf
    half = 0.5 * dist
    return SaddleFrame(
        origin=(0.5 * (xl + xr), 0.5 * (yl + yr)),
        lam=lam,
        m_slope=m_slope,
        Y_sLF=half,
        Y_sRF=-half,
    )


def to_saddle(p, frame: SaddleFrame) -> np.ndarray:
    """Task-space point(s) to saddle coordinates. Accepts shape (2,) or (n, 2)."""
    p = np.asarray(p, dtype=float)
    c, s = math.cos(frame.lam), math.sin(frame.lam)
    dx = p[..., 0] - frame.origin[0]
    dy = p[..., 1] - frame.origin[1]
    return np.stack([c * dx + s * dy, -s * dx + c * dy], axis=-1)


def to_task(p, frame: SaddleFrame) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    c, s = math.cos(frame.lam), math.sin(frame.lam)
    xs, ys = p[..., 0], p[..., 1]
    return np.stack([c * xs - s * ys + frame.origin[0],
                     s * xs + c * ys + frame.origin[1]], axis=-1)
