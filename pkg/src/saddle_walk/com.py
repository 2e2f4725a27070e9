"""Desired CoM trajectory: constant forward speed, harmonic sway, pendulum height."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import OverextensionError
from .feet import swing_target
from .params import SpeedModels

TWO_PI = 2.0 * math.pi
LEFT, RIGHT = "left", "right"

PHASE_LABELS = ("LFvp->LSvp", "LSvp->RFvp", "RFvp->RSvp", "RSvp->LFvp")
PHASE_SUPPORT = (LEFT, RIGHT, RIGHT, LEFT)


@dataclass(frozen=True)
class GaitPhase:
    phase_label: str
    phi: float
    support_side: str

    @property
    def quarter(self) -> int:
        return PHASE_LABELS.index(self.phase_label)


@dataclass(frozen=True)
class ViaPoint:
    label: str
    t: float
    position: tuple[float, float]
    # feet posture the via point is built on
    cop_left: tuple[float, float]
    cop_right: tuple[float, float]


@dataclass(frozen=True)
class ViaPointSet:
    L_Fvp: ViaPoint
    L_Svp: ViaPoint
    R_Fvp: ViaPoint
    R_Svp: ViaPoint

    def ordered(self) -> list[ViaPoint]:
        return sorted((self.L_Fvp, self.L_Svp, self.R_Fvp, self.R_Svp), key=lambda p: p.t)


def com_transverse(t: float, models: SpeedModels, phi: float,
                   x_offset: float = 0.0, y_offset: float = 0.0) -> tuple[float, float]:
    x = models.v_des * t + x_offset
    y = models.A_y * math.cos(math.pi * models.omega_0 * t + phi) + y_offset
    return x, y


def com_vertical(t: float, com_xy, support_cop, pendulum_length: float) -> float:
    """Height of the pendulum tip over the support CoP."""
    dx = com_xy[0] - support_cop[0]
    dy = com_xy[1] - support_cop[1]
    d2 = dx * dx + dy * dy
    h2 = pendulum_length * pendulum_length
    if d2 >= h2:
        raise OverextensionError(t, math.sqrt(d2), pendulum_length)
    return math.sqrt(h2 - d2)


def phase_at(t: float, phi0: float, omega_0: float) -> GaitPhase:
    theta = (math.pi * omega_0 * t + phi0) % TWO_PI
    # guard against 2pi - eps rounding up into the next quarter
    q = min(int(theta // (math.pi / 2)), 3)
    return GaitPhase(PHASE_LABELS[q], q * math.pi / 2, PHASE_SUPPORT[q])


def via_points(stance_cop, stance_side: str, models: SpeedModels, t_apex: float = 0.0,
               y_center: float = 0.0) -> ViaPointSet:
    """The four via points of the stride starting at the stance foot's apex.

    ``stance_cop`` is the CoP of the foot supporting at ``t_apex``; the CoM is
    at its lateral apex above that foot then. Landings are placed with
    :func:`swing_target`, so they match what the planner would produce.
    """
    q = models.quarter_duration
    sign = 1.0 if stance_side == LEFT else -1.0
    phi = 0.0 if stance_side == LEFT else math.pi
    x0 = float(stance_cop[0])

    def com(t):
        return com_transverse(t - t_apex, models, phi, x0, y_center)

    points = {}
    feet = {stance_side: tuple(map(float, stance_cop))}
    other = RIGHT if stance_side == LEFT else LEFT
    # feet abreast at the apex
    feet[other] = (feet[stance_side][0], feet[stance_side][1] - sign * models.d_SW)
    side, swing = stance_side, other
    for k in range(2):
        t_f = t_apex + 2 * k * q
        label = "L" if side == LEFT else "R"
        points[f"{label}_Fvp"] = ViaPoint(f"{label}_Fvp", t_f, com(t_f),
                                          feet[LEFT], feet[RIGHT])
        t_s = t_f + q
        c = com(t_s)
        stance = feet[side]
        dx = c[0] - stance[0]
        slope = (c[1] - stance[1]) / dx if dx != 0.0 else math.inf
        feet[swing] = swing_target(stance, models.d_SW, slope, swing)
        points[f"{label}_Svp"] = ViaPoint(f"{label}_Svp", t_s, c, feet[LEFT], feet[RIGHT])
        # next apex: the trailing foot is projected abreast of the new stance
        new_stance = feet[swing]
        s2 = 1.0 if swing == LEFT else -1.0
        feet[side] = (new_stance[0], new_stance[1] - s2 * models.d_SW)
        side, swing = swing, side
    return ViaPointSet(points["L_Fvp"], points["L_Svp"], points["R_Fvp"], points["R_Svp"])
