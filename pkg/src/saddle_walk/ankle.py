"""Toe-off / heel-strike pendulum elongation.

Each step transition produces one :class:`AnkleEvent`: the trailing foot
rolls over its toe (TO) while the leading foot lands on its heel (HS), both
shaped by an erf sigmoid centred on the heel-strike instant.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import InvalidInputError, UnreachableElongationError
from .params import AnthroProfile, SpeedModels

SIGMOID_TAU = 0.11
WINDOW_TAUS = 3.0


@dataclass(frozen=True)
class AnkleEvent:
    t_HS: float
    max_theta_HS: float
    max_theta_TO: float
    l_p0: float
    trailing_side: str = "left"
    tau: float = SIGMOID_TAU

    @property
    def leading_side(self) -> str:
        return "right" if self.trailing_side == "left" else "left"

    @property
    def window(self) -> tuple[float, float]:
        half = WINDOW_TAUS * self.tau
        return self.t_HS - half, self.t_HS + half


def chord_elongation(theta: float, d_h: float) -> float:
    """Leg elongation from rolling the foot by ``theta`` about a pivot ``d_h`` away."""
    if not 0.0 <= theta <= math.pi:
        raise InvalidInputError(f"ankle angle must lie in [0, pi], got {theta}")
    return 2.0 * d_h * math.sin(0.5 * theta)


def ankle_event(models: SpeedModels, profile: AnthroProfile, t0: float,
                com_at: Callable[[float], tuple[float, float]], cop0,
                max_theta_HS: float, trailing_side: str = "left") -> AnkleEvent:
    """Schedule the heel strike of the step whose current phase starts at ``t0``.

    The toe-off amplitude is the angle whose chord supplies exactly the
    elongation ``l_p0 - l_p`` that puts the CoM at ``l_p - dZ_CoM`` when the
    heel strikes.
    """
    if not 0.0 < max_theta_HS < 0.5 * math.pi:
        raise InvalidInputError(f"heel-strike angle must lie in (0, pi/2), got {max_theta_HS}")
    d_h, l_p = profile.d_h, profile.l_p
    t_hs = (0.5 / models.omega_0
            - d_h * (1.0 - math.cos(max_theta_HS)) / models.v_des
            + t0)
    x, y = com_at(t_hs)
    target = l_p - models.dZ_CoM
    l_p0 = math.sqrt(target * target + (x - cop0[0]) ** 2 + (y - cop0[1]) ** 2)
    ratio = (l_p0 - l_p) / (2.0 * d_h)
    if ratio > 1.0:
        raise UnreachableElongationError(
            f"required elongation {l_p0 - l_p:.4f} m exceeds the foot chord limit "
            f"{2 * d_h:.4f} m")
    if ratio <= 0.0:
        # leg already long enough; toe-off adds nothing
        return AnkleEvent(t_hs, max_theta_HS, 0.0, l_p, trailing_side)
    return AnkleEvent(t_hs, max_theta_HS, 2.0 * math.asin(ratio), l_p0, trailing_side)


def rigid_event(t_HS: float, l_p: float, trailing_side: str = "left") -> AnkleEvent:
    """Placeholder event with both ankle strategies switched off."""
    return AnkleEvent(t_HS, 0.0, 0.0, l_p, trailing_side)


def ankle_angles(t: float, ev: AnkleEvent, truncate: bool = False) -> tuple[float, float]:
    """(theta_TO, theta_HS) at time ``t``.

    With ``truncate`` the erf is replaced by its asymptote outside the
    +-3 tau window, so one transition cannot leak into the next.
    """
    s = (t - ev.t_HS) / ev.tau
    if truncate:
        lo, hi = ev.window
        if t < lo:
            s = -math.inf
        elif t > hi:
            s = math.inf
    e = math.erf(s)
    theta_hs = -ev.max_theta_HS * e + ev.max_theta_HS
    theta_to = ev.max_theta_TO * e + ev.max_theta_TO
    return theta_to, theta_hs


def elongation(t: float, side: str, ev: AnkleEvent, d_h: float) -> float:
    """Chord contributed by ``ev`` to the leg on ``side`` (zero if not involved)."""
    if side not in (ev.trailing_side, ev.leading_side):
        return 0.0
    theta_to, theta_hs = ankle_angles(t, ev, truncate=True)
    theta = theta_to if side == ev.trailing_side else theta_hs
    return chord_elongation(theta, d_h)


def pendulum_length(t: float, side: str, events: AnkleEvent | Iterable[AnkleEvent],
                    profile: AnthroProfile) -> float:
    if isinstance(events, AnkleEvent):
        events = (events,)
    return profile.l_p + sum(elongation(t, side, ev, profile.d_h) for ev in events)
