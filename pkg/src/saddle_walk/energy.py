"""Energy-based stability conditions on a sampled CoM trajectory."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bos import BosRegion, bos_boundary
from .errors import InsufficientDataError, InvalidInputError
from .params import GRAVITY

WORK_PER_KG = 0.5  # default active-work budget, J/kg per step


@dataclass(frozen=True)
class EnergyState:
    U: float
    K: float
    W: float = 0.0
    E_p: float = 0.0
    U_MoS: float | None = None
    K_des: float | None = None

    @property
    def E(self) -> float:
        return self.U + self.K + self.W + self.E_p


def default_work_budget(mass: float) -> float:
    return WORK_PER_KG * mass


def com_velocity(t, com) -> tuple[np.ndarray, np.ndarray]:
    """Central differences; the two end samples fall back to one-sided ones.

    Returns the (n, d) velocity and a mask flagging the one-sided samples.
    """
    t = np.asarray(t, dtype=float)
    com = np.asarray(com, dtype=float)
    if len(t) < 2:
        raise InsufficientDataError("need at least 2 samples to differentiate")
    vel = np.gradient(com, t, axis=0, edge_order=1)
    flags = np.zeros(len(t), dtype=bool)
    flags[[0, -1]] = True
    return vel, flags


def mos_height(com_xy, support_cop, leg_length: float, region: BosRegion,
               n: int = 72) -> float:
    """Straight-leg CoM height above the BoS border point nearest the CoM."""
    border = bos_boundary(region, n)
    d = np.hypot(border[:, 0] - com_xy[0], border[:, 1] - com_xy[1])
    p = border[int(np.argmin(d))]
    reach2 = (p[0] - support_cop[0]) ** 2 + (p[1] - support_cop[1]) ** 2
    return math.sqrt(max(leg_length * leg_length - reach2, 0.0))


def energy_state(z: float, speed: float, mass: float, w_budget: float = 0.0,
                 z_mos: float | None = None, v_des: float | None = None,
                 e_p: float = 0.0) -> EnergyState:
    if not mass > 0:
        raise InvalidInputError(f"mass must be positive, got {mass}")
    U = mass * GRAVITY * z
    K = 0.5 * mass * speed * speed
    return EnergyState(
        U=U, K=K, W=w_budget, E_p=e_p,
        U_MoS=None if z_mos is None else mass * GRAVITY * z_mos,
        K_des=None if v_des is None else 0.5 * mass * v_des * v_des,
    )


def static_capture(e: EnergyState) -> bool:
    """Can the available work stop the CoM before the margin of stability?"""
    if e.U_MoS is None:
        raise InvalidInputError("static capture needs U_MoS")
    return e.W >= e.U_MoS - e.U - e.K - e.E_p


def lyapunov_margin(a: EnergyState, b: EnergyState, w_c: float,
                    k_des: float | None = None) -> float:
    """Slack of the trajectory condition between samples ``a`` and ``b``.

    Non-negative means the segment is certified. ``k_des`` defaults to the
    end state's ``K_des``.
    """
    if k_des is None:
        k_des = b.K_des
    if k_des is None:
        raise InvalidInputError("lyapunov margin needs a desired kinetic energy")
    return w_c - (b.U - a.U + b.K - k_des)


def lyapunov_margins(states, w_c: float, k_des: float | None = None) -> np.ndarray:
    return np.array([lyapunov_margin(a, b, w_c, k_des)
                     for a, b in zip(states[:-1], states[1:])])


def energy_rate_check(e_series, dt: float, work_rate: float = 0.0,
                      tol: float = 1e-9) -> np.ndarray:
    """True where dE/dt minus the declared dissipation rate is <= 0.

    ``e_series`` is the passive energy (U + K + E_p); ``work_rate`` is the
    power the biped actively removes.
    """
    e = np.asarray(e_series, dtype=float)
    if len(e) < 3:
        raise InsufficientDataError(f"need at least 3 samples, got {len(e)}")
    if not dt > 0:
        raise InvalidInputError(f"dt must be positive, got {dt}")
    e_dot = np.gradient(e, dt, edge_order=1)
    return e_dot - work_rate <= tol
