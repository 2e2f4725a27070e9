"""Kinematic step-stability metrics."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateWindowError, InvalidInputError
from .params import step_length_half, step_width

MIN_WINDOW = 1e-9


@dataclass(frozen=True)
class StepMetrics:
    M_d_SL_half: float
    v_CoMp: float
    S_SL_Pend: float
    S_SL_Jump: float
    S_SW: float


def step_stability(M: float, v: float, desired_half: float,
                   bounds: tuple[float, float]) -> tuple[float, float]:
    """Normalized distance of the measured half-step from each window edge.

    Both values equal 1 when ``M`` equals the desired half-step; ``S_SL_Pend``
    reaches 0 at the XCoM minimum and ``S_SL_Jump`` at the reach limit.
    """
    if not v > 0:
        raise InvalidInputError(f"walking speed must be positive, got {v}")
    lower, upper = bounds
    den_p = desired_half - lower
    den_j = desired_half - upper
    if abs(den_p) < MIN_WINDOW or abs(den_j) < MIN_WINDOW:
        raise DegenerateWindowError(
            f"desired half-step {desired_half} coincides with a window bound {bounds}")
    return (M - lower) / den_p, (M - upper) / den_j


def ml_stability(y_com, v: float, d_SW: float | None = None):
    """1 - 2|y|/d_SW; negative once the CoM leaves the CoP-to-CoP band."""
    if not v > 0:
        raise InvalidInputError(f"walking speed must be positive, got {v}")
    if d_SW is None:
        d_SW = step_width(v)
    return 1.0 - 2.0 * np.abs(y_com) / d_SW


def measured_half_step(t, x, v: float | None = None) -> np.ndarray:
    """AP distance the CoM covered during the last quarter-phase.

    The quarter duration follows the cadence at the walking speed ``v``
    (estimated from ``x`` when omitted). Samples earlier than one quarter
    into the record are extrapolated at that speed.
    """
    t = np.asarray(t, dtype=float)
    x = np.asarray(x, dtype=float)
    if v is None:
        v = float(np.polyfit(t, x, 1)[0]) if len(t) > 1 else 0.0
    if not v > 0:
        raise InvalidInputError(f"walking speed must be positive, got {v}")
    quarter = step_length_half(v) / v
    t_back = t - quarter
    early = t_back < t[0]
    x_back = np.interp(t_back, t, x)
    x_back[early] = x[early] - v * quarter
    return x - x_back
