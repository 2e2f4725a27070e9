"""Speed-parameterized gait models and the XCoM step window.

All regressions take the desired walking speed in m/s and return metres.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidInputError, NoStableStepError

GRAVITY = 9.81
PENDULUM_RATIO = 0.57  # leg pendulum length / body height
DEFAULT_PIVOT_DISTANCE = 0.1  # CoP to heel/toe pivot, m
MAX_HALF_STEP_COEFF = 0.4742  # d_SL/2 max = coeff * l_p

WIDTH_SLOW, WIDTH_FAST = 0.22, 0.10
WIDTH_SPEED_LO, WIDTH_SPEED_HI = 0.6, 1.1
WIDTH_SLOPE, WIDTH_INTERCEPT = -0.2128, 0.3456
HALF_STEP_SLOPE, HALF_STEP_INTERCEPT = 0.1802, 0.1351
VERTICAL_SLOPE, VERTICAL_INTERCEPT = 0.02656, 0.002575


def _check_speed(v_des: float) -> None:
    if not (v_des > 0.0) or not math.isfinite(v_des):
        raise InvalidInputError(f"walking speed must be positive, got {v_des!r}")


@dataclass(frozen=True)
class AnthroProfile:
    """Fixed biped geometry.

    Build it with :meth:`from_height` unless you need a non-standard leg.
    """

    body_height: float
    mass: float
    l_p: float
    d_h: float = DEFAULT_PIVOT_DISTANCE

    def __post_init__(self):
        if not self.body_height > 0:
            raise InvalidInputError(f"body height must be positive, got {self.body_height}")
        if not self.mass > 0:
            raise InvalidInputError(f"mass must be positive, got {self.mass}")
        if not self.l_p > 0:
            raise InvalidInputError(f"pendulum length must be positive, got {self.l_p}")
        if not self.d_h > 0:
            raise InvalidInputError(f"pivot distance must be positive, got {self.d_h}")

    @classmethod
    def from_height(cls, body_height: float, mass: float,
                    d_h: float = DEFAULT_PIVOT_DISTANCE) -> "AnthroProfile":
        return cls(body_height, mass, PENDULUM_RATIO * body_height, d_h)

    @property
    def omega_n(self) -> float:
        return math.sqrt(GRAVITY / self.l_p)


@dataclass(frozen=True)
class SpeedModels:
    v_des: float
    d_SW: float
    d_SL_half: float
    dZ_CoM: float

    @property
    def d_SL(self) -> float:
        return 2.0 * self.d_SL_half

    @property
    def omega_0(self) -> float:
        """Cadence in steps per second."""
        return self.v_des / self.d_SL

    @property
    def A_y(self) -> float:
        """Mediolateral CoM amplitude; numerically d_SW / (2 pi v)."""
        return self.d_SW / (2.0 * math.pi * self.omega_0 * self.d_SL)

    @property
    def step_duration(self) -> float:
        return 1.0 / self.omega_0

    @property
    def quarter_duration(self) -> float:
        """Time between consecutive via points."""
        return 0.5 / self.omega_0


def step_width(v_des: float) -> float:
    _check_speed(v_des)
    if v_des < WIDTH_SPEED_LO:
        return WIDTH_SLOW
    if v_des > WIDTH_SPEED_HI:
        return WIDTH_FAST
    return WIDTH_SLOPE * v_des + WIDTH_INTERCEPT


def step_length_half(v_des: float) -> float:
    _check_speed(v_des)
    return HALF_STEP_SLOPE * v_des + HALF_STEP_INTERCEPT


def vertical_amplitude(v_des: float) -> float:
    """Target peak-to-peak vertical CoM excursion."""
    _check_speed(v_des)
    return VERTICAL_SLOPE * v_des + VERTICAL_INTERCEPT


def step_bounds(v_des: float, profile: AnthroProfile,
                max_coeff: float = MAX_HALF_STEP_COEFF) -> tuple[float, float]:
    """Admissible half-step window ``(v / 2 omega_n, max_coeff * l_p)``.

    Raises
    ------
    NoStableStepError
        When the XCoM lower bound reaches the reach limit (around 3 m/s for
        a 1.79 m subject).
    """
    _check_speed(v_des)
    lower = v_des / (2.0 * profile.omega_n)
    upper = max_coeff * profile.l_p
    if lower >= upper:
        raise NoStableStepError(
            f"no stable walking step exists at {v_des} m/s: "
            f"XCoM minimum {lower:.5f} m >= reach limit {upper:.5f} m"
        )
    return lower, upper


def speed_models(v_des: float, profile: AnthroProfile,
                 max_coeff: float = MAX_HALF_STEP_COEFF) -> SpeedModels:
    step_bounds(v_des, profile, max_coeff)
    return SpeedModels(
        v_des=v_des,
        d_SW=step_width(v_des),
        d_SL_half=step_length_half(v_des),
        dZ_CoM=vertical_amplitude(v_des),
    )
