"""Recursive straight-walking planner.

``plan_walk`` derives the initial gait phase and the speed models from the
request, then plans one landing at a time: via points, ankle event, swing
target and support hand-off. The resulting continuous plan is sampled on a
fixed grid and every sample is annotated with the stability metrics.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np
from scipy.optimize import brentq

from . import ankle as ank
from .bos import bos_contains, bos_region
from .com import LEFT, RIGHT, GaitPhase, ViaPoint, com_transverse, com_vertical, phase_at
from .energy import (com_velocity, default_work_budget, energy_rate_check, energy_state,
                     lyapunov_margin, mos_height, static_capture)
from .errors import InvalidInputError, InvalidPostureError, PlanningError, SaddleWalkError
from .feet import DEFAULT_CLEARANCE, swing_target, swing_trajectory
from .metrics import measured_half_step, ml_stability, step_stability
from .params import (MAX_HALF_STEP_COEFF, AnthroProfile, SpeedModels, speed_models,
                     step_bounds)

DEFAULT_DT = 0.080
MAX_SPEED = 3.0
MAX_HS_ANGLE = math.radians(30.0)
STAGGER_TOL = 0.05  # m, tolerance when matching the initial feet to a via-point posture
HANDOFF_SCAN = 241
DENSE_DT = 0.002


def _other(side: str) -> str:
    return RIGHT if side == LEFT else LEFT


@dataclass(frozen=True)
class GaitRequest:
    v_des: float
    max_theta_HS: float
    n_steps: int
    body_height: float
    mass: float
    dt: float = DEFAULT_DT
    cop_left: tuple[float, float] | None = None
    cop_right: tuple[float, float] | None = None
    first_support: str = LEFT
    swing_clearance: float = DEFAULT_CLEARANCE
    w_budget: float | None = None
    d_h: float = 0.1
    max_step_coeff: float = MAX_HALF_STEP_COEFF
    ankle_strategies: bool = True

    def __post_init__(self):
        if not 0.0 < self.v_des < MAX_SPEED:
            raise InvalidInputError(f"v_des must lie in (0, {MAX_SPEED}) m/s, got {self.v_des}")
        if not 0.0 < self.max_theta_HS <= MAX_HS_ANGLE + 1e-12:
            raise InvalidInputError(
                f"heel-strike angle must lie in (0, 30] deg, got {math.degrees(self.max_theta_HS)}")
        if int(self.n_steps) != self.n_steps or self.n_steps < 1:
            raise InvalidInputError(f"n_steps must be a positive integer, got {self.n_steps}")
        if not self.dt > 0:
            raise InvalidInputError(f"dt must be positive, got {self.dt}")
        if self.first_support not in (LEFT, RIGHT):
            raise InvalidInputError(f"first_support must be left or right, got {self.first_support!r}")
        if (self.cop_left is None) != (self.cop_right is None):
            raise InvalidInputError("give both initial CoPs or neither")
        if self.swing_clearance < 0:
            raise InvalidInputError("swing clearance must be non-negative")

    @property
    def profile(self) -> AnthroProfile:
        return AnthroProfile.from_height(self.body_height, self.mass, self.d_h)

    @property
    def work_budget(self) -> float:
        return default_work_budget(self.mass) if self.w_budget is None else self.w_budget


class InitialState(NamedTuple):
    phi0: float
    omega_n: float
    models: SpeedModels
    cop_left: tuple[float, float]
    cop_right: tuple[float, float]
    com_offset: tuple[float, float]


def derive_initial_state(req: GaitRequest) -> InitialState:
    """Initial gait phase from the feet posture.

    Feet abreast start at a foot via point (phase 0 on left support, pi on
    right). Feet staggered by one step length start at the saddle via point
    of that double support (pi/2 with the right foot ahead, 3pi/2 with the
    left ahead). Any other posture is rejected.
    """
    profile = req.profile
    models = speed_models(req.v_des, profile, req.max_step_coeff)
    if req.cop_left is None:
        half_w = 0.5 * models.d_SW
        cl, cr = (0.0, half_w), (0.0, -half_w)
    else:
        cl = (float(req.cop_left[0]), float(req.cop_left[1]))
        cr = (float(req.cop_right[0]), float(req.cop_right[1]))
    if not cl[1] > cr[1]:
        raise InvalidPostureError(
            f"left CoP {cl} must lie to the left (+y) of the right CoP {cr}")
    y_mid = 0.5 * (cl[1] + cr[1])
    lead = cl[0] - cr[0]
    if abs(lead) <= STAGGER_TOL:
        if req.first_support == LEFT:
            return InitialState(0.0, profile.omega_n, models, cl, cr, (cl[0], y_mid))
        return InitialState(math.pi, profile.omega_n, models, cl, cr, (cr[0], y_mid))
    x_mid = 0.5 * (cl[0] + cr[0])
    if abs(lead - models.d_SL) <= STAGGER_TOL:
        return InitialState(1.5 * math.pi, profile.omega_n, models, cl, cr, (x_mid, y_mid))
    if abs(lead + models.d_SL) <= STAGGER_TOL:
        return InitialState(0.5 * math.pi, profile.omega_n, models, cl, cr, (x_mid, y_mid))
    raise InvalidPostureError(
        f"feet stagger {lead:+.3f} m matches neither an abreast posture nor a "
        f"step of {models.d_SL:.3f} m; the CoM projection falls outside the stride window")


@dataclass(frozen=True)
class StepPlan:
    """One planned landing."""

    index: int
    stance_side: str
    stance_cop: tuple[float, float]
    swing_side: str
    lift_cop: tuple[float, float]
    target: tuple[float, float]
    m_slope: float
    t_apex: float
    t_saddle: float
    t_lift: float
    t_land: float
    t_handoff: float
    event: ank.AnkleEvent
    z_handoff_trailing: float
    z_handoff_leading: float


@dataclass(frozen=True)
class PlanSample:
    t: float
    com: tuple[float, float, float]
    cop_left: tuple[float, float]
    cop_right: tuple[float, float]
    phase: GaitPhase
    support: str
    leg_length: float
    theta_TO: float
    theta_HS: float
    S_SL_Pend: float
    S_SL_Jump: float
    S_SW: float
    in_bos: bool
    in_ebos: bool
    U: float
    K: float
    capture: bool
    capture_ebos: bool
    lyapunov_margin: float
    edot_ok: bool
    velocity_one_sided: bool
    swing_foot: tuple[float, float, float] | None = None


@dataclass
class StabilityReport:
    n_samples: int
    min_S_SL_Pend: float
    min_S_SL_Jump: float
    min_S_SW: float
    bos_fraction: float
    ebos_fraction: float
    bos_exits_outside_transitions: int
    ebos_via_points_ok: bool
    capture_fraction: float
    capture_ebos_fraction: float
    min_lyapunov_margin: float
    edot_violations: int
    dz_target: float
    dz_achieved: float
    dz_achieved_dense: float
    max_handoff_jump: float
    planning_time_s: float = 0.0

    def as_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass
class TrajectoryLog:
    request: GaitRequest
    initial: InitialState
    duration: float
    steps: list[StepPlan]
    via_points: list[ViaPoint]
    samples: list[PlanSample] = field(default_factory=list)
    report: StabilityReport | None = None

    def column(self, name: str) -> np.ndarray:
        return np.array([getattr(s, name) for s in self.samples])

    def com_array(self) -> np.ndarray:
        return np.array([s.com for s in self.samples])


class _Walk:
    """Continuous-time plan assembled step by step."""

    def __init__(self, req: GaitRequest, init: InitialState):
        self.req = req
        self.init = init
        self.profile = req.profile
        self.models = init.models
        self.steps: list[StepPlan] = []
        self.via: list[ViaPoint] = []
        m = self.models
        self.quarter = m.quarter_duration
        self.duration = req.n_steps / m.omega_0

    def com_xy(self, t: float) -> tuple[float, float]:
        return com_transverse(t, self.models, self.init.phi0, *self.init.com_offset)

    def _leg(self, t, side, events) -> float:
        return ank.pendulum_length(t, side, [e for e in events if e is not None], self.profile)

    def _height(self, t, cop, side, events) -> float:
        xy = self.com_xy(t)
        h = self._leg(t, side, events)
        d2 = (xy[0] - cop[0]) ** 2 + (xy[1] - cop[1]) ** 2
        return math.sqrt(h * h - d2) if d2 < h * h else math.nan

    # -- planning -----------------------------------------------------------

    def plan(self):
        req, m = self.req, self.models
        phi0 = self.init.phi0
        feet = {LEFT: self.init.cop_left, RIGHT: self.init.cop_right}
        at_saddle = phi0 in (0.5 * math.pi, 1.5 * math.pi)
        if at_saddle:
            stance = LEFT if phi0 == 1.5 * math.pi else RIGHT
            first_saddle = 2.0 * self.quarter
            self.via.append(ViaPoint(("R" if stance == LEFT else "L") + "_Svp", 0.0,
                                     self.com_xy(0.0), feet[LEFT], feet[RIGHT]))
        else:
            stance = LEFT if phi0 == 0.0 else RIGHT
            first_saddle = self.quarter
        landing_event = None
        t_lift = 0.0
        for k in range(req.n_steps):
            t_sw = first_saddle + 2.0 * k * self.quarter
            try:
                step = self._plan_step(k, stance, feet, t_sw, t_lift, landing_event)
            except SaddleWalkError as exc:
                raise PlanningError(k, t_sw, exc) from exc
            self.steps.append(step)
            feet[step.swing_side] = step.target
            landing_event = step.event
            t_lift = step.t_handoff
            stance = step.swing_side
        # closing foot via point: trailing foot projected abreast
        last = self.steps[-1]
        t_end = last.t_saddle + self.quarter
        sign = 1.0 if last.stance_side == LEFT else -1.0
        ab = (last.target[0], last.target[1] + sign * m.d_SW)
        posture = {last.swing_side: last.target, last.stance_side: ab}
        self.via.append(ViaPoint(("L" if last.swing_side == LEFT else "R") + "_Fvp", t_end,
                                 self.com_xy(t_end), posture[LEFT], posture[RIGHT]))

    def _plan_step(self, k, stance, feet, t_sw, t_lift, landing_event) -> StepPlan:
        req, m, profile = self.req, self.models, self.profile
        swing = _other(stance)
        s_cop = feet[stance]
        t_apex = t_sw - self.quarter
        c = self.com_xy(t_sw)
        dx = c[0] - s_cop[0]
        slope = (c[1] - s_cop[1]) / dx if dx != 0.0 else math.inf
        target = swing_target(s_cop, m.d_SW, slope, swing)
        if req.ankle_strategies:
            ev = ank.ankle_event(m, profile, t_apex, self.com_xy, s_cop,
                                 req.max_theta_HS, trailing_side=stance)
        else:
            ev = ank.rigid_event(t_sw, profile.l_p, trailing_side=stance)

        def z_trailing(t):
            return self._height(t, s_cop, stance, (landing_event, ev))

        def z_leading(t):
            return self._height(t, target, swing, (ev,))

        t_hand = self._handoff(z_trailing, z_leading, ev, t_apex, t_lift, t_sw)
        t_land = min(ev.t_HS, t_hand)
        if t_apex >= 0.0 or k > 0:
            sign = 1.0 if stance == LEFT else -1.0
            ab = (s_cop[0], s_cop[1] - sign * m.d_SW)
            post = {stance: s_cop, swing: ab}
            self.via.append(ViaPoint(("L" if stance == LEFT else "R") + "_Fvp", t_apex,
                                     self.com_xy(t_apex), post[LEFT], post[RIGHT]))
        post = {stance: s_cop, swing: target}
        self.via.append(ViaPoint(("L" if stance == LEFT else "R") + "_Svp", t_sw, c,
                                 post[LEFT], post[RIGHT]))
        return StepPlan(
            index=k, stance_side=stance, stance_cop=s_cop, swing_side=swing,
            lift_cop=feet[swing], target=target, m_slope=slope, t_apex=t_apex,
            t_saddle=t_sw, t_lift=t_lift, t_land=t_land, t_handoff=t_hand, event=ev,
            z_handoff_trailing=z_trailing(t_hand), z_handoff_leading=z_leading(t_hand),
        )

    def _handoff(self, z_tr, z_ld, ev, t_apex, t_lift, t_sw) -> float:
        """Instant where the landing leg holds the CoM as high as the trailing one.

        Support moves to the leading leg where the two pendulum heights cross,
        so the CoM height is continuous through the exchange.
        """
        lo = max(ev.window[0], t_apex, t_lift + 1e-3)
        hi = min(ev.window[1], t_sw + self.quarter)
        ts = np.linspace(lo, hi, HANDOFF_SCAN)
        f = np.array([z_tr(t) - z_ld(t) for t in ts])
        best = None
        for i in range(len(ts) - 1):
            a, b = f[i], f[i + 1]
            if not (np.isfinite(a) and np.isfinite(b)):
                continue
            if a >= 0.0 > b or (a == 0.0):
                mid = 0.5 * (ts[i] + ts[i + 1])
                if best is None or abs(mid - ev.t_HS) < abs(best[0] - ev.t_HS):
                    best = (mid, i)
        if best is None:
            raise SaddleWalkError(
                f"no continuous support hand-off between t={lo:.4f} and t={hi:.4f} s")
        i = best[1]
        if f[i] == 0.0:
            return float(ts[i])
        return float(brentq(lambda t: z_tr(t) - z_ld(t), ts[i], ts[i + 1], xtol=1e-14))

    # -- evaluation ---------------------------------------------------------

    def loaded(self, t: float):
        """(side, cop, leg length, current step index) of the loaded foot at ``t``."""
        prev_event = None
        for step in self.steps:
            if t < step.t_handoff:
                h = self._leg(t, step.stance_side, (prev_event, step.event))
                return step.stance_side, step.stance_cop, h, step.index
            prev_event = step.event
        last = self.steps[-1]
        h = self._leg(t, last.swing_side, (last.event,))
        return last.swing_side, last.target, h, last.index

    def feet_at(self, t: float):
        """Horizontal CoP of both feet and the 3D swing foot, if one is airborne."""
        pos = {LEFT: self.init.cop_left, RIGHT: self.init.cop_right}
        swing3 = None
        for step in self.steps:
            if t < step.t_lift:
                break
            if t < step.t_land:
                p = swing_trajectory(t, (*step.lift_cop, 0.0), (*step.target, 0.0),
                                     step.t_lift, step.t_land, self.req.swing_clearance)
                pos[step.swing_side] = (float(p[0]), float(p[1]))
                swing3 = (float(p[0]), float(p[1]), float(p[2]))
                break
            pos[step.swing_side] = step.target
        return pos[LEFT], pos[RIGHT], swing3

    def z_at(self, t: float) -> float:
        side, cop, h, _ = self.loaded(t)
        return com_vertical(t, self.com_xy(t), cop, h)

    def angles_at(self, t: float) -> tuple[float, float]:
        ev = min((s.event for s in self.steps), key=lambda e: abs(t - e.t_HS))
        return ank.ankle_angles(t, ev, truncate=True)

    def expected_posture(self, t: float):
        for vp in self.via:
            if vp.t >= t - 1e-12:
                return vp.cop_left, vp.cop_right
        return self.via[-1].cop_left, self.via[-1].cop_right

    def in_transition(self, t: float) -> bool:
        return any(abs(t - s.t_saddle) <= 0.5 * self.quarter for s in self.steps)


def plan_walk(req: GaitRequest) -> TrajectoryLog:
    started = time.perf_counter()
    init = derive_initial_state(req)
    walk = _Walk(req, init)
    walk.plan()
    m, profile = walk.models, walk.profile
    bounds = step_bounds(req.v_des, profile, req.max_step_coeff)

    n = int(math.floor(walk.duration / req.dt + 1e-9)) + 1
    ts = np.arange(n) * req.dt
    rows = []
    for t in ts:
        t = float(t)
        side, cop, h, k = walk.loaded(t)
        xy = walk.com_xy(t)
        try:
            z = com_vertical(t, xy, cop, h)
        except SaddleWalkError as exc:
            raise PlanningError(k, t, exc) from exc
        cl, cr, swing3 = walk.feet_at(t)
        rows.append((t, xy, z, side, cop, h, cl, cr, swing3))

    com = np.array([(r[1][0], r[1][1], r[2]) for r in rows])
    M = measured_half_step(ts, com[:, 0], req.v_des)
    s_pend, s_jump = step_stability(M, req.v_des, m.d_SL_half, bounds)
    s_sw = ml_stability(com[:, 1] - init.com_offset[1], req.v_des, m.d_SW)
    vel, one_sided = com_velocity(ts, com)
    speed = np.linalg.norm(vel, axis=1)
    w = req.work_budget

    states, ebos_states, samples = [], [], []
    in_bos, in_ebos = [], []
    for i, (t, xy, z, side, cop, h, cl, cr, swing3) in enumerate(rows):
        region = bos_region(cl, cr, profile.d_h)
        e_region = bos_region(*walk.expected_posture(t), profile.d_h)
        st = energy_state(z, speed[i], req.mass, w, mos_height(xy, cop, h, region),
                          req.v_des)
        est = energy_state(z, speed[i], req.mass, w, mos_height(xy, cop, h, e_region),
                           req.v_des)
        states.append(st)
        ebos_states.append(est)
        in_bos.append(bos_contains(xy, region))
        in_ebos.append(bos_contains(xy, e_region))
    energy = np.array([s.U + s.K for s in states])
    edot_ok = energy_rate_check(energy, req.dt, work_rate=w / m.step_duration)

    for i, (t, xy, z, side, cop, h, cl, cr, swing3) in enumerate(rows):
        th_to, th_hs = walk.angles_at(t)
        margin = math.nan if i == 0 else lyapunov_margin(states[i - 1], states[i], w)
        samples.append(PlanSample(
            t=t, com=(xy[0], xy[1], z), cop_left=cl, cop_right=cr,
            phase=phase_at(t, init.phi0, m.omega_0), support=side, leg_length=h,
            theta_TO=th_to, theta_HS=th_hs,
            S_SL_Pend=float(s_pend[i]), S_SL_Jump=float(s_jump[i]), S_SW=float(s_sw[i]),
            in_bos=in_bos[i], in_ebos=in_ebos[i], U=states[i].U, K=states[i].K,
            capture=static_capture(states[i]), capture_ebos=static_capture(ebos_states[i]),
            lyapunov_margin=margin, edot_ok=bool(edot_ok[i]),
            velocity_one_sided=bool(one_sided[i]), swing_foot=swing3,
        ))

    log = TrajectoryLog(req, init, walk.duration, walk.steps, walk.via, samples)
    log.report = _report(walk, log, bounds)
    log.report.planning_time_s = time.perf_counter() - started
    return log


def _report(walk: _Walk, log: TrajectoryLog, bounds) -> StabilityReport:
    req = log.request
    s = log.samples
    z = np.array([x.com[2] for x in s])
    dense_t = np.linspace(0.0, walk.duration, int(walk.duration / DENSE_DT) + 1)
    dense_z = np.array([walk.z_at(float(t)) for t in dense_t])
    exits = [x.t for x in s if not x.in_bos]
    via_ok = all(bos_contains(vp.position, bos_region(vp.cop_left, vp.cop_right, req.d_h))
                 for vp in walk.via)
    margins = [x.lyapunov_margin for x in s[1:]]
    return StabilityReport(
        n_samples=len(s),
        min_S_SL_Pend=min(x.S_SL_Pend for x in s),
        min_S_SL_Jump=min(x.S_SL_Jump for x in s),
        min_S_SW=min(x.S_SW for x in s),
        bos_fraction=sum(x.in_bos for x in s) / len(s),
        ebos_fraction=sum(x.in_ebos for x in s) / len(s),
        bos_exits_outside_transitions=sum(not walk.in_transition(t) for t in exits),
        ebos_via_points_ok=via_ok,
        capture_fraction=sum(x.capture for x in s) / len(s),
        capture_ebos_fraction=sum(x.capture_ebos for x in s) / len(s),
        min_lyapunov_margin=min(margins) if margins else math.nan,
        edot_violations=sum(not x.edot_ok for x in s),
        dz_target=walk.models.dZ_CoM,
        dz_achieved=float(z.max() - z.min()),
        dz_achieved_dense=float(dense_z.max() - dense_z.min()),
        max_handoff_jump=max(abs(st.z_handoff_trailing - st.z_handoff_leading)
                             for st in walk.steps),
    )
