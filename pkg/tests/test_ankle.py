import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from saddle_walk.ankle import (AnkleEvent, ankle_angles, ankle_event, chord_elongation,
                               pendulum_length)
from saddle_walk.com import com_transverse
from saddle_walk.errors import InvalidInputError, UnreachableElongationError
from saddle_walk.params import AnthroProfile, speed_models


def test_chord_examples():
    assert chord_elongation(0.0, 0.1) == 0.0
    assert chord_elongation(math.radians(10), 0.1) == pytest.approx(0.0174311, abs=1e-7)
    assert chord_elongation(math.radians(15), 0.1) == pytest.approx(0.0261052, abs=1e-7)
    with pytest.raises(InvalidInputError):
        chord_elongation(-0.1, 0.1)


@given(st.floats(0, math.pi - 1e-3), st.floats(1e-4, 0.1))
def test_chord_increasing(theta, step):
    hi = min(theta + step, math.pi)
    assert chord_elongation(hi, 0.1) > chord_elongation(theta, 0.1)


def _event_v1(profile, t0=0.0):
    m = speed_models(1.0, profile)
    # stance CoP under the start of the walk, CoM apex over it
    cop = (0.0, m.d_SW / 2)
    return m, cop, ankle_event(m, profile, t0, lambda t: com_transverse(t, m, 0.0, 0.0, 0.0),
                               cop, math.radians(10))


def test_heel_strike_time(profile):
    _, _, ev = _event_v1(profile)
    assert ev.t_HS == pytest.approx(0.31530 - 0.0015192, abs=1e-6)
    assert ev.t_HS == pytest.approx(0.31378, abs=1e-5)


def test_required_length_example(profile):
    # closure geometry: target height l_p - dZ with a CoM offset (0.3, 0.07)
    target = profile.l_p - 0.029135
    l_p0 = math.sqrt(target ** 2 + 0.3 ** 2 + 0.07 ** 2)
    assert l_p0 == pytest.approx(1.03794, abs=1e-5)
    theta = 2 * math.asin(0.01764 / (2 * profile.d_h))
    assert math.degrees(theta) == pytest.approx(10.12, abs=0.005)


def test_toe_off_closes_height(profile):
    m, cop, ev = _event_v1(profile)
    assert ev.l_p0 >= profile.l_p
    h = pendulum_length(ev.t_HS, ev.trailing_side, ev, profile)
    assert h == pytest.approx(ev.l_p0, abs=1e-12)
    x, y = com_transverse(ev.t_HS, m, 0.0)
    z = math.sqrt(h * h - (x - cop[0]) ** 2 - (y - cop[1]) ** 2)
    assert z == pytest.approx(profile.l_p - m.dZ_CoM, abs=1e-6)


def test_unreachable_elongation():
    tiny = AnthroProfile(1.79, 63.3, 1.0203, d_h=0.001)
    m = speed_models(1.0, tiny)
    with pytest.raises(UnreachableElongationError):
        ankle_event(m, tiny, 0.0, lambda t: com_transverse(t, m, 0.0), (0.0, 0.07),
                    math.radians(10))


def test_angle_profiles():
    ev = AnkleEvent(1.0, math.radians(10), math.radians(8), 1.03)
    to, hs = ankle_angles(1.0, ev)
    assert (to, hs) == (pytest.approx(ev.max_theta_TO), pytest.approx(ev.max_theta_HS))
    to, hs = ankle_angles(1.0 + 0.11, ev)
    assert hs == pytest.approx(0.15729921 * ev.max_theta_HS, abs=1e-9)
    assert ankle_angles(-50.0, ev)[0] == pytest.approx(0.0, abs=1e-15)
    assert ankle_angles(0.0, ev, truncate=True) == (0.0, 2 * ev.max_theta_HS)
    assert ankle_angles(2.0, ev, truncate=True) == (2 * ev.max_theta_TO, 0.0)


@given(st.floats(-2, 4))
def test_angles_mirror(t):
    ev = AnkleEvent(1.0, math.radians(12), math.radians(7), 1.03)
    to, hs = ankle_angles(t, ev)
    assert hs + to * ev.max_theta_HS / ev.max_theta_TO == pytest.approx(2 * ev.max_theta_HS, abs=1e-12)


def test_length_outside_window_is_rest_length(profile):
    ev = AnkleEvent(1.0, math.radians(10), math.radians(10), 1.04, trailing_side="left")
    assert pendulum_length(3.0, "left", ev, profile) == pytest.approx(
        profile.l_p + chord_elongation(math.radians(20), 0.1))
    assert pendulum_length(-3.0, "left", ev, profile) == profile.l_p
    assert pendulum_length(3.0, "right", ev, profile) == profile.l_p
    rigid = AnkleEvent(1.0, 0.0, 0.0, profile.l_p)
    for t in (0.0, 0.9, 1.0, 1.2):
        assert pendulum_length(t, "left", rigid, profile) == profile.l_p


def test_length_increments_bounded_per_sample(profile):
    ev = AnkleEvent(1.0, math.radians(15), math.radians(10), 1.04)
    dt = 0.08
    bound = chord_elongation(2 * ev.max_theta_TO, profile.d_h) * dt / ev.tau * 1.2
    ts = [0.6 + k * dt for k in range(10)]
    ls = [pendulum_length(t, "left", ev, profile) for t in ts]
    assert max(abs(b - a) for a, b in zip(ls, ls[1:])) < bound
