import math

import numpy as np
import pytest

from saddle_walk import GaitRequest, plan_walk
from saddle_walk.errors import InsufficientDataError, InvalidInputError, MocapError
from saddle_walk.mocap import (AXES, MARKERS, MarkerFrame, extract_gait_parameters, fit_linear,
                               fit_trials, ingest_mocap, synthesize_frames, write_mocap_csv)


def _frame(**over):
    m = {name: np.zeros(3) for name in MARKERS}
    m.update({k: np.array(v, float) for k, v in over.items()})
    return MarkerFrame(0.0, m)


def test_com_of_symmetric_pelvis():
    f = _frame(L_ASI=(0.1, 0.1, 1), R_ASI=(0.1, -0.1, 1), L_PSI=(-0.1, 0.1, 1), R_PSI=(-0.1, -0.1, 1))
    np.testing.assert_allclose(f.com, (0, 0, 1), atol=1e-15)


def test_cop_midpoint():
    f = _frame(L_HEEL=(0, 0, 0), L_MET_MED=(0.2, 0.03, 0), L_MET_LAT=(0.2, -0.03, 0))
    np.testing.assert_allclose(f.cop("left"), (0.1, 0, 0), atol=1e-15)


def _header(skip=None):
    cols = ["t"] + [f"{m}_{a}" for m in MARKERS for a in AXES]
    return [c for c in cols if not (skip and c.startswith(skip))]


def test_missing_column_named(tmp_path):
    p = tmp_path / "m.csv"
    p.write_text(",".join(_header(skip="R_HEEL")) + "\n")
    with pytest.raises(MocapError, match="R_HEEL_x"):
        ingest_mocap(p)


def test_time_must_increase(tmp_path):
    p = tmp_path / "m.csv"
    row = ",".join(["0"] * (len(_header()) - 1))
    p.write_text(",".join(_header()) + f"\n0.1,{row}\n0.1,{row}\n")
    with pytest.raises(MocapError, match="line 3"):
        ingest_mocap(p)


def test_fit_exact_line():
    x = np.linspace(0.5, 1.8, 12)
    f = fit_linear(x, 0.1802 * x + 0.1351)
    assert f.slope == pytest.approx(0.1802, abs=1e-12)
    assert f.intercept == pytest.approx(0.1351, abs=1e-12)
    assert f.r_squared == pytest.approx(1.0, abs=1e-12)


def test_fit_constant_ys():
    f = fit_linear([1, 2, 3, 4], [2, 2, 2, 2])
    assert f.slope == 0.0 and f.r_squared == 0.0


def test_fit_noisy_slope():
    rng = np.random.default_rng(7)
    x = rng.uniform(-3, 3, 10_000)
    f = fit_linear(x, x + rng.normal(size=x.size))
    assert abs(f.slope - 1.0) < 0.05
    assert 0.0 <= f.r_squared <= 1.0


@pytest.mark.parametrize("xs, ys, err", [([1, 1, 1], [1, 2, 3], InvalidInputError),
                                         ([1, 2], [1, 2], InsufficientDataError)])
def test_fit_rejects(xs, ys, err):
    with pytest.raises(err):
        fit_linear(xs, ys)


@pytest.mark.parametrize("v", [0.7, 1.0, 1.6])
def test_planner_mocap_loop(tmp_path, v):
    log = plan_walk(GaitRequest(v, math.radians(10), 8, 1.79, 63.3))
    path = write_mocap_csv(synthesize_frames(log), tmp_path / "trial.csv")
    frames = ingest_mocap(path)
    np.testing.assert_allclose(frames[3].com, log.samples[3].com, atol=1e-8)
    p = extract_gait_parameters(frames)
    assert p.d_SL == pytest.approx(log.initial.models.d_SL, abs=1e-3)
    assert p.v == pytest.approx(v, abs=1e-6)


def test_fit_recovers_half_step_regression():
    params = []
    for v in (0.7, 1.0, 1.2, 1.6):
        log = plan_walk(GaitRequest(v, math.radians(10), 8, 1.79, 63.3))
        params.append(extract_gait_parameters(synthesize_frames(log)))
    fits = fit_trials(params)
    assert fits["d_SL_half"].slope == pytest.approx(0.1802, abs=1e-4)
    assert fits["d_SL_half"].intercept == pytest.approx(0.1351, abs=1e-4)
