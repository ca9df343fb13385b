import csv
import io
import json
import math
from dataclasses import replace

import numpy as np
import pytest

from sirdelay.analytics import (
    CONVERGED,
    DAMPED,
    DIVERGED,
    SUSTAINED,
    UNCLASSIFIED,
    classify,
    sweep,
    sweep_to_csv,
    sweep_to_json,
)
from sirdelay.equilibria import all_equilibria
from sirdelay.integrator import ConstantHistory, Trajectory, integrate
from sirdelay.model import State, eval_rhs
from sirdelay.presets import load_preset


def synthetic_trajectory(fn, dfn, horizon=60.0, h=0.02):
    """Trajectory with y(t) = fn(t), x and z constant at 1."""
    n = int(round(horizon / h))
    times = np.arange(n + 1) * h
    ys = np.array([fn(t) for t in times])
    dys = np.array([dfn(t) for t in times])
    states = np.column_stack([np.ones_like(times), ys, np.ones_like(times)])
    derivs = np.column_stack([np.zeros_like(times), dys, np.zeros_like(times)])
    return Trajectory(times=times, states=states, derivatives=derivs,
                      step=h, tau=0.0, delta=0.0, model_hash="synthetic")


def test_horizon_precondition():
    traj = synthetic_trajectory(lambda t: 1.0, lambda t: 0.0, horizon=20.0)
    with pytest.raises(ValueError):
        classify(traj)
    short = replace(traj, tau=8.0)
    with pytest.raises(ValueError):
        classify(replace(synthetic_trajectory(lambda t: 1.0, lambda t: 0.0, horizon=60.0),
                         tau=8.0))


def test_converged_on_real_model():
    cfg = load_preset("ex5_1")
    traj = integrate(cfg.model, cfg.history, horizon=100.0)
    eq = [e for e in all_equilibria(cfg.model) if e.kind == "endemic"][0]
    cls = classify(traj, candidate=eq)
    assert cls.kind == CONVERGED
    assert cls.max_deviation < 1e-2 * (1.0 + 6.0)
    # a converged tail really is a steady state of the dynamics
    final = traj.final_state()
    res = eval_rhs(cfg.model, final, final.x, final.y)
    assert max(abs(v) for v in res) < 10.0 * 1e-2 * (1.0 + 6.0)


def test_converged_exact_equilibrium():
    cfg = load_preset("ex5_3")
    eq = [e for e in all_equilibria(cfg.model) if e.kind == "endemic"][0]
    traj = integrate(cfg.model, ConstantHistory(eq.state), horizon=60.0)
    cls = classify(traj, candidate=eq)
    assert cls.kind == CONVERGED
    assert cls.max_deviation < 1e-8


def test_damped_oscillation_synthetic():
    fn = lambda t: 2.0 + math.exp(-0.05 * t) * math.cos(1.3 * t)
    dfn = lambda t: (-0.05 * math.exp(-0.05 * t) * math.cos(1.3 * t)
                     - 1.3 * math.exp(-0.05 * t) * math.sin(1.3 * t))
    cls = classify(synthetic_trajectory(fn, dfn))
    assert cls.kind == DAMPED
    assert cls.decay_ratio < 0.9


def test_sustained_oscillation_synthetic():
    fn = lambda t: 2.0 + 0.8 * math.cos(1.3 * t)
    dfn = lambda t: -0.8 * 1.3 * math.sin(1.3 * t)
    cls = classify(synthetic_trajectory(fn, dfn))
    assert cls.kind == SUSTAINED
    assert cls.period == pytest.approx(2.0 * math.pi / 1.3, rel=0.02)
    assert cls.amplitude == pytest.approx(0.8, rel=0.1)


def test_diverged_synthetic():
    fn = lambda t: 1e3 * math.exp(0.25 * t) * (2.0 + math.cos(1.3 * t))
    dfn = lambda t: (0.25 * fn(t)
                     - 1e3 * 1.3 * math.exp(0.25 * t) * math.sin(1.3 * t))
    cls = classify(synthetic_trajectory(fn, dfn))
    assert cls.kind == DIVERGED


def test_unclassified_when_flat_but_off_target():
    fn = lambda t: 3.0
    dfn = lambda t: 0.0
    cls = classify(synthetic_trajectory(fn, dfn), candidate=State(0.0, 0.0, 0.0))
    assert cls.kind == UNCLASSIFIED


def test_sustained_period_invariant_under_horizon_doubling():
    cfg = load_preset("ex5_3")
    model = replace(cfg.model, params=cfg.model.params.with_delays(7.0, 0.0))
    eq = [e for e in all_equilibria(cfg.model) if e.kind == "endemic"][0]
    p200 = classify(integrate(model, cfg.history, horizon=200.0), candidate=eq)
    p400 = classify(integrate(model, cfg.history, horizon=400.0), candidate=eq)
    assert p200.kind == SUSTAINED and p400.kind == SUSTAINED
    assert p400.period == pytest.approx(p200.period, rel=0.05)


def test_sweep_rows_and_error_capture():
    cfg = load_preset("ex5_1")
    grid = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0)]
    rows = sweep(cfg.model, grid, cfg.history, horizon=200.0)
    assert [(r.tau, r.delta) for r in rows] == grid
    assert rows[0].classification.kind == CONVERGED
    assert rows[1].classification.kind == CONVERGED
    # the destabilized configuration blows up under the fixed step
    assert rows[2].error is not None and rows[2].classification is None
    assert rows[2].max_re_lambda > 0.0
    # converged rows sit on the endemic point
    for row in rows[:2]:
        assert row.candidate.state.max_abs_diff(State(2.0, 6.0, 6.0)) < 1e-9
        assert row.max_re_lambda < 0.0


def test_sweep_empty_grid_rejected():
    cfg = load_preset("ex5_1")
    with pytest.raises(ValueError):
        sweep(cfg.model, [], cfg.history, horizon=100.0)


def test_sweep_csv_and_json_exports():
    cfg = load_preset("ex5_3")
    rows = sweep(cfg.model, [(0.0, 0.0), (7.0, 0.0)], cfg.history, horizon=200.0)
    buf = io.StringIO()
    sweep_to_csv(rows, buf)
    buf.seek(0)
    parsed = list(csv.reader(buf))
    assert parsed[0] == ["tau", "delta", "classification", "period", "amplitude", "max_re_lambda"]
    assert len(parsed) == 3
    assert parsed[1][2] == CONVERGED
    assert parsed[2][2] == SUSTAINED
    assert float(parsed[2][3]) > 0.0  # period column filled for oscillations

    doc = json.loads(sweep_to_json(rows))
    assert doc[0]["classification"] == CONVERGED
    assert doc[1]["classification"] == SUSTAINED
    assert doc[1]["max_re_lambda"] > 0.0
