import csv
import io
import math

import numpy as np
import pytest

from sirdelay.equilibria import all_equilibria
from sirdelay.errors import IntegrationError
from sirdelay.integrator import (
    ConstantHistory,
    SampledHistory,
    default_step,
    dense_eval,
    integrate,
    trajectory_to_csv,
)
from sirdelay.model import ModelSpec, Params, State
from sirdelay.presets import PRESET_NAMES, load_preset
from sirdelay.responses import Linear, ResponseFn, Zero


def linear_reduction(tau=0.0, delta=0.0):
    """x' = 10 - 2x, y' = -y, z' = -z: closed-form exponentials."""
    return ModelSpec(
        params=Params(a=10.0, b=1.0, b1=1.0, c=1.0, d=1.0, d1=1.0, r=0.0,
                      alpha=1.0, tau=tau, delta=delta),
        f=Zero(), V=Linear(1.0), P=Zero(),
    )


def exact_linear(t, x0=8.0, y0=3.0, z0=4.0):
    # z feeds x through alpha*z: x' = 10 - 2x + z0*exp(-t)
    return (5.0 + z0 * math.exp(-t) + (x0 - 5.0 - z0) * math.exp(-2.0 * t),
            y0 * math.exp(-t),
            z0 * math.exp(-t))


def test_default_step():
    assert default_step(0.0, 0.0) == 0.01
    assert default_step(1.0, 0.0) == 0.01
    assert default_step(0.1, 0.0) == pytest.approx(0.005)
    assert default_step(0.1, 0.04) == pytest.approx(0.002)


def test_step_validation():
    model = load_preset("ex5_1").model  # tau = delta = 1
    hist = ConstantHistory(State(1.0, 1.0, 1.0))
    with pytest.raises(ValueError):
        integrate(model, hist, horizon=10.0, step=2.0)  # step > min delay
    with pytest.raises(ValueError):
        integrate(model, hist, horizon=-1.0)
    delay_free = linear_reduction()
    with pytest.raises(ValueError):
        integrate(delay_free, hist, horizon=10.0, step=0.5)  # > horizon/100


def test_history_span_checked():
    model = load_preset("ex5_1").model
    short = SampledHistory(times=(-0.5, 0.0),
                           states=(State(1, 1, 1), State(1, 1, 1)))
    with pytest.raises(ValueError):
        integrate(model, short, horizon=10.0)


def test_sampled_history_interpolation():
    h = SampledHistory(
        times=(-2.0, -1.0, 0.0),
        states=(State(0.0, 2.0, 4.0), State(1.0, 1.0, 2.0), State(3.0, 0.0, 0.0)),
    )
    assert h.value(-2.5).as_tuple() == (0.0, 2.0, 4.0)  # clamped left
    assert h.value(-1.5).as_tuple() == (0.5, 1.5, 3.0)
    assert h.value(-0.25).as_tuple() == (2.5, 0.25, 0.5)
    assert h.value(0.0).as_tuple() == (3.0, 0.0, 0.0)
    with pytest.raises(ValueError):
        SampledHistory(times=(0.0, -1.0), states=(State(1, 1, 1), State(1, 1, 1)))
    with pytest.raises(ValueError):
        SampledHistory(times=(-1.0, 0.0), states=(State(-1, 1, 1), State(1, 1, 1)))


def test_closed_form_accuracy_and_dense_midpoints():
    model = linear_reduction()
    traj = integrate(model, ConstantHistory(State(8.0, 3.0, 4.0)), horizon=20.0, step=0.01)
    for t in (0.0, 0.333, 1.7, 5.05, 12.345, 20.0):
        got = dense_eval(traj, t)
        want = exact_linear(t)
        assert max(abs(a - b) for a, b in zip(got.as_tuple(), want)) < 1e-8


def test_dense_eval_exact_at_mesh_points():
    model = load_preset("ex5_1").model
    traj = integrate(model, ConstantHistory(State(1.0, 1.0, 1.0)), horizon=5.0, step=0.01)
    for i in (0, 1, 57, len(traj.times) - 1):
        t = float(traj.times[i])
        got = dense_eval(traj, t)
        assert got.as_tuple() == tuple(traj.states[i])


def test_dense_eval_range_error():
    traj = integrate(linear_reduction(), ConstantHistory(State(8.0, 3.0, 4.0)),
                     horizon=10.0, step=0.1)
    with pytest.raises(ValueError):
        dense_eval(traj, -0.1)
    with pytest.raises(ValueError):
        dense_eval(traj, 10.1)


def test_fourth_order_convergence():
    model = linear_reduction()
    hist = ConstantHistory(State(8.0, 3.0, 4.0))
    errors = []
    for step in (0.1, 0.05, 0.025, 0.0125):
        traj = integrate(model, hist, horizon=20.0, step=step)
        err = 0.0
        for i, t in enumerate(traj.times):
            want = exact_linear(float(t))
            err = max(err, max(abs(traj.states[i, k] - want[k]) for k in range(3)))
        errors.append(err)
    for a, b in zip(errors, errors[1:]):
        assert 14.0 <= a / b <= 18.0


def test_equilibrium_start_is_fixed():
    model = load_preset("ex5_1").model
    eq = [e for e in all_equilibria(model) if e.kind == "endemic"][0]
    traj = integrate(model, ConstantHistory(eq.state), horizon=50.0)
    drift = float(np.max(np.abs(traj.states - np.array(eq.state.as_tuple()))))
    assert drift < 1e-10
    # dense output between mesh points stays on the equilibrium too
    for t in (0.0037, 1.2345, 49.9999):
        assert dense_eval(traj, t).max_abs_diff(eq.state) < 1e-10


def test_zero_delay_matches_reference_rk4():
    model = load_preset("ex5_3").model
    from dataclasses import replace
    model = replace(model, params=model.params.with_delays(0.0, 0.0))
    h = 0.02
    traj = integrate(model, ConstantHistory(State(1.0, 1.0, 1.0)), horizon=10.0, step=h)

    def rhs(x, y, z):
        return (10.0 - x * y - 4.0 * x + z, x * y - 2.0 * y, y - z)

    x, y, z = 1.0, 1.0, 1.0
    worst = 0.0
    for i in range(1, len(traj.times)):
        k1 = rhs(x, y, z)
        k2 = rhs(x + h / 2 * k1[0], y + h / 2 * k1[1], z + h / 2 * k1[2])
        k3 = rhs(x + h / 2 * k2[0], y + h / 2 * k2[1], z + h / 2 * k2[2])
        k4 = rhs(x + h * k3[0], y + h * k3[1], z + h * k3[2])
        x += h / 6 * (k1[0] + 2 * (k2[0] + k3[0]) + k4[0])
        y += h / 6 * (k1[1] + 2 * (k2[1] + k3[1]) + k4[1])
        z += h / 6 * (k1[2] + 2 * (k2[2] + k3[2]) + k4[2])
        worst = max(worst, abs(traj.states[i, 0] - x), abs(traj.states[i, 1] - y),
                    abs(traj.states[i, 2] - z))
    assert worst < 1e-8


def test_determinism():
    model = load_preset("ex5_3").model
    hist = ConstantHistory(State(1.0, 1.0, 1.0))
    a = integrate(model, hist, horizon=20.0)
    b = integrate(model, hist, horizon=20.0)
    assert a.states.tobytes() == b.states.tobytes()
    assert a.derivatives.tobytes() == b.derivatives.tobytes()
    assert a.model_hash == b.model_hash


@pytest.mark.parametrize("name", PRESET_NAMES)
def test_solutions_stay_nonnegative(name):
    cfg = load_preset(name)
    traj = integrate(cfg.model, cfg.history, horizon=50.0)
    assert float(np.min(traj.states)) >= -1e-9


def test_blow_up_raises_with_time():
    # (tau, delta) = (1, 1) destabilizes ex5_1; the growing oscillation
    # eventually overwhelms the fixed step
    from dataclasses import replace
    model = load_preset("ex5_1").model
    model = replace(model, params=model.params.with_delays(1.0, 1.0))
    with pytest.raises(IntegrationError) as exc:
        integrate(model, ConstantHistory(State(8.0, 5.0, 2.0)), horizon=100.0)
    assert exc.value.time is not None and exc.value.time > 0.0


class _ConstantDrain(ResponseFn):
    """Test-only response: constant unit vaccination pressure."""

    arity = 1

    def value(self, u):
        return 1.0

    def partial(self, index, u):
        return 0.0


def test_negativity_violation_detected():
    # constant drain c*V = 5 exceeds the inflow a = 1, so x crosses zero
    model = ModelSpec(
        params=Params(a=1.0, b=1.0, b1=1.0, c=5.0, d=1.0, d1=1.0, r=0.0, alpha=1.0),
        f=Zero(), V=_ConstantDrain(), P=Zero(),
    )
    with pytest.raises(IntegrationError) as exc:
        integrate(model, ConstantHistory(State(0.5, 0.0, 0.0)), horizon=10.0, step=0.05)
    assert "negativity" in str(exc.value)


def test_trajectory_csv_round_trip():
    traj = integrate(linear_reduction(), ConstantHistory(State(8.0, 3.0, 4.0)),
                     horizon=5.0, step=0.05)
    buf = io.StringIO()
    trajectory_to_csv(traj, buf, stride=0.5)
    buf.seek(0)
    rows = list(csv.reader(buf))
    assert rows[0] == ["t", "x", "y", "z"]
    assert len(rows) == 12  # header + 0.0 .. 5.0 by 0.5
    t, x, y, z = map(float, rows[4])
    assert t == 1.5
    want = exact_linear(1.5)
    assert abs(x - want[0]) < 1e-6 and abs(y - want[1]) < 1e-6


def test_uses_sampled_history_values():
    model = load_preset("ex5_1").model  # tau = delta = 1
    ramp = SampledHistory(
        times=(-1.0, 0.0),
        states=(State(4.0, 2.0, 1.0), State(1.0, 1.0, 1.0)),
    )
    flat = ConstantHistory(State(1.0, 1.0, 1.0))
    a = integrate(model, ramp, horizon=3.0)
    b = integrate(model, flat, horizon=3.0)
    # delayed lookups differ over [0, 1], so the paths must split early
    i = int(0.5 / a.step)
    assert abs(a.states[i, 1] - b.states[i, 1]) > 1e-4
