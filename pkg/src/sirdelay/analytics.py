"""Long-run trajectory classification and delay sweeps.

Classification reproduces the qualitative regimes the model exhibits:
convergence to an equilibrium, damped oscillation, sustained (periodic)
oscillation, or divergence.  Peak analysis runs on the infected
compartment y(t), whose oscillation is the signature of a delay-induced
stability switch.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, replace

import numpy as np

from .charroots import max_real_part
from .equilibria import Equilibrium, all_equilibria
from .errors import IntegrationError
from .integrator import HistorySpec, Trajectory, integrate
from .model import ModelSpec, State, jacobian_coeffs
from .stability import char_coeffs

__all__ = [
    "Classification",
    "classify",
    "SweepRow",
    "sweep",
    "sweep_to_csv",
    "sweep_to_json",
    "CONVERGED",
    "DAMPED",
    "SUSTAINED",
    "DIVERGED",
    "UNCLASSIFIED",
]

CONVERGED = "converged"
DAMPED = "damped_oscillation"
SUSTAINED = "sustained_oscillation"
DIVERGED = "diverged"
UNCLASSIFIED = "unclassified"

#: peak-amplitude ratio band separating damped from sustained oscillation
RATIO_BAND = (0.9, 1.1)
MIN_PEAKS = 3
DIVERGENCE_BOUND = 1e6


@dataclass(frozen=True)
class Classification:
    kind: str
    window: tuple  # (t_start, t_end) analyzed
    target: State | None = None
    max_deviation: float | None = None
    decay_ratio: float | None = None
    period: float | None = None
    amplitude: float | None = None

    def describe(self) -> str:
        if self.kind == CONVERGED:
            t = self.target
            return (f"converged to ({t.x:.6g}, {t.y:.6g}, {t.z:.6g}) "
                    f"max deviation {self.max_deviation:.3g}")
        if self.kind == DAMPED:
            return f"damped oscillation (peak ratio {self.decay_ratio:.3g})"
        if self.kind == SUSTAINED:
            return (f"sustained oscillation (period {self.period:.4g}, "
                    f"amplitude {self.amplitude:.4g})")
        return self.kind


def classify(
    traj: Trajectory,
    candidate: Equilibrium | State | None = None,
    tail_fraction: float = 0.5,
    tol_conv: float | None = None,
    ratio_band=RATIO_BAND,
    min_peaks: int = MIN_PEAKS,
    divergence_bound: float = DIVERGENCE_BOUND,
) -> Classification:
    """Classify the trailing portion of a trajectory.

    The analysis window is the last ``tail_fraction`` of the horizon.
    Order of tests: convergence to ``candidate`` (within tol_conv,
    defaulting to 1e-2 * (1 + ||candidate||)); then successive maxima of
    y(t) relative to the tail mean, with last/first amplitude ratio below
    the band meaning damped and inside the band (with >= min_peaks peaks)
    meaning sustained; then the divergence bound; else unclassified.

    Precondition: horizon >= 10x the larger delay and >= 50 time units.
    """
    horizon = traj.horizon
    if horizon < 50.0 or horizon < 10.0 * max(traj.tau, traj.delta):
        raise ValueError(
            f"horizon {horizon} too short to classify: need >= 50 and >= 10x max delay"
        )
    t0 = horizon * (1.0 - tail_fraction)
    window = (t0, horizon)
    sel = traj.times >= t0
    tail = traj.states[sel]

    target = getattr(candidate, "state", candidate)
    if target is not None:
        dev = float(np.max(np.abs(tail - np.array(target.as_tuple()))))
        if tol_conv is None:
            tol_conv = 1e-2 * (1.0 + target.norm_inf())
        if dev < tol_conv:
            return Classification(CONVERGED, window, target=target, max_deviation=dev)

    ys = tail[:, 1]
    mean_y = float(np.mean(ys))
    peak_idx = [
        i for i in range(1, len(ys) - 1)
        if ys[i - 1] < ys[i] >= ys[i + 1] and ys[i] > mean_y
    ]
    amps = [float(ys[i] - mean_y) for i in peak_idx]
    amp_floor = 1e-3 * (1.0 + abs(mean_y))
    if len(peak_idx) >= 2 and amps[0] > amp_floor:
        ratio = amps[-1] / amps[0]
        if ratio < ratio_band[0]:
            return Classification(DAMPED, window, decay_ratio=ratio)
        if ratio <= ratio_band[1] and len(peak_idx) >= min_peaks:
            times = traj.times[sel]
            spacing = (times[peak_idx[-1]] - times[peak_idx[0]]) / (len(peak_idx) - 1)
            return Classification(
                SUSTAINED, window,
                period=float(spacing),
                amplitude=float(np.mean(amps)),
            )
    if float(np.max(np.abs(tail))) > divergence_bound:
        return Classification(DIVERGED, window)
    return Classification(UNCLASSIFIED, window)


@dataclass(frozen=True)
class SweepRow:
    tau: float
    delta: float
    classification: Classification | None
    max_re_lambda: float | None
    candidate: Equilibrium | None
    error: str | None = None

    def label(self) -> str:
        if self.error is not None:
            return f"error: {self.error}"
        return self.classification.kind


def sweep(
    model: ModelSpec,
    delay_grid,
    history: HistorySpec,
    horizon: float,
    step: float | None = None,
) -> list:
    """Integrate and classify the model over a grid of (tau, delta) pairs.

    Rows appear in grid order.  Each row also carries the root-scan
    oracle's rightmost real part at the row's reference equilibrium (the
    equilibrium nearest the trajectory tail; for rows whose integration
    fails, the endemic equilibrium when one exists, else the disease-free
    one).  Integration failures are recorded in the row and the sweep
    continues.
    """
    if not delay_grid:
        raise ValueError("delay grid must be nonempty")
    eqs = all_equilibria(model)
    cc_cache = {}

    def cc_for(eq):
        key = eq.state.as_tuple()
        if key not in cc_cache:
            cc_cache[key] = char_coeffs(jacobian_coeffs(model, eq))
        return cc_cache[key]

    fallback = None
    endemics = [e for e in eqs if e.kind == "endemic"]
    if endemics:
        fallback = endemics[0]
    elif eqs:
        fallback = eqs[0]

    rows = []
    for tau, delta in delay_grid:
        row_model = replace(model, params=model.params.with_delays(tau, delta))
        cand = fallback
        classification = None
        error = None
        try:
            traj = integrate(row_model, history, horizon, step=step)
        except IntegrationError as exc:
            error = str(exc)
        else:
            if eqs:
                tail = traj.states[traj.times >= horizon * 0.5]
                mean = np.mean(tail, axis=0)
                cand = min(
                    eqs,
                    key=lambda e: float(np.max(np.abs(mean - np.array(e.state.as_tuple())))),
                )
            try:
                classification = classify(traj, candidate=cand)
            except ValueError as exc:  # e.g. horizon too short for this row's delays
                error = str(exc)
        max_re = None
        if cand is not None:
            max_re = max_real_part(cc_for(cand), tau, delta)
        rows.append(SweepRow(
            tau=tau, delta=delta,
            classification=classification,
            max_re_lambda=max_re,
            candidate=cand,
            error=error,
        ))
    return rows


def sweep_to_csv(rows, fh) -> None:
    """RFC-4180 CSV with columns tau,delta,classification,period,amplitude,max_re_lambda."""
    w = csv.writer(fh, lineterminator="\r\n")
    w.writerow(["tau", "delta", "classification", "period", "amplitude", "max_re_lambda"])
    for row in rows:
        cls = row.label()
        period = amplitude = ""
        if row.classification is not None:
            if row.classification.period is not None:
                period = f"{row.classification.period:.10g}"
            if row.classification.amplitude is not None:
                amplitude = f"{row.classification.amplitude:.10g}"
        max_re = "" if row.max_re_lambda is None else f"{row.max_re_lambda:.10g}"
        w.writerow([f"{row.tau:.10g}", f"{row.delta:.10g}", cls, period, amplitude, max_re])


def sweep_to_json(rows) -> str:
    out = []
    for row in rows:
        entry = {
            "tau": row.tau,
            "delta": row.delta,
            "classification": None if row.classification is None else row.classification.kind,
            "period": None if row.classification is None else row.classification.period,
            "amplitude": None if row.classification is None else row.classification.amplitude,
            "max_re_lambda": row.max_re_lambda,
        }
        if row.error is not None:
            entry["error"] = row.error
        if row.candidate is not None:
            entry["equilibrium"] = list(row.candidate.state.as_tuple())
        out.append(entry)
    return json.dumps(out, indent=2)
