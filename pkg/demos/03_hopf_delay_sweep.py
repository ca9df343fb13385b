#!/usr/bin/env python3
"""Tour 3: delay-induced oscillation in ex5_3, located three ways.

Raising the incubation delay destabilizes the endemic point of ex5_3:
trajectories that spiral into (2, 2, 2) for small delays turn into
sustained oscillations past the critical delay.  This script
  1. sweeps tau over 0..9 and classifies each trajectory,
  2. bisects the rightmost characteristic root's sign change,
  3. writes a sweep CSV and an SVG of one sustained trajectory.
"""

from pathlib import Path

from sirdelay import (
    all_equilibria,
    char_coeffs,
    find_delay_crossing,
    integrate,
    jacobian_coeffs,
    load_preset,
    sweep,
)
from sirdelay.analytics import sweep_to_csv
from sirdelay.integrator import dense_eval
from sirdelay.svgchart import line_chart
from dataclasses import replace

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

cfg = load_preset("ex5_3")
endemic = [e for e in all_equilibria(cfg.model) if e.kind == "endemic"][0]

# --- 1. sweep and classify ------------------------------------------------
grid = [(tau, 0.0) for tau in (0.0, 0.9, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0)]
rows = sweep(cfg.model, grid, cfg.history, horizon=200.0)
print("tau   classification                     oracle max Re")
for row in rows:
    print(f"{row.tau:4g}  {row.classification.describe():34s} {row.max_re_lambda:+.4f}")
with open(OUT / "ex5_3_sweep.csv", "w", newline="") as fh:
    sweep_to_csv(rows, fh)
print(f"\nwrote {OUT / 'ex5_3_sweep.csv'}")

# --- 2. bisect the crossing ------------------------------------------------
cc = char_coeffs(jacobian_coeffs(cfg.model, endemic))
tau_star = find_delay_crossing(cc, 4.0, 5.0, fixed=0.0)
print(f"rightmost root crosses the imaginary axis at tau ~ {tau_star:.4f}")
print("consistent with the sweep: converged through tau = 3, damped at 4,")
print("sustained oscillation from tau = 5 on")

# --- 3. plot one sustained trajectory --------------------------------------
model7 = replace(cfg.model, params=cfg.model.params.with_delays(7.0, 0.0))
traj = integrate(model7, cfg.history, horizon=200.0)
ts = [k * 0.25 for k in range(801)]
series = [
    ("susceptible x", [dense_eval(traj, t).x for t in ts]),
    ("infected y", [dense_eval(traj, t).y for t in ts]),
    ("recovered z", [dense_eval(traj, t).z for t in ts]),
]
svg = line_chart(ts, series, title="ex5_3 at tau = 7: sustained oscillation",
                 x_label="t", y_label="density")
(OUT / "ex5_3_tau7.svg").write_text(svg)
print(f"wrote {OUT / 'ex5_3_tau7.svg'}")
