#!/usr/bin/env python3
# Map the feasible region of the (risk, trade-off) square: sample it with
# a Latin hypercube, calibrate every point, and fit the frontier.

import numpy as np

from owagen import epsilon_sweep, fit_frontier, latin_hypercube, run_sweep
from owagen.explore import write_epsilon_curve_csv, write_sweep_csv

points = latin_hypercube(2000, seed=7)
records = run_sweep(points, epsilon=1e-8)

accepted = sum(r.accepted for r in records)
print(f"accepted {accepted}/{len(records)} sampled decision points")

# the acceptance threshold is uncritical across a wide plateau
curve = epsilon_sweep(points, np.logspace(-10, -2, 9).tolist())
print("\nepsilon        rejected fraction")
for eps, frac in curve:
    print(f"{eps:10.1e}    {frac:.4f}")

fit = fit_frontier(records)
print(
    f"\nfrontier fit: delta = {fit.a:.3f}*alpha^2 + {fit.b:.3f}*alpha "
    f"+ {fit.c:.3f}   (rmse {fit.rmse:.4f})"
)
print("compare with the ideal parabola  delta = 4*alpha*(1 - alpha)")

write_sweep_csv(records, "sweep.csv")
write_epsilon_curve_csv(curve, "epsilon_curve.csv")
print("\nwrote sweep.csv and epsilon_curve.csv for plotting")
