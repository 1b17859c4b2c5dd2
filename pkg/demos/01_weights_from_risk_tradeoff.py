#!/usr/bin/env python3
# Generate OWA order weights for a few decision attitudes and inspect
# what the discretisation actually achieves.

from owagen import DecisionPoint, generate_weights

attitudes = [
    ("pure pessimist (minimum)", DecisionPoint(0.0, 0.0)),
    ("cautious, some compromise", DecisionPoint(0.3, 0.6)),
    ("neutral, full compromise", DecisionPoint(0.5, 0.999)),
    ("optimist, some compromise", DecisionPoint(0.7, 0.6)),
    ("pure optimist (maximum)", DecisionPoint(1.0, 0.0)),
]

n = 7
for label, point in attitudes:
    outcome = generate_weights(point, n)
    bars = "  ".join(f"{w:.3f}" for w in outcome.weights)
    print(f"{label:28s} alpha={point.alpha:.1f} delta={point.delta:.3f}")
    print(f"  weights: {bars}")
    print(
        f"  achieved: orness={outcome.achieved_orness:.4f} "
        f"dispersion={outcome.achieved_dispersion:.4f} "
        f"tradeoff={outcome.achieved_tradeoff:.4f}  [{outcome.method}]"
    )
    print()

# The requested point is not always reachable: trade-off is capped by
# the parabola delta = 4*alpha*(1-alpha).
from owagen import InfeasiblePointError

try:
    generate_weights(DecisionPoint(0.1, 0.9), n)
except InfeasiblePointError as err:
    print(f"as expected, (0.1, 0.9) is infeasible: max trade-off {err.delta_max:.2f}")
