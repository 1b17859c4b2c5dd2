#!/usr/bin/env python3
# Aggregate one set of criteria under different risk attitudes and watch
# the score slide between the minimum and the maximum.

from owagen import DecisionPoint, generate_weights, owa_aggregate

# suitability scores for one site, say, from five criteria
criteria = [0.82, 0.35, 0.61, 0.48, 0.90]
print(f"criteria: {criteria}  (min={min(criteria)}, max={max(criteria)})\n")

print(f"{'alpha':>6} {'delta':>6} {'aggregate':>10}")
for alpha in (0.0, 0.25, 0.5, 0.75, 1.0):
    delta = min(0.6, 4 * alpha * (1 - alpha))  # stay inside the feasible region
    outcome = generate_weights(DecisionPoint(alpha, delta), len(criteria))
    score = owa_aggregate(outcome.weights, criteria)
    print(f"{alpha:>6.2f} {delta:>6.2f} {score:>10.4f}")

print()
print("alpha=0 reproduces min(), alpha=1 reproduces max(),")
print("and the middle row with high trade-off sits near the plain average:")
print(f"  mean = {sum(criteria) / len(criteria):.4f}")
