"""
Forecasting cooperation in a prisoner's dilemma
================================================

Two players each weigh the selfish way of playing against acting as one
coalition. The coalition is tempting but fragile: either side can leave it.
"""
from fractions import Fraction

from coopeq import PD, ParametricPD, cooperative_equilibrium, forecast_pair

# A small-stakes dilemma: 20 cents for defecting on a cooperator, 15 each
# for mutual cooperation, 5 each for mutual defection, nothing for the sucker.
game = PD("0.20", "0.15", "0.05", 0).instantiate()
selfish, coop = forecast_pair(game)

print("selfish value:", selfish.value)
print("coalition: incentive", coop.incentive, "risk", coop.risk,
      "abandon probability", coop.tau)
# the coalition keeps 15 cents unless the partner leaves, in which case the
# worst case is the sucker payoff; weighting the two gives the forecast
print("coalition value:", coop.value)

ce = cooperative_equilibrium(game)
print("cooperate with probability", ce.cooperation)

# The same machinery on a one-parameter family where the reward for joint
# cooperation grows with k. Below k = 1 nothing beats mutual defection.
print()
print(f"{'k':>6} {'cooperation':>12}")
for k in (0, Fraction(1, 2), 1, Fraction(3, 2), 2, 5, 10, 100):
    w = cooperative_equilibrium(ParametricPD(k)).cooperation
    print(f"{str(k):>6} {float(w):>12.4f}")
