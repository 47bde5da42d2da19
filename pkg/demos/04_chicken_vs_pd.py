"""
Chicken against a prisoner's dilemma
=====================================

The two games below have the same average payoff. In the dilemma the
forecast supports some cooperation; in Chicken the coalition forecast only
ties the selfish one, so the prediction falls back on the mixed equilibrium.
"""
from coopeq import PD, cooperative_equilibrium, forecast_pair, solve_chicken

pd = PD(400, 300, 0, -100).instantiate()
for fc in forecast_pair(pd):
    print(f"PD      {fc.structure.name:<11} value {fc.value}")
print("PD cooperation", cooperative_equilibrium(pd).cooperation)

ce = solve_chicken(300, 200, 100, 0)
for fc in (ce.selfish, ce.cooperative):
    print(f"Chicken {fc.structure.name:<11} value {fc.value}  "
          f"(incentive {fc.incentive}, risk {fc.risk})")
# Both pure equilibria are asymmetric, so the selfish forecast has to allow
# for the bad cross-match (D, D). The coalition optima include (C, D) and
# (D, C) for the same reason.
print("Chicken swerves with probability", ce.cooperation,
      "| coincides with the mixed equilibrium:", ce.coincides_with_nash)
