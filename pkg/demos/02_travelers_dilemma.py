"""
Traveler's dilemma: claims as the bonus grows
==============================================

Both travelers claim between 180 and 300. The lower claim is paid to both,
with a bonus b moved from the higher claimant to the lower one. Nash play
unravels to 180 for every b; the forecast does not.
"""
from coopeq import Traveler, cooperative_equilibrium, solve_traveler

ce = solve_traveler(5)
claims = {ce.game.strategies[s]: float(ce.strategy[s]) for s in ce.strategy.support}
print("b = 5")
print("  guaranteed value", ce.guaranteed_value, f"= {float(ce.guaranteed_value):.3f}")
print("  mixture over claims", claims)
print(f"  mean claim {float(ce.expected_label()):.3f}")

# Sweep the bonus. Small bonuses keep claims near the top; once the
# coalition forecast falls below the Nash payoff the answer is 180.
print()
print(f"{'b':>4} {'coalition value':>16} {'mean claim':>11}  nash?")
for b in (2, 5, 10, 20, 40, 60, 100, 180):
    ce = cooperative_equilibrium(Traveler(b))
    print(f"{b:>4} {float(ce.cooperative.value):>16.3f} "
          f"{float(ce.expected_label()):>11.3f}  {ce.coincides_with_nash}")

# A narrower claim range, 2 to 100 with b = 2.
ce = solve_traveler(2, 2, 100)
print()
print("claims 2..100, b = 2: value", ce.guaranteed_value,
      f"mean claim {float(ce.expected_label()):.3f}")
