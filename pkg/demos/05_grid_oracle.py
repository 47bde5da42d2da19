"""
Checking the exact solver against a brute-force grid
=====================================================

The oracle never solves anything in closed form. It lays a grid over the
mixed strategies, takes maxima and minima over it in floating point, and
should land within a grid step of the exact answer.
"""
import random
from fractions import Fraction

from coopeq import PD, Chicken, Traveler, cooperative_equilibrium, forecast_pair
from coopeq.oracle import Grid, oracle_cooperative_weight, oracle_risk, oracle_value

rng = random.Random(7)
grid = Grid(1e-3)


def random_payoffs():
    vals = set()
    while len(vals) < 4:
        vals.add(Fraction(rng.randint(-100, 100), 100))
    return sorted(vals, reverse=True)


worst = 0.0
for _ in range(10):
    T, R, third, fourth = random_payoffs()
    for fam in (PD(T, R, third, fourth), Chicken(T, R, third, fourth)):
        g = fam.instantiate()
        for fc in forecast_pair(g):
            orc = oracle_value(g, fc.structure, grid)
            worst = max(worst, abs(float(fc.value) - orc["value"]))
        w = float(cooperative_equilibrium(g).cooperation)
        worst = max(worst, abs(w - oracle_cooperative_weight(g, grid)))
print(f"largest gap over 20 random games: {worst:.2e}")

# For the Traveler the risk depends on how the staying player may answer.
# Restricting answers to best replies reproduces the exact risk; allowing
# any answer that costs the stayer nothing makes the risk larger.
g = Traveler(5, 289, 300).instantiate()
coarse = Grid(1e-2)
coop = forecast_pair(g)[1]
print("exact risk", coop.risk)
print("grid, best replies only", oracle_risk(g, coop.structure, coarse))
print("grid, any costless answer", oracle_risk(g, coop.structure, coarse, mode="all-deviations"))
