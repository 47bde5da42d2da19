"""
Public goods and the commons
=============================

Contributions to a shared pot are multiplied by the marginal return alpha
and split evenly. With two players, contributing only pays off in the
forecast once alpha passes 2/3.
"""
from fractions import Fraction

from coopeq import PublicGoods, n_player_value, solve_commons, solve_public_goods
from coopeq.oracle import public_goods_value_by_subsets

print(f"{'alpha':>7} {'contribution':>13}")
for k in range(11, 20):
    alpha = Fraction(k, 20)
    x = solve_public_goods(2, 1, alpha)
    print(f"{float(alpha):>7.2f} {float(x):>13.4f}")

# More players: each opponent leaves independently, and the forecast sums
# over how many do. The binomial closed form and a plain enumeration of
# defector sets agree.
print()
for N, alpha in ((3, "0.5"), (4, "0.6"), (6, "0.4")):
    fam = PublicGoods(N, 1, alpha)
    fc = n_player_value(fam)
    print(f"N={N} alpha={alpha}: value {float(fc.value):.6f}, "
          f"by enumeration {public_goods_value_by_subsets(N, 1, alpha):.6f}, "
          f"contribution {solve_public_goods(N, 1, alpha)}")

# Two farmers share a pasture. Keeping a sheep earns h but costs each farmer
# k = k0/2 in lost grass. The ratio k/h plays the role of alpha.
print()
for k0 in ("1.2", "1.4", "1.6", "1.8"):
    alpha = Fraction(k0) / 2
    print(f"k/h = {float(alpha):.1f}: leave the sheep out with probability "
          f"{solve_commons(1, k0)}")
