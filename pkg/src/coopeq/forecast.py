"""Forecasts of a coalition structure: incentive, risk, abandon probability
and the guaranteed value of playing by the structure.

All two-player quantities are computed from player ``i``'s point of view
(``player``, default 0) about the other player ``j``. For the symmetric games
handled here the result does not depend on which player is chosen; the tests
check that directly from the payoff table.

Suprema over mixed replies reduce to pure replies because payoffs are linear
in each player's own mixture. The one infimum over a constrained set (the
worst payoff when the other player deviates) is a two-constraint linear
program, solved exactly by enumerating its vertices.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .equilibria import CoalitionGame, CoalitionStructure, coalition_optima
from .exact import to_fraction
from .games import PublicGoods, expected_payoff

__all__ = [
    "Forecast",
    "DeviationSet",
    "incentive",
    "risk",
    "abandon_probability",
    "guaranteed_payoffs",
    "coalition_value",
    "forecast_pair",
    "best_forecast",
    "n_player_value",
]


@dataclass(frozen=True)
class Forecast:
    structure: CoalitionStructure
    incentive: object
    risk: object
    tau: object
    e_nobody: object
    e_deviated: object
    value: object
    # e_{i,J} indexed by |J| for the N-player extension; empty for 2 players
    by_defectors: tuple = field(default=())


@dataclass(frozen=True)
class DeviationSet:
    """Strategies of ``deviator`` that do not lower its payoff at ``base``."""

    game: object
    base: tuple
    deviator: int

    def __contains__(self, sigma):
        prof = list(self.base)
        prof[self.deviator] = sigma
        return (expected_payoff(self.game, prof, self.deviator)
                >= self.game.u(self.deviator, self.base))


def _check_two_player(game, p):
    if game.num_players != 2:
        raise ValueError(
            f"two-player forecast on an N={game.num_players} game; "
            "use n_player_value for the N-player public goods extension")
    if not (p.is_selfish or p.is_grand) or p.num_players != 2:
        raise ValueError(f"unsupported coalition structure {p!r}")


def _optima(game, p):
    _check_two_player(game, p)
    return coalition_optima(CoalitionGame(game, p))


def _argmax(values):
    top = max(values)
    return [k for k, v in enumerate(values) if v == top]


def incentive(game, p, player=0):
    """Largest gain the other player gets by leaving ``p`` unilaterally."""
    i, j = player, 1 - player
    n = game.n_strategies
    best = None
    for prof in _optima(game, p):
        si, sj = prof[i], prof[j]
        here = game.pair(j, sj, si)
        gain = max(game.pair(j, t, si) for t in range(n)) - here
        best = gain if best is None else max(best, gain)
    return best


def risk(game, p, player=0):
    """Largest loss the other player can suffer by leaving ``p``.

    The leaver plays a greedy reply; player ``i`` answers either with its
    selfish best reply to the leaver's equilibrium strategy or with its best
    reply to the greedy move. Never negative: a departure that cannot cost
    anything carries zero risk.
    """
    i, j = player, 1 - player
    n = game.n_strategies
    worst = Fraction(0)
    for prof in _optima(game, p):
        si, sj = prof[i], prof[j]
        here = game.pair(j, sj, si)
        greedy = _argmax([game.pair(j, t, si) for t in range(n)])
        selfish = _argmax([game.pair(i, s, sj) for s in range(n)])
        for t in greedy:
            counters = set(selfish) | set(_argmax([game.pair(i, s, t) for s in range(n)]))
            for s in counters:
                worst = max(worst, here - game.pair(j, t, s))
    return worst


def abandon_probability(D, R):
    """Probability that a player abandons the structure, ``D/(D+R)``.

    Defined as 0 when there is no incentive, including ``D = R = 0``.
    """
    if D < 0 or R < 0:
        raise ValueError(f"incentive and risk must be non-negative (D={D}, R={R})")
    if isinstance(D, int) and isinstance(R, int):
        D = Fraction(D)
    if D == 0:
        return D * 0
    return D / (D + R)


def _min_linear(f, g, g0):
    """min f.w over the simplex subject to g.w >= g0 (exact vertex search)."""
    feasible = [k for k in range(len(f)) if g[k] >= g0]
    best = min(f[k] for k in feasible)
    below = [k for k in range(len(f)) if g[k] < g0]
    for lo in below:
        for hi in feasible:
            if g[hi] == g0 or f[lo] >= f[hi]:
                continue
            w = Fraction(g[hi] - g0) / (g[hi] - g[lo])
            best = min(best, w * f[lo] + (1 - w) * f[hi])
    return best


def guaranteed_payoffs(game, p, player=0):
    """Worst payoffs of player ``i`` under ``p``: (nobody leaves, other leaves).

    Players may follow different equilibria of the coalition game, so both
    infima range over cross-matched equilibrium strategies.
    """
    i, j = player, 1 - player
    n = game.n_strategies
    eq = _optima(game, p)
    own = sorted({prof[i] for prof in eq})
    theirs = sorted({prof[j] for prof in eq})
    e_nobody = min(game.pair(i, a, b) for a in own for b in theirs)
    e_dev = None
    for base in eq:
        si, sj = base[i], base[j]
        g = [game.pair(j, t, si) for t in range(n)]
        g0 = game.pair(j, sj, si)
        for a in own:
            f = [game.pair(i, a, t) for t in range(n)]
            val = _min_linear(f, g, g0)
            e_dev = val if e_dev is None else min(e_dev, val)
    return e_nobody, e_dev


def coalition_value(game, p, player=0):
    """Full forecast record for a two-player symmetric game."""
    D = incentive(game, p, player)
    R = risk(game, p, player)
    tau = abandon_probability(D, R)
    e0, e1 = guaranteed_payoffs(game, p, player)
    return Forecast(p, D, R, tau, e0, e1, e0 * (1 - tau) + e1 * tau)


def forecast_pair(game, player=0):
    """Forecasts for the selfish and the cooperative structure."""
    n = game.num_players
    return (coalition_value(game, CoalitionStructure.singletons(n), player),
            coalition_value(game, CoalitionStructure.grand(n), player))


def best_forecast(game):
    """Structure with the larger value; ties go to the selfish structure."""
    selfish, coop = forecast_pair(game)
    if coop.value > selfish.value:
        return coop.structure, coop.value
    return selfish.structure, selfish.value


def n_player_value(family):
    """Cooperative-structure forecast of an N-player public goods game.

    Each opponent is assumed to leave independently with the two-player
    probability built from the gain of keeping the endowment, ``y(1-alpha)``,
    and the loss from everybody free-riding, ``y(alpha*N - 1)``. The latter
    is an extension: it reduces to ``y(2*alpha - 1)`` for two players.
    """
    if not isinstance(family, PublicGoods):
        raise TypeError("n_player_value needs a PublicGoods family")
    N, y, a = family.N, family.y, family.alpha
    D = y * (1 - a)
    R = y * (a * N - 1)
    tau = abandon_probability(D, R)
    by = tuple(a * (N - m) * y for m in range(N))
    value = sum(comb(N - 1, m) * tau ** m * (1 - tau) ** (N - 1 - m) * by[m]
                for m in range(N))
    return Forecast(CoalitionStructure.grand(N), D, R, tau, by[0], by[1], value,
                    by_defectors=by)


def n_player_selfish_value(family):
    """Everybody free-rides: each player keeps the endowment for sure."""
    N, y = family.N, family.y
    return Forecast(CoalitionStructure.singletons(N), Fraction(0), Fraction(0),
                    Fraction(0), to_fraction(y), to_fraction(y), to_fraction(y))
