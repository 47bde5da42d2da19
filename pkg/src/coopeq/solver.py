"""Induced games and the cooperative equilibrium.

The best forecast sets a payoff floor; only profiles paying every player at
least the floor stay allowed. When the cooperative structure does not beat
the selfish one, the answer is the ordinary Nash equilibrium. Otherwise the
solver returns the symmetric allowed profile with the least cooperation,
which is where the allowed region comes closest to the selfish outcome.
"""
from dataclasses import dataclass
from fractions import Fraction

from .equilibria import (COOPERATIVE, CoalitionGame, coalition_optima, pure_nash,
                         symmetric_mixed_nash_2x2)
from .exact import rational_sqrt, to_fraction
from .forecast import Forecast, forecast_pair, n_player_selfish_value, n_player_value
from .games import (FAMILIES, Chicken, Commons, Game, MixedStrategy, PublicGoods, Traveler,
                    expected_payoff)

__all__ = [
    "UnsupportedGameError",
    "ModelInconsistencyError",
    "InducedGame",
    "CoopEquilibrium",
    "induced_game",
    "diagonal_coefficients",
    "min_weight_meeting_floor",
    "solve_2x2_diagonal",
    "cooperative_equilibrium",
    "solve_traveler",
    "solve_public_goods",
    "solve_commons",
    "solve_chicken",
    "traveler_value_formula",
]

BISECT_TOL = Fraction(1, 10 ** 12)


class UnsupportedGameError(ValueError):
    """The game's shape has no cooperative-equilibrium path here."""


class ModelInconsistencyError(RuntimeError):
    """The payoff floor excludes every symmetric profile."""


@dataclass(frozen=True)
class InducedGame:
    game: Game
    floor: object

    def allows(self, profile):
        return all(expected_payoff(self.game, profile, i) >= self.floor
                   for i in range(self.game.num_players))

    def diagonal_payoff(self, strategy):
        return expected_payoff(self.game, [strategy] * self.game.num_players, 0)


@dataclass(frozen=True)
class CoopEquilibrium:
    """Symmetric cooperative equilibrium and the forecasts behind it."""

    game: Game
    strategy: MixedStrategy
    guaranteed_value: object
    coincides_with_nash: bool
    selfish: Forecast
    cooperative: Forecast
    symmetric_nash: MixedStrategy = None

    @property
    def cooperation(self):
        """Weight on the game's first (cooperative) strategy."""
        return self.strategy[0]

    def expected_label(self):
        """Mean of numeric strategy labels (claims, contributions) under the mixture."""
        return self.strategy.mean(self.game.strategies)


def _max_diagonal(game):
    best = max(game.u(0, (s,) * game.num_players) for s in range(game.n_strategies))
    if game.num_players == 2 and game.n_strategies == 2:
        a, b, c = diagonal_coefficients(game)
        lam = Fraction(-b) / (2 * a) if a < 0 else None
        if lam is not None and 0 < lam < 1:
            best = max(best, a * lam * lam + b * lam + c)
    return best


def induced_game(game, floor):
    """Restrict ``game`` to profiles paying each player at least ``floor``."""
    floor = to_fraction(floor)
    if floor > _max_diagonal(game):
        raise ModelInconsistencyError(
            f"floor {floor} exceeds every symmetric payoff of {game!r}")
    return InducedGame(game, floor)


def diagonal_coefficients(game, first=0, second=1):
    """Coefficients (a, b, c) of ``u(l, l) = a*l**2 + b*l + c``.

    ``l`` is the weight on ``first`` in a symmetric mixture over the two
    strategies ``first`` and ``second``.
    """
    R = game.pair(0, first, first)
    S = game.pair(0, first, second)
    T = game.pair(0, second, first)
    P = game.pair(0, second, second)
    return R - S - T + P, S + T - 2 * P, P


def min_weight_meeting_floor(a, b, c, floor):
    """Smallest ``l`` in [0, 1] with ``a*l**2 + b*l + c >= floor``.

    Exact when the crossing is rational. Otherwise bisects on exact rational
    midpoints and returns the feasible bracket end, so the floor is still
    met exactly and the error is below 1e-12.
    """
    a, b, c, floor = (to_fraction(v) for v in (a, b, c, floor))
    c0 = c - floor

    def h(x):
        return (a * x + b) * x + c0

    if h(Fraction(0)) >= 0:
        return Fraction(0)
    if h(Fraction(1)) < 0:
        raise ModelInconsistencyError("floor not met even by full cooperation")
    if a == 0:
        return -c0 / b
    root = rational_sqrt(b * b - 4 * a * c0)
    if root is not None:
        cands = sorted(x for x in ((-b - root) / (2 * a), (-b + root) / (2 * a)) if 0 < x <= 1)
        return cands[0]
    lo, hi = Fraction(0), Fraction(1)
    while hi - lo > BISECT_TOL:
        mid = (lo + hi) / 2
        if h(mid) >= 0:
            hi = mid
        else:
            lo = mid
    return hi


def solve_2x2_diagonal(game, floor, cooperative=0):
    """Least-cooperative symmetric mixture of a 2x2 game meeting ``floor``."""
    if game.num_players != 2 or game.n_strategies != 2:
        raise UnsupportedGameError("needs a symmetric 2x2 game")
    other = 1 - cooperative
    lam = min_weight_meeting_floor(*diagonal_coefficients(game, cooperative, other), floor)
    w = [None, None]
    w[cooperative], w[other] = lam, 1 - lam
    return MixedStrategy(tuple(w))


def _symmetric(profiles):
    return [p[0] for p in profiles if len(set(p)) == 1]


def _cooperative_index(game):
    sym = _symmetric(coalition_optima(CoalitionGame(game, COOPERATIVE)))
    return sym[0] if sym else 0


def _nash_strategy(game):
    sym = _symmetric(pure_nash(game))
    if sym:
        return MixedStrategy.pure(game.n_strategies, sym[0])
    if game.n_strategies == 2:
        mixed = symmetric_mixed_nash_2x2(game)
        if mixed is not None:
            return mixed
    raise UnsupportedGameError(f"no symmetric Nash equilibrium found for {game!r}")


def _solve_ordered(game, floor):
    """Scan from the selfish strategy toward the cooperative one.

    The answer is the first strategy whose symmetric payoff meets the floor,
    mixed with its predecessor on the scan as little as the floor allows.
    """
    start = _symmetric(pure_nash(game))
    goal = _symmetric(coalition_optima(CoalitionGame(game, COOPERATIVE)))
    if not start or not goal:
        raise UnsupportedGameError(
            "ordered scan needs a symmetric pure Nash equilibrium and a symmetric optimum")
    s0, s1 = start[0], goal[0]
    step = 1 if s1 >= s0 else -1
    n = game.n_strategies
    for c in range(s0, s1 + step, step):
        if game.pair(0, c, c) >= floor:
            break
    else:
        raise ModelInconsistencyError("no symmetric pure profile meets the floor")
    if c == s0:
        return MixedStrategy.pure(n, c)
    prev = c - step
    lam = min_weight_meeting_floor(*diagonal_coefficients(game, c, prev), floor)
    w = [Fraction(0)] * n
    w[c], w[prev] = lam, 1 - lam
    return MixedStrategy(tuple(w))


def _public_goods_closed_form(family):
    fs = n_player_selfish_value(family)
    fc = n_player_value(family)
    game = family.instantiate()
    if fc.value <= fs.value:
        return CoopEquilibrium(game, MixedStrategy.pure(2, 1), fs.value, True, fs, fc)
    x = solve_public_goods(family.N, family.y, family.alpha)
    return CoopEquilibrium(game, MixedStrategy.binary(x / family.y), fc.value, False, fs, fc)


def cooperative_equilibrium(game_or_family):
    """Cooperative equilibrium of a symmetric two-player game or a family.

    Two-strategy games use the diagonal quadratic. Larger ordered games such
    as the Traveler's dilemma scan claims from the Nash claim upward. Public
    goods games with more than two players go through the N-player closed
    form.
    """
    if isinstance(game_or_family, PublicGoods) and game_or_family.N > 2:
        return _public_goods_closed_form(game_or_family)
    if isinstance(game_or_family, FAMILIES):
        game = game_or_family.instantiate()
    elif isinstance(game_or_family, Game):
        game = game_or_family
    else:
        raise TypeError(f"expected a Game or a game family, got {game_or_family!r}")
    if game.num_players != 2:
        raise UnsupportedGameError(f"{game!r}: only two-player games have a general path")

    fs, fc = forecast_pair(game)
    ess = symmetric_mixed_nash_2x2(game) if game.n_strategies == 2 else None
    if fc.value <= fs.value:
        return CoopEquilibrium(game, _nash_strategy(game), fs.value, True, fs, fc, ess)
    induced_game(game, fc.value)
    if game.n_strategies == 2:
        strategy = solve_2x2_diagonal(game, fc.value, _cooperative_index(game))
    else:
        strategy = _solve_ordered(game, fc.value)
    return CoopEquilibrium(game, strategy, fc.value, False, fs, fc, ess)


def traveler_value_formula(b, hi=300):
    """Closed form of the cooperative value when ``hi - b`` is a valid claim."""
    b, hi = to_fraction(b), to_fraction(hi)
    return hi * (b + 2) / (2 * b + 1) + (hi - 2 * b) * (b - 1) / (2 * b + 1)


def solve_traveler(b, lo=180, hi=300):
    """Cooperative equilibrium of the Traveler's dilemma.

    The mixture, when needed, sits on the two claims bracketing the
    cooperative value.
    """
    return cooperative_equilibrium(Traveler(b, lo, hi))


def solve_public_goods(N, y, alpha):
    """Equal contribution of the cooperative equilibrium (0 when selfish)."""
    family = PublicGoods(N, y, alpha)
    y, a = family.y, family.alpha
    if n_player_value(family).value <= n_player_selfish_value(family).value:
        return Fraction(0)
    x = y * (a * N + a - 2) / (a * N - 1)
    return min(max(x, Fraction(0)), y)


def solve_commons(h, k0, N=2):
    """Probability of not keeping the sheep in the cooperative equilibrium."""
    if N != 2:
        raise UnsupportedGameError("the commons solver covers two farmers")
    return cooperative_equilibrium(Commons(N, h, k0)).cooperation


def solve_chicken(T, R, S, P):
    """Cooperative equilibrium of Chicken, carrying its mixed Nash for comparison."""
    return cooperative_equilibrium(Chicken(T, R, S, P))
