"""Selfish equilibria and the optima of coalition games."""
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .games import MixedStrategy, as_mixed

__all__ = [
    "CoalitionStructure",
    "CoalitionGame",
    "SELFISH",
    "COOPERATIVE",
    "pure_nash",
    "symmetric_mixed_nash_2x2",
    "coalition_optima",
    "best_response_value",
]


@dataclass(frozen=True)
class CoalitionStructure:
    """Partition of the players ``0..n-1`` into coalitions."""

    blocks: frozenset

    def __post_init__(self):
        blocks = frozenset(frozenset(b) for b in self.blocks)
        if any(not b for b in blocks):
            raise ValueError("coalitions must be non-empty")
        members = [i for b in blocks for i in b]
        if len(members) != len(set(members)):
            raise ValueError("coalitions must be pairwise disjoint")
        if set(members) != set(range(len(members))):
            raise ValueError("coalitions must cover players 0..n-1")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def singletons(cls, n):
        return cls(frozenset(frozenset([i]) for i in range(n)))

    @classmethod
    def grand(cls, n):
        return cls(frozenset([frozenset(range(n))]))

    @property
    def num_players(self):
        return sum(len(b) for b in self.blocks)

    @property
    def is_selfish(self):
        return all(len(b) == 1 for b in self.blocks)

    @property
    def is_grand(self):
        return len(self.blocks) == 1

    @property
    def name(self):
        if self.is_selfish:
            return "selfish"
        if self.is_grand:
            return "cooperative"
        return "|".join(",".join(map(str, sorted(b))) for b in sorted(self.blocks, key=min))

    def __repr__(self):
        return f"CoalitionStructure({self.name})"


SELFISH = CoalitionStructure.singletons(2)
COOPERATIVE = CoalitionStructure.grand(2)


@dataclass(frozen=True)
class CoalitionGame:
    """A base game in which each coalition acts as one payoff-summing player."""

    game: object
    structure: CoalitionStructure

    def __post_init__(self):
        if self.structure.num_players != self.game.num_players:
            raise ValueError("structure and game disagree on the number of players")

    def coalition_payoff(self, block, profile):
        pay = self.game.payoffs(profile)
        return sum(pay[i] for i in block)


def _block_best(game, block, weight_of):
    """Map each assignment of the outsiders to the block's best joint value."""
    block = sorted(block)
    best = {}
    for prof in game.profiles:
        key = tuple(s if i not in block else None for i, s in enumerate(prof))
        val = weight_of(prof)
        if key not in best or val > best[key]:
            best[key] = val
    return block, best


def _stable_profiles(game, blocks):
    tables = []
    for block in blocks:
        members = frozenset(block)
        tables.append(_block_best(
            game, members,
            lambda prof, m=members: sum(game.payoffs(prof)[i] for i in m)))
    stable = []
    for prof in game.profiles:
        pay = game.payoffs(prof)
        ok = True
        for block, best in tables:
            key = tuple(s if i not in block else None for i, s in enumerate(prof))
            if sum(pay[i] for i in block) < best[key]:
                ok = False
                break
        if ok:
            stable.append(prof)
    return sorted(stable)


def pure_nash(game):
    """All pure profiles with no strictly improving unilateral pure deviation."""
    if game.num_players != 2:
        return _stable_profiles(game, [[i] for i in range(game.num_players)])
    n = game.n_strategies
    A, B = game.matrix(0), game.matrix(1)
    best_a = [max(A[s][t] for s in range(n)) for t in range(n)]
    best_b = [max(B[t][s] for t in range(n)) for s in range(n)]
    return [(s, t) for s in range(n) for t in range(n)
            if A[s][t] == best_a[t] and B[t][s] == best_b[s]]


def coalition_optima(cg):
    """Pure equilibria of the coalition game ``cg``.

    The grand coalition's equilibria are the profiles maximising the payoff
    sum; mixed maximisers (when the optimum is tied) are represented by these
    pure profiles.
    """
    game, structure = cg.game, cg.structure
    key = ("optima", structure)
    if key not in game._cache:
        if structure.is_selfish:
            found = pure_nash(game)
        elif structure.is_grand:
            totals = {prof: sum(game.payoffs(prof)) for prof in game.profiles}
            top = max(totals.values())
            found = sorted(p for p, v in totals.items() if v == top)
        else:
            found = _stable_profiles(game, [sorted(b) for b in structure.blocks])
        game._cache[key] = tuple(found)
    return list(game._cache[key])


def symmetric_mixed_nash_2x2(game):
    """Interior symmetric equilibrium of a symmetric 2x2 game, or None.

    The returned mixture puts weight q on the first strategy, chosen so that
    the opponent is indifferent between its two pure strategies.
    """
    if game.num_players != 2 or game.n_strategies != 2:
        raise ValueError("needs a two-player game with two strategies")
    (a, b), (c, d) = game.matrix(0)
    # q*a + (1-q)*b == q*c + (1-q)*d
    denom = (a - c) - (b - d)
    if denom == 0:
        return None
    q = Fraction(d - b) / denom
    if not 0 < q < 1:
        return None
    return MixedStrategy((q, 1 - q))


def best_response_value(game, player, others):
    """Best payoff for ``player`` against fixed opponents and all maximisers.

    ``others`` lists the strategies (indices or mixtures) of the remaining
    players in player order. Returns ``(value, argmax)`` with ``argmax`` the
    tuple of every maximising pure strategy.
    """
    if not 0 <= player < game.num_players:
        raise IndexError(f"player {player} out of range")
    others = list(others)
    if len(others) != game.num_players - 1:
        raise ValueError(f"expected {game.num_players - 1} opposing strategies")
    mixes = [as_mixed(game, s) for s in others]
    exact = all(isinstance(w, Fraction) for m in mixes for w in m.weights)
    values = []
    for own in range(game.n_strategies):
        total = 0
        for rest in product(*(m.support for m in mixes)):
            prob = 1
            for m, s in zip(mixes, rest):
                prob *= m[s]
            prof = rest[:player] + (own,) + rest[player:]
            total += prob * game.u(player, prof)
        values.append(total)
    top = max(values)
    tol = 0 if exact else 1e-12
    return top, tuple(i for i, v in enumerate(values) if v >= top - tol)
