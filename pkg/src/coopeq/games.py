"""Symmetric normal-form games, mixed strategies, and the dilemma families.

Payoffs are stored exactly (ints when integral, Fractions otherwise) in a
table keyed by tuples of pure-strategy indices, one entry per player.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from numbers import Rational

from .exact import exact_value, to_fraction

__all__ = [
    "InvalidGameError",
    "MixedStrategy",
    "Game",
    "PD",
    "ParametricPD",
    "Traveler",
    "PublicGoods",
    "Commons",
    "Chicken",
    "instantiate",
    "expected_payoff",
    "verify_symmetry",
    "as_mixed",
]

WEIGHT_TOL = 1e-12


class InvalidGameError(ValueError):
    """A game or family parameter set violates its invariants."""


def _weight(w):
    if isinstance(w, Rational) and not isinstance(w, bool):
        return Fraction(w)
    if isinstance(w, str):
        return Fraction(w)
    return float(w)


@dataclass(frozen=True)
class MixedStrategy:
    """Probability vector over a game's pure strategies.

    Weights stay exact (``Fraction``) when they are given as rationals, which
    is what lets the solvers assert results like ``1/2`` exactly. Irrational
    mixing weights arrive as floats or as Fraction approximations.
    """

    weights: tuple

    def __post_init__(self):
        ws = tuple(_weight(w) for w in self.weights)
        if not ws:
            raise ValueError("mixed strategy needs at least one weight")
        if any(w < 0 for w in ws):
            raise ValueError(f"negative weight in {ws}")
        if abs(sum(ws) - 1) > WEIGHT_TOL:
            raise ValueError(f"weights sum to {float(sum(ws))!r}, not 1")
        object.__setattr__(self, "weights", ws)

    @classmethod
    def pure(cls, n, index):
        return cls(tuple(Fraction(int(i == index)) for i in range(n)))

    @classmethod
    def binary(cls, weight_first):
        """Mixture ``w*first + (1-w)*second`` over a two-strategy set."""
        w = _weight(weight_first)
        return cls((w, 1 - w))

    def __len__(self):
        return len(self.weights)

    def __getitem__(self, i):
        return self.weights[i]

    @property
    def support(self):
        return tuple(i for i, w in enumerate(self.weights) if w != 0)

    @property
    def is_pure(self):
        return len(self.support) == 1

    def mean(self, values):
        """Expectation of ``values`` (one per pure strategy) under the mixture."""
        return sum(w * v for w, v in zip(self.weights, values))


def as_mixed(game, s):
    """Accept a pure-strategy index or a MixedStrategy; return a MixedStrategy."""
    if isinstance(s, MixedStrategy):
        if len(s) != game.n_strategies:
            raise ValueError(
                f"mixture has {len(s)} weights, game has {game.n_strategies} strategies")
        return s
    if not 0 <= s < game.n_strategies:
        raise IndexError(f"strategy index {s} out of range")
    return MixedStrategy.pure(game.n_strategies, s)


class Game:
    """Finite N-player game sharing one strategy set among all players.

    ``payoff`` is either a callable taking a tuple of strategy indices and
    returning per-player payoffs, or a mapping with the same keys. Symmetry is
    not enforced here; use :func:`verify_symmetry`.
    """

    def __init__(self, strategies, num_players, payoff, name=None):
        self.strategies = tuple(strategies)
        if not self.strategies:
            raise InvalidGameError("strategy set must be non-empty")
        if len(set(self.strategies)) != len(self.strategies):
            raise InvalidGameError("strategy labels must be distinct")
        if int(num_players) != num_players or num_players < 1:
            raise InvalidGameError(f"num_players must be a positive integer, got {num_players}")
        self.num_players = int(num_players)
        self.name = name
        table = {}
        for prof in product(range(len(self.strategies)), repeat=self.num_players):
            try:
                vals = payoff(prof) if callable(payoff) else payoff[prof]
            except KeyError:
                raise InvalidGameError(f"payoff undefined at profile {prof}") from None
            vals = tuple(exact_value(v) for v in vals)
            if len(vals) != self.num_players:
                raise InvalidGameError(
                    f"profile {prof} has {len(vals)} payoffs for {self.num_players} players")
            table[prof] = vals
        self._table = table
        self._cache = {}

    @classmethod
    def from_matrix(cls, strategies, row_payoffs, name=None):
        """Symmetric two-player game from the row player's payoff matrix."""
        A = [[to_fraction(x) for x in row] for row in row_payoffs]
        n = len(strategies)
        if len(A) != n or any(len(row) != n for row in A):
            raise InvalidGameError(f"payoff matrix must be {n}x{n}")
        return cls(strategies, 2, lambda p: (A[p[0]][p[1]], A[p[1]][p[0]]), name=name)

    @property
    def n_strategies(self):
        return len(self.strategies)

    @property
    def profiles(self):
        return self._table.keys()

    def index(self, label):
        """Position of a strategy label in the strategy set."""
        try:
            return self.strategies.index(label)
        except ValueError:
            raise KeyError(f"unknown strategy {label!r}") from None

    def payoffs(self, profile):
        return self._table[tuple(profile)]

    def u(self, player, profile):
        return self._table[tuple(profile)][player]

    def pair(self, player, own, other):
        """Two-player payoff to ``player`` playing ``own`` against ``other``."""
        key = (own, other) if player == 0 else (other, own)
        return self._table[key][player]

    def matrix(self, player=0):
        """``M[own][other]`` payoff matrix of a two-player game."""
        if self.num_players != 2:
            raise ValueError("matrix view needs a two-player game")
        n = self.n_strategies
        return [[self.pair(player, a, b) for b in range(n)] for a in range(n)]

    @property
    def min_payoff(self):
        return min(min(v) for v in self._table.values())

    @property
    def max_payoff(self):
        return max(max(v) for v in self._table.values())

    def transformed(self, scale, shift):
        """Game with every payoff mapped to ``scale*u + shift`` (scale > 0)."""
        scale, shift = exact_value(scale), exact_value(shift)
        if scale <= 0:
            raise ValueError("scale must be positive")
        return Game(self.strategies, self.num_players,
                    {p: tuple(scale * x + shift for x in v) for p, v in self._table.items()},
                    name=self.name)

    def __repr__(self):
        label = f"{self.name!r}, " if self.name else ""
        return f"Game({label}N={self.num_players}, strategies={self.n_strategies})"


def expected_payoff(game, profile, player):
    """Expected payoff of ``player`` under the product of the profile's mixtures."""
    if not 0 <= player < game.num_players:
        raise IndexError(f"player {player} out of range for N={game.num_players}")
    if len(profile) != game.num_players:
        raise ValueError(f"profile has {len(profile)} entries, game has {game.num_players} players")
    mixes = [as_mixed(game, s) for s in profile]
    total = 0
    for prof in product(*(m.support for m in mixes)):
        prob = 1
        for m, s in zip(mixes, prof):
            prob *= m[s]
        total += prob * game.u(player, prof)
    return total


def verify_symmetry(game):
    """Check payoff symmetry under every relabelling of the players.

    Returns None when the game is symmetric, otherwise a witness
    ``(perm, profile)``: under ``perm`` player ``j`` hands its strategy to
    player ``perm[j]`` and some player's payoff does not follow its strategy.
    """
    n = game.num_players
    for prof in game.profiles:
        pay = game.payoffs(prof)
        for perm in permutations(range(n)):
            if perm == tuple(range(n)):
                continue
            moved = [None] * n
            for j in range(n):
                moved[perm[j]] = prof[j]
            moved_pay = game.payoffs(tuple(moved))
            if any(moved_pay[perm[i]] != pay[i] for i in range(n)):
                return perm, prof
    return None


def _require(cond, message):
    if not cond:
        raise InvalidGameError(message)


def _strict_chain(names, values):
    for (na, a), (nb, b) in zip(zip(names, values), zip(names[1:], values[1:])):
        _require(a > b, f"{na}>{nb} violated ({na}={a}, {nb}={b})")


@dataclass(frozen=True)
class PD:
    """Prisoner's dilemma; cooperation is the first strategy."""

    T: object
    R: object
    P: object
    S: object

    def __post_init__(self):
        for f in "TRPS":
            object.__setattr__(self, f, to_fraction(getattr(self, f)))
        _strict_chain("TRPS", (self.T, self.R, self.P, self.S))

    def instantiate(self):
        return Game.from_matrix(("C", "D"), [[self.R, self.S], [self.T, self.P]],
                                name=f"PD(T={self.T},R={self.R},P={self.P},S={self.S})")


@dataclass(frozen=True)
class Chicken:
    T: object
    R: object
    S: object
    P: object

    def __post_init__(self):
        for f in "TRSP":
            object.__setattr__(self, f, to_fraction(getattr(self, f)))
        _strict_chain("TRSP", (self.T, self.R, self.S, self.P))

    def instantiate(self):
        return Game.from_matrix(("C", "D"), [[self.R, self.S], [self.T, self.P]],
                                name=f"Chicken(T={self.T},R={self.R},S={self.S},P={self.P})")


@dataclass(frozen=True)
class ParametricPD:
    """PD with T=k+2, R=k+1, P=1, S=0.

    ``k = 0`` is admitted as the weak-ordering endpoint (R = P); defection is
    still strictly dominant there.
    """

    k: object

    def __post_init__(self):
        object.__setattr__(self, "k", to_fraction(self.k))
        _require(self.k >= 0, f"k>=0 violated (k={self.k})")

    def instantiate(self):
        k = self.k
        return Game.from_matrix(("C", "D"), [[k + 1, 0], [k + 2, 1]],
                                name=f"ParametricPD(k={k})")


@dataclass(frozen=True)
class Traveler:
    """Traveler's dilemma over integer claims ``lo..hi`` with bonus ``b``."""

    b: object
    lo: int = 180
    hi: int = 300

    def __post_init__(self):
        object.__setattr__(self, "b", to_fraction(self.b))
        _require(self.b >= 2, f"b>=2 violated (b={self.b})")
        _require(int(self.lo) == self.lo and int(self.hi) == self.hi, "claims must be integers")
        object.__setattr__(self, "lo", int(self.lo))
        object.__setattr__(self, "hi", int(self.hi))
        _require(self.lo < self.hi, f"lo<hi violated (lo={self.lo}, hi={self.hi})")

    @property
    def claims(self):
        return tuple(range(self.lo, self.hi + 1))

    def reimbursement(self, own, other):
        if own == other:
            return Fraction(own)
        low = min(own, other)
        return low + self.b if own == low else low - self.b

    def instantiate(self):
        claims = self.claims
        return Game(
            claims, 2,
            lambda p: (self.reimbursement(claims[p[0]], claims[p[1]]),
                       self.reimbursement(claims[p[1]], claims[p[0]])),
            name=f"Traveler(b={self.b},{self.lo}..{self.hi})")


@dataclass(frozen=True)
class PublicGoods:
    """Linear public goods game with per-capita return ``alpha``.

    Payoffs are linear in each contribution, so the game is instantiated on
    the two extreme contributions ``y`` ("contribute") and ``0``
    ("free-ride"); a mixture with weight ``w`` on contributing has the same
    expected payoff as contributing ``w*y``.
    """

    N: int
    y: object
    alpha: object

    def __post_init__(self):
        _require(int(self.N) == self.N and self.N >= 2, f"N>=2 violated (N={self.N})")
        object.__setattr__(self, "N", int(self.N))
        object.__setattr__(self, "y", to_fraction(self.y))
        object.__setattr__(self, "alpha", to_fraction(self.alpha))
        _require(self.y > 0, f"y>0 violated (y={self.y})")
        _require(Fraction(1, self.N) < self.alpha < 1,
                 f"alpha in (1/N,1) violated (alpha={self.alpha}, N={self.N})")

    def instantiate(self):
        y, a = self.y, self.alpha
        x = (y, Fraction(0))

        def pay(p):
            pot = a * sum(x[s] for s in p)
            return tuple(y - x[s] + pot for s in p)

        return Game(("contribute", "free-ride"), self.N, pay,
                    name=f"PublicGoods(N={self.N},y={y},alpha={a})")


@dataclass(frozen=True)
class Commons:
    """Tragedy of the commons; each farmer keeps a sheep (x=1) or not (x=0).

    Not keeping is the cooperative strategy and is listed first.
    """

    N: int
    h: object
    k0: object

    def __post_init__(self):
        _require(int(self.N) == self.N and self.N >= 2, f"N>=2 violated (N={self.N})")
        object.__setattr__(self, "N", int(self.N))
        object.__setattr__(self, "h", to_fraction(self.h))
        object.__setattr__(self, "k0", to_fraction(self.k0))
        _require(self.h > 0, f"h>0 violated (h={self.h})")
        _require(self.h < self.k0, f"h<k0 violated (h={self.h}, k0={self.k0})")
        _require(self.k0 < self.h * self.N,
                 f"k0<hN violated (k0={self.k0}, hN={self.h * self.N})")

    @property
    def k(self):
        return self.k0 / self.N

    @property
    def alpha(self):
        """Effective cost ratio k/h that plays the role of the PG return."""
        return self.k / self.h

    def instantiate(self):
        h, k = self.h, self.k
        x = (0, 1)

        def pay(p):
            herd = sum(x[s] for s in p)
            return tuple(h * x[s] - k * herd for s in p)

        return Game(("not keep", "keep"), self.N, pay,
                    name=f"Commons(N={self.N},h={h},k0={self.k0})")


FAMILIES = (PD, ParametricPD, Traveler, PublicGoods, Commons, Chicken)


def instantiate(family):
    """Build the concrete :class:`Game` for a family instance."""
    if not isinstance(family, FAMILIES):
        raise TypeError(f"not a game family: {family!r}")
    return family.instantiate()
