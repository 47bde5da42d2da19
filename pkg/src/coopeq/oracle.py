"""Brute-force grid checks for the forecast and the cooperative equilibrium.

Everything here works in floating point over explicit grids of mixed
strategies and shares no code with the exact solvers beyond reading the
payoff table. For two strategies the grid is the full 1-d segment; with more
strategies it holds the pure strategies plus every two-point mixture on the
grid step.
"""
from dataclasses import dataclass
from itertools import combinations, product

import numpy as np

from .equilibria import CoalitionStructure

__all__ = [
    "Grid",
    "payoff_matrices",
    "oracle_optima",
    "oracle_incentive",
    "oracle_risk",
    "oracle_guaranteed",
    "oracle_value",
    "oracle_coop_equilibrium",
    "oracle_symmetric_nash",
    "oracle_cooperative_weight",
    "verify_nash",
    "public_goods_value_by_subsets",
]

TOL = 1e-9


@dataclass(frozen=True)
class Grid:
    step: float = 1e-3

    def __post_init__(self):
        if not 0 < self.step < 1:
            raise ValueError(f"grid step must lie in (0, 1), got {self.step}")

    @property
    def levels(self):
        k = int(round(1 / self.step))
        return np.linspace(0.0, 1.0, k + 1)

    def points(self, n):
        """Rows are mixtures over ``n`` strategies; pure strategies come first."""
        if n == 1:
            return np.ones((1, 1))
        lv = self.levels
        if n == 2:
            return np.column_stack([lv, 1 - lv])[::-1].copy()
        rows = [np.eye(n)]
        inner = lv[1:-1]
        for a, b in combinations(range(n), 2):
            block = np.zeros((inner.size, n))
            block[:, a] = inner
            block[:, b] = 1 - inner
            rows.append(block)
        return np.vstack(rows)


def payoff_matrices(game):
    """Float matrices ``M[player][own, other]`` of a two-player game."""
    if game.num_players != 2:
        raise ValueError("grid oracle handles two-player games")
    n = game.n_strategies
    M = np.zeros((2, n, n))
    for (s, t) in game.profiles:
        a, b = game.payoffs((s, t))
        M[0, s, t] = float(a)
        M[1, t, s] = float(b)
    return M


def oracle_optima(game, structure):
    """Pure equilibria of the coalition game, by plain enumeration."""
    M = payoff_matrices(game)
    n = game.n_strategies
    if structure.is_grand:
        total = M[0] + M[1].T
        top = total.max()
        return [(s, t) for s, t in product(range(n), repeat=2) if total[s, t] >= top - TOL]
    found = []
    for s, t in product(range(n), repeat=2):
        if M[0, s, t] >= M[0, :, t].max() - TOL and M[1, t, s] >= M[1, :, s].max() - TOL:
            found.append((s, t))
    return found


def _near_max(values):
    return np.flatnonzero(values >= values.max() - TOL)


def oracle_incentive(game, structure, grid, player=0):
    M = payoff_matrices(game)
    G = grid.points(game.n_strategies)
    i, j = player, 1 - player
    best = -np.inf
    for prof in oracle_optima(game, structure):
        si, sj = prof[i], prof[j]
        best = max(best, (G @ M[j][:, si]).max() - M[j][sj, si])
    return float(best)


def oracle_risk(game, structure, grid, mode="best-reply", player=0):
    """Worst loss of the leaver; ``mode`` picks the counter-strategy set.

    ``best-reply`` lets the stayer answer with best replies only;
    ``all-deviations`` admits every strategy that does not lower the
    stayer's payoff against either the equilibrium or the greedy move.
    """
    if mode not in ("best-reply", "all-deviations"):
        raise ValueError(f"unknown risk mode {mode!r}")
    M = payoff_matrices(game)
    G = grid.points(game.n_strategies)
    i, j = player, 1 - player
    worst = 0.0
    for prof in oracle_optima(game, structure):
        si, sj = prof[i], prof[j]
        here = M[j][sj, si]
        vs_eq = G @ M[i][:, sj]
        for g in G[_near_max(G @ M[j][:, si])]:
            vs_greedy = G @ (M[i] @ g)
            if mode == "best-reply":
                keep = np.union1d(_near_max(vs_eq), _near_max(vs_greedy))
            else:
                keep = np.flatnonzero((vs_eq >= M[i][si, sj] - TOL)
                                      | (vs_greedy >= M[i][si] @ g - TOL))
            losses = here - G[keep] @ (M[j].T @ g)
            worst = max(worst, losses.max())
    return float(worst)


def oracle_guaranteed(game, structure, grid, player=0):
    M = payoff_matrices(game)
    G = grid.points(game.n_strategies)
    i, j = player, 1 - player
    eq = oracle_optima(game, structure)
    own = {p[i] for p in eq}
    theirs = {p[j] for p in eq}
    e_nobody = min(M[i][a, b] for a in own for b in theirs)
    e_dev = np.inf
    for base in eq:
        si, sj = base[i], base[j]
        ok = G @ M[j][:, si] >= M[j][sj, si] - TOL
        for a in own:
            e_dev = min(e_dev, (G[ok] @ M[i][a]).min())
    return float(e_nobody), float(e_dev)


def oracle_value(game, structure, grid, mode="best-reply", player=0):
    """Incentive, risk, probability, guarantees and value as a dict of floats."""
    D = oracle_incentive(game, structure, grid, player)
    R = oracle_risk(game, structure, grid, mode, player)
    tau = 0.0 if D <= TOL else D / (D + R)
    e0, e1 = oracle_guaranteed(game, structure, grid, player)
    return {"incentive": D, "risk": R, "tau": tau, "e_nobody": e0, "e_deviated": e1,
            "value": e0 * (1 - tau) + e1 * tau}


def _diagonal(M, lam):
    x = np.column_stack([lam, 1 - lam])
    return np.einsum("ki,ij,kj->k", x, M[0], x)


def oracle_coop_equilibrium(game, floor, grid, cooperative=0):
    """Smallest grid weight on ``cooperative`` whose symmetric payoff meets ``floor``."""
    if game.n_strategies != 2:
        raise ValueError("diagonal oracle needs two strategies")
    M = payoff_matrices(game)
    if cooperative == 1:
        M = M[:, ::-1, ::-1]
    lam = grid.levels
    ok = np.flatnonzero(_diagonal(M, lam) >= float(floor) - 1e-12)
    if ok.size == 0:
        raise ValueError("no grid point on the diagonal meets the floor")
    return float(lam[ok[0]])


def oracle_symmetric_nash(game, grid):
    """Grid weight on the first strategy with the least symmetric regret."""
    M = payoff_matrices(game)
    lam = grid.levels
    x = np.column_stack([lam, 1 - lam])
    pure = x @ M[0].T          # payoff of each pure reply against x
    now = np.einsum("ki,ki->k", x, pure)
    regret = pure.max(axis=1) - now
    return float(lam[np.argmin(regret)])


def oracle_cooperative_weight(game, grid):
    """Whole pipeline on the grid for a 2x2 game; weight on the first strategy."""
    sel = oracle_value(game, CoalitionStructure.singletons(2), grid)
    coop = oracle_value(game, CoalitionStructure.grand(2), grid)
    if coop["value"] <= sel["value"] + TOL:
        return oracle_symmetric_nash(game, grid)
    M = payoff_matrices(game)
    total = M[0] + M[1].T
    diag = [total[s, s] for s in range(2)]
    cooperative = int(np.argmax(diag))
    lam = oracle_coop_equilibrium(game, coop["value"], grid, cooperative)
    return lam if cooperative == 0 else 1 - lam


def verify_nash(game, profile, tolerance, grid=None):
    """True iff no player gains more than ``tolerance`` by a grid deviation."""
    grid = grid or Grid()
    M = payoff_matrices(game)
    G = grid.points(game.n_strategies)
    x = [np.array([float(w) for w in s.weights]) for s in profile]
    for i in range(2):
        me, other = x[i], x[1 - i]
        now = me @ M[i] @ other
        if (G @ (M[i] @ other)).max() - now > tolerance:
            return False
    return True


def public_goods_value_by_subsets(N, y, alpha):
    """Cooperative value of the N-player public goods game by subset enumeration.

    Every set of defecting opponents is listed explicitly; its probability is
    the product of independent per-opponent defection probabilities.
    """
    y, alpha = float(y), float(alpha)
    D = y * (1 - alpha)
    R = y * (alpha * N - 1)
    tau = D / (D + R)
    total = 0.0
    for size in range(N):
        for J in combinations(range(1, N), size):
            prob = tau ** size * (1 - tau) ** (N - 1 - size)
            pot = y * (N - size)          # player i and the loyal opponents give y
            total += prob * alpha * pot
    return total
