"""Cooperative equilibria of symmetric one-shot games.

Players forecast the value of playing selfishly and of playing as one
coalition, adopt the more optimistic forecast as a payoff floor, and play an
equilibrium of the game restricted to profiles meeting that floor.
"""
from .equilibria import (COOPERATIVE, SELFISH, CoalitionGame, CoalitionStructure,
                         best_response_value, coalition_optima, pure_nash,
                         symmetric_mixed_nash_2x2)
from .forecast import (DeviationSet, Forecast, abandon_probability, best_forecast,
                       coalition_value, forecast_pair, guaranteed_payoffs, incentive,
                       n_player_value, risk)
from .games import (PD, Chicken, Commons, Game, InvalidGameError, MixedStrategy, ParametricPD,
                    PublicGoods, Traveler, expected_payoff, instantiate, verify_symmetry)
from .solver import (CoopEquilibrium, InducedGame, ModelInconsistencyError,
                     UnsupportedGameError, cooperative_equilibrium, induced_game,
                     solve_2x2_diagonal, solve_chicken, solve_commons, solve_public_goods,
                     solve_traveler, traveler_value_formula)

__version__ = "0.1.0"
