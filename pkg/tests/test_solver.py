from fractions import Fraction
from math import sqrt

import pytest

from coopeq.games import (PD, Chicken, Commons, Game, MixedStrategy, ParametricPD, PublicGoods,
                          Traveler, expected_payoff)
from coopeq.solver import (ModelInconsistencyError, UnsupportedGameError, cooperative_equilibrium,
                           diagonal_coefficients, induced_game, min_weight_meeting_floor,
                           solve_2x2_diagonal, solve_chicken, solve_commons, solve_public_goods,
                           solve_traveler, traveler_value_formula)

F = Fraction


def _diag(game, strategy):
    return expected_payoff(game, [strategy, strategy], 0)


@pytest.mark.parametrize("fam,rate", [
    (PD("0.20", "0.15", "0.05", 0), F(1, 2)),
    (PD(10, 7, 3, 0), F(1, 4)),
    (PD(400, 300, 0, -100), F(2, 3)),
    (ParametricPD(2), F(1, 2)),
    (ParametricPD(5), F(4, 5)),
    (ParametricPD("1.5"), F(1, 3)),
])
def test_cooperation_rates(fam, rate):
    ce = cooperative_equilibrium(fam)
    assert ce.cooperation == rate
    assert not ce.coincides_with_nash


@pytest.mark.parametrize("k", [0, "0.5", 1])
def test_parametric_pd_without_gain_is_nash(k):
    ce = cooperative_equilibrium(ParametricPD(k))
    assert ce.cooperation == 0
    assert ce.coincides_with_nash


def test_parametric_pd_nondecreasing():
    rates = [cooperative_equilibrium(ParametricPD(F(k, 4))).cooperation for k in range(0, 81)]
    assert all(a <= b for a, b in zip(rates, rates[1:]))
    assert cooperative_equilibrium(ParametricPD(100)).cooperation >= F(99, 100)


def test_floor_met_and_minimal_two_strategies():
    for fam in (PD("0.20", "0.15", "0.05", 0), PD(10, 7, 3, 0), PD(5, 3, 1, 0),
                ParametricPD(F(13, 4)), Commons(2, 1, "1.7"), PublicGoods(2, 1, "0.9")):
        ce = cooperative_equilibrium(fam)
        assert _diag(ce.game, ce.strategy) >= ce.guaranteed_value
        lam = ce.cooperation
        if lam > 0:
            lower = MixedStrategy.binary(lam - F(1, 10 ** 9))
            assert _diag(ce.game, lower) < ce.guaranteed_value


def test_irrational_crossing():
    # PD 5/3/1/0: floor 3/2 and the diagonal -l^2 + 3l + 1 cross at (3 - sqrt 7)/2
    ce = cooperative_equilibrium(PD(5, 3, 1, 0))
    assert ce.guaranteed_value == F(3, 2)
    assert abs(float(ce.cooperation) - (3 - sqrt(7)) / 2) < 1e-12
    assert _diag(ce.game, ce.strategy) >= F(3, 2)


def test_min_weight_meeting_floor_cases():
    assert min_weight_meeting_floor(0, 1, 0, F(1, 3)) == F(1, 3)
    assert min_weight_meeting_floor(1, 0, 0, F(1, 4)) == F(1, 2)
    assert min_weight_meeting_floor(1, 0, 0, -1) == 0
    with pytest.raises(ModelInconsistencyError):
        min_weight_meeting_floor(0, 1, 0, 2)


def test_diagonal_coefficients_parametric():
    g = ParametricPD(3).instantiate()
    # R=4, S=0, T=5, P=1: the diagonal is linear
    assert diagonal_coefficients(g) == (0, 3, 1)


def test_solve_2x2_diagonal_with_second_strategy_cooperative():
    g = Game.from_matrix(("D", "C"), [[1, 5], [0, 3]])
    s = solve_2x2_diagonal(g, F(3, 2), cooperative=1)
    assert abs(float(s[1]) - (3 - sqrt(7)) / 2) < 1e-12


def test_induced_game_rejects_unreachable_floor():
    g = PD(10, 7, 3, 0).instantiate()
    with pytest.raises(ModelInconsistencyError):
        induced_game(g, 8)
    ig = induced_game(g, 4)
    assert ig.allows((0, 0)) and not ig.allows((1, 1))


def test_traveler_b5():
    ce = solve_traveler(5)
    assert ce.guaranteed_value == F(3260, 11)
    assert tuple(ce.game.strategies[s] for s in ce.strategy.support) == (296, 297)
    # weight on 297 is 2/sqrt(11): met from above to bisection precision
    assert 0 <= _diag(ce.game, ce.strategy) - F(3260, 11) < F(1, 10 ** 9)
    assert abs(float(ce.strategy[ce.game.index(297)]) - 2 / sqrt(11)) < 1e-12
    assert float(ce.expected_label()) == pytest.approx(296.603, abs=5e-4)


def test_traveler_b2_small_range():
    ce = solve_traveler(2, 2, 100)
    assert ce.guaranteed_value == F(496, 5)
    assert set(ce.game.strategies[s] for s in ce.strategy.support) == {99, 100}
    assert 99 <= ce.expected_label() < 100


def test_traveler_b180_is_nash():
    ce = solve_traveler(180)
    assert ce.coincides_with_nash
    assert ce.expected_label() == 180
    assert ce.cooperative.value == F(54600, 361)
    assert ce.cooperative.value < 180


@pytest.mark.parametrize("b", [2, 3, 5, 10, 20, 40])
def test_traveler_formula_where_valid(b):
    assert solve_traveler(b).cooperative.value == traveler_value_formula(b)


def test_traveler_claims_fall_with_bonus():
    means = [solve_traveler(b).expected_label() for b in range(2, 61, 6)]
    assert all(a >= c for a, c in zip(means, means[1:]))


def test_public_goods():
    assert solve_public_goods(2, 1, "0.8") == F(2, 3)
    for alpha in ("0.55", "0.6", F(2, 3)):
        assert solve_public_goods(2, 1, alpha) == 0
    assert solve_public_goods(4, 1, "0.6") == F(5, 7)
    assert solve_public_goods(2, 3, "0.8") == 2


def test_public_goods_nondecreasing_in_alpha():
    alphas = [F(2, 3) + F(k, 63) for k in range(1, 21)]
    xs = [solve_public_goods(2, 1, a) for a in alphas]
    assert all(a <= b for a, b in zip(xs, xs[1:]))
    assert xs[0] > 0


def test_public_goods_two_player_paths_agree():
    for alpha in ("0.7", "0.8", "0.95"):
        ce = cooperative_equilibrium(PublicGoods(2, 1, alpha).instantiate())
        assert ce.cooperation == solve_public_goods(2, 1, alpha)


def test_commons():
    assert solve_commons(1, "1.2") == 0
    assert solve_commons(1, "1.6") == F(2, 3)
    with pytest.raises(UnsupportedGameError):
        solve_commons(1, 2, N=3)


def test_chicken_coincides_with_nash():
    ce = solve_chicken(300, 200, 100, 0)
    assert ce.coincides_with_nash
    assert ce.cooperation == F(1, 2)
    assert ce.symmetric_nash[0] == F(1, 2)


def test_nash_coincidence_when_cooperation_does_not_pay():
    g = Game.from_matrix(("C", "D"), [[2, 0], [3, 1]])  # PD with R - P small vs T - R
    ce = cooperative_equilibrium(g)
    # D = 1, R = 1, tau = 1/2, v = 2/2 + 0 = 1 = selfish value: tie goes to Nash
    assert ce.coincides_with_nash and ce.cooperation == 0


def test_rejects_non_games():
    with pytest.raises(TypeError):
        cooperative_equilibrium("PD")
    with pytest.raises(UnsupportedGameError):
        cooperative_equilibrium(PublicGoods(3, 1, "0.5").instantiate())


def test_affine_invariance_exact():
    for fam in (PD(10, 7, 3, 0), PD(5, 3, 1, 0), Chicken(300, 200, 100, 0), Traveler(5, 280, 300)):
        base = cooperative_equilibrium(fam)
        for c in (F(1, 10), 10):
            for d in (-5, 7):
                moved = cooperative_equilibrium(base.game.transformed(c, d))
                assert moved.strategy == base.strategy
