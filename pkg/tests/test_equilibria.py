from fractions import Fraction
from itertools import product

import pytest

from coopeq.equilibria import (COOPERATIVE, SELFISH, CoalitionGame, CoalitionStructure,
                               best_response_value, coalition_optima, pure_nash,
                               symmetric_mixed_nash_2x2)
from coopeq.games import PD, Chicken, Game, MixedStrategy, PublicGoods, Traveler

C, D = 0, 1


def _labels(game, profiles):
    return {tuple(game.strategies[s] for s in p) for p in profiles}


def test_pure_nash_pd():
    g = PD("0.20", "0.15", "0.05", 0).instantiate()
    assert pure_nash(g) == [(D, D)]


def test_pure_nash_traveler():
    g = Traveler(5).instantiate()
    assert _labels(g, pure_nash(g)) == {(180, 180)}


def test_pure_nash_chicken():
    g = Chicken(300, 200, 100, 0).instantiate()
    assert _labels(g, pure_nash(g)) == {("C", "D"), ("D", "C")}


def test_pure_nash_withstands_deviations():
    for fam in (Traveler(4, 50, 70), Chicken(5, 3, 2, 1), PD(4, 3, 1, 0)):
        g = fam.instantiate()
        n = g.n_strategies
        for s, t in pure_nash(g):
            assert all(g.pair(0, x, t) <= g.pair(0, s, t) for x in range(n))
            assert all(g.pair(1, y, s) <= g.pair(1, t, s) for y in range(n))


def test_pure_nash_three_players():
    g = PublicGoods(3, 1, "0.5").instantiate()
    assert pure_nash(g) == [(1, 1, 1)]


def test_grand_coalition_optima():
    g = PD("0.20", "0.15", "0.05", 0).instantiate()
    assert coalition_optima(CoalitionGame(g, COOPERATIVE)) == [(C, C)]
    g = Traveler(5).instantiate()
    assert _labels(g, coalition_optima(CoalitionGame(g, COOPERATIVE))) == {(300, 300)}
    g = Chicken(300, 200, 100, 0).instantiate()
    assert _labels(g, coalition_optima(CoalitionGame(g, COOPERATIVE))) == {
        ("C", "C"), ("C", "D"), ("D", "C")}


def test_selfish_optima_delegate_to_nash():
    g = Chicken(300, 200, 100, 0).instantiate()
    assert coalition_optima(CoalitionGame(g, SELFISH)) == pure_nash(g)


def test_grand_optima_maximise_sum():
    g = Traveler(3, 20, 30).instantiate()
    top = max(sum(g.payoffs(p)) for p in g.profiles)
    for p in coalition_optima(CoalitionGame(g, COOPERATIVE)):
        assert sum(g.payoffs(p)) == top


def test_intermediate_structure_in_three_player_game():
    g = PublicGoods(3, 1, "0.5").instantiate()
    pair_and_single = CoalitionStructure([{0, 1}, {2}])
    found = coalition_optima(CoalitionGame(g, pair_and_single))
    # the pair gains 2*0.5 - 1 = 0 per contribution: indifferent; the single free-rides
    assert all(p[2] == 1 for p in found)
    assert len(found) == 4


def test_coalition_structure_validation():
    with pytest.raises(ValueError):
        CoalitionStructure([{0, 1}, {1}])
    with pytest.raises(ValueError):
        CoalitionStructure([{0}, {2}])
    assert CoalitionStructure.singletons(3).is_selfish
    assert CoalitionStructure.grand(3).is_grand


@pytest.mark.parametrize("fam,q", [
    (Chicken(300, 200, 100, 0), Fraction(1, 2)),
    (Chicken(3, 2, 1, 0), Fraction(1, 2)),
    (Chicken(5, 3, 2, 0), Fraction(2, 4)),
    (Chicken(10, 4, 3, 1), Fraction(2, 8)),
])
def test_symmetric_mixed_nash(fam, q):
    g = fam.instantiate()
    m = symmetric_mixed_nash_2x2(g)
    assert m[0] == q
    vs_c = [g.pair(0, s, C) for s in (C, D)]
    vs_d = [g.pair(0, s, D) for s in (C, D)]
    # opponent plays m: both pure replies earn the same
    assert m[0] * vs_c[0] + m[1] * vs_d[0] == m[0] * vs_c[1] + m[1] * vs_d[1]


def test_symmetric_mixed_nash_absent_in_pd():
    assert symmetric_mixed_nash_2x2(PD(10, 7, 3, 0).instantiate()) is None


def test_best_response_pd():
    g = PD("0.20", "0.15", "0.05", 0).instantiate()
    assert best_response_value(g, 0, [C]) == (Fraction(1, 5), (D,))


def test_best_response_traveler_by_enumeration():
    fam = Traveler(5)
    g = fam.instantiate()
    value, arg = best_response_value(g, 0, [g.index(299)])
    pays = {c: fam.reimbursement(c, 299) for c in fam.claims}
    top = max(pays.values())
    assert value == top == 303
    assert tuple(g.strategies[a] for a in arg) == tuple(c for c, v in pays.items() if v == top)
    assert arg == (g.index(298),)


def test_best_response_keeps_ties():
    g = Chicken(300, 200, 100, 0).instantiate()
    half = MixedStrategy.binary(Fraction(1, 2))
    value, arg = best_response_value(g, 1, [half])
    assert value == 150 and arg == (C, D)


def test_best_response_dominant_reply():
    g = Game(("a", "b", "c"), 2,
             lambda p: ((3, 1, 0)[p[0]] + p[1], (3, 1, 0)[p[1]] + p[0]))
    for t in product(range(3)):
        assert best_response_value(g, 0, list(t))[1] == (0,)
