"""Randomised invariants over rational PDs and Chickens."""
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from coopeq.equilibria import COOPERATIVE, SELFISH
from coopeq.forecast import coalition_value, forecast_pair
from coopeq.games import PD, Chicken, MixedStrategy, expected_payoff
from coopeq.oracle import Grid, oracle_cooperative_weight, oracle_value
from coopeq.solver import cooperative_equilibrium

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=20)
gaps = st.fractions(min_value=Fraction(1, 20), max_value=10, max_denominator=20)


@st.composite
def ordered(draw, n=4):
    """Strictly decreasing payoffs: a floor value plus positive gaps."""
    vals = [draw(rationals)]
    for _ in range(n - 1):
        vals.append(vals[-1] + draw(gaps))
    return vals[::-1]


@st.composite
def pds(draw):
    T, R, P, S = draw(ordered())
    return PD(T, R, P, S).instantiate()


@st.composite
def chickens(draw):
    T, R, S, P = draw(ordered())
    return Chicken(T, R, S, P).instantiate()


games = st.one_of(pds(), chickens())


@settings(max_examples=60, deadline=None)
@given(games)
def test_probability_in_unit_interval(g):
    for fc in forecast_pair(g):
        assert 0 <= fc.tau <= 1
        assert fc.incentive >= 0 and fc.risk >= 0
        assert fc.e_deviated <= fc.e_nobody


@settings(max_examples=60, deadline=None)
@given(games)
def test_floor_is_met(g):
    ce = cooperative_equilibrium(g)
    if not ce.coincides_with_nash:
        assert expected_payoff(g, [ce.strategy, ce.strategy], 0) >= ce.guaranteed_value
        lam = ce.cooperation
        if lam > Fraction(1, 10 ** 6):
            lower = MixedStrategy.binary(lam - Fraction(1, 10 ** 6))
            assert expected_payoff(g, [lower, lower], 0) < ce.guaranteed_value


@settings(max_examples=40, deadline=None)
@given(games, st.sampled_from([Fraction(1, 10), 10, 3]), st.sampled_from([-5, 7, 0]))
def test_affine_invariance(g, c, d):
    base = cooperative_equilibrium(g)
    moved = cooperative_equilibrium(g.transformed(c, d))
    assert moved.strategy == base.strategy
    assert moved.guaranteed_value == c * base.guaranteed_value + d


@settings(max_examples=40, deadline=None)
@given(games)
def test_player_symmetry(g):
    for p in (SELFISH, COOPERATIVE):
        assert coalition_value(g, p, 0).value == coalition_value(g, p, 1).value


@settings(max_examples=15, deadline=None)
@given(games)
def test_grid_oracle_agrees(g):
    # rescale to unit spread so the absolute tolerance is meaningful
    spread = g.max_payoff - g.min_payoff
    g = g.transformed(1 / spread, 0)
    grid = Grid(1e-3)
    for fc in forecast_pair(g):
        orc = oracle_value(g, fc.structure, grid)
        assert abs(float(fc.value) - orc["value"]) <= 5e-3
    assert abs(float(cooperative_equilibrium(g).cooperation)
               - oracle_cooperative_weight(g, grid)) <= 5e-3
