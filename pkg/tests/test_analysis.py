import json
from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings, strategies as st

from ratrec import InitialConditions, Parameters, simulate
from ratrec.analysis import (
    AsymptoticClass, Exactness, LimitCycle, Regime, classify, detect_period,
    gamma_form_forbidden_index, growth_rates, limit_cycle, limit_map,
    paper_good_set_condition, regime, report, verdict_from_dict,
    verdict_to_dict, verify_limit_relation, zero_conditions,
)
from ratrec.errors import (
    BothDegenerate, ForbiddenInitialConditions, WrongRegime, ZeroLimit,
)
from ratrec.numerics import Mode
from ratrec.recurrence import Trajectory
from ratrec.scenario_io import paper_example

from conftest import exact_scenarios, small_nonzero


@pytest.mark.parametrize("alpha, A, B, expected", [
    (1, F(21, 20), 1, Regime.MOD_GREATER),
    (F(-1, 2), F(1, 2), 1, Regime.EQUAL_NEG),
    (1, F(16, 25), 1, Regime.MOD_LESS),
    (3, 3, 1, Regime.EQUAL_POS),
    (0, 1, 1, Regime.DEGENERATE_ALPHA_ZERO),
    (2, 1, 0, Regime.DEGENERATE_B_ZERO),
    (1, 0, 1, Regime.MOD_LESS),
])
def test_regime(alpha, A, B, expected):
    assert regime(Parameters(alpha, A, B)) is expected


def test_both_degenerate():
    with pytest.raises(BothDegenerate):
        regime(Parameters(0, 0, 1))


@pytest.mark.parametrize("k, expected", [(4, (True, True)), (1, (False, False)), (2, (True, True))])
def test_zero_conditions(k, expected):
    sc = paper_example(k)
    zc = zero_conditions(sc.params, sc.init)
    assert (zc.bd_zero, zc.ac_zero) == expected


def test_classify_examples():
    v1 = classify(paper_example(1).params, paper_example(1).init)
    assert v1.asymptotic_class is AsymptoticClass.CONVERGES_TO_ZERO

    v2 = classify(paper_example(2).params, paper_example(2).init)
    assert v2.asymptotic_class is AsymptoticClass.CONSTANT_SUBSEQUENCES
    assert "2-prime-periodic" in v2.notes

    sc3 = paper_example(3)
    v3 = classify(sc3.params, sc3.init)
    assert v3.asymptotic_class is AsymptoticClass.UNBOUNDED
    assert v3.witness.rho_bd == F(-21, 25)

    sc4 = paper_example(4)
    v4 = classify(sc4.params, sc4.init)
    assert v4.asymptotic_class is AsymptoticClass.CONVERGES_TO_PERIOD4
    assert v4.witness.as_tuple() == (F(9, 10), F(-3, 10), F(2, 5), F(-6, 5))
    assert v4.witness.exactness is Exactness.EXACT_FROM_ZERO_CONDITIONS


def test_classify_forbidden():
    with pytest.raises(ForbiddenInitialConditions) as info:
        classify(Parameters(1, 1, 1), InitialConditions(a=1, b=1, c=1, d=-1))
    assert info.value.index == 1


def test_classify_constant_limit():
    # A - alpha + B l^2 = 0 with l = 1
    v = classify(Parameters(1, 2, -1), InitialConditions(1, 1, 1, 1))
    assert v.asymptotic_class is AsymptoticClass.CONSTANT_SUBSEQUENCES
    assert "converges to 1/1" in v.notes


def test_classify_mixed_zero_conditions():
    params = Parameters(1, 2, -1)
    init = InitialConditions(a=1, b=1, c=3, d=1)  # bd zero, ac not
    v = classify(params, init)
    assert v.asymptotic_class is AsymptoticClass.CONVERGES_TO_PERIOD4
    assert any("mixed" in note for note in v.notes)
    assert v.witness.as_tuple() == (1, 0, 1, 0)
    traj = simulate(params, init, 800, mode=Mode.FLOAT)
    assert abs(traj[800]) < 1e-6 and traj[799] == pytest.approx(1)


def test_classify_degenerate():
    init = InitialConditions(1, 2, 3, 4)
    assert classify(Parameters(0, 2, 1), init).asymptotic_class is AsymptoticClass.CONVERGES_TO_ZERO
    assert classify(Parameters(1, 2, 0), init).asymptotic_class is AsymptoticClass.CONVERGES_TO_ZERO
    assert classify(Parameters(2, 1, 0), init).asymptotic_class is AsymptoticClass.UNBOUNDED
    assert classify(Parameters(1, 1, 0), init).asymptotic_class is AsymptoticClass.CONSTANT_SUBSEQUENCES


def test_classify_marginal():
    # alpha = -1, A = 1, B = 1: rho = 1 when bd = -2 (and likewise ac = -2)
    both = classify(Parameters(-1, 1, 1), InitialConditions(a=1, b=1, c=-2, d=-2))
    assert both.asymptotic_class is AsymptoticClass.MARGINAL_UNCLASSIFIED
    one = classify(Parameters(-1, 1, 1), InitialConditions(a=1, b=1, c=1, d=-2))
    assert one.asymptotic_class is AsymptoticClass.UNBOUNDED
    assert any("marginal" in note for note in one.notes)


def test_growth_rates():
    sc = paper_example(3)
    q = growth_rates(sc.params, sc.init)
    assert (q.rho_bd, q.rho_ac) == (F(-21, 25), F(-53, 50))
    q = growth_rates(Parameters(-1, 1, 1), InitialConditions(a=1, b=1, c=1, d=1))
    assert q.e_bd == 1 and q.rho_bd == -2
    q = growth_rates(Parameters(-1, 1, 1), InitialConditions(a=1, b=1, c=1, d=-2))
    assert q.rho_bd == 1 and q.marginal_bd
    with pytest.raises(WrongRegime):
        growth_rates(Parameters(1, 2, 1), InitialConditions(1, 1, 1, 1))


@settings(max_examples=40, deadline=None)
@given(exact_scenarios(regime="eq-"))
def test_growth_quantities_relation(scenario):
    params, init = scenario
    q = growth_rates(params, init)
    for e, rho in ((q.e_bd, q.rho_bd), (q.e_ac, q.rho_ac)):
        assert rho == -(1 + 1 / e)


def test_limit_cycle_exact_example4():
    sc = paper_example(4)
    lc = limit_cycle(sc.params, sc.init)
    assert lc.as_tuple() == (F(9, 10), F(-3, 10), F(2, 5), F(-6, 5))
    assert verify_limit_relation(lc, sc.params, 0)


def test_limit_cycle_numeric():
    # exact all-ones inputs satisfy both zero-conditions; floats force iteration
    params = Parameters(1.0, 0.0, 1.0)
    lc = limit_cycle(params, InitialConditions(1.0, 1.0, 1.0, 1.0), tol=1e-9)
    assert lc.exactness is Exactness.NUMERIC_ESTIMATE
    assert abs(lc.l1 * lc.l3 - 1) < 1e-9
    assert verify_limit_relation(lc, params, 1e-9)
    assert limit_cycle(Parameters(1, 0, 1), InitialConditions(1, 1, 1, 1)).exactness \
        is Exactness.EXACT_FROM_ZERO_CONDITIONS

    params = Parameters(1, 0, 1)
    lc = limit_cycle(params, InitialConditions(1, 2, 3, 5))
    assert lc.exactness is Exactness.NUMERIC_ESTIMATE
    assert verify_limit_relation(lc, params, 1e-9)


def test_limit_cycle_wrong_regime():
    with pytest.raises(WrongRegime):
        limit_cycle(paper_example(1).params, paper_example(1).init)


def test_verify_limit_relation_failures():
    sc = paper_example(4)
    lc = limit_cycle(sc.params, sc.init)
    bent = LimitCycle(lc.l3, lc.l2, 2 * lc.l1, lc.l0, lc.exactness)
    assert not verify_limit_relation(bent, sc.params, 0)
    with pytest.raises(ZeroLimit):
        verify_limit_relation(LimitCycle(lc.l3, lc.l2, F(0), lc.l0), sc.params, 1e-6)


@given(small_nonzero, small_nonzero, small_nonzero, small_nonzero)
def test_limit_map_is_involution(alpha, A, B, x):
    assume(alpha != A)
    f = limit_map(Parameters(alpha, A, B))
    assert f(f(x)) == x


def test_detect_period():
    sc2, sc4 = paper_example(2), paper_example(4)
    assert detect_period(simulate(sc2.params, sc2.init, 60), 10) == 2
    assert detect_period(simulate(sc4.params, sc4.init, 60), 10) == 4
    assert detect_period(Trajectory((F(3),) * 30), 5) == 1
    sc1 = paper_example(1)
    assert detect_period(simulate(sc1.params, sc1.init, 60), 10) is None


def test_detect_period_tolerance():
    wobble = Trajectory(tuple(1.0 + (1e-12 if i % 2 else 0.0) for i in range(40)))
    assert detect_period(wobble, 5, tol=1e-9) == 1
    assert detect_period(wobble, 5, tol=0) == 2


@settings(max_examples=40, deadline=None)
@given(exact_scenarios(regime="lt"))
def test_numeric_cycle_is_period4_solution(scenario):
    params, init = scenario
    try:
        lc = limit_cycle(params, init, tol=1e-12, horizon=20_000)
    except Exception:
        assume(False)
    seeded = InitialConditions(**{k: F(v) for k, v in lc.seeds().items()})
    traj = simulate(params.to_mode(Mode.FLOAT), seeded.to_mode(Mode.FLOAT), 120)
    scale = max(abs(v) for v in lc.as_tuple())
    p = detect_period(traj, 8, tol=1e-6 * max(1.0, scale))
    assert p is not None and 4 % p == 0


@settings(max_examples=40, deadline=None)
@given(exact_scenarios(regime="eq-"))
def test_equal_neg_conserved_products(scenario):
    params, init = scenario
    traj = simulate(params, init, 120)
    assume(traj.complete)
    for n in range(1, 31):
        assert traj[4 * n - 3] * traj[4 * n - 1] == init.b * init.d
        assert traj[4 * n - 2] * traj[4 * n] == init.a * init.c


@settings(max_examples=40, deadline=None)
@given(exact_scenarios(regime="eq-"))
def test_equal_neg_rate_law(scenario):
    params, init = scenario
    traj = simulate(params, init, 120)
    assume(traj.complete)
    q = growth_rates(params, init)
    for n in range(1, 31):
        assert traj[4 * n - 1] == init.b * q.rho_bd**n
        assert traj[4 * n] == init.a * q.rho_ac**n


@settings(max_examples=60, deadline=None)
@given(small_nonzero, small_nonzero, small_nonzero, small_nonzero, small_nonzero)
def test_zero_conditions_force_period4(alpha, A, b, c, d):
    # pick B and a so that both zero-conditions hold
    assume(A != alpha)
    B = (alpha - A) / (b * d)
    a = (alpha - A) / (B * c)
    params, init = Parameters(alpha, A, B), InitialConditions(a, b, c, d)
    traj = simulate(params, init, 60)
    assert traj.complete
    assert all(traj[n + 4] == traj[n] for n in range(-3, 57))


def test_good_set_condition_disagrees_with_iteration():
    # alpha = A = B = 1, bd = -1/3: e = -3 is allowed by the published condition
    params = Parameters(1, 1, 1)
    init = InitialConditions(a=1, b=1, c=F(1, 3), d=F(-1, 3))
    assert paper_good_set_condition(params, init)
    assert gamma_form_forbidden_index(params, init) == 5
    assert simulate(params, init, 50).status.index == 5
    # e = 2 is excluded by the published condition, yet the solution exists
    init = InitialConditions(a=1, b=1, c=F(1, 3), d=F(1, 2))
    assert not paper_good_set_condition(params, init)
    assert simulate(params, init, 200).complete


@given(st.integers(1, 12), st.sampled_from(["bd", "ac"]), small_nonzero)
def test_gamma_form_forbidden_set(j, pair, A):
    params = Parameters(A, A, 1)
    uv = -A / j  # e = -j
    init = (InitialConditions(a=1, b=1, c=1, d=uv) if pair == "bd"
            else InitialConditions(a=1, b=1, c=uv, d=1))
    expected = 2 * j - 1 if pair == "bd" else 2 * j
    # the other pair has e = A, forbidden only if A is itself a negative integer
    other = gamma_form_forbidden_index(params, init)
    assert other <= expected
    traj = simulate(params, init, 2 * j + 4)
    assert traj.status.index == other


def test_verdict_round_trip():
    for k in (1, 2, 3, 4):
        sc = paper_example(k)
        v = classify(sc.params, sc.init)
        d = verdict_to_dict(v)
        assert verdict_from_dict(json.loads(json.dumps(d))) == v
        text = report(v)
        assert f"class: {v.asymptotic_class.value}" in text


def test_numeric_verdict_round_trip():
    params = Parameters(1, F(1, 2), 1)
    v = classify(params, InitialConditions(1, 2, 3, 5))
    assert v.witness.exactness is Exactness.NUMERIC_ESTIMATE
    assert verdict_from_dict(json.loads(json.dumps(verdict_to_dict(v)))) == v
