"""Exact simulation, closed-form solution and classification of

    x[n+1] = alpha x[n-3] / (A + B x[n-1] x[n-3]).
"""
from .numerics import Mode, int_pow, rat_from_string, render, rising_factorial
from .recurrence import (
    InitialConditions, Parameters, Status, StatusKind, Trajectory,
    denominator, first_forbidden_index, simulate, step,
)
from .closedform import (
    closed_form, corollary1_term, corollary2_term, iter_closed_form, p_poly,
    special_case_elsayed, theorem1_term,
)
from .analysis import (
    AsymptoticClass, LimitCycle, Regime, Verdict, classify, detect_period,
    growth_rates, limit_cycle, regime, verify_limit_relation, zero_conditions,
)
from .scenario_io import (
    Scenario, emit_plot, export_csv, paper_example, parse_scenario,
    render_scenario,
)

__version__ = "0.1.0"
