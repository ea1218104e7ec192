"""Seeded random sweeps: closed forms against direct iteration.

Draws come from :class:`random.Random` (MT19937) and only through
``getrandbits``, whose output for a given seed is fixed across Python
versions and platforms; integers in a range are obtained by rejection, so a
seed names the same scenarios everywhere.
"""
import random
from dataclasses import dataclass
from fractions import Fraction

from .closedform import closed_form, select_form
from .recurrence import InitialConditions, Parameters, simulate

__all__ = ["REGIMES", "Sampler", "Trial", "SweepResult", "run_sweep", "format_report"]

REGIMES = ("gt", "eq+", "eq-", "lt")
MAX_DRAWS = 10_000


class Sampler:
    """Small random rationals p/q with p in [-9, 9] \\ {0} and q in [1, 9]."""

    def __init__(self, seed):
        self._rng = random.Random(seed & (2**64 - 1))

    def randint(self, lo, hi):
        span = hi - lo + 1
        bits = span.bit_length()
        while True:
            r = self._rng.getrandbits(bits)
            if r < span:
                return lo + r

    def nonzero_rational(self):
        num = self.randint(1, 18)
        num = num - 10 if num <= 9 else num - 9
        return Fraction(num, self.randint(1, 9))

    def parameters(self, regime):
        while True:
            alpha, A = self.nonzero_rational(), self.nonzero_rational()
            if regime == "eq+":
                A = alpha
            elif regime == "eq-":
                A = -alpha
            elif regime == "gt" and abs(A) <= abs(alpha):
                continue
            elif regime == "lt" and abs(A) >= abs(alpha):
                continue
            elif regime not in REGIMES:
                raise ValueError(f"unknown regime {regime!r}")
            return Parameters(alpha, A, self.nonzero_rational())

    def initial_conditions(self):
        return InitialConditions(*(self.nonzero_rational() for _ in range(4)))

    def scenario(self, regime, horizon):
        """Parameters and seeds in ``regime`` whose iteration survives to ``horizon``."""
        for _ in range(MAX_DRAWS):
            params = self.parameters(regime)
            init = self.initial_conditions()
            traj = simulate(params, init, horizon)
            if traj.complete:
                return params, init, traj
        raise RuntimeError(f"no admissible {regime} scenario in {MAX_DRAWS} draws")


@dataclass(frozen=True)
class Trial:
    index: int
    regime: str
    params: Parameters
    init: InitialConditions
    form: str
    mismatch: tuple = None  # (m, closed form value, oracle value)

    @property
    def ok(self):
        return self.mismatch is None


@dataclass(frozen=True)
class SweepResult:
    trials: tuple
    seed: int
    horizon: int
    regime: str

    @property
    def passed(self):
        return sum(t.ok for t in self.trials)

    @property
    def first_failure(self):
        return next((t for t in self.trials if not t.ok), None)


def run_trial(index, regime, sampler, horizon, check=closed_form):
    params, init, traj = sampler.scenario(regime, horizon)
    mismatch = None
    for m in range(1, horizon + 1):
        got = check(params, init, m)
        if got != traj[m]:
            mismatch = (m, got, traj[m])
            break
    return Trial(index, regime, params, init, select_form(params), mismatch)


def run_sweep(trials, seed, horizon, regime="all"):
    regimes = REGIMES if regime == "all" else (regime,)
    for r in regimes:
        if r not in REGIMES:
            raise ValueError(f"unknown regime {r!r}")
    sampler = Sampler(seed)
    out = tuple(run_trial(i, regimes[i % len(regimes)], sampler, horizon) for i in range(trials))
    return SweepResult(out, seed, horizon, regime)


def format_report(result):
    from .numerics import render

    lines = [f"verify: trials={len(result.trials)} seed={result.seed} "
             f"horizon={result.horizon} regime={result.regime}"]
    for r in REGIMES:
        group = [t for t in result.trials if t.regime == r]
        if group:
            lines.append(f"  {r}: {sum(t.ok for t in group)}/{len(group)}")
    lines.append(f"{result.passed}/{len(result.trials)} exact matches")
    bad = result.first_failure
    if bad is None:
        lines.append("first counterexample: none")
    else:
        m, got, want = bad.mismatch
        lines.append(f"first counterexample: trial {bad.index} ({bad.regime}) {bad.params} "
                     f"{bad.init} m={m} {bad.form}={render(got)} oracle={render(want)}")
    return "\n".join(lines) + "\n"
