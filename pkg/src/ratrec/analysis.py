"""Long-run behaviour: regimes, zero-conditions, limits, growth, periods.

The case split follows the ratio |A/alpha|:

* > 1  -- terms go to zero, unless both zero-conditions hold, in which case
          every subsequence is constant;
* A = alpha   -- terms go to zero;
* A = -alpha  -- one subsequence of each pair grows geometrically while its
                 partner decays, their product staying fixed;
* < 1  -- each subsequence converges and the four limits form a period-4
          solution, linked pairwise by f(x) = (alpha - A) / (B x).
"""
import enum
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import numerics
from .errors import (
    BothDegenerate, DegenerateUndefined, FloatModeUnsupported,
    ForbiddenInitialConditions, NoConvergenceWithinHorizon, WrongRegime,
    ZeroLimit,
)
from .numerics import Mode, render
from .recurrence import simulate, StatusKind

__all__ = [
    "Regime", "ZeroConditions", "RegimeQuantities", "Exactness", "LimitCycle",
    "AsymptoticClass", "Verdict", "regime", "zero_conditions", "classify",
    "growth_rates", "limit_cycle", "verify_limit_relation", "limit_map",
    "detect_period", "paper_good_set_condition", "gamma_form_forbidden_index",
    "verdict_to_dict", "verdict_from_dict", "verdict_to_json", "report",
]


class Regime(enum.Enum):
    MOD_GREATER = "ModGreater"
    EQUAL_POS = "EqualPos"
    EQUAL_NEG = "EqualNeg"
    MOD_LESS = "ModLess"
    DEGENERATE_ALPHA_ZERO = "DegenerateAlphaZero"
    DEGENERATE_B_ZERO = "DegenerateBZero"


class AsymptoticClass(enum.Enum):
    CONVERGES_TO_ZERO = "ConvergesToZero"
    CONSTANT_SUBSEQUENCES = "ConstantSubsequences"
    CONVERGES_TO_PERIOD4 = "ConvergesToPeriod4"
    UNBOUNDED = "Unbounded"
    MARGINAL_UNCLASSIFIED = "MarginalUnclassified"
    FORBIDDEN = "Forbidden"


class Exactness(enum.Enum):
    EXACT_FROM_ZERO_CONDITIONS = "ExactFromZeroConditions"
    NUMERIC_ESTIMATE = "NumericEstimate"


@dataclass(frozen=True)
class ZeroConditions:
    bd_zero: bool
    ac_zero: bool

    @property
    def both(self):
        return self.bd_zero and self.ac_zero

    @property
    def mixed(self):
        return self.bd_zero != self.ac_zero


@dataclass(frozen=True)
class RegimeQuantities:
    """e = A/(B uv) and the per-block growth ratio rho = -(A + B uv)/A."""

    e_bd: object
    e_ac: object
    rho_bd: object
    rho_ac: object

    @property
    def marginal_bd(self):
        return abs(self.rho_bd) == 1

    @property
    def marginal_ac(self):
        return abs(self.rho_ac) == 1


@dataclass(frozen=True)
class LimitCycle:
    """Limits of x[4n-3], x[4n-2], x[4n-1], x[4n]."""

    l3: object
    l2: object
    l1: object
    l0: object
    exactness: Exactness = Exactness.NUMERIC_ESTIMATE

    def as_tuple(self):
        return (self.l3, self.l2, self.l1, self.l0)

    def seeds(self):
        """The cycle as seeds (a, b, c, d) reproducing it from index -3."""
        return dict(a=self.l0, b=self.l1, c=self.l2, d=self.l3)


@dataclass(frozen=True)
class Verdict:
    regime: Regime
    zero_conditions: ZeroConditions
    asymptotic_class: AsymptoticClass
    witness: object = None
    notes: tuple = field(default_factory=tuple)


def regime(params):
    alpha, A, B = params.alpha, params.A, params.B
    if alpha == 0:
        if A == 0:
            raise BothDegenerate("alpha = 0 and A = 0: no iterate past x[2] is defined")
        return Regime.DEGENERATE_ALPHA_ZERO
    if B == 0:
        return Regime.DEGENERATE_B_ZERO
    if A == alpha:
        return Regime.EQUAL_POS
    if A == -alpha:
        return Regime.EQUAL_NEG
    return Regime.MOD_GREATER if abs(A) > abs(alpha) else Regime.MOD_LESS


def zero_conditions(params, init):
    shift = params.A - params.alpha
    return ZeroConditions(
        bd_zero=shift + params.B * init.b * init.d == 0,
        ac_zero=shift + params.B * init.a * init.c == 0,
    )


def _quantities(params, init):
    A, B = params.A, params.B
    bd, ac = init.b * init.d, init.a * init.c
    return RegimeQuantities(
        e_bd=A / (B * bd), e_ac=A / (B * ac),
        rho_bd=-(A + B * bd) / A, rho_ac=-(A + B * ac) / A,
    )


def growth_rates(params, init):
    """Growth ratios for A = -alpha.

    There x[4n-3] = d rho_bd^-n and x[4n-1] = b rho_bd^n exactly, likewise
    x[4n-2] = c rho_ac^-n and x[4n] = a rho_ac^n.
    """
    if regime(params) is not Regime.EQUAL_NEG:
        raise WrongRegime("growth rates are defined for A = -alpha only")
    return _quantities(params, init)


def limit_map(params):
    """f(x) = (alpha - A) / (B x); an involution pairing l1 with l3 and l0 with l2."""
    k = params.alpha - params.A
    B = params.B

    def f(x):
        return k / (B * x)

    return f


def _exact_cycle(params, init):
    f = limit_map(params)
    return LimitCycle(f(init.b), f(init.a), f(init.d), f(init.c),
                      Exactness.EXACT_FROM_ZERO_CONDITIONS)


def limit_cycle(params, init, tol=1e-9, horizon=10_000):
    """Limits of the four subsequences when |A/alpha| < 1.

    With both zero-conditions the cycle is exact.  Otherwise the recurrence
    is iterated in floats until every subsequence has moved by less than
    ``tol`` for 4 consecutive terms of that subsequence.
    """
    if regime(params) is not Regime.MOD_LESS:
        raise WrongRegime("limit cycles are computed for |A/alpha| < 1 only")
    if params.mode is Mode.EXACT and init.mode is Mode.EXACT and zero_conditions(params, init).both:
        return _exact_cycle(params, init)

    p = params.to_mode(Mode.FLOAT)
    alpha, A, B = p.alpha, p.A, p.B
    xs = list(init.to_mode(Mode.FLOAT).seeds())
    calm = [0, 0, 0, 0]
    for n in range(1, horizon + 1):
        den = A + B * xs[-2] * xs[-4]
        if den == 0.0 or not math.isfinite(den):
            break
        x = alpha * xs[-4] / den
        if not math.isfinite(x):
            break
        r = n % 4
        calm[r] = calm[r] + 1 if abs(x - xs[-4]) < tol else 0
        xs.append(x)
        del xs[0]
        if min(calm) >= 4:
            # xs now ends at x[n]; rotate into residue order
            by_res = {(n - k) % 4: xs[3 - k] for k in range(4)}
            return LimitCycle(by_res[1], by_res[2], by_res[3], by_res[0])
    raise NoConvergenceWithinHorizon(
        f"subsequences did not settle to within {tol} by n = {horizon}")


def verify_limit_relation(lc, params, tol):
    """Check B l1 l3 = alpha - A and B l0 l2 = alpha - A to within ``tol``."""
    if any(v == 0 for v in lc.as_tuple()):
        raise ZeroLimit("a zero limit makes the relation vacuous")
    if any(isinstance(v, float) for v in lc.as_tuple()):
        params = params.to_mode(Mode.FLOAT)
    target = params.alpha - params.A
    B = params.B
    return (abs(B * lc.l1 * lc.l3 - target) <= tol
            and abs(B * lc.l0 * lc.l2 - target) <= tol)


def detect_period(traj, max_period, tol=0):
    """Prime period of the trajectory's tail, or None.

    The smallest p <= max_period with |x[n+p] - x[n]| <= tol for every n in
    the last third of the trajectory.  Exact trajectories with ``tol == 0``
    compare by equality.
    """
    values = traj.values
    size = len(values)
    if max_period < 1:
        raise ValueError("max_period must be positive")
    if 3 * max_period > size:
        raise ValueError(f"max_period {max_period} exceeds a third of {size} points")
    start = size - size // 3
    for p in range(1, max_period + 1):
        if all(abs(values[j] - values[j - p]) <= tol for j in range(start, size)):
            return p
    return None


def paper_good_set_condition(params, init):
    """The published sufficient condition for A = alpha, taken at face value.

    True when neither A/(Bbd) nor A/(Bac) lies in {1} or the even integers.
    Direct iteration shows it is not the right set; see
    :func:`gamma_form_forbidden_index`.
    """
    q = _quantities(params, init)
    for e in (q.e_bd, q.e_ac):
        if e == 1 or (Fraction(e).denominator == 1 and e % 2 == 0):
            return False
    return True


def gamma_form_forbidden_index(params, init):
    """First undefined index for A = alpha, from e = A/(B uv) alone.

    With A = alpha the factors are A^(j-1) (A + j B uv), so the solution
    breaks exactly when e is a negative integer -j: at x[2j-1] for the
    (b, d) pair and at x[2j] for the (a, c) pair.
    """
    if params.A != params.alpha or params.alpha == 0 or params.B == 0:
        raise WrongRegime("needs A = alpha != 0 and B != 0")
    q = _quantities(params, init)
    hits = []
    for e, offset in ((q.e_bd, 1), (q.e_ac, 0)):
        e = Fraction(e)
        if e.denominator == 1 and e < 0:
            hits.append(2 * int(-e) - offset)
    return min(hits) if hits else None


def classify(params, init, horizon=200, tol=1e-9, limit_horizon=10_000):
    """Verdict on the solution's long-run behaviour.

    The solution is first iterated exactly to ``horizon`` to rule out a
    vanishing denominator.
    """
    if params.mode is not Mode.EXACT or init.mode is not Mode.EXACT:
        raise FloatModeUnsupported("classification compares exactly; pass exact inputs")
    reg = regime(params)
    if params.A == 0 and params.B == 0:
        raise DegenerateUndefined("A = 0 and B = 0: the denominator is identically zero")
    traj = simulate(params, init, horizon)
    if traj.status.kind is StatusKind.FORBIDDEN:
        raise ForbiddenInitialConditions(traj.status.index)
    zc = zero_conditions(params, init)
    C = AsymptoticClass

    def verdict(cls, witness=None, *notes):
        return Verdict(reg, zc, cls, witness, tuple(notes))

    if reg is Regime.DEGENERATE_ALPHA_ZERO:
        return verdict(C.CONVERGES_TO_ZERO, None, "alpha = 0: x[n] = 0 for every n >= 1")

    if reg is Regime.DEGENERATE_B_ZERO:
        ratio = params.alpha / params.A
        note = f"B = 0: x[n+4] = {render(ratio)} x[n]"
        if abs(ratio) < 1:
            return verdict(C.CONVERGES_TO_ZERO, None, note)
        if ratio == 1:
            return verdict(C.CONSTANT_SUBSEQUENCES, _seed_cycle(init), note)
        if ratio == -1:
            return verdict(C.MARGINAL_UNCLASSIFIED, None, note, "period-8 sign alternation")
        return verdict(C.UNBOUNDED, None, note)

    if reg is Regime.MOD_GREATER:
        if zc.both:
            notes = ["every subsequence is constant"]
            if init.a == init.b == init.c == init.d:
                notes.append(f"converges to {render(init.a)}")
            if init.d == init.b and init.c == init.a and init.b != init.c:
                notes.append("2-prime-periodic")
            return verdict(C.CONSTANT_SUBSEQUENCES, _seed_cycle(init), *notes)
        if zc.mixed:
            zero = Fraction(0)
            lc = LimitCycle(
                init.d if zc.bd_zero else zero, init.c if zc.ac_zero else zero,
                init.b if zc.bd_zero else zero, init.a if zc.ac_zero else zero,
                Exactness.EXACT_FROM_ZERO_CONDITIONS,
            )
            kept = "(b, d)" if zc.bd_zero else "(a, c)"
            return verdict(C.CONVERGES_TO_PERIOD4, lc,
                           "paper-unstated case: mixed zero-conditions",
                           f"{kept} subsequences constant, the other pair tends to 0")
        return verdict(C.CONVERGES_TO_ZERO)

    if reg is Regime.EQUAL_POS:
        return verdict(C.CONVERGES_TO_ZERO)

    if reg is Regime.EQUAL_NEG:
        q = growth_rates(params, init)
        marginal = [name for name, flag in (("bd", q.marginal_bd), ("ac", q.marginal_ac)) if flag]
        if len(marginal) == 2:
            return verdict(C.MARGINAL_UNCLASSIFIED, q, "marginal ratio |rho| = 1 on both pairs")
        notes = [f"marginal ratio |rho| = 1 on the {m} pair" for m in marginal]
        return verdict(C.UNBOUNDED, q, *notes)

    lc = limit_cycle(params, init, tol, limit_horizon)
    return verdict(C.CONVERGES_TO_PERIOD4, lc)


def _seed_cycle(init):
    return LimitCycle(init.d, init.c, init.b, init.a, Exactness.EXACT_FROM_ZERO_CONDITIONS)


# serialisation

def _num(x):
    return None if x is None else render(x)


def _parse_num(s):
    if s is None:
        return None
    if "/" in s or s.lstrip("-").isdigit():
        return numerics.rat_from_string(s)
    return float(s)


def verdict_to_dict(v):
    witness = None
    if isinstance(v.witness, LimitCycle):
        w = v.witness
        witness = {"type": "LimitCycle", "l3": _num(w.l3), "l2": _num(w.l2),
                   "l1": _num(w.l1), "l0": _num(w.l0), "exactness": w.exactness.value}
    elif isinstance(v.witness, RegimeQuantities):
        w = v.witness
        witness = {"type": "RegimeQuantities", "e_bd": _num(w.e_bd), "e_ac": _num(w.e_ac),
                   "rho_bd": _num(w.rho_bd), "rho_ac": _num(w.rho_ac)}
    return {
        "regime": v.regime.value,
        "zero_conditions": {"bd_zero": v.zero_conditions.bd_zero,
                            "ac_zero": v.zero_conditions.ac_zero},
        "class": v.asymptotic_class.value,
        "witness": witness,
        "notes": list(v.notes),
    }


def verdict_from_dict(d):
    w = d.get("witness")
    witness = None
    if w is not None:
        kind = w["type"]
        if kind == "LimitCycle":
            witness = LimitCycle(*(_parse_num(w[k]) for k in ("l3", "l2", "l1", "l0")),
                                 Exactness(w["exactness"]))
        elif kind == "RegimeQuantities":
            witness = RegimeQuantities(*(_parse_num(w[k]) for k in ("e_bd", "e_ac", "rho_bd", "rho_ac")))
        else:
            raise ValueError(f"unknown witness type {kind!r}")
    zc = d["zero_conditions"]
    return Verdict(Regime(d["regime"]), ZeroConditions(zc["bd_zero"], zc["ac_zero"]),
                   AsymptoticClass(d["class"]), witness, tuple(d.get("notes", ())))


def verdict_to_json(v):
    return json.dumps(verdict_to_dict(v), indent=2)


def report(v):
    """Plain ``key: value`` lines."""
    d = verdict_to_dict(v)
    lines = [
        f"regime: {d['regime']}",
        f"bd_zero: {str(v.zero_conditions.bd_zero).lower()}",
        f"ac_zero: {str(v.zero_conditions.ac_zero).lower()}",
        f"class: {d['class']}",
    ]
    w = d["witness"]
    if w is not None:
        lines.append(f"witness: {w['type']}")
        if w["type"] == "LimitCycle":
            lines.append(f"cycle (l3, l2, l1, l0): {w['l3']}, {w['l2']}, {w['l1']}, {w['l0']}")
            lines.append(f"exactness: {w['exactness']}")
        else:
            for k in ("e_bd", "e_ac", "rho_bd", "rho_ac"):
                lines.append(f"{k}: {w[k]}")
    for note in v.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"
