"""Direct iteration of x[n+1] = alpha x[n-3] / (A + B x[n-1] x[n-3]).

This is the ground truth the closed forms are checked against.  Indices are
the natural ones: the seeds sit at -3, -2, -1, 0 (d, c, b, a) and the first
computed term is x[1].
"""
import enum
from dataclasses import dataclass
from fractions import Fraction

from . import numerics
from .errors import (
    DegenerateUndefined, DivisionByZero, ExactBlowup, FloatModeUnsupported,
    ZeroInitialCondition,
)
from .numerics import Mode

__all__ = [
    "Parameters", "InitialConditions", "StatusKind", "Status", "Trajectory",
    "denominator", "step", "simulate", "first_forbidden_index",
]


def _coerce(value, mode):
    if isinstance(value, str):
        value = numerics.rat_from_string(value)
    if mode is None:
        return value if isinstance(value, float) else Fraction(value)
    return numerics.to_mode(value, mode)


@dataclass(frozen=True)
class Parameters:
    """Coefficients alpha, A, B.  Strings are parsed exactly."""

    alpha: object
    A: object
    B: object

    def __post_init__(self):
        for name in ("alpha", "A", "B"):
            object.__setattr__(self, name, _coerce(getattr(self, name), None))
        numerics.common_mode(self.alpha, self.A, self.B)

    @property
    def mode(self):
        return numerics.mode_of(self.alpha)

    @property
    def degenerate_alpha(self):
        return self.alpha == 0

    @property
    def degenerate_b(self):
        return self.B == 0

    def to_mode(self, mode):
        return Parameters(*(numerics.to_mode(v, mode) for v in (self.alpha, self.A, self.B)))

    def __str__(self):
        r = numerics.render
        return f"alpha={r(self.alpha)} A={r(self.A)} B={r(self.B)}"


@dataclass(frozen=True)
class InitialConditions:
    """Seeds x[-3] = d, x[-2] = c, x[-1] = b, x[0] = a; all nonzero."""

    a: object
    b: object
    c: object
    d: object

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            v = _coerce(getattr(self, name), None)
            if v == 0:
                raise ZeroInitialCondition(f"initial condition {name} must be nonzero")
            object.__setattr__(self, name, v)
        numerics.common_mode(self.a, self.b, self.c, self.d)

    @property
    def mode(self):
        return numerics.mode_of(self.a)

    def seeds(self):
        """(x[-3], x[-2], x[-1], x[0])."""
        return (self.d, self.c, self.b, self.a)

    def to_mode(self, mode):
        return InitialConditions(*(numerics.to_mode(v, mode) for v in (self.a, self.b, self.c, self.d)))

    def __str__(self):
        r = numerics.render
        return f"a={r(self.a)} b={r(self.b)} c={r(self.c)} d={r(self.d)}"


class StatusKind(enum.Enum):
    COMPLETE = "Complete"
    FORBIDDEN = "ForbiddenAt"
    OVERFLOWED = "Overflowed"
    EXACT_BLOWUP = "ExactBlowupAt"


@dataclass(frozen=True)
class Status:
    kind: StatusKind
    index: int = None

    def __str__(self):
        if self.kind is StatusKind.COMPLETE:
            return self.kind.value
        return f"{self.kind.value} {self.index}"

    @classmethod
    def parse(cls, text):
        parts = text.split()
        kind = StatusKind(parts[0])
        if kind is StatusKind.COMPLETE:
            return cls(kind)
        return cls(kind, int(parts[1]))


COMPLETE = Status(StatusKind.COMPLETE)


@dataclass(frozen=True)
class Trajectory:
    """x[-3], ..., x[N] plus how the run ended.

    ``traj[n]`` uses the recurrence's own indexing, so ``traj[-3]`` is the
    seed d and ``traj[1]`` the first computed term.  ``values`` is the raw
    tuple, offset by 3.
    """

    values: tuple
    status: Status = COMPLETE
    horizon: int = None
    start_index = -3

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if self.horizon is None:
            object.__setattr__(self, "horizon", self.last_index)

    @property
    def last_index(self):
        return len(self.values) - 4

    @property
    def mode(self):
        return numerics.mode_of(self.values[0])

    @property
    def complete(self):
        return self.status.kind is StatusKind.COMPLETE

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n):
        if not isinstance(n, int):
            raise TypeError("trajectory indices are integers")
        if n < -3 or n > self.last_index:
            raise IndexError(f"index {n} outside [-3, {self.last_index}]")
        return self.values[n + 3]

    def indices(self):
        return range(-3, self.last_index + 1)

    def items(self):
        return zip(self.indices(), self.values)


def denominator(params, x_prev1, x_prev3):
    """A + B x[n-1] x[n-3]."""
    numerics.common_mode(params.alpha, x_prev1, x_prev3)
    return params.A + params.B * x_prev1 * x_prev3


def _zero_or_bad(den):
    if isinstance(den, float):
        return den == 0.0 or not numerics.is_finite(den)
    return den == 0


def step(params, x_prev1, x_prev3):
    """One application of the map: alpha x[n-3] / (A + B x[n-1] x[n-3])."""
    den = denominator(params, x_prev1, x_prev3)
    if _zero_or_bad(den):
        raise DivisionByZero(f"denominator A + B x[n-1] x[n-3] = {den}")
    return params.alpha * x_prev3 / den


def simulate(params, init, horizon, mode=None):
    """Iterate up to x[horizon], stopping early on a zero denominator.

    ``mode`` converts both parameters and seeds first (exact inputs can be
    run in float mode this way); by default the inputs' own mode is used and
    they must agree.
    """
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    if mode is not None:
        params, init = params.to_mode(mode), init.to_mode(mode)
    mode = numerics.common_mode(params.alpha, init.a)
    if params.A == 0 and params.B == 0:
        raise DegenerateUndefined("A = 0 and B = 0: the denominator is identically zero")

    alpha, A, B = params.alpha, params.A, params.B
    xs = list(init.seeds())
    exact = mode is Mode.EXACT
    limit = numerics.bit_limit() if exact else None
    status = COMPLETE
    for n in range(1, horizon + 1):
        # xs[i] holds x[i - 3]; x[n] needs x[n-2] and x[n-4]
        x2, x4 = xs[n + 1], xs[n - 1]
        den = A + B * x2 * x4
        if exact:
            if den == 0:
                status = Status(StatusKind.FORBIDDEN, n)
                break
            x = alpha * x4 / den
            try:
                numerics.check_size(x, limit)
            except ExactBlowup:
                status = Status(StatusKind.EXACT_BLOWUP, n)
                break
        else:
            if den == 0.0:
                status = Status(StatusKind.FORBIDDEN, n)
                break
            x = alpha * x4 / den
            if not (numerics.is_finite(den) and numerics.is_finite(x)):
                status = Status(StatusKind.OVERFLOWED, n)
                break
        xs.append(x)
    return Trajectory(tuple(xs), status, horizon)


def first_forbidden_index(params, init, horizon):
    """Smallest n <= horizon whose denominator vanishes exactly, or None."""
    if params.mode is not Mode.EXACT or init.mode is not Mode.EXACT:
        raise FloatModeUnsupported("forbidden-set detection needs exact inputs")
    traj = simulate(params, init, horizon)
    if traj.status.kind is StatusKind.FORBIDDEN:
        return traj.status.index
    if traj.status.kind is StatusKind.EXACT_BLOWUP:
        raise ExactBlowup(None, numerics.bit_limit())
    return None
