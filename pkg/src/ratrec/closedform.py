"""Explicit solution formulas, evaluated exactly.

The solution splits into four interleaved subsequences.  Odd indices
(4n-3, 4n-1) depend on the seeds only through the product b*d, even indices
(4n-2, 4n) only through a*c.  Each subsequence is a ratio of products of the
factors

    Q_j(uv) = A**j + B*uv * sum(A**i * alpha**(j-1-i) for i in range(j))

with uv = bd or ac.  ``Q_j`` vanishing is exactly the event that the
denominator of the recurrence vanishes at index 2j-1 (bd pair) or 2j
(ac pair), which is what :func:`forbidden_index_from_factors` relies on.
"""
import enum
from fractions import Fraction

from . import numerics
from .errors import (
    DegenerateCoefficients, DegenerateUndefined, ForbiddenInput,
    RequiresAEqAlpha, RequiresANeqAlpha,
)
from .numerics import int_pow, rising_factorial

__all__ = [
    "Residue", "Pair", "residue_of", "theorem1_factor", "p_poly",
    "theorem1_term", "corollary1_term", "corollary2_term",
    "special_case_elsayed", "closed_form", "select_form", "iter_closed_form",
    "forbidden_index_from_factors", "FORMS",
]


class Pair(enum.Enum):
    BD = "bd"
    AC = "ac"


class Residue(enum.Enum):
    """Subsequence of an index m >= 1, named by its offset from 4n."""

    M3 = 3  # 4n-3
    M2 = 2  # 4n-2
    M1 = 1  # 4n-1
    M0 = 0  # 4n

    @property
    def pair(self):
        return Pair.BD if self in (Residue.M3, Residue.M1) else Pair.AC

    @property
    def leading(self):
        """Name of the seed that multiplies the formula (x[m-4n] for n = 0)."""
        return {Residue.M3: "d", Residue.M2: "c", Residue.M1: "b", Residue.M0: "a"}[self]

    @property
    def factors_needed(self):
        """For block n, Q_1 .. Q_{2n + offset} must be nonzero."""
        return -1 if self in (Residue.M3, Residue.M2) else 0


def residue_of(m):
    """Map m >= 1 to (Residue, n) with m = 4n - offset."""
    if m < 1:
        raise ValueError(f"closed forms are indexed from 1, got {m}")
    offset = (-m) % 4
    return Residue(offset), (m + offset) // 4


def _uv(init, pair):
    return init.b * init.d if pair is Pair.BD else init.a * init.c


def _index_of_factor(j, pair):
    return 2 * j - 1 if pair is Pair.BD else 2 * j


def _check_modes(params, init):
    numerics.common_mode(params.alpha, params.A, params.B, init.a, init.b, init.c, init.d)
    if params.A == 0 and params.B == 0:
        raise DegenerateUndefined("A = 0 and B = 0: the denominator is identically zero")


def theorem1_factor(j, params, uv):
    """A**j + B*uv * sum_{i<j} A**i alpha**(j-1-i), written out term by term."""
    A, alpha = params.A, params.alpha
    total = 0 * A
    a_pow = 1 + 0 * A
    for i in range(j):
        total += a_pow * int_pow(alpha, j - 1 - i)
        a_pow *= A
    return int_pow(A, j) + params.B * uv * total


def p_poly(p, params, u, v):
    """A**p (A - alpha + B u v) - B u v alpha**p."""
    A, alpha, buv = params.A, params.alpha, params.B * u * v
    return int_pow(A, p) * (A - alpha + buv) - buv * int_pow(alpha, p)


def _require_nonzero(factors, pair, what):
    """``factors`` is [F_1, F_2, ...]; raise on the first zero one."""
    for j, f in enumerate(factors, start=1):
        if f == 0:
            idx = _index_of_factor(j, pair)
            raise ForbiddenInput(f"{what} factor {j} vanishes: x[{idx}] is undefined", idx)


def _product_form(residue, n, lead, alpha, factor):
    """Shared shape of both the Theorem-1 and P-polynomial forms.

    ``factor(j)`` returns F_j; the first two residues are
    lead alpha^n prod_{p<n-1} F_{2p+2} / prod_{p<n} F_{2p+1}, the last two
    lead alpha^n prod_{p<n} F_{2p+1} / prod_{p<n} F_{2p+2}.
    """
    odd = [factor(2 * p + 1) for p in range(n)]
    if residue in (Residue.M3, Residue.M2):
        num = [factor(2 * p + 2) for p in range(n - 1)]
        den = odd
    else:
        num = odd
        den = [factor(2 * p + 2) for p in range(n)]
    out = lead * int_pow(alpha, n)
    for f in num:
        out *= f
    for f in den:
        out /= f
    return out


def theorem1_term(params, init, m):
    """x[m] from the general product formula (any coefficients)."""
    _check_modes(params, init)
    residue, n = residue_of(m)
    pair = residue.pair
    uv = _uv(init, pair)
    needed = 2 * n + residue.factors_needed
    factors = [theorem1_factor(j, params, uv) for j in range(1, needed + 1)]
    _require_nonzero(factors, pair, "Theorem 1")
    lead = getattr(init, residue.leading)
    return _product_form(residue, n, lead, params.alpha, lambda j: factors[j - 1])


def corollary1_term(params, init, m):
    """x[m] from the P-polynomial form; needs A != alpha."""
    _check_modes(params, init)
    if params.A == params.alpha:
        raise RequiresANeqAlpha("the P-polynomial form needs A != alpha")
    residue, n = residue_of(m)
    pair = residue.pair
    u, v = (init.b, init.d) if pair is Pair.BD else (init.a, init.c)
    needed = 2 * n + residue.factors_needed
    factors = [p_poly(j, params, u, v) for j in range(1, needed + 1)]
    _require_nonzero(factors, pair, "P-polynomial")
    lead = getattr(init, residue.leading)
    out = _product_form(residue, n, lead, params.alpha, lambda j: factors[j - 1])
    if residue in (Residue.M3, Residue.M2):
        out *= params.A - params.alpha
    return out


def corollary2_term(params, init, m):
    """x[m] for A = alpha through rising factorials of e = A/(B uv).

    The Gamma ratios all have integer shifts, so with e = A/(B b d)

        x[4n-3] = A/(B b) 4^(n-1) (e/2+1)_(n-1)^2 / (e+1)_(2n-1)
        x[4n-1] = b (e+1)_(2n) / (4^n (e/2+1)_n^2)

    and the same with (a, c) for the even residues.  The 4n-2 case uses
    (e+1) like 4n-3 does; the unshifted argument is wrong, the oracle
    disagrees with it already at n = 1.
    """
    _check_modes(params, init)
    A, B = params.A, params.B
    if A != params.alpha:
        raise RequiresAEqAlpha("the Gamma form needs A == alpha")
    if B == 0:
        raise DegenerateCoefficients("the Gamma form needs B != 0")
    residue, n = residue_of(m)
    pair = residue.pair
    uv = _uv(init, pair)
    needed = 2 * n + residue.factors_needed
    # with A = alpha, Q_j = A^(j-1) (A + j B uv)
    _require_nonzero(
        [int_pow(A, j - 1) * (A + j * B * uv) for j in range(1, needed + 1)],
        pair, "Gamma-form",
    )
    e = A / (B * uv)
    half = e / 2 + 1
    if residue in (Residue.M3, Residue.M2):
        first = init.b if residue is Residue.M3 else init.a
        r = rising_factorial(half, n - 1)
        return A / (B * first) * int_pow(4 + 0 * e, n - 1) * r * r / rising_factorial(e + 1, 2 * n - 1)
    lead = init.b if residue is Residue.M1 else init.a
    r = rising_factorial(half, n)
    return lead * rising_factorial(e + 1, 2 * n) / (int_pow(4 + 0 * e, n) * r * r)


def special_case_elsayed(init, m):
    """x[m] for alpha = A = B = 1 via the dedicated products in (1 + k uv)."""
    numerics.common_mode(init.a, init.b, init.c, init.d)
    residue, n = residue_of(m)
    pair = residue.pair
    uv = _uv(init, pair)
    needed = 2 * n + residue.factors_needed
    _require_nonzero([1 + j * uv for j in range(1, needed + 1)], pair, "Elsayed")
    lead = getattr(init, residue.leading)
    out = lead
    if residue in (Residue.M3, Residue.M2):
        for i in range(n):
            out = out * (1 + 2 * i * uv) / (1 + (2 * i + 1) * uv)
    else:
        for i in range(n):
            out = out * (1 + (2 * i + 1) * uv) / (1 + (2 * i + 2) * uv)
    return out


FORMS = ("theorem1", "corollary1", "corollary2", "elsayed")


def select_form(params):
    """Formula the ``auto`` dispatcher uses for these coefficients."""
    if params.A != params.alpha:
        return "corollary1"
    if params.B != 0:
        return "corollary2"
    return "theorem1"


def closed_form(params, init, m, form="auto"):
    """x[m] from the explicit solution; seeds are returned as-is for m <= 0."""
    if m < -3:
        raise ValueError(f"index {m} precedes the seeds")
    if m <= 0:
        _check_modes(params, init)
        return init.seeds()[m + 3]
    if form == "auto":
        form = select_form(params)
    if form == "theorem1":
        return theorem1_term(params, init, m)
    if form == "corollary1":
        return corollary1_term(params, init, m)
    if form == "corollary2":
        return corollary2_term(params, init, m)
    if form == "elsayed":
        one = Fraction(1) if params.mode is numerics.Mode.EXACT else 1.0
        if (params.alpha, params.A, params.B) != (one, one, one):
            raise DegenerateCoefficients("the Elsayed products need alpha = A = B = 1")
        return special_case_elsayed(init, m)
    raise ValueError(f"unknown form {form!r}; expected auto or one of {FORMS}")


class _PairState:
    """Running products for one pair; Q_{j+1} = A Q_j + B uv alpha^j."""

    def __init__(self, params, init, pair):
        self.alpha, self.A = params.alpha, params.A
        self.buv = params.B * _uv(init, pair)
        self.pair = pair
        self.lead_odd, self.lead_even = (init.d, init.b) if pair is Pair.BD else (init.c, init.a)
        self.q = 1 + 0 * self.A          # Q_0
        self.alpha_pow = self.q          # alpha^j for the current j
        self.j = 0
        self.odd = self.q                # product of Q_1, Q_3, ...
        self.even = self.q               # product of Q_2, Q_4, ...

    def next(self):
        self.q = self.A * self.q + self.buv * self.alpha_pow
        self.alpha_pow *= self.alpha
        self.j += 1
        j = self.j
        if self.q == 0:
            idx = _index_of_factor(j, self.pair)
            raise ForbiddenInput(f"factor {j} vanishes: x[{idx}] is undefined", idx)
        n = (j + 1) // 2
        if j % 2:
            self.odd *= self.q
            return self.lead_odd * int_pow(self.alpha, n) * self.even / self.odd
        self.even *= self.q
        return self.lead_even * int_pow(self.alpha, n) * self.odd / self.even


def iter_closed_form(params, init):
    """Yield (m, x[m]) for m = 1, 2, ... at O(1) factor updates per term.

    Raises ForbiddenInput when the next term is undefined.
    """
    _check_modes(params, init)
    bd = _PairState(params, init, Pair.BD)
    ac = _PairState(params, init, Pair.AC)
    m = 0
    while True:
        m += 1
        yield m, bd.next()
        m += 1
        yield m, ac.next()


def forbidden_index_from_factors(params, init, horizon):
    """Smallest m <= horizon at which some Q_j vanishes, or None.

    Independent of the iteration: only the factor recurrence is used.
    """
    _check_modes(params, init)
    best = None
    for pair in (Pair.BD, Pair.AC):
        buv = params.B * _uv(init, pair)
        q = 1 + 0 * params.A
        alpha_pow = q
        j = 0
        while True:
            j += 1
            idx = _index_of_factor(j, pair)
            if idx > horizon or (best is not None and idx >= best):
                break
            q = params.A * q + buv * alpha_pow
            alpha_pow *= params.alpha
            if q == 0:
                best = idx
                break
    return best
