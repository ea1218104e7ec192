"""Exception hierarchy.

Every error raised by the library derives from :class:`RatrecError`.  The
CLI maps :class:`DomainError` subclasses to exit code 1 and everything that
is a malformed request (bad numbers, bad scenario files) to exit code 2.
"""


class RatrecError(Exception):
    pass


class UsageError(RatrecError):
    """Input that does not follow the documented syntax."""


class DomainError(RatrecError):
    """Well-formed input that the mathematics rejects."""


# numerics

class MalformedNumber(UsageError, ValueError):
    pass


class ZeroDenominator(UsageError, ZeroDivisionError):
    pass


class ModeMismatch(RatrecError, TypeError):
    """Exact and float values were combined in one computation."""


class ExactBlowup(DomainError):
    """An exact rational outgrew the configured bit-size limit."""

    def __init__(self, bits, limit):
        if bits is None:
            super().__init__(f"exact value exceeded the {limit}-bit limit")
        else:
            super().__init__(f"exact value needs {bits} bits, limit is {limit}")
        self.bits = bits
        self.limit = limit


# recurrence

class DivisionByZero(DomainError, ZeroDivisionError):
    pass


class DegenerateUndefined(DomainError):
    """A = 0 and B = 0: the denominator vanishes identically."""


class FloatModeUnsupported(DomainError):
    pass


class DegenerateCoefficients(DomainError):
    """The requested formula is undefined for these coefficients (e.g. B = 0)."""


class ZeroInitialCondition(UsageError, ValueError):
    pass


# closed forms

class ForbiddenInput(DomainError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class RequiresANeqAlpha(DomainError):
    pass


class RequiresAEqAlpha(DomainError):
    pass


# analysis

class BothDegenerate(DomainError):
    pass


class WrongRegime(DomainError):
    pass


class NoConvergenceWithinHorizon(DomainError):
    pass


class ZeroLimit(DomainError):
    pass


class ForbiddenInitialConditions(DomainError):
    def __init__(self, index):
        super().__init__(f"solution is undefined at n = {index}")
        self.index = index


# scenario_io

class MalformedScenario(UsageError, ValueError):
    pass


class UnknownExample(UsageError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class TooFewPoints(UsageError, ValueError):
    pass
