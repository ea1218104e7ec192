import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ratrec import numerics
from ratrec.errors import ExactBlowup, MalformedNumber, ModeMismatch, ZeroDenominator
from ratrec.numerics import Mode, int_pow, rat_from_string, render, rising_factorial

from conftest import small_nonzero


@pytest.mark.parametrize("text, expected", [
    ("1.05", Fraction(21, 20)),
    ("3", Fraction(3)),
    ("-0.4", Fraction(-2, 5)),
    ("21/20", Fraction(21, 20)),
    ("-6/4", Fraction(-3, 2)),
    ("0.64", Fraction(16, 25)),
    (" 7 ", Fraction(7)),
])
def test_rat_from_string(text, expected):
    assert rat_from_string(text) == expected


@pytest.mark.parametrize("text", ["", "1e3", "1.", ".5", "--1", "1/2/3", "+3", "abc", "1/-2", "0x10"])
def test_rat_from_string_rejects(text):
    with pytest.raises(MalformedNumber):
        rat_from_string(text)


def test_zero_denominator():
    with pytest.raises(ZeroDenominator):
        rat_from_string("5/0")


@given(st.integers(-10**30, 10**30), st.integers(1, 10**30))
def test_fraction_round_trip(p, q):
    x = Fraction(p, q)
    s = render(x)
    assert rat_from_string(s) == x
    num, den = s.split("/")
    assert int(den) > 0 and math.gcd(int(num), int(den)) == 1


@pytest.mark.parametrize("z, k, expected", [
    (Fraction(1, 2), 3, Fraction(15, 8)),
    (Fraction(7, 3), 0, Fraction(1)),
    (Fraction(2), 3, Fraction(24)),
    (Fraction(-2), 3, Fraction(0)),
])
def test_rising_factorial(z, k, expected):
    assert rising_factorial(z, k) == expected


@given(small_nonzero, st.integers(1, 30))
def test_rising_factorial_recursion(z, k):
    assert rising_factorial(z, k) == rising_factorial(z, k - 1) * (z + k - 1)


def test_rising_factorial_is_gamma_ratio():
    # away from poles, (z)_k = Gamma(z + k) / Gamma(z)
    for z in (0.5, 1.25, 3.0):
        for k in range(6):
            assert rising_factorial(z, k) == pytest.approx(math.gamma(z + k) / math.gamma(z), rel=1e-12)


@pytest.mark.parametrize("x, p, expected", [
    (Fraction(2, 3), 3, Fraction(8, 27)),
    (Fraction(5, 7), 0, Fraction(1)),
    (Fraction(-1), 5, Fraction(-1)),
    (Fraction(0), 0, Fraction(1)),
])
def test_int_pow(x, p, expected):
    assert int_pow(x, p) == expected


def test_int_pow_float_saturates():
    assert int_pow(10.0, 400) == math.inf
    assert int_pow(-10.0, 401) == -math.inf
    assert int_pow(1.5, 7) == pytest.approx(1.5 ** 7)


@given(st.tuples(small_nonzero, small_nonzero, small_nonzero))
def test_field_axioms(t):
    x, y, z = t
    assert (x + y) + z == x + (y + z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z


def test_mode_discipline():
    assert numerics.mode_of(Fraction(1, 3)) is Mode.EXACT
    assert numerics.mode_of(0.5) is Mode.FLOAT
    assert numerics.common_mode(Fraction(1), Fraction(2)) is Mode.EXACT
    with pytest.raises(ModeMismatch):
        numerics.common_mode(Fraction(1), 0.5)


def test_bit_limit_guard(monkeypatch):
    assert numerics.bit_limit() == numerics.DEFAULT_BIT_LIMIT
    monkeypatch.setenv("RATREC_BITLIMIT", "16")
    assert numerics.bit_limit() == 16
    numerics.check_size(Fraction(2**15, 3))
    with pytest.raises(ExactBlowup):
        numerics.check_size(Fraction(1, 2**17))
    monkeypatch.setenv("RATREC_BITLIMIT", "lots")
    with pytest.raises(MalformedNumber):
        numerics.bit_limit()
