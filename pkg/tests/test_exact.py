import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hilbwalls._exact import Surd, frac_str, parse_fraction, rational_sqrt, sign_surd, sign_two_surds

from conftest import rationals


def test_frac_str_canonical():
    assert frac_str(Fraction(-10, 4)) == "-5/2"
    assert frac_str(Fraction(6, 3)) == "2"
    assert frac_str(0) == "0"


@pytest.mark.parametrize("bad", ["1.5", "1/0", "abc", "", "2/x"])
def test_parse_fraction_rejects(bad):
    with pytest.raises(ValueError):
        parse_fraction(bad)


@given(rationals())
def test_frac_str_roundtrip(x):
    assert parse_fraction(frac_str(x)) == x


def _float_sign(v):
    return (v > 0) - (v < 0)


@given(rationals(), rationals(), rationals(min_value=0))
def test_sign_surd_against_big_precision(a, b, d):
    # oracle: compare a^2 and b^2 d only when the float is far from zero
    v = float(a) + float(b) * math.sqrt(float(d))
    if abs(v) > 1e-6:
        assert sign_surd(a, b, d) == _float_sign(v)
    else:
        # exactly zero means a = -b sqrt(d), so a^2 = b^2 d
        if sign_surd(a, b, d) == 0:
            assert a * a == b * b * d


@given(rationals(), rationals(), rationals(min_value=0), rationals(), rationals(min_value=0))
def test_sign_two_surds_against_floats(a, b, p, c, q):
    v = float(a) + float(b) * math.sqrt(float(p)) + float(c) * math.sqrt(float(q))
    if abs(v) > 1e-6:
        assert sign_two_surds(a, b, p, c, q) == _float_sign(v)


def test_sign_two_surds_exact_zero():
    # sqrt(8) - 2 sqrt(2) = 0
    assert sign_two_surds(0, 1, 8, -2, 2) == 0
    assert sign_two_surds(Fraction(1, 2), 1, 2, -1, 3) == 1  # 0.5 + 1.414 - 1.732


@given(rationals(), st.integers(-5, 5), rationals(min_value=0))
def test_surd_floor_is_exact(a, b, d):
    s = Surd(a, b, d)
    f = s.floor()
    assert s.compare(f) >= 0
    assert s.compare(f + 1) < 0
    c = s.ceil()
    assert s.compare(c) <= 0 and s.compare(c - 1) > 0


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(2) is None
    assert rational_sqrt(-1) is None
    assert str(Surd(1, -1, 2)) == "1 - sqrt(2)"
