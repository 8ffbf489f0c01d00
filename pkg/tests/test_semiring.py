from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tropconvex.semiring import (
    BAL,
    NEG,
    POS,
    ZERO,
    ABS,
    BALANCE,
    NEGATE,
    TSGN,
    Interval,
    SymNum,
    add,
    bal,
    compare,
    midpoint,
    mul,
    neg,
    parse_symnum,
    pos,
    unary,
    uncomp,
    zero,
)

mags = st.fractions(min_value=-6, max_value=6, max_denominator=4)


@st.composite
def symnums(draw):
    kind = draw(st.sampled_from(["pos", "neg", "bal", "zero"]))
    if kind == "zero":
        return zero()
    return {"pos": pos, "neg": neg, "bal": bal}[kind](draw(mags))


def test_addition_examples():
    assert add(pos(0), neg(0)) == bal(0)
    assert add(bal(4), pos(3)) == bal(4)
    assert add(zero(), neg(3)) == neg(3)


def test_multiplication_examples():
    assert mul(pos(2), neg(1)) == neg(3)
    assert mul(bal(0), neg(-1)) == bal(-1)
    assert mul(neg(1), neg(1)) == pos(2)
    assert mul(zero(), bal(7)) == zero()


def test_unary_examples():
    assert unary(NEGATE, neg(2)) == pos(2)
    assert unary(BALANCE, neg(5)) == bal(5)
    assert unary(ABS, bal(4)) == pos(4)
    assert unary(TSGN, neg(1)) == NEG
    assert unary(NEGATE, bal(3)) == bal(3)
    assert unary(NEGATE, zero()) == zero()


def test_compare_examples():
    assert compare(pos(2), neg(3)).gt
    r = compare(bal(4), neg(3))
    assert not r.gt and r.teq
    assert compare(neg(3), bal(4)).teq
    assert compare(pos(3), bal(4)).teq
    assert compare(pos(1), pos(1)).eq
    assert compare(pos(1), pos(1)).geq


def test_uncomp():
    assert uncomp(bal(4)) == Interval(neg(4), pos(4))
    assert uncomp(pos(2)).is_singleton
    assert uncomp(zero()) == Interval(zero(), zero())
    assert uncomp(bal(-2)) == Interval(neg(-2), pos(-2))
    assert zero() in uncomp(bal(-2))


def test_zero_has_no_magnitude():
    with pytest.raises(ValueError):
        zero().mag


def test_total_order_on_signed():
    assert neg(5) < neg(1) < zero() < pos(-2) < pos(3)
    with pytest.raises(TypeError):
        bal(1) < pos(1)


def test_balanced_not_strictly_comparable():
    assert not bal(4).gt(neg(3))
    assert not neg(3).gt(bal(4))


@given(symnums(), symnums())
def test_add_commutative(a, b):
    assert add(a, b) == add(b, a)


@given(symnums(), symnums(), symnums())
def test_add_associative(a, b, c):
    assert add(add(a, b), c) == add(a, add(b, c))


@given(symnums(), symnums(), symnums())
def test_distributive(a, b, c):
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))


@given(symnums())
def test_zero_neutral_one_neutral(a):
    assert add(a, zero()) == a
    assert mul(a, pos(0)) == a


@given(symnums())
def test_token_round_trip(a):
    assert parse_symnum(str(a)) == a


def test_token_formats():
    assert parse_symnum("+2") == pos(2)
    assert parse_symnum("-3/2") == neg(Fraction(3, 2))
    assert parse_symnum("b4") == bal(4)
    assert parse_symnum("b-1") == bal(-1)
    assert parse_symnum("-(-1)") == neg(-1)
    assert parse_symnum("+-2") == pos(-2)
    assert parse_symnum("--2") == neg(-2)
    assert parse_symnum("o") == zero()
    assert parse_symnum("+2.5") == pos(Fraction(5, 2))
    with pytest.raises(ValueError):
        parse_symnum("q1")


def test_midpoint_density():
    cases = [
        (neg(5), neg(1)),
        (neg(5), zero()),
        (zero(), pos(3)),
        (neg(1), pos(1)),
        (pos(0), pos(1)),
    ]
    for a, b in cases:
        m = midpoint(a, b)
        assert a < m < b
