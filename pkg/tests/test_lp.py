from fractions import Fraction

import pytest

from tropconvex.lp import (
    FeasibilityProblem,
    LPInfeasible,
    LPWitness,
    PuiseuxField,
    RationalField,
    cone_member,
    cone_witness,
    conv_member,
    conv_witness,
    lp_feasible,
)
from tropconvex.puiseux import PuiseuxNum, PuiseuxVector, parse_puiseux, sval

pp = parse_puiseux
one = PuiseuxNum.one()
pz = PuiseuxNum.zero()


def test_interval_membership_witness():
    pts = [PuiseuxVector([pz]), PuiseuxVector([one])]
    w = conv_witness(pts, PuiseuxVector([pp("t^{-1}")]))
    assert w is not None
    assert w[1] == pp("t^{-1}")


def test_infeasible_combination():
    # lambda >= 0, sum = 1, l1 t + l2 t^2 = 1 has no solution
    prob = FeasibilityProblem(
        rows=((one, one), (pp("t"), pp("t^2"))),
        rhs=(one, one),
        field=PuiseuxField,
    )
    out = lp_feasible(prob)
    assert isinstance(out, LPInfeasible)


def test_conv_membership_scaled_diagonal():
    pts = [
        PuiseuxVector([pz, pz]),
        PuiseuxVector([one, one]),
    ]
    q = PuiseuxVector([pp("t^{-1}"), pp("t^{-1}")])
    assert conv_member(pts, q)
    assert not conv_member(pts, PuiseuxVector([pp("t"), pp("t")]))


def test_cone_membership_worked_rows():
    row1 = PuiseuxVector([pp(s) for s in ("t^2", "t^{-1}", "-t^3", "1")])
    row2 = PuiseuxVector([pp(s) for s in ("-t^{-1}", "-t", "0", "t^{-2}")])
    combo = row2 + row1.scale(pp("t^{-5}"))
    assert cone_member([row1, row2], combo)
    assert str(sval(combo)) == "[--1, -1, --2, +-2]"
    assert [e.sign for e in sval(combo).entries] == [-1, -1, -1, 1]
    w = cone_witness([row1, row2], combo)
    assert w is not None and w[0] == pp("t^{-5}") and w[1] == one


def test_generator_is_member():
    pts = [PuiseuxVector([t_, one]) for t_ in (pp("t"), pp("2*t"))]
    assert conv_member(pts, pts[0])


def test_rational_objective():
    # maximize eps subject to eps <= 1 via slack
    prob = FeasibilityProblem(
        rows=((Fraction(1), Fraction(1)),),
        rhs=(Fraction(1),),
        objective=(Fraction(1), Fraction(0)),
        field=RationalField,
    )
    out = lp_feasible(prob)
    assert isinstance(out, LPWitness)
    assert out.objective == 1


def test_free_variables_and_lower_bounds():
    # x free, y >= 2, x + y = 1: maximizing x pins y to its bound
    prob = FeasibilityProblem(
        rows=((Fraction(1), Fraction(1)),),
        rhs=(Fraction(1),),
        nonneg=frozenset(),
        lower_bounds=((1, Fraction(2)),),
        objective=(Fraction(1), Fraction(0)),
        field=RationalField,
    )
    out = lp_feasible(prob)
    assert isinstance(out, LPWitness)
    assert out.x == (Fraction(-1), Fraction(2))
