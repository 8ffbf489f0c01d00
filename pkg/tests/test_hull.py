import itertools
from fractions import Fraction

import pytest

from tropconvex.semiring import neg, parse_symnum, pos, zero
from tropconvex.vectors import SignedVector, parse_vector
from tropconvex.halfspaces import Kind, member
from tropconvex.hull import (
    Grid,
    GridError,
    PointSet,
    ScalarProfile,
    affine_mw_member,
    closure_check,
    critical_lambdas,
    separate,
    separate_to,
    tc_cone_member,
    tc_hull_member,
    tc_hull_witness,
    tc_interval,
    to_hull_member,
    wspan_member,
)

pv = parse_vector


def ps(*texts):
    return PointSet.of([pv(t) for t in texts])


def test_critical_lambdas_examples():
    got = critical_lambdas(ps("[+0,+0]"), pv("[+-2, +-2]"))
    assert pos(-2) in got and pos(0) in got and zero() in got
    got = critical_lambdas(ps("[+1]"), pv("[+1]"))
    assert got == [pos(0), zero()]


def test_to_hull_examples():
    X = ps("[+0,+0]", "[--2,--2]")
    assert to_hull_member(X, pv("[+-2, --2]"))
    assert to_hull_member(X, pv("[+0, +0]"))
    assert not to_hull_member(X, pv("[+1, +0]"))


def test_tc_hull_examples():
    X = ps("[+0,+0]", "[--2,--2]")
    assert not tc_hull_member(X, pv("[+-2, --2]"))
    assert tc_hull_member(X, pv("[--2, --2]"))
    corners = ps("[+0,+0]", "[+0,-0]", "[-0,+0]", "[-0,-0]")
    assert tc_hull_member(corners, pv("[o, o]"))
    for sub in itertools.combinations(list(corners.points), 3):
        assert not tc_hull_member(PointSet.of(list(sub)), pv("[o, o]"))
    Xv = ps("[-1, +5]", "[+2, +5]")
    assert tc_hull_member(Xv, pv("[+0, +5]"))
    assert not tc_hull_member(Xv, pv("[+0, +4]"))


def test_tc_hull_witness_profile():
    Xv = ps("[-1, +5]", "[+2, +5]")
    prof = tc_hull_witness(Xv, pv("[+0, +5]"))
    assert isinstance(prof, ScalarProfile)
    assert prof.mode == "HULL"


def test_hull_rejects_empty():
    with pytest.raises(ValueError):
        tc_hull_member(PointSet(()), pv("[+0]"))


def test_tc_interval_examples():
    region = tc_interval(pv("[+0,+0]"), pv("[--2,--2]"))
    target = frozenset({pv("[--2,--2]"), pv("[+-2,+-2]")})
    assert any(pc.vertex_set == target for pc in region.pieces)
    assert pv("[--2, --2]") in region
    assert pv("[+-2, --2]") not in region
    # vertical segments: [p, q] x {r}
    region = tc_interval(pv("[-1, +5]"), pv("[+2, +5]"),
                         extra_mags=[Fraction(0)])
    assert pv("[+0, +5]") in region
    assert pv("[o, +5]") in region
    assert pv("[+0, +4]") not in region
    # a point interval
    region = tc_interval(pv("[+1, -2]"), pv("[+1, -2]"))
    assert pv("[+1, -2]") in region
    assert pv("[+1, o]") not in region


def test_cone_examples():
    X = ps("[+0,+0]")
    assert tc_cone_member(X, pv("[o, o]"))
    assert tc_cone_member(X, pv("[+3, +3]"))
    assert tc_cone_member(X, pv("[+-2, +-2]"))
    assert not tc_cone_member(X, pv("[+1, +0]"))
    # scaling stability on members
    assert tc_cone_member(X, pv("[+5, +5]"))


def test_span_unit_cube_instance():
    gen = ps("[+0, +0]")
    inside = {("+0", "+0"), ("-0", "-0"), ("o", "o")}
    for combo in itertools.product(["+0", "-0", "o"], repeat=2):
        v = pv("[" + ", ".join(combo) + "]")
        assert wspan_member(gen, v) == (combo in inside)
    assert wspan_member(gen, pv("[-3, -3]"))
    assert not wspan_member(gen, pv("[-3, -2]"))


def test_affine_mw_member():
    V = ps("[+0, +0]")
    W0 = ps("[o, o]")
    # half-lines with a zero direction reduce to the hull of V
    assert affine_mw_member(V, W0, pv("[+0, +0]"))
    assert not affine_mw_member(V, W0, pv("[+1, +1]"))
    # one-dimensional ray from +0 in direction +0
    V1 = ps("[+0]")
    W1 = ps("[+0]")
    assert affine_mw_member(V1, W1, pv("[+0]"))
    assert affine_mw_member(V1, W1, pv("[+3]"))
    assert not affine_mw_member(V1, W1, pv("[+-1]"))
    gen = pv("[+0, -0]").lsum(pv("[+1, +1]"))
    assert affine_mw_member(ps("[+0, -0]"), ps("[+1, +1]"), gen)


def test_closure_check_examples():
    grid = Grid(dim=2, mags=(Fraction(0), Fraction(1), Fraction(2),
                             Fraction(3), Fraction(4), Fraction(5)))
    # member grid of a closed halfspace is closed
    from tropconvex.halfspaces import Halfspace

    h = Halfspace(pv("[o, +0, -0]"), Kind.CLOSED)
    members = [x for x in grid.points() if member(h, x)]
    rep = closure_check(members, grid)
    assert rep.ok
    # two antipodal points are TC-convex
    grid0 = Grid(dim=2, mags=(Fraction(0),))
    rep = closure_check([pv("[+0,+0]"), pv("[-0,-0]")], grid0)
    assert rep.ok
    # a conflicting pair in one coordinate needs its elimination point
    grid5 = Grid(dim=2, mags=(Fraction(0), Fraction(5)))
    rep = closure_check([pv("[+0,+5]"), pv("[-0,+5]")], grid5)
    assert not rep.ok
    assert any(v[2] == (zero(), pos(5)) for v in rep.elim_violations)


def test_grid_closure_validation():
    with pytest.raises(GridError):
        Grid(dim=1, mags=(Fraction(0), Fraction(1),
                          Fraction(5))).check_closed()
    Grid(dim=1, mags=(Fraction(0), Fraction(1), Fraction(2))).check_closed()


def test_separate_examples():
    corners = [pv(s) for s in ("[+0,+0]", "[+0,-0]", "[-0,+0]")]
    X = PointSet.of(corners)
    h = separate(X, pv("[o, o]"), [Fraction(0), Fraction(1)])
    assert h is not None
    assert all(member(h, x) for x in X)
    assert not member(h, pv("[o, o]"))
    # a member cannot be separated
    assert separate(X, corners[0], [Fraction(0), Fraction(1)]) is None
    X2 = ps("[+0,+0]", "[--3,--2]")
    h = separate(X2, pv("[+5,+5]"), [Fraction(0), Fraction(5)])
    assert h is not None


def test_separate_to_example():
    got = separate_to(ps("[+0,+0]"), ps("[-0,-0]"),
                      [Fraction(0), Fraction(1)])
    assert got is not None
    hp, hm = got
    assert member(hp, pv("[+0,+0]")) and member(hm, pv("[-0,-0]"))
    assert separate_to(ps("[+0,+0]"), ps("[+0,+0]"),
                       [Fraction(0)]) is None


def test_pointset_parse():
    X = PointSet.parse("# comment\n[+0, +0]\n\n[--2, --2]  # tail\n")
    assert len(X) == 2
    assert X.points[1] == pv("[--2, --2]")


def test_cone_member_needs_chained_scalars():
    # the witness ties one generator's scalar to another's through a shared
    # coordinate level; single magnitude differences cannot express it
    X = ps("[--5/2, +3/2]", "[o, o]", "[+-3, o]")
    assert tc_cone_member(X, pv("[o, +-4]"))
    # no generator can put a negative sign into coordinate 2
    assert not tc_cone_member(X, pv("[-0, -0]"))
    assert not tc_cone_member(X, pv("[o, -1]"))


def test_search_agrees_with_sign_closure():
    import itertools as it
    import random

    from tropconvex.semiring import ZERO, pos as p_, neg as n_, zero as z_
    import tropconvex.hull as hull_mod

    vals = [p_(0), n_(0), z_()]
    grid = [SignedVector(c) for c in it.product(vals, repeat=2)]
    rng = random.Random(13)
    for _ in range(40):
        pts = rng.sample(grid, rng.randint(1, 4))
        ptt = tuple(
            p.entries for p in PointSet.of(pts).deduped().points
        )
        for y in grid:
            fast = y.entries in hull_mod._sign_closure(ptt)
            slow = hull_mod._Search(
                list(ptt), y.entries, hull_mod.HULL, faces=True, cap=None
            ).run() is not None
            assert fast == slow, (pts, y)
