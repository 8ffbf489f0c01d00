import pytest

from tropconvex.semiring import parse_symnum, pos, neg, zero
from tropconvex.vectors import parse_vector
from tropconvex.halfspaces import (
    Halfspace,
    Kind,
    boundary_profile,
    eval_affine,
    hs_type,
    member,
    member_two_max,
    parse_halfspace,
)

pv = parse_vector
sn = parse_symnum


def test_eval_affine_examples():
    assert eval_affine(pv("[o, +0, -0]"), pv("[+0, +-1]")) == sn("+0")
    assert eval_affine(pv("[o, +0, -3]"), pv("[-0, --2]")) == sn("+1")
    assert eval_affine(pv("[o, +0, -0]"), pv("[-0, +-1]")) == sn("-0")


def test_eval_affine_length_mismatch():
    with pytest.raises(ValueError):
        eval_affine(pv("[o, +0]"), pv("[+0, +0]"))


def test_member_examples():
    a = pv("[-0, +0, o]")
    x = pv("[+0, +7]")
    assert member(Halfspace(a, Kind.CLOSED), x)
    assert not member(Halfspace(a, Kind.OPEN), x)
    b = pv("[o, +0, -0]")
    assert member(Halfspace(b, Kind.OPEN), pv("[+0, +-1]"))
    assert not member(Halfspace(b, Kind.CLOSED), pv("[-0, +-1]"))


def test_member_kinds_via_eval_sign():
    a = pv("[o, +0, o]")
    on_boundary = pv("[o, +5]")  # evaluation is the zero element
    assert member(Halfspace(a, Kind.CLOSED), on_boundary)
    assert member(Halfspace(a, Kind.SEMI_CLOSED), on_boundary)
    assert member(Halfspace(a, Kind.HYPERPLANE), on_boundary)
    assert not member(Halfspace(a, Kind.OPEN), on_boundary)


def test_halfspace_invariants():
    with pytest.raises(ValueError):
        Halfspace(pv("[+1, o, o]"), Kind.CLOSED)
    h = Halfspace(pv("[o, +0, -0]"), Kind.CLOSED)
    assert h.is_linear
    assert not Halfspace(pv("[+1, +0, -0]"), Kind.CLOSED).is_linear


def test_hs_type():
    assert hs_type(pv("[o, +0, -0]")) == {1}
    assert hs_type(pv("[-2, -1, -1]")) == frozenset()
    assert hs_type(pv("[+0, +1, +2]")) == {1, 2}


def test_boundary_profile_examples():
    prof = boundary_profile(pv("[-0, +0, o]"), pv("[+0, +5]"))
    assert prof.argmax == {0, 1}
    assert prof.domin_plus == {1}
    prof = boundary_profile(pv("[o, +0, o]"), pv("[o, +5]"))
    assert prof.argmax == frozenset()
    # disjoint supports with a zero apex evaluate to the zero element
    a = pv("[o, +1, o]")
    x = pv("[o, -2]")
    assert boundary_profile(a, x).argmax == frozenset()
    assert eval_affine(a, x) == zero()


def test_two_max_oracle_agrees():
    import random
    from tropconvex.verify import rnd_vec, _random_halfspace_coeffs

    rng = random.Random(11)
    for _ in range(300):
        a = _random_halfspace_coeffs(rng, 2)
        x = rnd_vec(rng, 2)
        for kind in Kind:
            h = Halfspace(a, kind)
            assert member(h, x) == member_two_max(h, x)


def test_parse_halfspace_round_trip():
    for s in ("closed [o, +0, -0]", "open [+1, -2, +3]", "hyp [o, +0, o]"):
        h = parse_halfspace(s)
        assert str(h).replace(" ", "") == s.replace(" ", "")
    with pytest.raises(ValueError):
        parse_halfspace("wedge [o, +0]")
