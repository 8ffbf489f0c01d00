import pytest

from tropconvex.semiring import bal, neg, pos, zero
from tropconvex.vectors import (
    Box,
    FaceComplex,
    SignedVector,
    SymVector,
    faces_complex,
    faces_member,
    left_sum,
    parse_vector,
    supports,
    vert,
)

pv = parse_vector


def test_supports():
    s, p, n = supports(pv("[+2, o, -1]"))
    assert s == {1, 3} and p == {1} and n == {3}
    s, p, n = supports(pv("[o, o]"))
    assert s == p == n == frozenset()
    s, p, n = supports(pv("[-0, -0]"))
    assert s == {1, 2} == n and p == frozenset()


def test_left_sum_scalar_cases():
    assert pos(0).lsum(neg(0)) == pos(0)
    assert neg(0).lsum(pos(0)) == neg(0)
    assert pos(1).lsum(neg(2)) == neg(2)
    assert left_sum(pv("[+1, --1]"), pv("[+0, -0]")) == pv("[+1, -0]")


def test_left_sum_length_mismatch():
    with pytest.raises(ValueError):
        left_sum(pv("[+1]"), pv("[+1, +2]"))


def test_vert_examples():
    assert vert([pv("[+0, -0]"), pv("[+1, +-1]")]) == {pv("[+1, -0]")}
    assert vert([pv("[+0, -0]"), pv("[+1, +0]")]) == {
        pv("[+1, -0]"), pv("[+1, +0]")
    }
    assert vert([pv("[+0, -0]"), pv("[-0, +0]")]) == {
        pv("[+0, -0]"), pv("[-0, +0]")
    }


def test_vert_duplicates_collapse():
    x = pv("[+1, -2]")
    assert vert([x, x, x]) == {x}


def test_faces_member_examples():
    X = [pv("[+0, -0]"), pv("[+1, +0]")]
    assert faces_member(X, pv("[+1, o]"))
    assert faces_member(X, pv("[+1, +-3]"))
    assert not faces_member(X, pv("[+0, o]"))
    X2 = [pv("[+0, -0]"), pv("[-0, +0]")]
    assert not faces_member(X2, pv("[o, o]"))
    corners = [pv(s) for s in ("[+0,+0]", "[+0,-0]", "[-0,+0]", "[-0,-0]")]
    assert faces_member(corners, pv("[o, o]"))


def test_faces_complex():
    fc = faces_complex([pv("[+0, -0]"), pv("[+1, +-1]")])
    assert fc.carrier == SymVector(pv("[+1, -0]").entries)
    assert fc.vertex_set == {pv("[+1, -0]")}
    single = faces_complex([pv("[+2, o]")])
    assert single.vertex_set == {pv("[+2, o]")}
    assert pv("[+2, o]") in single
    cube = faces_complex([SignedVector(c) for c in _corners3()])
    assert len(cube.vertex_set) == 8
    assert cube.carrier == SymVector((bal(0), bal(0), bal(0)))
    assert pv("[o, o, o]") in cube
    assert pv("[+0, o, -0]") in cube


def _corners3():
    import itertools

    return itertools.product((pos(0), neg(0)), repeat=3)


def test_box():
    fc = faces_complex([pv("[+0, -0]"), pv("[+1, +0]")])
    box = fc.box
    assert box.dimension == 1
    assert pv("[+1, o]") in box
    assert pv("[+0, o]") not in box


def test_face_complex_validates_vertices():
    with pytest.raises(ValueError):
        FaceComplex(
            carrier=SymVector((bal(0), pos(1))),
            vertex_set=frozenset({pv("[+0, +2]")}),
        )


def test_vector_parse_round_trip():
    for s in ("[+2, o, -1]", "[b4]", "[+1/2, --3]"):
        v = (
            parse_vector(s)
            if "b" not in s
            else SymVector([bal(4)])
        )
        assert str(v).replace(" ", "") == s.replace(" ", "")


def test_signed_vector_rejects_balanced():
    with pytest.raises(ValueError):
        SignedVector((bal(1), pos(0)))
