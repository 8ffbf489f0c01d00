import pytest

from tropconvex.semiring import POS, NEG, ZERO
from tropconvex.vectors import parse_vector
from tropconvex.matroids import (
    OMatroid,
    all_sign_vectors,
    axioms_check,
    circuits,
    cocircuits,
    covectors,
    dual,
    orthogonal,
    realize_sign_vectors,
    representation_check,
    sign_vector,
)

pv = parse_vector


def test_orthogonal_examples():
    assert orthogonal(pv("[+0, +0]"), pv("[+0, -0]"))
    assert not orthogonal(pv("[+0, o]"), pv("[+0, -0]"))
    assert orthogonal(pv("[+0, -0]"), pv("[o, o]"))
    with pytest.raises(ValueError):
        orthogonal(pv("[+0]"), pv("[+0, -0]"))


def test_realize_line():
    V = realize_sign_vectors([[1, 1]])
    assert V == {
        sign_vector([ZERO, ZERO]),
        sign_vector([POS, POS]),
        sign_vector([NEG, NEG]),
    }
    M = OMatroid.of(2, V)
    assert axioms_check(M.vectors).ok
    assert circuits(M) == {sign_vector([POS, POS]), sign_vector([NEG, NEG])}
    assert cocircuits(M) == {
        sign_vector([POS, NEG]), sign_vector([NEG, POS])
    }
    assert representation_check(M).ok


def test_realize_zero_matrix():
    assert realize_sign_vectors([[0, 0]]) == {sign_vector([ZERO, ZERO])}


def test_axioms_catch_missing_negation():
    V = frozenset({sign_vector([ZERO, ZERO]), sign_vector([POS, ZERO])})
    rep = axioms_check(V)
    assert any(v[0] == "V1" for v in rep.violations)


def test_axioms_trivial():
    assert axioms_check({sign_vector([ZERO, ZERO, ZERO])}).ok


def test_free_matroid_circuits():
    k = 3
    M = OMatroid.of(k, frozenset(all_sign_vectors(k)))
    assert axioms_check(M.vectors).ok
    expected = set()
    for i in range(k):
        for s in (POS, NEG):
            expected.add(sign_vector([s if j == i else ZERO for j in range(k)]))
    assert circuits(M) == expected


def test_trivial_matroid_has_no_circuits():
    M = OMatroid.of(2, frozenset({sign_vector([ZERO, ZERO])}))
    assert circuits(M) == frozenset()


def test_rank2_on_three_elements():
    M = OMatroid.of(3, realize_sign_vectors([[1, 0, -1], [0, 1, -1]]))
    assert axioms_check(M.vectors).ok
    assert representation_check(M).ok
    C, D = circuits(M), cocircuits(M)
    assert all(orthogonal(c, d) for c in C for d in D)
    assert axioms_check(covectors(M)).ok
    assert dual(M).ground_size == 3


def test_mutation_detected():
    V = realize_sign_vectors([[1, 1]])
    v = sign_vector([POS, POS])
    broken = OMatroid.of(2, V - {v})
    assert not axioms_check(broken.vectors).ok
    grown = OMatroid.of(2, V | {sign_vector([POS, NEG])})
    assert (not axioms_check(grown.vectors).ok
            or not representation_check(grown).ok)


def test_matroid_file_round_trip():
    M = OMatroid.of(2, realize_sign_vectors([[1, 1]]))
    parsed = OMatroid.parse(str(M))
    assert parsed == M
    with pytest.raises(ValueError):
        OMatroid.parse("+ -\no o")


def test_matroid_requires_sign_vectors():
    with pytest.raises(ValueError):
        OMatroid.of(1, frozenset({pv("[+2]")}))
