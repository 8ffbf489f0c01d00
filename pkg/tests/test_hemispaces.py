from fractions import Fraction

import pytest

from tropconvex.semiring import POS, NEG, pos, neg, zero
from tropconvex.vectors import parse_vector
from tropconvex.hemispaces import (
    HemispaceCandidate,
    SelectorRecord,
    boundary_pattern_check,
    build_grid,
    hemispace_pair_check,
    parse_selector_record,
    sandwich_check,
)

pv = parse_vector


def _hemi1():
    a = pv("[-0, +0, o]")
    return a


def test_member_semantics():
    a = _hemi1()
    G_open = HemispaceCandidate(a, ())
    assert G_open.member(pv("[+1, +0]"))
    assert not G_open.member(pv("[+0, +0]"))
    G_closed = HemispaceCandidate(a, (SelectorRecord(frozenset({0, 1})),))
    assert G_closed.member(pv("[+0, +99]"))
    assert not G_closed.member(pv("[-0, +0]"))


def test_sandwich_check():
    a = _hemi1()
    G = HemispaceCandidate(a, (SelectorRecord(frozenset({0, 1})),))
    assert sandwich_check(G, build_grid(G))


def test_partial_boundary_is_flagged():
    a = _hemi1()
    rec = SelectorRecord(frozenset({0, 1}), constraints=((2, ">=", pos(0)),))
    G = HemispaceCandidate(a, (rec,))
    grid = build_grid(G)
    assert boundary_pattern_check(G, grid)
    assert not hemispace_pair_check(G, grid)


def test_exactly_two_hemispaces_for_affine_boundary():
    from tropconvex.verify import _hemi1_candidates

    _, candidates = _hemi1_candidates()
    passing = [
        name for name, G in candidates if hemispace_pair_check(G, build_grid(G))
    ]
    assert passing == ["open", "closed"]


def test_threshold_family_passes():
    a2 = pv("[o, +0, o]")
    for c in (neg(1), pos(0), pos(Fraction(1, 2))):
        rec = SelectorRecord(frozenset(), constraints=((2, ">=", c),))
        G = HemispaceCandidate(a2, (rec,))
        grid = build_grid(G)
        assert hemispace_pair_check(G, grid)
        assert not boundary_pattern_check(G, grid)


def test_selector_record_round_trip():
    rec = SelectorRecord(
        frozenset({0, 1}),
        signs=((1, POS),),
        constraints=((2, ">=", pos(3)),),
    )
    parsed = parse_selector_record(str(rec))
    assert parsed == rec
    with pytest.raises(ValueError):
        parse_selector_record("nonsense")


def test_grid_contains_threshold_neighbors():
    a2 = pv("[o, +0, o]")
    rec = SelectorRecord(frozenset(), constraints=((2, ">=", pos(3)),))
    G = HemispaceCandidate(a2, (rec,))
    grid = build_grid(G)
    assert Fraction(3) in grid.mags
    assert any(m > 3 for m in grid.mags)
    assert any(m < 3 for m in grid.mags)
