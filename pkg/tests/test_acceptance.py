"""Acceptance criteria, one test per criterion.

Each test prints a single PASS/FAIL line (visible with ``pytest -s``) and
asserts the criterion at its stated count and exact tolerance.
"""

import itertools
import time
from fractions import Fraction

import pytest

from tropconvex.semiring import add, bal, compare, mul, neg, parse_symnum, pos, zero
from tropconvex.vectors import SignedVector, faces_complex, parse_vector, vert
from tropconvex.halfspaces import Halfspace, Kind, eval_affine, member
from tropconvex.hull import PointSet, tc_hull_member, tc_interval, to_hull_member
from tropconvex.matroids import (
    OMatroid,
    all_sign_vectors,
    axioms_check,
    realize_sign_vectors,
    representation_check,
)
from tropconvex.verify import MATROID_MATRICES, run_suite, suite_lifts, SuiteReport

pv = parse_vector
sn = parse_symnum


def _report(num, name, ok):
    line = f"ACCEPTANCE {num:>2} {name}: {'PASS' if ok else 'FAIL'}"
    print(line)
    assert ok, line


def _suite_ok(name, cases, seed=7):
    rep = run_suite(name, seed=seed, cases=cases)
    return rep.ok, rep


def test_criterion_01_arithmetic_examples():
    ok = (
        mul(sn("+2"), sn("-1")) == sn("-3")
        and mul(add(sn("+0"), sn("-0")), sn("-(-1)")) == sn("b-1")
        and mul(sn("-1"), sn("-1")) == sn("+2")
        and compare(sn("+2"), sn("-3")).gt
        and compare(sn("b4"), sn("-3")).teq
        and compare(sn("-3"), sn("b4")).teq
        and not compare(sn("b4"), sn("-3")).eq
    )
    _report(1, "section-2 arithmetic reproduced exactly", ok)


def test_criterion_02_algebraic_suites_ten_thousand():
    results = []
    for name in ("semiring", "leftsum", "puiseux"):
        ok, rep = _suite_ok(name, cases=10_000)
        results.append((name, ok, rep.cases))
    ok = all(r[1] for r in results) and all(r[2] >= 10_000 for r in results)
    _report(2, "algebraic property suites pass >= 10^4 seeded cases each", ok)


def test_criterion_03_vert_faces_and_intervals():
    ok = vert([pv("[+0, -0]"), pv("[+1, +-1]")]) == {pv("[+1, -0]")}
    ok &= vert([pv("[+0, -0]"), pv("[+1, +0]")]) == {
        pv("[+1, -0]"), pv("[+1, +0]")
    }
    ok &= vert([pv("[+0, -0]"), pv("[-0, +0]")]) == {
        pv("[+0, -0]"), pv("[-0, +0]")
    }
    X = PointSet.of([pv("[+0,+0]"), pv("[--2,--2]")])
    # the balanced box [(-(-2)), -2]^2 lies in the TO-interval, but the
    # TC-interval keeps only its two diagonal vertices
    box_non_diagonal = [
        pv("[+-2, --2]"), pv("[--2, +-2]"), pv("[o, o]"),
        pv("[o, --3]"), pv("[+-3, --2]"),
    ]
    for z in box_non_diagonal:
        ok &= to_hull_member(X, z) and not tc_hull_member(X, z)
    for z in (pv("[+0,+0]"), pv("[--2,--2]"), pv("[+-1,+-1]"),
              pv("[+-2,+-2]")):
        ok &= tc_hull_member(X, z)
    # for ((0,0), (-(-3), -(-2))) the two hulls agree on a grid
    X2 = PointSet.of([pv("[+0,+0]"), pv("[--3,--2]")])
    mags = [Fraction(v) for v in range(-4, 1)]
    axis = [zero()] + [pos(m) for m in mags] + [neg(m) for m in mags]
    for u in axis:
        for v in axis:
            z = SignedVector((u, v))
            ok &= to_hull_member(X2, z) == tc_hull_member(X2, z)
    _report(3, "Vert/Faces and interval examples reproduced", ok)


def test_criterion_04_caratheodory_lower_bound():
    ok = True
    for d in (2, 3):
        corners = [
            SignedVector(c)
            for c in itertools.product((neg(0), pos(0)), repeat=d)
        ]
        origin = SignedVector(tuple(zero() for _ in range(d)))
        ok &= tc_hull_member(PointSet.of(corners), origin)
        for r in range(1, len(corners)):
            for sub in itertools.combinations(corners, r):
                ok &= not tc_hull_member(PointSet.of(list(sub)), origin)
    _report(4, "Caratheodory lower-bound example for d=2,3", ok)


def test_criterion_05_sandglass_and_pasch():
    ok1, _ = _suite_ok("sandglass", cases=200)
    ok2, _ = _suite_ok("pasch", cases=200)
    ok3, _ = _suite_ok("pasch-tc-counterexample", cases=1)
    _report(5, "sand-glass and Pasch suites (>=200 each) with exact "
               "TC counterexample", ok1 and ok2 and ok3)


def test_criterion_06_hemispace_examples():
    ok, _ = _suite_ok("hemispace", cases=30)
    a = pv("[o, +0, -0]")
    b = pv("[o, +0, -3]")
    ok &= eval_affine(a, pv("[+0, +-1]")) == sn("+0")
    ok &= eval_affine(b, pv("[-0, --2]")) == sn("+1")
    ok &= eval_affine(a, pv("[-0, +-1]")) == sn("-0")
    _report(6, "hemispace families and worked evaluations", ok)


def test_criterion_07_puiseux_suite():
    from tropconvex.puiseux import parse_puiseux, sval, PuiseuxVector

    row1 = PuiseuxVector([parse_puiseux(s)
                          for s in ("t^2", "t^{-1}", "-t^3", "1")])
    row2 = PuiseuxVector([parse_puiseux(s)
                          for s in ("-t^{-1}", "-t", "0", "t^{-2}")])
    ok = sval(row1) == pv("[+2, +-1, -3, +0]")
    ok &= sval(row2) == pv("[--1, -1, o, +-2]")
    ok1, rep1 = _suite_ok("sval-halfspace", cases=500)
    ok2, rep2 = _suite_ok("lift-type-boundary", cases=200)
    ok3, _ = _suite_ok("lp", cases=25)
    ok &= ok1 and ok2 and ok3 and rep2.cases >= 200
    _report(7, "Puiseux valuations, halfspace lifts (>=500/>=200), LP "
               "re-verification", ok)


def test_criterion_08_lift_intersection_chain():
    import random

    rng = random.Random(7)
    rep = SuiteReport(suite="lifts")
    stats = {}
    t0 = time.time()
    suite_lifts(rep, rng, cases=50, collect=stats)
    rep.seconds = time.time() - t0
    ok = rep.ok and stats["positives"] > 0
    _report(8, f"lift-witness / separator chain on 50 instances "
               f"({stats['positives']} members, "
               f"{stats['inconclusive']} inconclusive)", ok)


def test_criterion_09_matroid_suite():
    ok = True
    for mat in MATROID_MATRICES:
        k = len(mat[0])
        V = realize_sign_vectors(mat)
        M = OMatroid.of(k, V)
        ok &= axioms_check(M.vectors).ok
        ok &= representation_check(M).ok
        nonzero = [v for v in V if any(e.sign != 0 for e in v.entries)]
        for v in nonzero:  # every deletion fails a check
            broken = OMatroid.of(k, V - {v})
            ok &= (not axioms_check(broken.vectors).ok
                   or not representation_check(broken).ok)
        for w in all_sign_vectors(k):  # every addition fails a check
            if w in V:
                continue
            grown = OMatroid.of(k, V | {w})
            ok &= (not axioms_check(grown.vectors).ok
                   or not representation_check(grown).ok)
    _report(9, "matroid realization + axioms + representation with "
               "exhaustive mutations (k <= 4)", ok)


def test_criterion_10_minkowski_weyl():
    ok, rep = _suite_ok("minkowski-weyl", cases=20)
    _report(10, f"conic Minkowski-Weyl on 20 generator sets x 21x21 grid "
                f"({rep.cases} checks)", ok)
