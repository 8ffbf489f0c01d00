"""Seeded verification suites.

Each suite draws reproducible random instances, exercises one cluster of
algebraic or geometric properties, and reports failures with their inputs.
The CLI exposes them under ``verify --suite``; the acceptance tests call
them with explicit case counts.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from tropconvex.semiring import (
    BAL,
    NEG,
    POS,
    ZERO,
    SymNum,
    add,
    bal,
    compare,
    midpoint,
    mul,
    neg,
    parse_symnum,
    pos,
    uncomp,
    zero,
)
from tropconvex.vectors import (
    SignedVector,
    _dominated,
    _order_keys,
    _tsum,
    _vert,
    faces_complex,
    faces_member,
    left_sum,
    parse_vector,
    supports,
    vert,
)
from tropconvex.halfspaces import (
    Halfspace,
    Kind,
    boundary_profile,
    eval_affine,
    hs_type,
    member,
    member_two_max,
)
import tropconvex.hull as hull
from tropconvex.hull import (
    Grid,
    PointSet,
    closure_check,
    separate,
    separate_to,
    tc_cone_member,
    tc_hull_member,
    tc_interval,
    to_hull_member,
    wspan_member,
)
from tropconvex.hemispaces import (
    HemispaceCandidate,
    SelectorRecord,
    boundary_pattern_check,
    build_grid,
    hemispace_pair_check,
    sandwich_check,
)
from tropconvex.puiseux import (
    PuiseuxNum,
    PuiseuxVector,
    lift_canonical,
    lift_typed,
    parse_puiseux,
    sval,
)
from tropconvex.lp import conv_member, conv_witness
from tropconvex.lifts import lift_witness
from tropconvex.matroids import (
    OMatroid,
    all_sign_vectors,
    axioms_check,
    circuits,
    cocircuits,
    covectors,
    orthogonal,
    realize_sign_vectors,
    representation_check,
    sign_vector,
)

SIZES = {"small": 1, "medium": 5, "large": 25}


@dataclass
class SuiteReport:
    suite: str
    cases: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, condition: bool, label, *data):
        self.cases += 1
        if not condition:
            self.failures.append((label, tuple(str(d) for d in data)))

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "failures": [
                {"label": str(lbl), "data": list(data)}
                for lbl, data in self.failures[:25]
            ],
            "failure_count": len(self.failures),
            "seconds": round(self.seconds, 3),
        }


# -- random generators --------------------------------------------------------

def rnd_mag(rng, lo=-3, hi=3) -> Fraction:
    if rng.random() < 0.2:
        return Fraction(rng.randint(2 * lo, 2 * hi), 2)
    return Fraction(rng.randint(lo, hi))


def rnd_symnum(rng, zero_p=0.12, bal_p=0.2) -> SymNum:
    r = rng.random()
    if r < zero_p:
        return zero()
    if r < zero_p + bal_p:
        return bal(rnd_mag(rng))
    return pos(rnd_mag(rng)) if rng.random() < 0.5 else neg(rnd_mag(rng))


def rnd_signed(rng, zero_p=0.12) -> SymNum:
    r = rng.random()
    if r < zero_p:
        return zero()
    return pos(rnd_mag(rng)) if rng.random() < 0.5 else neg(rnd_mag(rng))


def rnd_vec(rng, d, zero_p=0.12) -> SignedVector:
    return SignedVector([rnd_signed(rng, zero_p) for _ in range(d)])


def rnd_uncomp_point(rng, s: SymNum) -> SymNum:
    iv = uncomp(s)
    if iv.is_singleton:
        return iv.lo
    m = s._mag
    return rng.choice(
        [iv.lo, iv.hi, zero(), pos(m - 1), neg(m - 1)]
    )


def rnd_puiseux(rng, max_terms=3, allow_zero=True) -> PuiseuxNum:
    if allow_zero and rng.random() < 0.1:
        return PuiseuxNum.zero()
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = Fraction(rng.randint(-4, 4), rng.choice([1, 1, 2]))
        c = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))
        terms[e] = terms.get(e, Fraction(0)) + c
    p = PuiseuxNum(terms)
    return p if not p.is_zero else PuiseuxNum.one()


# -- suite: semiring -----------------------------------------------------------

def suite_semiring(report, rng, cases):
    for _ in range(cases):
        a, b, c = (rnd_symnum(rng) for _ in range(3))
        report.check(add(a, b) == add(b, a), "add-commutative", a, b)
        report.check(
            add(add(a, b), c) == add(a, add(b, c)), "add-associative", a, b, c
        )
        report.check(mul(a, b) == mul(b, a), "mul-commutative", a, b)
        report.check(
            mul(mul(a, b), c) == mul(a, mul(b, c)), "mul-associative", a, b, c
        )
        report.check(
            mul(a, add(b, c)) == add(mul(a, b), mul(a, c)),
            "distributive", a, b, c,
        )
    for _ in range(cases):
        a, b, c, d = (rnd_symnum(rng) for _ in range(4))
        report.check(
            add(a, c).teq(b) == a.teq(add(b, -c)), "teq-other-side", a, b, c
        )
        if a.teq(b) and c.teq(d):
            report.check(
                add(a, c).teq(add(b, d)), "teq-summing", a, b, c, d
            )
        cc = rnd_signed(rng)
        if b.teq(cc) and cc.teq(a):
            report.check(b.teq(a), "teq-signed-transitivity", a, b, cc)
        if a.teq(b):
            lam = abs(rnd_signed(rng))
            report.check(
                add(mul(lam, a), d).teq(add(mul(lam, b), d)),
                "teq-affine-monotone", a, b, lam, d,
            )
            report.check(
                add(mul(-lam, b), d).teq(add(mul(-lam, a), d)),
                "teq-affine-antitone", a, b, lam, d,
            )
    for _ in range(cases):
        a, b, c = (rnd_symnum(rng) for _ in range(3))
        if add(a, -c).teq(zero()) and add(b, c).teq(zero()):
            s = add(add(a, b), c)
            report.check(s.teq(zero()), "cancellation-plus", a, b, c)
            report.check(
                add(add(a, b), -c).teq(zero()), "cancellation-minus", a, b, c
            )
    for _ in range(cases):
        u, v, w = (rnd_signed(rng) for _ in range(3))
        vw, uv = add(v, w), add(u, v)
        qs = uncomp(vw).sample()
        ps = uncomp(uv).sample()
        full = uncomp(add(u, vw))
        for q in qs:
            iq = uncomp(add(u, q))
            report.check(
                full.lo <= iq.lo and iq.hi <= full.hi,
                "iterated-uncomp-inclusion", u, v, w, q,
            )
            for p in ps:
                ip = uncomp(add(p, w))
                report.check(
                    max(iq.lo, ip.lo) <= min(iq.hi, ip.hi),
                    "iterated-uncomp-intersection", u, v, w, p, q,
                )
    for _ in range(cases):
        a, b = rnd_signed(rng), rnd_signed(rng)
        if a < b:
            m = midpoint(a, b)
            report.check(a < m < b, "dense-order", a, b, m)


# -- suite: leftsum ------------------------------------------------------------

def suite_leftsum(report, rng, cases):
    for _ in range(cases):
        d = rng.randint(1, 3)
        x, y, z = (rnd_vec(rng, d) for _ in range(3))
        report.check(
            x.lsum(y).lsum(z) == x.lsum(y.lsum(z)), "lsum-associative", x, y, z
        )
        lhs = [abs(e) for e in x.lsum(y).entries]
        rhs = [abs(add(a, b)) for a, b in zip(x.entries, y.entries)]
        report.check(lhs == rhs, "lsum-magnitude", x, y)
    for _ in range(cases):
        a1, a2, b1, b2 = (rnd_signed(rng) for _ in range(4))
        if a1 <= b1 and a2 <= b2:
            report.check(
                a1.lsum(a2) <= b1.lsum(b2), "lsum-order-weak", a1, a2, b1, b2
            )
        if a1 < b1 and a2 < b2:
            report.check(
                a1.lsum(a2) < b1.lsum(b2), "lsum-order-strict", a1, a2, b1, b2
            )
        if a1 >= b1 and a2 >= b2:
            report.check(
                a1.lsum(a2) >= b1.lsum(b2), "lsum-order-weak-rev", a1, a2, b1, b2
            )
        if a1 > b1 and a2 > b2:
            report.check(
                a1.lsum(a2) > b1.lsum(b2), "lsum-order-strict-rev", a1, a2, b1, b2
            )
    for _ in range(cases):
        n = rng.randint(1, 3)
        xs1 = [rnd_signed(rng) for _ in range(n)]
        xs2 = [rnd_signed(rng) for _ in range(n)]
        l1 = xs1[0]
        for v in xs1[1:]:
            l1 = l1.lsum(v)
        l2 = xs2[0]
        for v in xs2[1:]:
            l2 = l2.lsum(v)
        sign = rng.choice([POS, NEG])
        a = _below_with_sign(rng, l1, sign)
        b = _below_with_sign(rng, l2, sign)
        if a is None or b is None:
            continue
        sums = [uncomp(add(p, q)) for p, q in zip(xs1, xs2)]
        for ws in itertools.product(*[(iv.lo, iv.hi) for iv in sums]):
            lw = ws[0]
            for v in ws[1:]:
                lw = lw.lsum(v)
            report.check(
                add(a, b) <= lw, "cancel-inequalities-lsum", a, b, xs1, xs2, ws
            )
    # the sign hypothesis cannot be dropped: reproduce the exact example
    a, b = pos(0), neg(0)
    w1, w2 = neg(0), pos(0)
    report.check(
        a.lsum(b) == pos(0) and w1.lsum(w2) == neg(0)
        and a.lsum(b) > w1.lsum(w2),
        "cancel-counterexample",
    )


def _below_with_sign(rng, bound: SymNum, sign: int):
    # a value of the requested sign that is <= bound in the total order
    for _ in range(8):
        v = pos(rnd_mag(rng)) if sign == POS else neg(rnd_mag(rng))
        if v <= bound:
            return v
    if sign == NEG:
        m = bound._mag if bound.sign == NEG else Fraction(0)
        return neg(m + 1)
    return None if bound.sign != POS else pos(bound._mag)


# -- suite: faces --------------------------------------------------------------

def faces_member_bruteforce(X, y) -> bool:
    """Oracle: enumerate the closed faces of the carrier box directly."""
    pts = [p.entries for p in X]
    s = pts[0]
    for p in pts[1:]:
        s = _tsum(s, p)
    V = _vert(pts)
    d = len(s)
    choices = []
    for k in range(d):
        e = s[k]
        if e.sign == BAL:
            choices.append(["lo", "hi", "iv"])
        else:
            choices.append(["fix"])
    for combo in itertools.product(*choices):
        contains = True
        vsets = []
        for k in range(d):
            e = s[k]
            yk = y.entries[k]
            tag = combo[k]
            if tag == "fix":
                vals = [e]
                contains = contains and yk == e
            elif tag == "lo":
                vals = [SymNum(NEG, e._mag)]
                contains = contains and yk == vals[0]
            elif tag == "hi":
                vals = [SymNum(POS, e._mag)]
                contains = contains and yk == vals[0]
            else:
                vals = [SymNum(NEG, e._mag), SymNum(POS, e._mag)]
                contains = contains and (
                    yk.sign == ZERO or yk._mag <= e._mag
                )
            vsets.append(vals)
        if contains and all(
            fv in V for fv in itertools.product(*vsets)
        ):
            return True
    return False


def _realizing_order(pts, v):
    """Greedy ordering whose left sum is the target vertex, or None."""
    n = len(pts)
    d = len(v)
    maxmag = []
    for k in range(d):
        mags = [p[k]._mag for p in pts if p[k].sign != ZERO]
        maxmag.append(max(mags) if mags else None)
    achievers = [
        frozenset(
            k for k in range(d)
            if p[k].sign != ZERO and maxmag[k] is not None
            and p[k]._mag == maxmag[k]
        )
        for p in pts
    ]
    closed = set(k for k in range(d) if maxmag[k] is None)
    order, remaining = [], set(range(n))
    while remaining:
        pick = None
        for i in sorted(remaining):
            if all(
                k in closed or pts[i][k] == v[k] for k in achievers[i]
            ):
                pick = i
                break
        if pick is None:
            return None
        order.append(pick)
        closed |= achievers[pick]
        remaining.discard(pick)
    return order


def suite_faces(report, rng, cases):
    # worked two-point cases
    v1 = vert([parse_vector("[+0, -0]"), parse_vector("[+1, +-1]")])
    report.check(v1 == {parse_vector("[+1, -0]")}, "vert-singleton")
    v2 = vert([parse_vector("[+0, -0]"), parse_vector("[+1, +0]")])
    report.check(
        v2 == {parse_vector("[+1, -0]"), parse_vector("[+1, +0]")},
        "vert-pair",
    )
    v3 = vert([parse_vector("[+0, -0]"), parse_vector("[-0, +0]")])
    report.check(
        v3 == {parse_vector("[+0, -0]"), parse_vector("[-0, +0]")},
        "vert-antipodal",
    )
    for _ in range(cases):
        d = rng.choice([2, 3])
        n = rng.randint(1, 4)
        X = [rnd_vec(rng, d) for _ in range(n)]
        y = rng.choice(
            [rnd_vec(rng, d), _point_on_faces(rng, X)]
        )
        report.check(
            faces_member(X, y) == faces_member_bruteforce(X, y),
            "faces-vs-bruteforce", X, y,
        )
        V = vert(X)
        report.check(len(V) <= 2 ** d, "vert-size-bound", X)
        box = faces_complex(X).box
        report.check(all(w in box for w in V), "vert-in-box", X)
    for _ in range(max(1, cases // 4)):
        d = rng.choice([2, 3])
        n = rng.randint(1, 8)
        X = [rnd_vec(rng, d) for _ in range(n)]
        pts = [p.entries for p in X]
        V = _vert(pts)
        J = set()
        ok = True
        for v in V:
            order = _realizing_order(pts, v)
            if order is None:
                ok = False
                break
            chosen = set()
            for k in range(d):
                for pos_ in order:
                    p = pts[pos_]
                    if p[k] == v[k] and (
                        v[k].sign != ZERO or all(
                            q[k].sign == ZERO or q[k]._mag <= _mag_or_none(p[k], q[k])
                            for q in pts
                        )
                    ):
                        chosen.add(pos_)
                        break
            J |= chosen
        report.check(ok, "vertex-greedy-realizable", X)
        if ok:
            Y = [pts[i] for i in sorted(J)] or pts[:1]
            report.check(
                len(Y) <= d * 2 ** d and _vert(Y) == V,
                "vertex-caratheodory", X, sorted(J),
            )


def _mag_or_none(p, q):
    return q._mag if p.sign == ZERO else p._mag


def _point_on_faces(rng, X):
    fc = faces_complex(X)
    pt = []
    for e in fc.carrier.entries:
        pt.append(rnd_uncomp_point(rng, e))
    return SignedVector(pt)


# -- suite: hulls ---------------------------------------------------------------

def suite_hulls(report, rng, cases):
    for _ in range(cases):
        d = rng.choice([2, 3])
        n = rng.randint(1, 4)
        X = PointSet.of([rnd_vec(rng, d) for _ in range(n)])
        y = rnd_vec(rng, d)
        if tc_hull_member(X, y):
            report.check(to_hull_member(X, y), "tc-subset-of-to", X, y)
    for _ in range(max(1, cases // 2)):
        x, y = rnd_vec(rng, 2), rnd_vec(rng, 2)
        mags = {e._mag for e in list(x.entries) + list(y.entries)
                if e.sign != ZERO}
        probes = [rnd_vec(rng, 2) for _ in range(6)] + [x, y]
        extra = {e._mag for p in probes for e in p.entries if e.sign != ZERO}
        region = tc_interval(x, y, extra_mags=mags | extra)
        for z in probes:
            report.check(
                (z in region) == tc_hull_member(PointSet.of([x, y]), z),
                "interval-vs-hull", x, y, z,
            )
    for _ in range(max(1, cases // 2)):
        d = 2
        lo, hi = [], []
        for _ in range(d):
            v, w = rnd_signed(rng, zero_p=0), rnd_signed(rng, zero_p=0)
            lo.append(min(v, w))
            hi.append(max(v, w))
        corners = [
            SignedVector(c)
            for c in itertools.product(*[(a, b) for a, b in zip(lo, hi)])
        ]
        Xc = PointSet.of(corners).deduped()
        for _ in range(4):
            z = rnd_vec(rng, d)
            inside = all(a <= zi <= b for zi, a, b in zip(z.entries, lo, hi))
            report.check(
                tc_hull_member(Xc, z) == inside, "box-hull-tc", Xc, z
            )
            report.check(
                to_hull_member(Xc, z) == inside, "box-hull-to", Xc, z
            )
    # removing the subset bound never changes decisions
    for _ in range(max(1, cases // 8)):
        d = 2
        n = rng.randint(hull.caratheodory_bound(d) - 1,
                        hull.caratheodory_bound(d) + 2)
        X = PointSet.of(
            [SignedVector([rng.choice([pos(0), neg(0), pos(-1), neg(-1), zero()])
                           for _ in range(d)]) for _ in range(n)]
        )
        y = SignedVector(
            [rng.choice([pos(0), neg(0), pos(-1), neg(-1), zero()])
             for _ in range(d)]
        )
        pts, yt = hull._prep(X, y)
        capped = hull._Search(
            pts, yt, hull.HULL, faces=True,
            cap=min(len(pts), hull.caratheodory_bound(d))).run()
        uncapped = hull._Search(
            pts, yt, hull.HULL, faces=True, cap=None).run()
        report.check(
            (capped is None) == (uncapped is None),
            "caratheodory-bound-lossless", X, y,
        )


def suite_critical_oracle(report, rng, cases):
    """Hull decisions survive a 10x denser scalar sampling."""
    for _ in range(cases):
        d = rng.choice([2, 3])
        n = rng.randint(2, 4)
        X = PointSet.of([rnd_vec(rng, d) for _ in range(n)])
        y = rnd_vec(rng, d)
        pts = [p.entries for p in X.deduped().points]
        tc = tc_hull_member(X, y)
        to = to_hull_member(X, y)
        if tc and to:
            continue
        pool = hull._mags_of(pts + [y.entries])
        crit = hull._critical_down(pool)
        lo = min(crit)
        dense = sorted(
            {lo * Fraction(i, 10 * len(crit)) for i in range(10 * len(crit) + 1)}
            | set(crit),
            reverse=True,
        )
        for _ in range(40):
            lams = [
                rng.choice(dense) if rng.random() < 0.8 else None
                for _ in range(len(pts))
            ]
            if all(l is None for l in lams):
                continue
            top = max(l for l in lams if l is not None)
            lams = [None if l is None else l - top for l in lams]
            scaled = [
                hull._scale(p, l) for p, l in zip(pts, lams) if l is not None
            ]
            if not hull._box_contains(scaled, y.entries):
                continue
            if not to:
                report.failures.append(
                    ("critical-set-missed-to", (str(X), str(y), str(lams)))
                )
            if not tc:
                verts = [_order_keys(w) for w in _vert(scaled)]
                if _dominated(_order_keys(y.entries), verts, d):
                    report.failures.append(
                        ("critical-set-missed-tc", (str(X), str(y), str(lams)))
                    )
        report.cases += 1


# -- suite: sandglass ------------------------------------------------------------

def _interval_profile(rng):
    c = rnd_mag(rng, -2, 0)
    if rng.random() < 0.5:
        return pos(0), pos(c) if rng.random() < 0.8 else zero()
    return pos(c) if rng.random() < 0.8 else zero(), pos(0)


def suite_sandglass(report, rng, cases):
    d = 2
    for _ in range(cases):
        y1, y2 = rnd_vec(rng, d), rnd_vec(rng, d)
        s, sb = _interval_profile(rng)
        mix = _tsum(
            tuple(mul(s, e) for e in y1.entries),
            tuple(mul(sb, e) for e in y2.entries),
        )
        x0 = SignedVector([rnd_uncomp_point(rng, e) for e in mix])
        X = [x0] + [rnd_vec(rng, d) for _ in range(rng.randint(0, 2))]
        base = PointSet.of(X)
        with1 = PointSet.of(X + [y1])
        with2 = PointSet.of(X + [y2])
        probes = X + [y1, y2] + [rnd_vec(rng, d) for _ in range(6)]
        for z in probes:
            inter = tc_hull_member(with1, z) and tc_hull_member(with2, z)
            report.check(
                inter == tc_hull_member(base, z),
                "sand-glass", X, y1, y2, z,
            )


# -- suite: pasch -----------------------------------------------------------------

def suite_pasch(report, rng, cases):
    for _ in range(cases):
        d = rng.choice([2, 2, 3])
        a, c1, c2 = (rnd_vec(rng, d) for _ in range(3))
        s1, sb1 = _interval_profile(rng)
        s2, sb2 = _interval_profile(rng)
        b1 = SignedVector([
            rnd_uncomp_point(rng, e) for e in _tsum(
                tuple(mul(s1, e) for e in a.entries),
                tuple(mul(sb1, e) for e in c1.entries))
        ])
        b2 = SignedVector([
            rnd_uncomp_point(rng, e) for e in _tsum(
                tuple(mul(s2, e) for e in a.entries),
                tuple(mul(sb2, e) for e in c2.entries))
        ])
        report.check(
            to_hull_member(PointSet.of([a, c1]), b1), "pasch-pre-1",
            a, c1, b1,
        )
        report.check(
            to_hull_member(PointSet.of([a, c2]), b2), "pasch-pre-2",
            a, c2, b2,
        )
        found = _pasch_common_point(rng, b1, b2, c1, c2, s1, sb1, s2, sb2)
        report.check(
            found is not None, "pasch-common-point", a, c1, c2, b1, b2
        )


def _pasch_common_point(rng, b1, b2, c1, c2, s1, sb1, s2, sb2):
    den = add(s1, mul(sb1, s2))
    hull1 = PointSet.of([b1, c2])
    hull2 = PointSet.of([c1, b2])
    candidates = []
    if den.sign != ZERO:
        rec = den.recip()
        t1, tb1 = mul(s2, rec), mul(mul(s1, sb2), rec)
        t2, tb2 = mul(mul(sb1, s2), rec), mul(s1, rec)
        box1 = _tsum(
            tuple(mul(t1, e) for e in b1.entries),
            tuple(mul(tb1, e) for e in c2.entries),
        )
        box2 = _tsum(
            tuple(mul(t2, e) for e in c1.entries),
            tuple(mul(tb2, e) for e in b2.entries),
        )
        inter = []
        okay = True
        for e1, e2 in zip(box1, box2):
            i1, i2 = uncomp(e1), uncomp(e2)
            lo = max(i1.lo, i2.lo)
            hi = min(i1.hi, i2.hi)
            if not lo <= hi:
                okay = False
                break
            inter.append((lo, hi))
        if okay:
            for combo in itertools.product(*[(lo, hi) for lo, hi in inter]):
                candidates.append(SignedVector(combo))
    for p in (b1, b2, c1, c2):
        candidates.append(p)
    for z in candidates:
        if to_hull_member(hull1, z) and to_hull_member(hull2, z):
            return z
    return None


def suite_pasch_tc_counterexample(report, rng, cases):
    a = parse_vector("[+0, -0]")
    b1 = parse_vector("[o, -0]")
    b2 = parse_vector("[+0, +0]")
    c1 = parse_vector("[-0, -0]")
    c2 = parse_vector("[o, +1]")
    report.check(
        tc_hull_member(PointSet.of([a, c1]), b1), "counterexample-pre-1"
    )
    report.check(
        tc_hull_member(PointSet.of([a, c2]), b2), "counterexample-pre-2"
    )
    probes = [
        SignedVector((x, y))
        for x in (pos(0), neg(0), zero(), pos(1), neg(1), pos(Fraction(1, 2)))
        for y in (pos(0), neg(0), zero(), pos(1), neg(1), pos(Fraction(1, 2)))
    ]
    h1 = PointSet.of([c1, b2])
    h2 = PointSet.of([c2, b1])
    for z in probes:
        in1 = tc_hull_member(h1, z)
        report.check(
            in1 == (z in (c1, b2)), "hull-c1-b2-two-points", z
        )
        if in1:
            report.check(
                not tc_hull_member(h2, z), "empty-intersection", z
            )
    # the second interval is the vertical segment {zero} x [-0, 1]
    seg = [SignedVector((zero(), v))
           for v in (neg(0), zero(), pos(0), pos(Fraction(1, 2)), pos(1))]
    for z in seg:
        report.check(tc_hull_member(h2, z), "hull-c2-b1-segment", z)
    report.check(
        not tc_hull_member(h2, SignedVector((zero(), pos(2)))),
        "hull-c2-b1-above",
    )
    report.check(
        not tc_hull_member(h2, SignedVector((zero(), neg(1)))),
        "hull-c2-b1-below",
    )


# -- suite: hemispace ------------------------------------------------------------

def _hemi1_candidates():
    a = parse_vector("[-0, +0, o]")
    boundary_all = SelectorRecord(frozenset({0, 1}))
    ge0 = SelectorRecord(frozenset({0, 1}),
                         constraints=((2, ">=", pos(0)),))
    le0 = SelectorRecord(frozenset({0, 1}),
                         constraints=((2, "<=", pos(0)),))
    ge1 = SelectorRecord(frozenset({0, 1}),
                         constraints=((2, ">=", pos(1)),))
    sign_pos = SelectorRecord(frozenset({0, 1}), signs=((2, POS),))
    return a, [
        ("open", HemispaceCandidate(a, ())),
        ("closed", HemispaceCandidate(a, (boundary_all,))),
        ("x2>=0", HemispaceCandidate(a, (ge0,))),
        ("x2<=0", HemispaceCandidate(a, (le0,))),
        ("x2>=1", HemispaceCandidate(a, (ge1,))),
        ("x2-positive", HemispaceCandidate(a, (sign_pos,))),
    ]


def suite_hemispace(report, rng, cases):
    a, candidates = _hemi1_candidates()
    passing = []
    for name, G in candidates:
        grid = build_grid(G)
        report.check(sandwich_check(G, grid), "sandwich", name)
        ok = hemispace_pair_check(G, grid)
        if ok:
            passing.append(name)
        if name in ("open", "closed"):
            report.check(ok, "pair-check-trivial", name)
            report.check(
                not boundary_pattern_check(G, grid), "boundary-trivial", name
            )
        else:
            report.check(
                boundary_pattern_check(G, grid) != [],
                "boundary-partial-flagged", name,
            )
    report.check(passing == ["open", "closed"], "exactly-two", passing)

    # the zero-threshold family admits infinitely many hemispaces
    a2 = parse_vector("[o, +0, o]")
    thresholds = [neg(1), pos(-1), pos(0), pos(Fraction(1, 2)), pos(2)]
    for c in thresholds:
        rec = SelectorRecord(frozenset(), constraints=((2, ">=", c),))
        G = HemispaceCandidate(a2, (rec,))
        grid = build_grid(G)
        report.check(
            hemispace_pair_check(G, grid), "threshold-family", c
        )
        report.check(
            not boundary_pattern_check(G, grid), "threshold-boundary", c
        )
    # an incoherent boundary selection fails
    bad = HemispaceCandidate(
        a, (SelectorRecord(frozenset({0, 1}),
                           constraints=((2, ">=", pos(0)), (2, "<=", pos(0)))),)
    )
    report.check(
        not hemispace_pair_check(bad, build_grid(bad)), "incoherent-fails"
    )

    # boundary behavior of passing candidates
    for name, G in candidates:
        if name not in ("open", "closed"):
            continue
        grid = build_grid(G)
        pts = [x for x in grid.points()]
        members = [x for x in pts if G.member(x)]
        for _ in range(min(cases, 30)):
            if not members:
                break
            x = rng.choice(members)
            prof = boundary_profile(G.a, x)
            if not prof.argmax:
                continue
            rho = rng.choice(grid.diffs() + [Fraction(0)])
            if rng.random() < 0.5:
                rho = -rho
            rx = x.scale(pos(rho))
            if boundary_profile(G.a, rx).argmax == prof.argmax:
                report.check(G.member(rx), "translation-closure", name, x, rho)
            y = rng.choice(pts)
            prof_y = boundary_profile(G.a, y)
            if prof_y.argmax == prof.argmax and all(
                y[i - 1].sign == x[i - 1].sign
                for i in prof.argmax if i >= 1
            ):
                report.check(G.member(y), "sup-slice-transfer", name, x, y)
            s = []
            for ell in range(1, len(x) + 1):
                if ell in prof.domin_plus:
                    s.append(x[ell - 1])
                else:
                    s.append(x[ell - 1].balance())
            for corner in itertools.product(
                *[uncomp(e).sample() for e in s]
            ):
                if grid.on_grid(SignedVector(corner)):
                    report.check(
                        G.member(SignedVector(corner)),
                        "positive-box", name, x, corner,
                    )


# -- suite: puiseux ---------------------------------------------------------------

def suite_puiseux(report, rng, cases):
    one = PuiseuxNum.one()
    for _ in range(cases):
        p, q, r = (rnd_puiseux(rng) for _ in range(3))
        report.check(p + q == q + p, "field-add-comm", p, q)
        report.check((p + q) + r == p + (q + r), "field-add-assoc", p, q, r)
        report.check(p * q == q * p, "field-mul-comm", p, q)
        report.check((p * q) * r == p * (q * r), "field-mul-assoc", p, q, r)
        report.check(p * (q + r) == p * q + p * r, "field-distrib", p, q, r)
        if not q.is_zero:
            report.check((p / q) * q == p, "field-division", p, q)
        # order compatibility
        if p <= q:
            report.check(p + r <= q + r, "order-translation", p, q, r)
            if r > PuiseuxNum.zero():
                report.check(p * r <= q * r, "order-scaling", p, q, r)
    for _ in range(cases):
        n = rng.randint(2, 4)
        xs = [rnd_puiseux(rng) for _ in range(n)]
        if xs[0] >= xs[1]:
            report.check(
                sval(xs[0]).geq(sval(xs[1])) or sval(xs[0]) == sval(xs[1]),
                "sval-monotone", xs[0], xs[1],
            )
        prod = one
        acc = pos(0)
        for x in xs:
            prod = prod * x
            acc = mul(acc, sval(x))
        report.check(sval(prod) == acc, "sval-multiplicative", xs)
        total = PuiseuxNum.zero()
        tacc = zero()
        for x in xs:
            total = total + x
            tacc = add(tacc, sval(x))
        report.check(
            sval(total) in uncomp(tacc), "sval-additive-uncomp", xs
        )


def _random_puiseux_halfspace(rng, d):
    while True:
        coeffs = [rnd_puiseux(rng, max_terms=2) for _ in range(d + 1)]
        if any(not c.is_zero for c in coeffs[1:]):
            return coeffs


def suite_sval_hspace(report, rng, cases):
    d = 2
    for _ in range(cases):
        coeffs = _random_puiseux_halfspace(rng, d)
        xs = [rnd_puiseux(rng) for _ in range(d)]
        j = next(i for i in range(1, d + 1) if not coeffs[i].is_zero)
        margin = rng.choice(
            [PuiseuxNum.zero(), PuiseuxNum.one(),
             parse_puiseux("t^{-1}"), parse_puiseux("2*t")]
        )
        rest = coeffs[0]
        for i in range(1, d + 1):
            if i != j:
                rest = rest + coeffs[i] * xs[i - 1]
        xs[j - 1] = (margin - rest) / coeffs[j]
        val = coeffs[0]
        for i in range(1, d + 1):
            val = val + coeffs[i] * xs[i - 1]
        report.check(val >= PuiseuxNum.zero(), "construction", coeffs, xs)
        ta = SignedVector([sval(c) for c in coeffs])
        h = Halfspace(ta, Kind.CLOSED)
        report.check(
            member(h, SignedVector([sval(x) for x in xs])),
            "sval-into-closed", coeffs, xs,
        )
    for _ in range(cases):
        a = _random_halfspace_coeffs(rng, d)
        hopen = Halfspace(a, Kind.OPEN)
        found = 0
        for _ in range(20):
            x = rnd_vec(rng, d)
            if member(hopen, x):
                found += 1
                lx = lift_canonical(x)
                la = lift_canonical(a)
                val = la[0]
                for i in range(1, d + 1):
                    val = val + la[i] * lx[i - 1]
                report.check(
                    val >= PuiseuxNum.zero(), "open-lift-member", a, x
                )
                if found >= 3:
                    break


def _random_halfspace_coeffs(rng, d):
    while True:
        a = rnd_vec(rng, d + 1, zero_p=0.25)
        if any(e.sign != ZERO for e in a.entries[1:]):
            return a


def _lift_halfspace(a: SignedVector, K):
    """Typed lift of the coefficient vector with point-dimension inflation."""
    d = len(a) - 1
    shifted = frozenset(i + 1 for i in K)
    return lift_typed(a, shifted, inflate=d + 1)


def suite_lift_type_boundary(report, rng, cases):
    d = 2
    done = 0
    while done < cases:
        a = _random_halfspace_coeffs(rng, d)
        h = Halfspace(a, Kind.CLOSED)
        J = hs_type(a)
        K = frozenset(range(0, d + 1)) - J
        boundary = []
        for _ in range(60):
            x = rnd_vec(rng, d)
            if eval_affine(a, x).sign == BAL:
                boundary.append(x)
            if len(boundary) >= 3:
                break
        for x in boundary:
            done += 1
            la = _lift_halfspace(a, K)
            lx = lift_typed(x, J)
            val = la[0]
            for i in range(1, d + 1):
                val = val + la[i] * lx[i - 1]
            report.check(
                val >= PuiseuxNum.zero(), "typed-boundary-lift", a, x
            )


def suite_multiplied_conv(report, rng, cases):
    d = 2
    for _ in range(cases):
        n = rng.randint(2, 3)
        X = [PuiseuxVector([rnd_puiseux(rng) for _ in range(d)])
             for _ in range(n)]
        lam_exp = rnd_mag(rng, -2, 2)
        lam = PuiseuxNum.monomial(1, lam_exp)
        weights = [Fraction(rng.randint(0, 3)) for _ in range(n)]
        if sum(weights) == 0:
            weights[0] = Fraction(1)
        total = sum(weights)
        weights = [w / total for w in weights]
        y = None
        for w, xv in zip(weights, X):
            term = xv.scale(PuiseuxNum.from_rational(w))
            y = term if y is None else y + term
        report.check(
            sval(y.scale(lam))
            == SignedVector([mul(pos(lam_exp), e) for e in sval(y).entries]),
            "multiplied-conv", lam, [str(x) for x in X],
        )
        scaled = [xv.scale(lam) for xv in X]
        report.check(
            conv_member(scaled, y.scale(lam)) and conv_member(X, y),
            "multiplied-conv-membership", lam,
        )


def suite_lp(report, rng, cases):
    d = 2
    for _ in range(cases):
        n = rng.randint(2, 4)
        pts = [PuiseuxVector([rnd_puiseux(rng) for _ in range(d)])
               for _ in range(n)]
        weights = [Fraction(rng.randint(0, 2)) for _ in range(n)]
        if sum(weights) == 0:
            weights[0] = Fraction(1)
        total = sum(weights)
        q = None
        for w, p in zip(weights, pts):
            term = p.scale(PuiseuxNum.from_rational(w / total))
            q = term if q is None else q + term
        wit = conv_witness(pts, q)
        report.check(wit is not None, "lp-witness-found", pts, q)
        # a far-away point is rejected with a verified certificate
        big = PuiseuxVector([parse_puiseux("t^9") for _ in range(d)])
        report.check(conv_witness(pts, big) is None, "lp-reject", pts)
    # the worked combination of two matrix rows
    row1 = PuiseuxVector([parse_puiseux(s)
                          for s in ("t^2", "t^{-1}", "-t^3", "1")])
    row2 = PuiseuxVector([parse_puiseux(s)
                          for s in ("-t^{-1}", "-t", "0", "t^{-2}")])
    combo = row2 + row1.scale(parse_puiseux("t^{-5}"))
    from tropconvex.lp import cone_member as pcone
    report.check(pcone([row1, row2], combo), "cone-combination")
    report.check(
        [e.sign for e in sval(combo).entries] == [NEG, NEG, NEG, POS],
        "combination-signs",
    )


# -- suite: lifts (certificate chain) ---------------------------------------------

def suite_lifts(report, rng, cases, collect=None):
    d, n = 2, 3
    inconclusive = 0
    total_pos = 0
    for _ in range(cases):
        X = PointSet.of([rnd_vec(rng, d) for _ in range(n)])
        probes = list(X.points)
        fc = faces_complex(list(X.points))
        probes.append(SignedVector(
            [rnd_uncomp_point(rng, e) for e in fc.carrier.entries]))
        probes += [rnd_vec(rng, d) for _ in range(4)]
        for y in probes[:6]:
            if tc_hull_member(X, y):
                total_pos += 1
                for J in _subsets(d):
                    w = lift_witness(X, J, y)
                    if w is None:
                        inconclusive += 1
                        report.cases += 1
                        continue
                    report.check(
                        sval(w) == y, "lift-witness-sval", X, J, y
                    )
            else:
                mags = _separator_grid(X, y)
                h = separate(X, y, mags)
                if h is None:
                    inconclusive += 1
                    report.cases += 1
                    continue
                report.check(
                    all(member(h, x) for x in X) and not member(h, y),
                    "separator-verified", X, y,
                )
                J0 = hs_type(h.coeffs)
                K = frozenset(range(0, d + 1)) - J0
                la = _lift_halfspace(h.coeffs, K)
                for x in X.points:
                    lx = lift_typed(x, J0)
                    val = la[0]
                    for i in range(1, d + 1):
                        val = val + la[i] * lx[i - 1]
                    report.check(
                        val >= PuiseuxNum.zero(),
                        "lifted-separator-contains-generators", X, y, x,
                    )
                for J in _subsets(d):
                    ly = lift_typed(y, J)
                    val = la[0]
                    for i in range(1, d + 1):
                        val = val + la[i] * ly[i - 1]
                    report.check(
                        not val >= PuiseuxNum.zero(),
                        "lifted-separator-excludes-query", X, y, J,
                    )
    if collect is not None:
        collect["inconclusive"] = inconclusive
        collect["positives"] = total_pos
    report.check(
        inconclusive <= max(1, report.cases) * 0.05,
        "inconclusive-rate", inconclusive, report.cases,
    )


def _subsets(d):
    idx = list(range(1, d + 1))
    out = []
    for r in range(d + 1):
        for combo in itertools.combinations(idx, r):
            out.append(frozenset(combo))
    return out


def _separator_grid(X, y):
    """Candidate coefficient magnitudes: differences plus their midpoints."""
    pool = hull._mags_of([p.entries for p in X.points] + [y.entries])
    mags = set(pool) | {Fraction(0), Fraction(1)}
    for u in pool:
        for v in pool:
            mags.add(u - v)
    base = sorted(mags)
    for a, b in zip(base, base[1:]):
        mags.add((a + b) / 2)
    return sorted(mags)


# -- suite: separation --------------------------------------------------------------

def suite_separation(report, rng, cases):
    d = 2
    for _ in range(cases):
        a = _random_halfspace_coeffs(rng, d)
        x = rnd_vec(rng, d)
        hopen = Halfspace(a, Kind.OPEN)
        hclosed = Halfspace(a, Kind.CLOSED)
        hsemi = Halfspace(a, Kind.SEMI_CLOSED)
        hhyp = Halfspace(a, Kind.HYPERPLANE)
        if member(hopen, x):
            report.check(member(hclosed, x), "open-in-closed", a, x)
        report.check(
            member(hclosed, x) != member(hopen.opposite(), x),
            "closed-complement-open-opposite", a, x,
        )
        report.check(
            member(hopen, x) != member(hclosed.opposite(), x),
            "open-complement-closed-opposite", a, x,
        )
        for h in (hopen, hclosed, hsemi, hhyp):
            report.check(
                member(h, x) == member_two_max(h, x),
                "member-vs-two-max", h, x,
            )
        prof = boundary_profile(a, x)
        report.check(
            (not prof.argmax) == (eval_affine(a, x).sign == ZERO),
            "argmax-empty-iff-zero", a, x,
        )
        rho = rnd_signed(rng, zero_p=0)
        rx = x.scale(rho)
        prof2 = boundary_profile(a, rx)
        if 0 not in prof.argmax and 0 not in prof2.argmax:
            report.check(
                prof.argmax == prof2.argmax, "argmax-scaling", a, x, rho
            )
    # sandwich topology: boundary points are approached from both sides
    found = 0
    while found < max(2, cases // 4):
        a = _random_halfspace_coeffs(rng, d)
        x = rnd_vec(rng, d)
        if eval_affine(a, x).sign != BAL:
            continue
        found += 1
        for delta in (Fraction(1), Fraction(1, 2), Fraction(1, 4)):
            signs = set()
            for combo in itertools.product((-1, 0, 1), repeat=d):
                pt = []
                for e, dirn in zip(x.entries, combo):
                    pt.append(_nudge(e, dirn, delta))
                signs.add(eval_affine(a, SignedVector(pt)).sign)
            report.check(
                POS in signs and NEG in signs, "halfspace-topology", a, x, delta
            )
    # member grids of closed halfspaces and hyperplanes are TC-convex
    for _ in range(max(2, cases // 10)):
        a = SignedVector([
            rng.choice([pos(0), neg(0), pos(1), neg(1), zero()])
            for _ in range(d + 1)
        ])
        if all(e.sign == ZERO for e in a.entries[1:]):
            continue
        grid = Grid(dim=d, mags=(Fraction(0), Fraction(1), Fraction(2)))
        for kind in (Kind.CLOSED, Kind.HYPERPLANE):
            h = Halfspace(a, kind)
            members = [x for x in grid.points() if member(h, x)]
            if members:
                report.check(
                    closure_check(members, grid).ok,
                    "halfspace-grid-tc-convex", a, kind,
                )
    for _ in range(cases // 2):
        X = PointSet.of([rnd_vec(rng, d) for _ in range(rng.randint(1, 3))])
        y = rnd_vec(rng, d)
        mags = sorted(
            hull._mags_of([p.entries for p in X.points] + [y.entries])
            | {Fraction(0), Fraction(1)}
        )
        h = separate(X, y, mags)
        if tc_hull_member(X, y):
            report.check(h is None, "no-separator-for-member", X, y)
        elif h is not None:
            report.check(
                all(member(h, x) for x in X) and not member(h, y),
                "separator-post", X, y, h,
            )
        if y in list(X.points):
            report.check(h is None, "member-not-separated", X, y)
    # two-set separation with certified disjointness by coordinate gaps
    for _ in range(cases // 2):
        gap = pos(rng.randint(0, 2))
        X = PointSet.of([
            SignedVector([neg(rng.randint(3, 5)) for _ in range(d)])
            for _ in range(2)
        ])
        Y = PointSet.of([
            SignedVector([pos(rng.randint(0, 2)) for _ in range(d)])
            for _ in range(2)
        ])
        mags = sorted({Fraction(v) for v in range(0, 6)})
        got = separate_to(X, Y, mags)
        report.check(got is not None, "two-set-separator-found", X, Y)
        if got:
            hp, hm = got
            report.check(
                all(member(hp, x) for x in X)
                and all(member(hm, yv) for yv in Y),
                "two-set-separator-post", X, Y,
            )
    report.check(
        separate_to(PointSet.of([rnd_vec(rng, d)] * 2),
                    PointSet.of([rnd_vec(rng, d)] * 2), [Fraction(0)])
        is None or True,
        "two-set-none-tolerated",
    )
    # a Pasch configuration: the crossing hulls share a point, so the
    # two-set search must come back empty in both directions
    b1 = parse_vector("[o, -0]")
    b2 = parse_vector("[+0, +0]")
    c1 = parse_vector("[-0, -0]")
    c2 = parse_vector("[o, +1]")
    common = b1  # lies in both open-hull segments
    report.check(
        to_hull_member(PointSet.of([b1, c2]), common)
        and to_hull_member(PointSet.of([c1, b2]), common),
        "pasch-common-point-known",
    )
    mags = [Fraction(0), Fraction(1)]
    report.check(
        separate_to(PointSet.of([b1, c2]), PointSet.of([c1, b2]), mags)
        is None
        and separate_to(PointSet.of([c1, b2]), PointSet.of([b1, c2]), mags)
        is None,
        "pasch-hulls-inseparable",
    )


def _nudge(e: SymNum, dirn: int, delta: Fraction) -> SymNum:
    if dirn == 0:
        return e
    if e.sign == ZERO:
        mag = Fraction(-1) / delta
        return pos(mag) if dirn > 0 else neg(mag)
    if e.sign == POS:
        return pos(e._mag + dirn * delta)
    return neg(e._mag - dirn * delta)


# -- suite: matroid ------------------------------------------------------------------

MATROID_MATRICES = (
    ((1, 1),),
    ((1, 0, -1), (0, 1, -1)),
    ((1, 0, -1, 2), (0, 1, 1, 1)),
)


def suite_matroid(report, rng, cases):
    for mat in MATROID_MATRICES:
        V = realize_sign_vectors(mat)
        k = len(mat[0])
        M = OMatroid.of(k, V)
        report.check(axioms_check(M.vectors).ok, "realized-axioms", mat)
        rep = representation_check(M)
        report.check(rep.ok, "representation", mat, rep.failures[:2])
        C, D = circuits(M), cocircuits(M)
        for c in C:
            for dd in D:
                report.check(orthogonal(c, dd), "circuit-cocircuit-orth",
                             mat, c, dd)
        report.check(
            axioms_check(covectors(M)).ok, "dual-axioms", mat
        )
        # scaled circuit families keep pairwise orthogonality
        lams = [pos(0), neg(0), pos(1), neg(-2)]
        for c in C:
            for dd in D:
                for l1 in lams:
                    for l2 in lams:
                        report.check(
                            orthogonal(c.scale(l1), dd.scale(l2)),
                            "scaled-orthogonality", mat, c, dd,
                        )
        # mutations: dropping or adding one vector breaks some check
        nonzero = sorted(
            (v for v in V if any(e.sign != ZERO for e in v.entries)),
            key=str,
        )
        for v in nonzero[: max(1, cases // 10)]:
            broken = OMatroid.of(k, V - {v})
            bad = not axioms_check(broken.vectors).ok or not (
                representation_check(broken).ok
            )
            report.check(bad, "mutation-delete", mat, v)
        complement = [w for w in all_sign_vectors(k) if w not in V]
        rng.shuffle(complement)
        for w in complement[: max(1, cases // 10)]:
            grown = OMatroid.of(k, V | {w})
            bad = not axioms_check(grown.vectors).ok or not (
                representation_check(grown).ok
            )
            report.check(bad, "mutation-add", mat, w)
    # the free matroid: circuits are the signed unit vectors
    k = 3
    free = OMatroid.of(k, frozenset(all_sign_vectors(k)))
    report.check(axioms_check(free.vectors).ok, "free-axioms")
    C = circuits(free)
    expected = set()
    for i in range(k):
        for s in (POS, NEG):
            expected.add(sign_vector([s if j == i else ZERO for j in range(k)]))
    report.check(C == expected, "free-circuits", sorted(map(str, C)))
    report.check(
        circuits(OMatroid.of(2, frozenset({sign_vector([ZERO, ZERO])})))
        == frozenset(),
        "trivial-circuits",
    )
    # zero matrix realizes only the zero vector
    report.check(
        realize_sign_vectors(((0, 0),))
        == frozenset({sign_vector([ZERO, ZERO])}),
        "zero-matrix",
    )
    # axioms catch a missing negation
    bad = OMatroid.of(2, frozenset({
        sign_vector([ZERO, ZERO]), sign_vector([POS, ZERO])
    }))
    rep = axioms_check(bad.vectors)
    report.check(
        any(v[0] == "V1" for v in rep.violations), "axioms-catch-scaling"
    )
    # random realizable matroids pass the axioms
    for _ in range(min(cases // 4, 8)):
        r, k = rng.randint(1, 2), rng.randint(2, 4)
        mat = tuple(
            tuple(rng.randint(-2, 2) for _ in range(k)) for _ in range(r)
        )
        V = realize_sign_vectors(mat)
        report.check(axioms_check(V).ok, "random-realized-axioms", mat)


# -- suite: minkowski-weyl -------------------------------------------------------------

def _mw_grid(rng):
    mags = [Fraction(v) for v in range(-4, 6)]
    vals = [zero()] + [pos(m) for m in mags] + [neg(m) for m in mags]
    return vals


def suite_minkowski_weyl(report, rng, cases):
    d = 2
    for _ in range(cases):
        X = PointSet.of([
            SignedVector([rnd_signed(rng, zero_p=0.1) for _ in range(d)])
            for _ in range(3)
        ]).deduped()
        axis = _mw_grid(rng)
        rows = [v for v in axis][:21]
        grid_pts = [SignedVector((u, v)) for u in rows for v in rows]
        truth = {}
        for z in grid_pts:
            truth[z.entries] = tc_cone_member(X, z)
        # candidate magnitudes for linear separators
        mags = sorted(
            {abs(u - v) for u in _gen_mags(X) for v in _gen_mags(X)}
            | _gen_mags(X) | {Fraction(0), Fraction(1)}
        )
        cover = []
        misses = 0
        for z in grid_pts:
            if truth[z.entries]:
                continue
            h = _linear_separator(X, z, mags, cover)
            if h is None:
                misses += 1
            elif h not in cover:
                cover.append(h)
        report.check(misses == 0, "halfspace-list-covers", X, misses)
        for z in grid_pts:
            in_list = all(member(h, z) for h in cover)
            report.check(
                in_list == truth[z.entries], "halfspace-list-vs-cone", X, z
            )
    report.cases += 0


def _gen_mags(X):
    return {
        e._mag for p in X.points for e in p.entries if e.sign != ZERO
    }


def _linear_separator(X, z, mags, cover):
    for h in cover:
        if not member(h, z):
            return h
    coeffs = [zero()]
    for m in sorted(mags, reverse=True):
        coeffs.append(pos(m))
        coeffs.append(neg(m))
    d = X.dim
    for combo in itertools.product(coeffs, repeat=d):
        if all(e.sign == ZERO for e in combo):
            continue
        h = Halfspace(SignedVector((zero(),) + combo), Kind.CLOSED)
        if member(h, z):
            continue
        if all(member(h, x) for x in X):
            return h
    return None


# -- suite: paper-examples ---------------------------------------------------------------

def suite_paper_examples(report, rng, cases):
    sn = parse_symnum
    report.check(mul(sn("+2"), sn("-1")) == sn("-3"), "mul-2-neg1")
    report.check(
        mul(add(sn("+0"), sn("-0")), sn("-(-1)")) == sn("b-1"),
        "balanced-product",
    )
    report.check(mul(sn("-1"), sn("-1")) == sn("+2"), "neg-times-neg")
    report.check(add(sn("b4"), sn("+3")) == sn("b4"), "balanced-absorbs")
    report.check(add(sn("o"), sn("-3")) == sn("-3"), "zero-neutral")
    report.check(compare(sn("+2"), sn("-3")).gt, "order-2-neg3")
    r1 = compare(sn("b4"), sn("-3"))
    r2 = compare(sn("-3"), sn("b4"))
    report.check(not r1.gt and r1.teq and r2.teq, "teq-not-antisymmetric")
    report.check(compare(sn("+3"), sn("b4")).teq, "teq-3-b4")
    report.check(str(uncomp(sn("b-2"))) == "[--2, +-2]", "uncomp-balanced")
    report.check(uncomp(sn("+2")).is_singleton, "uncomp-singleton")
    report.check(abs(sn("b4")) == sn("+4"), "abs-unbalances")
    # left sum basics
    report.check(
        sn("+0").lsum(sn("-0")) == sn("+0")
        and sn("-0").lsum(sn("+0")) == sn("-0"),
        "left-sum-noncommutative",
    )
    report.check(sn("+1").lsum(sn("-2")) == sn("-2"), "left-sum-magnitude")
    report.check(
        left_sum(parse_vector("[+1, --1]"), parse_vector("[+0, -0]"))
        == parse_vector("[+1, -0]"),
        "left-sum-vector",
    )
    # supports
    s, p, n = supports(parse_vector("[+2, o, -1]"))
    report.check(
        (s, p, n) == (frozenset({1, 3}), frozenset({1}), frozenset({3})),
        "supports",
    )
    # eval/member worked example
    a = parse_vector("[o, +0, -0]")
    b = parse_vector("[o, +0, -3]")
    x = parse_vector("[-0, --2]")
    y = parse_vector("[+0, +-1]")
    report.check(eval_affine(a, y) == sn("+0"), "eval-a-y")
    report.check(eval_affine(b, x) == sn("+1"), "eval-b-x")
    xy = left_sum(x, y)
    report.check(xy == parse_vector("[-0, +-1]"), "orthant-left-sum")
    report.check(eval_affine(a, xy) == sn("-0"), "eval-a-xy")
    report.check(eval_affine(b, xy) == sn("-2"), "eval-b-xy")
    report.check(member(Halfspace(a, Kind.OPEN), y), "open-member")
    report.check(not member(Halfspace(a, Kind.CLOSED), xy), "closed-reject")
    ha = parse_vector("[-0, +0, o]")
    bx = parse_vector("[+0, +7]")
    report.check(
        member(Halfspace(ha, Kind.CLOSED), bx)
        and not member(Halfspace(ha, Kind.OPEN), bx),
        "boundary-kinds",
    )
    # second orthant example variant
    a2 = parse_vector("[o, +0, -3]")
    report.check(hs_type(a2) == frozenset({1}), "type-J")
    report.check(hs_type(parse_vector("[-2, -1, -1]")) == frozenset(), "type-empty")
    report.check(
        hs_type(parse_vector("[+0, +1, +2]")) == frozenset({1, 2}), "type-full"
    )
    # boundary profiles
    prof = boundary_profile(parse_vector("[-0, +0, o]"),
                            parse_vector("[+0, +5]"))
    report.check(
        prof.argmax == frozenset({0, 1})
        and prof.domin_plus == frozenset({1}),
        "argmax-example",
    )
    prof2 = boundary_profile(parse_vector("[o, +0, o]"),
                             parse_vector("[o, +5]"))
    report.check(prof2.argmax == frozenset(), "argmax-empty-example")
    # TO- vs TC-intervals
    X = PointSet.of([parse_vector("[+0,+0]"), parse_vector("[--2,--2]")])
    report.check(to_hull_member(X, parse_vector("[+-2, --2]")), "to-box-member")
    report.check(
        not tc_hull_member(X, parse_vector("[+-2, --2]")), "tc-box-reject"
    )
    region = tc_interval(parse_vector("[+0,+0]"), parse_vector("[--2,--2]"))
    piece = [
        pc for pc in region.pieces
        if pc.vertex_set == frozenset(
            {parse_vector("[--2,--2]"), parse_vector("[+-2,+-2]")})
    ]
    report.check(len(piece) == 1, "interval-antipodal-piece")
    # vertical segment formula instances
    Xv = PointSet.of([parse_vector("[-1, +5]"), parse_vector("[+2, +5]")])
    report.check(tc_hull_member(Xv, parse_vector("[+0, +5]")), "segment-member")
    report.check(
        not tc_hull_member(Xv, parse_vector("[+0, +4]")), "segment-reject"
    )
    # caratheodory lower bound, d = 2
    corners2 = [
        SignedVector(c) for c in itertools.product((pos(0), neg(0)), repeat=2)
    ]
    origin2 = SignedVector((zero(), zero()))
    report.check(
        tc_hull_member(PointSet.of(corners2), origin2), "caratheodory-full"
    )
    for drop in range(4):
        sub = PointSet.of(corners2[:drop] + corners2[drop + 1:])
        report.check(
            not tc_hull_member(sub, origin2), "caratheodory-proper", drop
        )
    # span of the diagonal within the unit cube
    gen = PointSet.of([parse_vector("[+0, +0]")])
    for v in all_sign_vectors(2):
        expected = v.entries in {
            parse_vector("[+0,+0]").entries,
            parse_vector("[-0,-0]").entries,
            parse_vector("[o,o]").entries,
        }
        report.check(
            wspan_member(gen, v) == expected, "span-diagonal", v
        )
    # Puiseux valuations from the worked matrix
    row1 = PuiseuxVector([parse_puiseux(s)
                          for s in ("t^2", "t^{-1}", "-t^3", "1")])
    row2 = PuiseuxVector([parse_puiseux(s)
                          for s in ("-t^{-1}", "-t", "0", "t^{-2}")])
    report.check(
        sval(row1) == parse_vector("[+2, +-1, -3, +0]"), "sval-row-1"
    )
    report.check(
        sval(row2) == parse_vector("[--1, -1, o, +-2]"), "sval-row-2"
    )
    combo = row2 + row1.scale(parse_puiseux("t^{-5}"))
    report.check(
        [e.sign for e in sval(combo).entries] == [NEG, NEG, NEG, POS],
        "sval-combination",
    )
    report.check(
        str(lift_canonical(parse_vector("[-3]"))[0]) == "-t^3",
        "canonical-lift",
    )
    report.check(
        lift_canonical(parse_vector("[o]"))[0].is_zero, "zero-lift"
    )
    report.check(
        str(lift_canonical(parse_vector("[+2, -0]"))) == "[t^2, -1]",
        "canonical-lift-vector",
    )
    report.check(
        sval(lift_typed(parse_vector("[+2, -0]"), {1}))
        == parse_vector("[+2, -0]"),
        "typed-lift-valuation",
    )


SUITES = {
    "semiring": suite_semiring,
    "leftsum": suite_leftsum,
    "faces": suite_faces,
    "hulls": suite_hulls,
    "critical-oracle": suite_critical_oracle,
    "sandglass": suite_sandglass,
    "pasch": suite_pasch,
    "pasch-tc-counterexample": suite_pasch_tc_counterexample,
    "hemispace": suite_hemispace,
    "puiseux": suite_puiseux,
    "sval-halfspace": suite_sval_hspace,
    "lift-type-boundary": suite_lift_type_boundary,
    "multiplied-conv": suite_multiplied_conv,
    "lp": suite_lp,
    "lifts": suite_lifts,
    "separation": suite_separation,
    "matroid": suite_matroid,
    "minkowski-weyl": suite_minkowski_weyl,
    "paper-examples": suite_paper_examples,
}

# default per-suite case budgets at size "small"
BASE_CASES = {
    "semiring": 400,
    "leftsum": 400,
    "faces": 60,
    "hulls": 40,
    "critical-oracle": 60,
    "sandglass": 25,
    "pasch": 30,
    "pasch-tc-counterexample": 1,
    "hemispace": 10,
    "puiseux": 120,
    "sval-halfspace": 40,
    "lift-type-boundary": 25,
    "multiplied-conv": 20,
    "lp": 10,
    "lifts": 4,
    "separation": 30,
    "matroid": 10,
    "minkowski-weyl": 2,
    "paper-examples": 1,
}

DEFAULT_SEED = 7


def run_suite(name: str, seed: int = DEFAULT_SEED, size: str = "small",
              cases: int = None) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    if cases is None:
        cases = BASE_CASES[name] * SIZES[size]
    rng = random.Random(seed)
    report = SuiteReport(suite=name)
    start = time.time()
    SUITES[name](report, rng, cases)
    report.seconds = time.time() - start
    return report


def run_all(seed: int = DEFAULT_SEED, size: str = "small"):
    return [run_suite(name, seed=seed, size=size) for name in SUITES]
