"""Hull membership for the two signed tropical convexities.

Membership in the open-halfspace hull reduces to finding a normalized
scalar profile whose weighted sum boxes the query point; membership in the
closed-halfspace hull additionally requires the query to lie on the face
complex spanned by the reachable vertices.  Scalar profiles are searched
over anchored tie-chains: every scalar is zero, aligns a coordinate with
the query's magnitude, or ties a coordinate level with another assigned
scalar.  Any real witness normalizes into this finite set by sliding tied
groups, which the verification suites cross-check against a denser
sampling; the normalization argument is recorded as a standing assumption
rather than a proved theorem.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from tropconvex.semiring import BAL, NEG, POS, ZERO, SymNum, pos, zero
from tropconvex.vectors import (
    SignedVector,
    SymVector,
    _dominated,
    _lsum,
    _order_keys,
    _tsum,
    _vert,
    faces_complex,
    parse_vector,
)
from tropconvex.halfspaces import Halfspace, Kind, member

HULL = "HULL"
CONE = "CONE"


@dataclass(frozen=True)
class PointSet:
    """A finite list of signed points of common dimension."""

    points: tuple

    def __post_init__(self):
        if self.points:
            d = len(self.points[0])
            if any(len(p) != d for p in self.points):
                raise ValueError("points must share a common dimension")

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @property
    def dim(self) -> int:
        if not self.points:
            raise ValueError("empty point set has no dimension")
        return len(self.points[0])

    def deduped(self) -> "PointSet":
        seen, out = set(), []
        for p in self.points:
            if p.entries not in seen:
                seen.add(p.entries)
                out.append(p)
        return PointSet(tuple(out))

    @staticmethod
    def of(points: Iterable[SignedVector]) -> "PointSet":
        return PointSet(tuple(points))

    @staticmethod
    def parse(text: str) -> "PointSet":
        pts = []
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if line:
                pts.append(parse_vector(line))
        return PointSet(tuple(pts))

    def __str__(self):
        return "\n".join(str(p) for p in self.points)


@dataclass(frozen=True)
class ScalarProfile:
    """Nonnegative scalars attached to generators, hull- or cone-normalized."""

    lambdas: tuple
    mode: str = HULL

    def __post_init__(self):
        if self.mode not in (HULL, CONE):
            raise ValueError(f"bad profile mode {self.mode!r}")
        for lam in self.lambdas:
            if lam.sign not in (POS, ZERO):
                raise ValueError("profile scalars must be nonnegative")
        if self.mode == HULL:
            tops = [lam for lam in self.lambdas if lam.sign == POS]
            if not tops or max(l._mag for l in tops) != 0:
                raise ValueError("hull profiles need maximal scalar +0")


@dataclass(frozen=True)
class RegionDescription:
    """A union of face-complex pieces."""

    pieces: tuple

    def __contains__(self, y) -> bool:
        return any(y in piece for piece in self.pieces)

    def __len__(self):
        return len(self.pieces)

    def __iter__(self):
        return iter(self.pieces)


# -- critical scalar sets ----------------------------------------------------

def _mags_of(entry_tuples) -> set:
    pool = set()
    for p in entry_tuples:
        for e in p:
            if e.sign != ZERO:
                pool.add(e._mag)
    return pool


def _critical_down(pool: set) -> list:
    """Nonpositive pairwise differences of the pool, plus 0, descending."""
    vals = {Fraction(0)}
    for u in pool:
        for v in pool:
            if u <= v:
                vals.add(u - v)
    return sorted(vals, reverse=True)


def critical_lambdas(X: PointSet, y: SignedVector) -> list:
    """Candidate hull scalars drawn from magnitude differences, <= +0.

    Always contains +0 and the zero scalar; deterministic descending order
    with the zero scalar last.
    """
    pool = _mags_of([p.entries for p in X] + [y.entries])
    out = [pos(c) for c in _critical_down(pool)]
    out.append(zero())
    return out


# -- the profile search core -------------------------------------------------

def _scale(p, c: Fraction):
    return tuple(
        e if e.sign == ZERO else SymNum(e.sign, e._mag + c) for e in p
    )


def _box_contains(scaled: Sequence, y) -> bool:
    s = scaled[0]
    for p in scaled[1:]:
        s = _tsum(s, p)
    for sk, yk in zip(s, y):
        if sk.sign == ZERO:
            if yk.sign != ZERO:
                return False
        elif sk.sign == BAL:
            if yk.sign != ZERO and yk._mag > sk._mag:
                return False
        else:
            if yk != sk:
                return False
    return True


class _Search:
    """Enumeration over scalar profiles for one (points, query) pair.

    Any witnessing profile can be normalized, by sliding tied groups of
    scaled points, so that every scalar is anchored: it equals 0, aligns
    one of its point's coordinates with the query's magnitude there, or
    ties a coordinate level with an already-anchored point.  The search
    therefore assigns each point either an anchor value or a
    same-coordinate tie to a previously assigned point.
    """

    def __init__(self, points, y, mode: str, faces: bool, cap: Optional[int]):
        self.pts = points
        self.y = y
        self.d = len(y)
        self.mode = mode
        self.faces = faces
        self.cap = cap if cap is not None else len(points)
        self.ymag = [None if e.sign == ZERO else e._mag for e in y]
        self.basic = [self._anchors(i) for i in range(len(points))]
        # balance-partner availability per coordinate and sign
        self.sign_count = [
            {POS: 0, NEG: 0} for _ in range(self.d)
        ]
        for p in points:
            for k, e in enumerate(p):
                if e.sign in (POS, NEG):
                    self.sign_count[k][e.sign] += 1
        self.ykeys = _order_keys(y)

    def _anchors(self, i):
        vals = {Fraction(0)}
        p = self.pts[i]
        for k in range(self.d):
            t = self.ymag[k]
            if t is not None and p[k].sign != ZERO:
                vals.add(t - p[k]._mag)
        if self.mode == HULL:
            vals = {v for v in vals if v <= 0}
        return sorted(vals, reverse=True)

    def _dead(self, i, c) -> bool:
        # a level strictly above the query magnitude needs an opposite-sign
        # partner in that coordinate to balance it
        p = self.pts[i]
        for k in range(self.d):
            e = p[k]
            if e.sign == ZERO:
                continue
            t = self.ymag[k]
            if t is not None and e._mag + c > t:
                if self.sign_count[k][-e.sign] == 0:
                    return True
        return False

    def _leaf(self, chosen, acc) -> bool:
        for sk, yk, t in zip(acc, self.y, self.ymag):
            if sk.sign == ZERO:
                if t is not None:
                    return False
            elif sk.sign == BAL:
                if t is not None and t > sk._mag:
                    return False
            else:
                if yk != sk:
                    return False
        if not self.faces:
            return True
        verts = [_order_keys(w) for w in _vert(chosen)]
        return _dominated(self.ykeys, verts, self.d)

    def _options(self, j, assigned):
        """Anchor values plus same-coordinate ties to assigned points."""
        opts = list(self.basic[j])
        seen = set(opts)
        p = self.pts[j]
        for i, vi in assigned:
            q = self.pts[i]
            for k in range(self.d):
                if p[k].sign == ZERO or q[k].sign == ZERO:
                    continue
                v = vi + q[k]._mag - p[k]._mag
                if v in seen:
                    continue
                if self.mode == HULL and v > 0:
                    continue
                seen.add(v)
                opts.append(v)
        return opts

    def run(self) -> Optional[list]:
        n = len(self.pts)
        if n == 0:
            return None
        for k in range(self.d):
            t = self.ymag[k]
            if t is None:
                continue
            pts_k = [p[k] for p in self.pts if p[k].sign != ZERO]
            if not pts_k:
                return None
            if self.mode == HULL and max(e._mag for e in pts_k) < t:
                return None
        witness: list = []
        seen_states = set()

        def leaf_ok(picks, chosen, acc):
            if not picks:
                return False
            if self.mode == HULL and all(c != 0 for _, c in picks):
                return False
            return self._leaf(chosen, acc)

        def rec(picks, chosen, acc, remaining):
            key = frozenset(picks)
            if key in seen_states:
                return False
            seen_states.add(key)
            if leaf_ok(picks, chosen, acc):
                witness.extend(picks)
                return True
            if len(picks) >= self.cap:
                return False
            for j in remaining:
                rest = tuple(r for r in remaining if r != j)
                for c in self._options(j, picks):
                    if self._dead(j, c):
                        continue
                    row = _scale(self.pts[j], c)
                    if rec(
                        picks + [(j, c)],
                        chosen + [row],
                        row if acc is None else _tsum(acc, row),
                        rest,
                    ):
                        return True
            return False

        if rec([], [], None, tuple(range(n))):
            return witness
        return None


def _prep(X: PointSet, y: SignedVector):
    X = X.deduped()
    if not X.points:
        raise ValueError("hull queries need a nonempty point set")
    if any(len(p) != len(y) for p in X.points):
        raise ValueError("dimension mismatch between points and query")
    return [p.entries for p in X.points], y.entries


# Uniform-magnitude instances (sign-vector data) admit an equivalent
# closure computation: on such instances every witnessing profile
# normalizes to a single scalar level, so the hull slice is the closure of
# the generators under pairwise left sums and one-coordinate elimination.

_SIGN_CLOSURE_CACHE: dict = {}


def _uniform_instance(pts, yt) -> bool:
    return len(_mags_of(list(pts) + [yt])) <= 1


def _sign_closure(pts) -> frozenset:
    key = frozenset(pts)
    got = _SIGN_CLOSURE_CACHE.get(key)
    if got is not None:
        return got
    S = set(pts)
    d = len(pts[0])
    frontier = list(S)
    while frontier:
        fresh = []
        cur = list(S)
        for x in frontier:
            for y in cur:
                for z in (_lsum(x, y), _lsum(y, x)):
                    if z not in S:
                        S.add(z)
                        fresh.append(z)
        for i in range(d):
            buckets: dict = {}
            for p in S:
                buckets.setdefault(p[:i] + p[i + 1:], set()).add(p[i])
            for rest, vals in buckets.items():
                for v in vals:
                    if v.sign != ZERO and -v in vals:
                        z = rest[:i] + (zero(),) + rest[i:]
                        if z not in S:
                            S.add(z)
                            fresh.append(z)
                        break
        frontier = fresh
    out = frozenset(S)
    if len(_SIGN_CLOSURE_CACHE) > 4096:
        _SIGN_CLOSURE_CACHE.clear()
    _SIGN_CLOSURE_CACHE[key] = out
    return out


def caratheodory_bound(d: int) -> int:
    """Subset-size bound d * 2^d + 1 sufficient for hull membership."""
    return d * (1 << d) + 1


def to_hull_member(X: PointSet, y: SignedVector) -> bool:
    """Membership in the hull generated by open signed tropical halfspaces."""
    pts, yt = _prep(X, y)
    return _Search(pts, yt, HULL, faces=False, cap=None).run() is not None


def tc_hull_witness(X: PointSet, y: SignedVector) -> Optional[ScalarProfile]:
    """A witnessing scalar profile over the deduplicated points, if any."""
    pts, yt = _prep(X, y)
    if _uniform_instance(pts, yt):
        if yt not in _sign_closure(tuple(pts)):
            return None
    cap = min(len(pts), caratheodory_bound(len(yt)))
    picks = _Search(pts, yt, HULL, faces=True, cap=cap).run()
    if picks is None:
        return None
    lams = [zero()] * len(pts)
    for i, c in picks:
        lams[i] = pos(c)
    return ScalarProfile(tuple(lams), HULL)


def tc_hull_member(X: PointSet, y: SignedVector) -> bool:
    """Membership in the hull generated by closed signed tropical halfspaces."""
    pts, yt = _prep(X, y)
    if _uniform_instance(pts, yt):
        return yt in _sign_closure(tuple(pts))
    cap = min(len(pts), caratheodory_bound(len(yt)))
    return _Search(pts, yt, HULL, faces=True, cap=cap).run() is not None


def tc_cone_member(X: PointSet, y: SignedVector) -> bool:
    """Membership in the cone hull; the zero vector always belongs."""
    pts, yt = _prep(X, y)
    if all(e.sign == ZERO for e in yt):
        return True
    if _uniform_instance(pts, yt):
        return yt in _sign_closure(tuple(pts))
    # the hull through the zero vector is a cheap sufficient certificate
    zvec = tuple(zero() for _ in yt)
    if _Search(pts + [zvec], yt, HULL, faces=True, cap=None).run() is not None:
        return True
    return _Search(pts, yt, CONE, faces=True, cap=None).run() is not None


def wspan_member(X: PointSet, y: SignedVector) -> bool:
    """Membership in the span, the cone hull of the points and their negatives."""
    pts = list(X.points) + [-p for p in X.points]
    return tc_cone_member(PointSet(tuple(pts)), y)


def tc_interval(
    x: SignedVector, y: SignedVector, extra_mags: Iterable[Fraction] = ()
) -> RegionDescription:
    """Face-complex pieces of the two-point hull at critical scalar pairs.

    The pieces cover every query whose magnitudes are drawn from the two
    points and ``extra_mags``; callers probing a grid should pass the grid
    magnitudes so the critical pairs include the grid's breakpoints.
    """
    if len(x) != len(y):
        raise ValueError("dimension mismatch")
    pool = _mags_of([x.entries, y.entries]) | set(extra_mags)
    pieces = []
    seen = set()
    for c in _critical_down(pool):
        lam = pos(c)
        for pair in (
            (x.scale(lam), y),
            (x, y.scale(lam)),
        ):
            piece = faces_complex(list(pair))
            key = (piece.carrier.entries, piece.vertex_set)
            if key not in seen:
                seen.add(key)
                pieces.append(piece)
    # degenerate single-generator pieces
    for p in (x, y):
        piece = faces_complex([p])
        key = (piece.carrier.entries, piece.vertex_set)
        if key not in seen:
            seen.add(key)
            pieces.append(piece)
    return RegionDescription(tuple(pieces))


# -- grids, local closure, separation -----------------------------------------

class GridError(ValueError):
    """The declared grid is not closed under the required scalars."""


@dataclass(frozen=True)
class Grid:
    """Sign patterns over a fixed magnitude ladder, plus the zero entry."""

    dim: int
    mags: tuple

    def __post_init__(self):
        mags = sorted(set(self.mags))
        object.__setattr__(self, "mags", tuple(mags))
        if not mags:
            raise GridError("grid needs at least one magnitude")

    def diffs(self) -> list:
        out = sorted({u - v for u in self.mags for v in self.mags if u > v})
        return out

    def check_closed(self):
        lo = self.mags[0]
        for m in self.mags:
            for dlt in self.diffs():
                v = m - dlt
                if v >= lo and v not in self.mags:
                    raise GridError(
                        f"grid not closed under required scalars: {m} - {dlt}"
                    )

    def axis_values(self) -> list:
        vals = [zero()]
        for m in self.mags:
            vals.append(pos(m))
            vals.append(SymNum(NEG, m))
        return vals

    def points(self):
        for combo in itertools.product(self.axis_values(), repeat=self.dim):
            yield SignedVector(combo)

    def on_grid(self, p) -> bool:
        entries = p.entries if isinstance(p, SymVector) else tuple(p)
        return all(
            e.sign == ZERO or e._mag in set(self.mags) for e in entries
        )


@dataclass
class ClosureReport:
    """Violations of the two local TC-convexity generation rules."""

    lsum_violations: list = field(default_factory=list)
    elim_violations: list = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.lsum_violations and not self.elim_violations


def closure_check(S: Iterable[SignedVector], grid: Grid) -> ClosureReport:
    """Check closure under weighted left sums and one-coordinate elimination.

    Scaled combinations whose result leaves the grid are skipped: the check
    is convexity relative to the declared grid.
    """
    grid.check_closed()
    pts = [p.entries for p in S]
    member_set = set(pts)
    report = ClosureReport()
    mag_set = set(grid.mags)

    def on_grid(p):
        return all(e.sign == ZERO or e._mag in mag_set for e in p)

    scalars = [Fraction(0)] + [-dlt for dlt in grid.diffs()]
    pairs = [(Fraction(0), c) for c in scalars]
    pairs += [(c, Fraction(0)) for c in scalars if c != 0]
    for xp in pts:
        for yp in pts:
            for lam, mu in pairs:
                res = tuple(
                    a.lsum(b)
                    for a, b in zip(_scale(xp, lam), _scale(yp, mu))
                )
                if not on_grid(res):
                    continue
                report.checked += 1
                if res not in member_set:
                    report.lsum_violations.append((xp, yp, lam, mu, res))
    # local elimination: conflict in exactly one coordinate
    if pts:
        d = len(pts[0])
        for i in range(d):
            buckets = {}
            for p in pts:
                key = p[:i] + p[i + 1:]
                buckets.setdefault(key, []).append(p[i])
            for key, vals in buckets.items():
                present = set(vals)
                for v in present:
                    if v.sign != ZERO and -v in present:
                        res = key[:i] + (zero(),) + key[i:]
                        report.checked += 1
                        if res not in member_set:
                            report.elim_violations.append(
                                (key[:i] + (v,) + key[i:],
                                 key[:i] + (-v,) + key[i:],
                                 res)
                            )
    return report


def _candidate_coeffs(grid_mags: Iterable[Fraction]):
    vals = [zero()]
    for m in sorted(set(grid_mags), reverse=True):
        vals.append(pos(m))
        vals.append(SymNum(NEG, m))
    return vals


def separate(
    X: PointSet, y: SignedVector, grid_mags: Iterable[Fraction]
) -> Optional[Halfspace]:
    """Search a closed halfspace containing X and excluding y.

    Coefficients range over signs times the grid magnitudes; returning
    nothing is inconclusive, not a membership proof.
    """
    d = len(y)
    coeffs = _candidate_coeffs(grid_mags)
    for combo in itertools.product(coeffs, repeat=d + 1):
        if all(e.sign == ZERO for e in combo[1:]):
            continue
        h = Halfspace(SignedVector(combo), Kind.CLOSED)
        if member(h, y):
            continue
        if all(member(h, x) for x in X):
            return h
    return None


def separate_to(
    X: PointSet, Y: PointSet, grid_mags: Iterable[Fraction]
) -> Optional[tuple]:
    """Search a hyperplane whose closed positive side holds X while Y is
    excluded from it, i.e. lies strictly on the open negative side.

    The returned pair is the closed halfspace and its closed opposite; the
    strictness of the excluded side rules out degenerate certificates that
    put shared points on the hyperplane itself.
    """
    if not X.points or not Y.points:
        raise ValueError("separation needs nonempty point sets")
    d = X.dim
    coeffs = _candidate_coeffs(grid_mags)
    for combo in itertools.product(coeffs, repeat=d + 1):
        if all(e.sign == ZERO for e in combo[1:]):
            continue
        a = SignedVector(combo)
        hp = Halfspace(a, Kind.CLOSED)
        strict_neg = Halfspace(-a, Kind.OPEN)
        if all(member(hp, x) for x in X) and all(
            member(strict_neg, y) for y in Y
        ):
            return hp, hp.opposite()
    return None


def affine_mw_member(V: PointSet, W: PointSet, y: SignedVector) -> bool:
    """Membership in the hull of half-lines v <| lambda w, via homogenization."""
    if not V.points or not W.points:
        raise ValueError("affine membership needs nonempty V and W")
    top = pos(0)
    vhat = [SignedVector(v.entries + (top,)) for v in V]
    what = [SignedVector(w.entries + (zero(),)) for w in W]
    yhat = SignedVector(y.entries + (top,))
    return tc_cone_member(PointSet(tuple(vhat + what)), yhat)
