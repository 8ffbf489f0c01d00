"""Vectors of signed tropical numbers and the hypercube face machinery.

The left sum is the non-commutative addition that keeps the left operand
on magnitude ties; iterating it over all orderings of a point set yields
the vertex set of the enclosing hypercube that the set can reach, and the
face complex spanned by those vertices is decided by a 2^d domination
criterion rather than explicit face enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from tropconvex.semiring import (
    BAL,
    NEG,
    POS,
    ZERO,
    SymNum,
    add,
    parse_symnum,
    uncomp,
)

Point = tuple  # tuple of SymNum, used by the internal fast paths


class SymVector:
    """Fixed-length vector with entries in the symmetrized semiring."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[SymNum]):
        entries = tuple(entries)
        if not entries:
            raise ValueError("vectors must have length >= 1")
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("vectors are immutable")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    def __eq__(self, other):
        if not isinstance(other, SymVector):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash((type(self).__name__ != "SignedVector", self.entries))

    def __add__(self, other):
        _check_len(self, other)
        out = tuple(add(a, b) for a, b in zip(self.entries, other.entries))
        return _wrap(out)

    def scale(self, scalar: SymNum):
        out = tuple(scalar * e for e in self.entries)
        return _wrap(out)

    def __neg__(self):
        return _wrap(tuple(-e for e in self.entries))

    def balance(self):
        return SymVector(tuple(e.balance() for e in self.entries))

    def __str__(self):
        return "[" + ", ".join(str(e) for e in self.entries) + "]"

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"


class SignedVector(SymVector):
    """A vector with no balanced entry: an ambient point of the convexities."""

    def __init__(self, entries: Iterable[SymNum]):
        entries = tuple(entries)
        if any(e.sign == BAL for e in entries):
            raise ValueError("SignedVector entries must be unbalanced")
        super().__init__(entries)

    def lsum(self, other: "SignedVector") -> "SignedVector":
        _check_len(self, other)
        return SignedVector(_lsum(self.entries, other.entries))


def _wrap(entries: Point):
    if any(e.sign == BAL for e in entries):
        return SymVector(entries)
    return SignedVector(entries)


def _check_len(a, b):
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")


def sv(*tokens) -> SignedVector:
    """Shorthand constructor from tokens or SymNum values."""
    return SignedVector(
        parse_symnum(t) if isinstance(t, str) else t for t in tokens
    )


def parse_vector(text: str) -> SignedVector:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"bad vector literal {text!r}")
    parts = [p for p in text[1:-1].split(",")]
    if parts == [""]:
        raise ValueError("empty vector literal")
    return SignedVector(parse_symnum(p) for p in parts)


def supports(v: SignedVector):
    """Support, positive support and negative support as 1-based index sets."""
    supp, psupp, nsupp = set(), set(), set()
    for i, e in enumerate(v.entries, start=1):
        if e.sign == POS:
            supp.add(i)
            psupp.add(i)
        elif e.sign == NEG:
            supp.add(i)
            nsupp.add(i)
    return frozenset(supp), frozenset(psupp), frozenset(nsupp)


def left_sum(x: SignedVector, y: SignedVector) -> SignedVector:
    return x.lsum(y)


# -- internal fast paths on plain tuples of SymNum --------------------------

def _lsum(xs: Point, ys: Point) -> Point:
    return tuple(x.lsum(y) for x, y in zip(xs, ys))


def _tsum(xs: Point, ys: Point) -> Point:
    return tuple(add(x, y) for x, y in zip(xs, ys))


def _order_keys(p: Point):
    return tuple(
        (0, 0) if e.sign == ZERO else (e.sign, e.sign * e._mag) for e in p
    )


def _covers(prefix: Point, pt: Point) -> bool:
    # prefix absorbs pt when it matches or beats its magnitude everywhere
    for a, b in zip(prefix, pt):
        if b.sign != ZERO and (a.sign == ZERO or a._mag < b._mag):
            return False
    return True


def _vert(points: Sequence[Point]) -> frozenset:
    """All iterated left sums over orderings, deduplicated.

    Prefixes are memoized and a branch is cut as soon as its left sum
    already attains the maximal magnitude in every coordinate.
    """
    pts = []
    for p in points:
        if p not in pts:
            pts.append(p)
    n = len(pts)
    results = set()
    seen = set()

    def rec(prefix, remaining):
        key = (prefix, remaining)
        if key in seen:
            return
        seen.add(key)
        if not remaining:
            results.add(prefix)
            return
        if prefix is not None and all(_covers(prefix, pts[i]) for i in remaining):
            results.add(prefix)
            return
        for i in remaining:
            rest = tuple(j for j in remaining if j != i)
            nxt = pts[i] if prefix is None else _lsum(prefix, pts[i])
            rec(nxt, rest)

    rec(None, tuple(range(n)))
    return frozenset(results)


def _dominated(y_keys, vert_keys, d: int) -> bool:
    """Domination criterion: every {<=,>=}^d pattern has a dominating vertex."""
    for pattern in range(1 << d):
        hit = False
        for wk in vert_keys:
            ok = True
            for k in range(d):
                if (pattern >> k) & 1:
                    if not y_keys[k] <= wk[k]:
                        ok = False
                        break
                else:
                    if not y_keys[k] >= wk[k]:
                        ok = False
                        break
            if ok:
                hit = True
                break
        if not hit:
            return False
    return True


def _faces_member(points: Sequence[Point], y: Point) -> bool:
    d = len(y)
    verts = _vert(points)
    return _dominated(_order_keys(y), [_order_keys(w) for w in verts], d)


# -- public operations -------------------------------------------------------

def vert(points: Sequence[SignedVector]) -> frozenset:
    """The left-sum values over all orderings of the given points."""
    pts = [p.entries for p in points]
    if not pts:
        raise ValueError("vert needs at least one point")
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise ValueError("points must share a common length")
    return frozenset(SignedVector(v) for v in _vert(pts))


def faces_member(points: Sequence[SignedVector], y: SignedVector) -> bool:
    """Whether y lies on a face of the enclosing hypercube spanned by vert."""
    pts = [p.entries for p in points]
    if any(len(p) != len(y) for p in pts):
        raise ValueError("dimension mismatch")
    return _faces_member(pts, y.entries)


@dataclass(frozen=True)
class Box:
    """An axis-parallel box given by per-coordinate closed intervals."""

    intervals: tuple

    @staticmethod
    def of(s: SymVector) -> "Box":
        return Box(tuple(uncomp(e) for e in s.entries))

    @property
    def dimension(self) -> int:
        return sum(1 for iv in self.intervals if not iv.is_singleton)

    def __contains__(self, y) -> bool:
        entries = y.entries if isinstance(y, SymVector) else tuple(y)
        if len(entries) != len(self.intervals):
            return False
        return all(e in iv for e, iv in zip(entries, self.intervals))

    def __str__(self):
        return " x ".join(str(iv) for iv in self.intervals)


@dataclass(frozen=True)
class FaceComplex:
    """Union of hypercube faces all of whose vertices are reachable."""

    carrier: SymVector
    vertex_set: frozenset

    def __post_init__(self):
        for w in self.vertex_set:
            for wk, sk in zip(w.entries, self.carrier.entries):
                if sk.sign == ZERO:
                    ok = wk.sign == ZERO
                elif sk.sign == BAL:
                    ok = wk.sign != ZERO and wk._mag == sk._mag
                else:
                    ok = wk == sk
                if not ok:
                    raise ValueError(f"{w} is not a vertex of the carrier box")

    @property
    def box(self) -> Box:
        return Box.of(self.carrier)

    def __contains__(self, y) -> bool:
        entries = y.entries if isinstance(y, SymVector) else tuple(y)
        d = len(entries)
        return _dominated(
            _order_keys(entries),
            [_order_keys(w.entries) for w in self.vertex_set],
            d,
        )

    def __str__(self):
        verts = ", ".join(sorted(str(v) for v in self.vertex_set))
        return f"Faces(carrier={self.carrier}, vertices={{{verts}}})"


def faces_complex(points: Sequence[SignedVector]) -> FaceComplex:
    """Carrier plus reachable-vertex set of the face complex of the points."""
    if not points:
        raise ValueError("faces_complex needs a nonempty point set")
    carrier = points[0]
    for p in points[1:]:
        carrier = carrier + p
    if isinstance(carrier, SignedVector):
        carrier = SymVector(carrier.entries)
    return FaceComplex(carrier=carrier, vertex_set=vert(points))
