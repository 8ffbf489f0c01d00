"""Verification predicates for candidate TC-hemispaces.

A candidate is given intensionally: the coefficients of a sandwiching
halfspace plus a decidable selector over its boundary points.  The module
only verifies candidates on finite grids; it never attempts to enumerate
hemispaces, and a passing check is grid-relative evidence, not a proof.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from tropconvex.semiring import BAL, NEG, POS, ZERO, parse_symnum
from tropconvex.vectors import SignedVector
from tropconvex.halfspaces import (
    Halfspace,
    Kind,
    boundary_profile,
    eval_affine,
    member,
)
from tropconvex.hull import Grid, closure_check


@dataclass(frozen=True)
class SelectorRecord:
    """One accepted boundary pattern.

    A boundary point matches when its argmax set equals ``argmax``, its
    signs agree on the recorded coordinates, and every threshold constraint
    holds in the total order on signed values.
    """

    argmax: frozenset
    signs: tuple = ()        # pairs (coordinate, sign tag), coords in [d]
    constraints: tuple = ()  # triples (coordinate, '>=' or '<=', SymNum)

    def matches(self, a: SignedVector, x: SignedVector) -> bool:
        prof = boundary_profile(a, x)
        if prof.argmax != self.argmax:
            return False
        for i, s in self.signs:
            if x[i - 1].sign != s:
                return False
        for i, op, bound in self.constraints:
            v = x[i - 1]
            if v.sign == BAL:
                return False
            if op == ">=":
                if not v >= bound:
                    return False
            elif op == "<=":
                if not v <= bound:
                    return False
            else:
                raise ValueError(f"bad constraint operator {op!r}")
        return True

    def __str__(self):
        am = "{" + ",".join(str(i) for i in sorted(self.argmax)) + "}"
        sg = ",".join(f"{i}:{'+' if s == POS else '-' if s == NEG else 'o'}"
                      for i, s in self.signs)
        cs = ",".join(f"{i}{op}{tok}" for i, op, tok in self.constraints)
        return f"argmax={am} signs=[{sg}] constraints=[{cs}]"


_REC_RE = re.compile(
    r"^\s*argmax=\{(?P<am>[^}]*)\}\s*signs=\[(?P<sg>[^\]]*)\]"
    r"\s*constraints=\[(?P<cs>[^\]]*)\]\s*$"
)


def parse_selector_record(line: str) -> SelectorRecord:
    m = _REC_RE.match(line)
    if not m:
        raise ValueError(f"bad selector record {line!r}")
    am = frozenset(int(t) for t in m.group("am").split(",") if t.strip())
    signs = []
    for item in m.group("sg").split(","):
        item = item.strip()
        if not item:
            continue
        i, s = item.split(":")
        signs.append((int(i), {"+": POS, "-": NEG, "o": ZERO}[s.strip()]))
    constraints = []
    for item in m.group("cs").split(","):
        item = item.strip()
        if not item:
            continue
        cm = re.match(r"^(\d+)\s*(>=|<=)\s*(.+)$", item)
        if not cm:
            raise ValueError(f"bad constraint {item!r}")
        constraints.append(
            (int(cm.group(1)), cm.group(2), parse_symnum(cm.group(3)))
        )
    return SelectorRecord(am, tuple(signs), tuple(constraints))


@dataclass(frozen=True)
class HemispaceCandidate:
    """Open side of a halfspace plus selected boundary points."""

    a: SignedVector
    records: tuple = ()

    @property
    def dim(self) -> int:
        return len(self.a) - 1

    def member(self, x: SignedVector) -> bool:
        s = eval_affine(self.a, x).sign
        if s == POS:
            return True
        if s in (BAL, ZERO):
            return any(r.matches(self.a, x) for r in self.records)
        return False

    def open_halfspace(self) -> Halfspace:
        return Halfspace(self.a, Kind.OPEN)

    def closed_halfspace(self) -> Halfspace:
        return Halfspace(self.a, Kind.CLOSED)


def _fgcd(a: Fraction, b: Fraction) -> Fraction:
    from math import gcd

    num = gcd(a.numerator * b.denominator, b.numerator * a.denominator)
    return Fraction(num, a.denominator * b.denominator)


def build_grid(
    G: HemispaceCandidate, extra_mags: Iterable[Fraction] = ()
) -> Grid:
    """Sign patterns over a magnitude ladder spanning the candidate's
    thresholds, with one ladder step strictly above and below each."""
    mags = set(extra_mags)
    for e in G.a.entries:
        if e.sign != ZERO:
            mags.add(e._mag)
    for r in G.records:
        for _, _, bound in r.constraints:
            if bound.sign != ZERO:
                mags.add(bound._mag)
    if not mags:
        mags = {Fraction(0)}
    mags = sorted(mags)
    step = Fraction(1)
    if len(mags) > 1:
        diffs = [b - a for a, b in zip(mags, mags[1:])]
        step = diffs[0]
        for dlt in diffs[1:]:
            step = _fgcd(step, dlt)
    lo, hi = mags[0] - step, mags[-1] + step
    ladder = []
    v = lo
    while v <= hi:
        ladder.append(v)
        v += step
    return Grid(dim=G.dim, mags=tuple(ladder))


def sandwich_check(G: HemispaceCandidate, grid: Grid) -> bool:
    """Every grid point of the open side belongs, and every member lies in
    the closed side."""
    hopen = G.open_halfspace()
    hclosed = G.closed_halfspace()
    for x in grid.points():
        inside = G.member(x)
        if member(hopen, x) and not inside:
            return False
        if inside and not member(hclosed, x):
            return False
    return True


def boundary_pattern_check(G: HemispaceCandidate, grid: Grid) -> list:
    """Pairs (x, y) with x a member, matching argmax, dominated positive
    part, but y not a member.  Empty is necessary for a TC-hemispace."""
    buckets: dict = {}
    for x in grid.points():
        prof = boundary_profile(G.a, x)
        if prof.argmax:
            buckets.setdefault(prof.argmax, []).append((x, prof.domin_plus))
    violations = []
    for group in buckets.values():
        members = [(x, dp) for x, dp in group if G.member(x)]
        for x, dpx in members:
            for y, dpy in group:
                if dpx <= dpy and not G.member(y):
                    violations.append((x, y))
    return violations


def hemispace_pair_check(G: HemispaceCandidate, grid: Grid) -> bool:
    """Both the member set and its complement pass the local closure check."""
    members, complement = [], []
    for x in grid.points():
        (members if G.member(x) else complement).append(x)
    if members:
        if not closure_check(members, grid).ok:
            return False
    if complement:
        if not closure_check(complement, grid).ok:
            return False
    return True
