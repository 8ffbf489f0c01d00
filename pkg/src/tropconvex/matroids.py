"""Finite matroids over the sign hyperfield.

Vector sets live in {-0, zero, +0}^k and are validated against the vector
axioms (zero, scaling, left-sum closure, elimination).  Circuits and
cocircuits are derived by support minimality and orthogonality, matrices
realize sign-vector sets through exact strict-feasibility programs, and
the representation checks tie the vectors to hull, span, halfspace and
double-orthogonality descriptions by exhaustive enumeration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from tropconvex.semiring import BAL, NEG, POS, ZERO, add, mul, neg, pos, zero
from tropconvex.vectors import SignedVector
from tropconvex.halfspaces import Halfspace, Kind, member
from tropconvex.hull import PointSet, tc_hull_member, wspan_member
from tropconvex.lp import FeasibilityProblem, LPWitness, RationalField, lp_feasible

_P0 = pos(0)
_N0 = neg(0)
_Z = zero()


def sign_vector(signs: Iterable[int]) -> SignedVector:
    """Build a sign vector from tags in {POS, NEG, ZERO}."""
    lookup = {POS: _P0, NEG: _N0, ZERO: _Z}
    return SignedVector(lookup[s] for s in signs)


def is_sign_vector(v: SignedVector) -> bool:
    return all(e.sign == ZERO or e._mag == 0 for e in v.entries)


def all_sign_vectors(k: int):
    for combo in itertools.product((_N0, _Z, _P0), repeat=k):
        yield SignedVector(combo)


@dataclass(frozen=True)
class OMatroid:
    """Ground-set size plus a claimed set of sign-hyperfield vectors."""

    ground_size: int
    vectors: frozenset

    def __post_init__(self):
        for v in self.vectors:
            if len(v) != self.ground_size or not is_sign_vector(v):
                raise ValueError(f"{v} is not a sign vector of length "
                                 f"{self.ground_size}")

    @staticmethod
    def of(k: int, vectors: Iterable[SignedVector]) -> "OMatroid":
        return OMatroid(k, frozenset(vectors))

    @staticmethod
    def parse(text: str) -> "OMatroid":
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if not lines or not lines[0].startswith("k="):
            raise ValueError("matroid file needs a k=<n> header")
        k = int(lines[0][2:])
        vecs = []
        lookup = {"+": _P0, "-": _N0, "o": _Z}
        for ln in lines[1:]:
            toks = ln.split()
            if len(toks) != k:
                raise ValueError(f"bad vector line {ln!r}")
            vecs.append(SignedVector(lookup[t] for t in toks))
        return OMatroid(k, frozenset(vecs))

    def __str__(self):
        lookup = {POS: "+", NEG: "-", ZERO: "o"}
        lines = [f"k={self.ground_size}"]
        for v in sorted(self.vectors, key=str):
            lines.append(" ".join(lookup[e.sign] for e in v.entries))
        return "\n".join(lines)


@dataclass
class AxiomReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _supp(v: SignedVector) -> frozenset:
    return frozenset(i for i, e in enumerate(v.entries) if e.sign != ZERO)


def axioms_check(V: Iterable[SignedVector]) -> AxiomReport:
    """Check the vector axioms: zero, sign scaling, left sum, elimination."""
    vecs = list(V)
    vset = {v.entries for v in vecs}
    report = AxiomReport()
    k = len(vecs[0]) if vecs else 0
    zero_vec = tuple(_Z for _ in range(k))
    if zero_vec not in vset:
        report.violations.append(("V0", None))
    for v in vecs:
        if (-v).entries not in vset:
            report.violations.append(("V1", v))
    for x in vecs:
        for y in vecs:
            z = x.lsum(y)
            if z.entries not in vset:
                report.violations.append(("V2", (x, y, z)))
    for x in vecs:
        for y in vecs:
            conflicts = [
                i
                for i, (a, b) in enumerate(zip(x.entries, y.entries))
                if a.sign != ZERO and b.sign != ZERO and a.sign != b.sign
            ]
            for i in conflicts:
                if not _elimination_witness(x, y, i, vset):
                    report.violations.append(("V3", (x, y, i)))
    return report


def _elimination_witness(x, y, i, vset) -> bool:
    # z ranges over Uncomp(x + y) with z_i forced to zero
    free, fixed = [], []
    for j, (a, b) in enumerate(zip(x.entries, y.entries)):
        s = add(a, b)
        if j == i:
            fixed.append((_Z,))
        elif s.sign == BAL:
            fixed.append((_N0, _Z, _P0))
        else:
            fixed.append((s,))
    for combo in itertools.product(*fixed):
        if combo in vset:
            return True
    return False


def circuits(M: OMatroid) -> frozenset:
    """Support-minimal nonzero vectors."""
    nonzero = [v for v in M.vectors if _supp(v)]
    out = []
    for v in nonzero:
        sv = _supp(v)
        if not any(_supp(w) < sv for w in nonzero):
            out.append(v)
    return frozenset(out)


def orthogonal(u: SignedVector, v: SignedVector) -> bool:
    """Whether the semiring inner product is balanced or zero."""
    if len(u) != len(v):
        raise ValueError("length mismatch")
    acc = _Z
    for a, b in zip(u.entries, v.entries):
        acc = add(acc, mul(a, b))
    return acc.sign in (BAL, ZERO)


def covectors(M: OMatroid) -> frozenset:
    """All sign vectors orthogonal to every circuit."""
    circ = circuits(M)
    return frozenset(
        w for w in all_sign_vectors(M.ground_size)
        if all(orthogonal(w, c) for c in circ)
    )


def cocircuits(M: OMatroid) -> frozenset:
    """Support-minimal nonzero covectors."""
    cov = [w for w in covectors(M) if _supp(w)]
    out = []
    for v in cov:
        sv = _supp(v)
        if not any(_supp(w) < sv for w in cov):
            out.append(v)
    return frozenset(out)


def dual(M: OMatroid) -> OMatroid:
    return OMatroid(M.ground_size, covectors(M))


def realize_sign_vectors(rows: Sequence[Sequence]) -> frozenset:
    """Sign vectors realized by the row space of a rational matrix.

    Each sign pattern is decided by an exact program maximizing a strict
    margin; the pattern is realized exactly when the optimum is positive.
    """
    mat = [[Fraction(v) for v in row] for row in rows]
    r = len(mat)
    k = len(mat[0]) if r else 0
    if k > 12:
        raise ValueError("ground sets larger than 12 are not enumerable")
    out = []
    for pattern in itertools.product((NEG, ZERO, POS), repeat=k):
        if _pattern_realizable(mat, r, k, pattern):
            out.append(sign_vector(pattern))
    return frozenset(out)


def _pattern_realizable(mat, r, k, pattern) -> bool:
    if all(s == ZERO for s in pattern):
        return True  # the zero combination
    # variables: y_1..y_r free, eps, surplus per strict column, bound slack
    ncols = r + 1 + sum(1 for s in pattern if s != ZERO) + 1
    eps = r
    rows, rhs = [], []
    surplus = r + 1
    for j, s in enumerate(pattern):
        row = [Fraction(0)] * ncols
        for i in range(r):
            row[i] = mat[i][j]
        if s == ZERO:
            rows.append(tuple(row))
            rhs.append(Fraction(0))
            continue
        if s == NEG:
            row = [-v for v in row]
        row[eps] = Fraction(-1)
        row[surplus] = Fraction(-1)
        surplus += 1
        rows.append(tuple(row))
        rhs.append(Fraction(0))
    bound = [Fraction(0)] * ncols
    bound[eps] = Fraction(1)
    bound[-1] = Fraction(1)
    rows.append(tuple(bound))
    rhs.append(Fraction(1))
    objective = [Fraction(0)] * ncols
    objective[eps] = Fraction(1)
    out = lp_feasible(
        FeasibilityProblem(
            tuple(rows),
            tuple(rhs),
            nonneg=frozenset(range(r, ncols)),
            objective=tuple(objective),
            field=RationalField,
        )
    )
    return isinstance(out, LPWitness) and out.objective > 0


@dataclass
class RepresentationReport:
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def representation_check(M: OMatroid) -> RepresentationReport:
    """Exhaustively verify the hull/halfspace/span descriptions of the
    vector set implied by the circuits and cocircuits."""
    report = RepresentationReport()
    ax = axioms_check(M.vectors)
    if not ax.ok:
        report.failures.append(("axioms", ax.violations[:3]))
        return report
    k = M.ground_size
    grid = list(all_sign_vectors(k))
    circ = circuits(M)
    cocirc = cocircuits(M)
    zero_vec = sign_vector([ZERO] * k)

    gens = PointSet.of(sorted(circ | {zero_vec}, key=str))
    hull_slice = frozenset(y for y in grid if tc_hull_member(gens, y))
    if hull_slice != M.vectors:
        report.failures.append(("vectors-vs-hull",
                                sorted(map(str, hull_slice ^ M.vectors))[:4]))

    hyper_slice = frozenset(
        y for y in grid
        if all(
            member(Halfspace(SignedVector((_Z,) + dd.entries), Kind.HYPERPLANE), y)
            for dd in cocirc
        )
    )
    if hyper_slice != M.vectors:
        report.failures.append(("vectors-vs-hyperplanes",
                                sorted(map(str, hyper_slice ^ M.vectors))[:4]))

    circ_ps = PointSet.of(sorted(circ, key=str)) if circ else None
    vec_ps = PointSet.of(sorted(M.vectors - {zero_vec}, key=str) or [zero_vec])
    span_c = frozenset(
        y for y in grid if (circ_ps is not None and wspan_member(circ_ps, y))
        or _supp(y) == frozenset()
    )
    span_v = frozenset(
        y for y in grid if wspan_member(vec_ps, y)
    )
    if span_c != span_v:
        report.failures.append(("span-circuits-vs-vectors",
                                sorted(map(str, span_c ^ span_v))[:4]))
    if span_c != hyper_slice:
        report.failures.append(("span-vs-hyperplanes",
                                sorted(map(str, span_c ^ hyper_slice))[:4]))

    # hull of the vectors equals span restricted to the unit box; on the
    # sign grid the box restriction is vacuous
    hull_v = frozenset(y for y in grid if tc_hull_member(PointSet.of(
        sorted(M.vectors, key=str)), y))
    if hull_v != span_v:
        report.failures.append(("hull-vs-span-in-box",
                                sorted(map(str, hull_v ^ span_v))[:4]))

    # finite double orthogonality on the grid
    if circ:
        perp = [w for w in grid if all(orthogonal(w, c) for c in circ)]
        perp2 = frozenset(
            v for v in grid if all(orthogonal(v, w) for w in perp)
        )
        if perp2 != span_c:
            report.failures.append(("double-perp-vs-span",
                                    sorted(map(str, perp2 ^ span_c))[:4]))
    return report
