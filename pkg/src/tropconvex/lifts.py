"""Witness search for hull membership through typed Puiseux lifts.

Given generators whose hull contains a query point, the lifted generators
should admit a convex combination whose signed valuation is the query.
Weights are searched as nonnegative rational combinations of monomials
t^lambda over the critical scalar grid; an exact rational program decides
whether some combination cancels every too-high level and lands on the
query's level with the right sign in every coordinate.  Exhausting the
grid without a witness is inconclusive, not a refutation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from tropconvex.semiring import ZERO
from tropconvex.vectors import SignedVector
from tropconvex.hull import PointSet, _critical_down, _mags_of, tc_hull_witness
from tropconvex.puiseux import PuiseuxNum, PuiseuxVector, lift_typed, sval
from tropconvex.lp import (
    FeasibilityProblem,
    LPWitness,
    RationalField,
    lp_feasible,
)


def _tie_closure(base, pts, rounds=2, cap=150):
    """Extend exponents so cancellation cascades stay representable: any
    level a monomial creates can be met by the other generators."""
    deltas = set()
    d = len(pts[0])
    for p in pts:
        for q in pts:
            for k in range(d):
                if p[k].sign != ZERO and q[k].sign != ZERO:
                    deltas.add(p[k]._mag - q[k]._mag)
    cur = set(base)
    for _ in range(rounds):
        new = set()
        for lam in cur:
            for dlt in deltas:
                v = lam + dlt
                if v <= 0 and v not in cur:
                    new.add(v)
        cur |= new
        if len(cur) > cap:
            break
    return cur


def lift_witness(
    X: PointSet, J, y: SignedVector, extra_lambdas=()
) -> Optional[PuiseuxVector]:
    """A point of the convex hull of the typed lifts with valuation y.

    Returns the witness vector, re-verified exactly, or None when the
    bounded search over the critical monomial grid is exhausted.  The grid
    is seeded with the scalars of a hull-membership witness, and on a miss
    a second attempt closes it under the generators' level differences so
    cancellation cascades stay representable.
    """
    X = X.deduped()
    pts = list(X.points)
    seeded = set()
    profile = tc_hull_witness(X, y)
    if profile is not None:
        for lam in profile.lambdas:
            if lam.sign != ZERO:
                seeded.add(lam._mag)
    base = (
        set(_critical_down(_mags_of([p.entries for p in pts] + [y.entries])))
        | {Fraction(v) for v in extra_lambdas}
        | seeded
    )
    out = _lift_witness_on_grid(pts, J, y, sorted(base, reverse=True))
    if out is not None:
        return out
    extended = _tie_closure(base, [p.entries for p in pts])
    if extended == base:
        return None
    return _lift_witness_on_grid(pts, J, y, sorted(extended, reverse=True))


def _lift_witness_on_grid(pts, J, y, lambdas) -> Optional[PuiseuxVector]:
    d = len(y)
    lifts = [lift_typed(p, J) for p in pts]
    nw = len(pts) * len(lambdas)

    def wvar(i, lam):
        return i * len(lambdas) + lambdas.index(lam)

    # rows of (coeff-dict, rhs); extra columns are appended as needed
    rows = []
    extra_cols = 0

    def add_row(coeffs: dict, rhs_v):
        rows.append((dict(coeffs), Fraction(rhs_v)))

    # top-level weights carry the combination
    add_row({wvar(i, Fraction(0)): Fraction(1) for i in range(len(pts))}, 1)

    eps_col = nw  # margin variable column
    extra_cols += 1
    strict_rows = []

    for k in range(d):
        levels: dict = {}
        for i, lv in enumerate(lifts):
            entry = lv[k]
            if entry.is_zero:
                continue
            exp, coeff = entry.num[0]
            for lam in lambdas:
                levels.setdefault(lam + exp, []).append((i, lam, coeff))
        yk = y[k]
        target = None if yk.sign == ZERO else yk._mag
        if target is not None and target not in levels:
            return None
        for level, contribs in sorted(levels.items(), reverse=True):
            if target is not None and level < target:
                continue
            coeffs: dict = {}
            for i, lam, coeff in contribs:
                col = wvar(i, lam)
                coeffs[col] = coeffs.get(col, Fraction(0)) + coeff
            if target is not None and level == target:
                sigma = Fraction(yk.sign)
                coeffs = {c: sigma * v for c, v in coeffs.items()}
                surplus = nw + extra_cols
                extra_cols += 1
                coeffs[eps_col] = Fraction(-1)
                coeffs[surplus] = Fraction(-1)
                strict_rows.append(len(rows))
                add_row(coeffs, 0)
            else:
                add_row(coeffs, 0)
    # keep the maximized margin bounded
    bound_slack = nw + extra_cols
    extra_cols += 1
    add_row({eps_col: Fraction(1), bound_slack: Fraction(1)}, 1)

    nvars = nw + extra_cols
    dense_rows, rhs = [], []
    for coeffs, rv in rows:
        row = [Fraction(0)] * nvars
        for c, v in coeffs.items():
            row[c] = v
        dense_rows.append(tuple(row))
        rhs.append(rv)
    objective = [Fraction(0)] * nvars
    objective[eps_col] = Fraction(1)
    problem = FeasibilityProblem(
        tuple(dense_rows),
        tuple(rhs),
        objective=tuple(objective),
        field=RationalField,
    )
    out = lp_feasible(problem)
    if not isinstance(out, LPWitness) or out.objective <= 0:
        return None
    coeffs = out.x
    gammas = []
    for i in range(len(pts)):
        g = PuiseuxNum.zero()
        for lam in lambdas:
            c = coeffs[wvar(i, lam)]
            if c:
                g = g + PuiseuxNum.monomial(c, lam)
        gammas.append(g)
    total = PuiseuxNum.zero()
    for g in gammas:
        total = total + g
    combo = None
    for g, lv in zip(gammas, lifts):
        term = lv.scale(g)
        combo = term if combo is None else combo + term
    witness = combo.scale(PuiseuxNum.one() / total)
    if sval(witness) != y:
        return None
    return witness
