"""Exact linear programming over an ordered field.

A dense two-phase simplex with Bland's rule, generic over the scalar type:
exact rationals or Puiseux expressions.  Feasibility answers carry either
a witness or a Farkas-style infeasibility certificate, and both are
re-verified by direct evaluation before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from tropconvex.puiseux import PuiseuxNum, PuiseuxVector


class RationalField:
    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def coerce(x):
        return Fraction(x)


class PuiseuxField:
    zero = PuiseuxNum.zero()
    one = PuiseuxNum.one()

    @staticmethod
    def coerce(x):
        if isinstance(x, PuiseuxNum):
            return x
        return PuiseuxNum.from_rational(x)


class SimplexError(RuntimeError):
    pass


def _simplex_min(A, b, c, fld, max_iters=100_000):
    """Minimize c.x over Ax = b, x >= 0; returns (status, x, obj, y).

    status is one of 'optimal', 'infeasible', 'unbounded'.  y holds the
    phase-1 Farkas multipliers when infeasible.
    """
    m, n = len(A), len(c)
    zero, one = fld.zero, fld.one
    A = [row[:] for row in A]
    b = b[:]
    for i in range(m):
        if b[i] < zero:
            A[i] = [-v for v in A[i]]
            b[i] = -b[i]
    # tableau columns: n structural + m artificial
    T = [A[i] + [one if j == i else zero for j in range(m)] + [b[i]] for i in range(m)]
    basis = [n + i for i in range(m)]

    def pivot(r, col):
        piv = T[r][col]
        T[r] = [v / piv for v in T[r]]
        for i in range(m):
            if i != r and T[i][col] != zero:
                f = T[i][col]
                T[i] = [v - f * w for v, w in zip(T[i], T[r])]
        basis[r] = col

    def reduced_costs(cost):
        z = [zero] * (n + m + 1)
        for i in range(m):
            cb = cost[basis[i]]
            if cb != zero:
                for j in range(n + m + 1):
                    if T[i][j] != zero:
                        z[j] = z[j] + cb * T[i][j]
        return [cost[j] - z[j] for j in range(n + m)], z[-1]

    def run(cost, allowed):
        for _ in range(max_iters):
            red, _ = reduced_costs(cost)
            enter = -1
            for j in range(n + m):
                if j in allowed and red[j] < zero:
                    enter = j
                    break
            if enter < 0:
                return
            leave, best = -1, None
            for i in range(m):
                if T[i][enter] > zero:
                    ratio = T[i][-1] / T[i][enter]
                    if best is None or ratio < best or (
                        ratio == best and basis[i] < basis[leave]
                    ):
                        best, leave = ratio, i
            if leave < 0:
                raise SimplexError("unbounded")
            pivot(leave, enter)
        raise SimplexError("iteration limit hit")

    art_cost = [zero] * n + [one] * m
    allowed_all = set(range(n + m))
    run(art_cost, allowed_all)
    _, obj1 = reduced_costs(art_cost)
    if obj1 > zero:
        # Farkas multipliers from the artificial columns: y = c_B . B^{-1}
        y = []
        for i in range(m):
            acc = zero
            for r in range(m):
                if basis[r] >= n:
                    acc = acc + T[r][n + i]
            y.append(acc)
        return "infeasible", None, obj1, y
    # drive artificials out of the basis when possible
    for r in range(m):
        if basis[r] >= n:
            for j in range(n):
                if T[r][j] != zero:
                    pivot(r, j)
                    break
    allowed = set(range(n))
    cost2 = list(c) + [zero] * m
    try:
        run(cost2, allowed)
    except SimplexError as exc:
        if "unbounded" in str(exc):
            return "unbounded", None, None, None
        raise
    x = [zero] * n
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = T[i][-1]
    _, obj = reduced_costs(cost2)
    return "optimal", x, obj, None


@dataclass(frozen=True)
class FeasibilityProblem:
    """Equality rows over an ordered field with nonnegative variables.

    ``nonneg`` lists the constrained variable indices (all by default);
    remaining variables are free.  ``lower_bounds`` substitutes a margin
    below selected variables.  An optional linear objective is maximized.
    """

    rows: tuple            # tuple of coefficient tuples
    rhs: tuple
    nonneg: Optional[frozenset] = None
    lower_bounds: tuple = ()   # pairs (index, bound)
    objective: Optional[tuple] = None
    field: object = RationalField

    def nvars(self) -> int:
        return len(self.rows[0]) if self.rows else 0


@dataclass(frozen=True)
class LPWitness:
    x: tuple
    objective: object = None


@dataclass(frozen=True)
class LPInfeasible:
    farkas: tuple


def lp_feasible(problem: FeasibilityProblem):
    """Solve the problem; returns LPWitness or LPInfeasible, both verified."""
    fld = problem.field
    zero = fld.zero
    n = problem.nvars()
    nonneg = problem.nonneg if problem.nonneg is not None else frozenset(range(n))
    lbs = dict(problem.lower_bounds)
    # substitute lower bounds, split free variables
    col_map = []  # per original var: ('pos', j) or ('split', j_plus, j_minus)
    ncols = 0
    for i in range(n):
        if i in nonneg or i in lbs:
            col_map.append(("pos", ncols))
            ncols += 1
        else:
            col_map.append(("split", ncols, ncols + 1))
            ncols += 2
    A, b = [], []
    for row, rhs in zip(problem.rows, problem.rhs):
        out = [zero] * ncols
        shift = zero
        for i, coef in enumerate(row):
            if coef == zero:
                continue
            cm = col_map[i]
            if cm[0] == "pos":
                out[cm[1]] = out[cm[1]] + coef
                if i in lbs:
                    shift = shift + coef * fld.coerce(lbs[i])
            else:
                out[cm[1]] = out[cm[1]] + coef
                out[cm[2]] = out[cm[2]] - coef
        A.append(out)
        b.append(fld.coerce(rhs) - shift)
    if problem.objective is not None:
        cost = [zero] * ncols
        for i, coef in enumerate(problem.objective):
            if coef == zero:
                continue
            cm = col_map[i]
            if cm[0] == "pos":
                cost[cm[1]] = cost[cm[1]] - coef  # maximize -> minimize
            else:
                cost[cm[1]] = cost[cm[1]] - coef
                cost[cm[2]] = cost[cm[2]] + coef
    else:
        cost = [zero] * ncols
    status, xs, obj, y = _simplex_min(A, b, cost, fld)
    if status == "infeasible":
        _verify_farkas(A, b, y, zero)
        return LPInfeasible(tuple(y))
    if status == "unbounded":
        raise SimplexError("objective unbounded; add explicit bounds")
    # map back
    x = []
    for i in range(n):
        cm = col_map[i]
        if cm[0] == "pos":
            v = xs[cm[1]]
            if i in lbs:
                v = v + fld.coerce(lbs[i])
        else:
            v = xs[cm[1]] - xs[cm[2]]
        x.append(v)
    _verify_witness(problem, x, zero, nonneg, lbs, fld)
    objective = None
    if problem.objective is not None:
        objective = zero
        for coef, xv in zip(problem.objective, x):
            objective = objective + coef * xv
    return LPWitness(tuple(x), objective)


def _verify_witness(problem, x, zero, nonneg, lbs, fld):
    for row, rhs in zip(problem.rows, problem.rhs):
        acc = zero
        for coef, xv in zip(row, x):
            acc = acc + coef * xv
        if acc != fld.coerce(rhs):
            raise SimplexError("witness failed re-verification")
    for i in nonneg:
        if x[i] < zero:
            raise SimplexError("witness violates nonnegativity")
    for i, lb in lbs.items():
        if x[i] < fld.coerce(lb):
            raise SimplexError("witness violates lower bound")


def _verify_farkas(A, b, y, zero):
    m = len(A)
    ncols = len(A[0]) if A else 0
    for j in range(ncols):
        acc = zero
        for i in range(m):
            acc = acc + y[i] * A[i][j]
        if acc > zero:
            raise SimplexError("certificate failed re-verification")
    acc = zero
    for i in range(m):
        acc = acc + y[i] * b[i]
    if not acc > zero:
        raise SimplexError("certificate failed re-verification")


def conv_witness(points: Sequence[PuiseuxVector], q: PuiseuxVector):
    """Weights expressing q as a convex combination, or None."""
    if not points:
        raise ValueError("need at least one generator")
    n = len(points)
    d = len(q)
    one = PuiseuxField.one
    rows = [tuple(one for _ in range(n))]
    rhs = [one]
    for k in range(d):
        rows.append(tuple(p[k] for p in points))
        rhs.append(q[k])
    out = lp_feasible(
        FeasibilityProblem(tuple(rows), tuple(rhs), field=PuiseuxField)
    )
    return out.x if isinstance(out, LPWitness) else None


def cone_witness(points: Sequence[PuiseuxVector], q: PuiseuxVector):
    """Weights expressing q as a nonnegative combination, or None."""
    if not points:
        raise ValueError("need at least one generator")
    d = len(q)
    rows, rhs = [], []
    for k in range(d):
        rows.append(tuple(p[k] for p in points))
        rhs.append(q[k])
    out = lp_feasible(
        FeasibilityProblem(tuple(rows), tuple(rhs), field=PuiseuxField)
    )
    return out.x if isinstance(out, LPWitness) else None


def conv_member(points: Sequence[PuiseuxVector], q: PuiseuxVector) -> bool:
    """Whether q lies in the convex hull of the points."""
    return conv_witness(points, q) is not None


def cone_member(points: Sequence[PuiseuxVector], q: PuiseuxVector) -> bool:
    """Whether q lies in the cone spanned by the points."""
    return cone_witness(points, q) is not None
