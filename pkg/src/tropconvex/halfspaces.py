"""Signed tropical hyperplanes and halfspaces.

A halfspace is a coefficient vector (a_0, ..., a_d) together with a kind
tag; membership of x is decided by the sign class of the affine evaluation
a_0 + sum a_k x_k computed in the symmetrized semiring, with the
homogeneous coordinate x_0 fixed to +0 internally.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from tropconvex.semiring import BAL, NEG, POS, ZERO, SymNum, add, mul, pos
from tropconvex.vectors import SignedVector, parse_vector


class Kind(enum.Enum):
    OPEN = "open"
    CLOSED = "closed"
    SEMI_CLOSED = "semi"
    HYPERPLANE = "hyp"


# Sign classes accepted per kind.
_ACCEPTS = {
    Kind.OPEN: {POS},
    Kind.CLOSED: {POS, BAL, ZERO},
    Kind.SEMI_CLOSED: {POS, ZERO},
    Kind.HYPERPLANE: {BAL, ZERO},
}


@dataclass(frozen=True)
class Halfspace:
    coeffs: SignedVector  # length d + 1, apex coefficient first
    kind: Kind

    def __post_init__(self):
        if len(self.coeffs) < 2:
            raise ValueError("halfspace needs an apex and >= 1 coordinate")
        if all(e.sign == ZERO for e in self.coeffs.entries[1:]):
            raise ValueError("some non-apex coefficient must be non-zero")

    @property
    def dim(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_linear(self) -> bool:
        return self.coeffs[0].sign == ZERO

    def opposite(self) -> "Halfspace":
        return Halfspace(-self.coeffs, self.kind)

    def __contains__(self, x: SignedVector) -> bool:
        return member(self, x)

    def __str__(self) -> str:
        return f"{self.kind.value} {self.coeffs}"


def eval_affine(a: SignedVector, x: SignedVector) -> SymNum:
    """a_0 + sum_k a_k x_k in the symmetrized semiring."""
    if len(a) != len(x) + 1:
        raise ValueError(f"need {len(x) + 1} coefficients, got {len(a)}")
    acc = a[0]
    for ak, xk in zip(a.entries[1:], x.entries):
        acc = add(acc, mul(ak, xk))
    return acc


def member(h: Halfspace, x: SignedVector) -> bool:
    if len(h.coeffs) != len(x) + 1:
        raise ValueError("dimension mismatch")
    return eval_affine(h.coeffs, x).sign in _ACCEPTS[h.kind]


def member_two_max(h: Halfspace, x: SignedVector) -> bool:
    """Cross-check oracle: the two-sided max comparison form of membership.

    Splits the evaluation into the sign-matching and sign-conflicting parts
    and compares their maxima, strict or weak according to the kind.
    """
    a = h.coeffs
    a0 = a[0]
    plus = []  # magnitudes feeding the left max
    minus = []
    if a0.sign == POS:
        plus.append(a0._mag)
    elif a0.sign == NEG:
        minus.append(a0._mag)
    for ak, xk in zip(a.entries[1:], x.entries):
        if ak.sign == ZERO or xk.sign == ZERO:
            continue
        m = ak._mag + xk._mag
        (plus if ak.sign == xk.sign else minus).append(m)
    lhs = max(plus) if plus else None
    rhs = max(minus) if minus else None
    if lhs is None and rhs is None:
        ge, gt_, balanced = True, False, False
    elif rhs is None:
        ge, gt_, balanced = True, True, False
    elif lhs is None:
        ge, gt_, balanced = False, False, False
    else:
        ge, gt_, balanced = lhs >= rhs, lhs > rhs, lhs == rhs
    if h.kind is Kind.OPEN:
        return gt_
    if h.kind is Kind.CLOSED:
        return ge
    if h.kind is Kind.SEMI_CLOSED:
        return gt_ or (lhs is None and rhs is None)
    return balanced or (lhs is None and rhs is None)


def hs_type(a: SignedVector) -> frozenset:
    """Indices (1-based) of the strictly positive non-apex coefficients."""
    return frozenset(
        i for i, ak in enumerate(a.entries[1:], start=1) if ak.sign == POS
    )


@dataclass(frozen=True)
class BoundaryProfile:
    """Maximum-attaining indices of the affine form, 0 denoting the apex."""

    argmax: frozenset
    domin_plus: frozenset

    def __post_init__(self):
        if not self.domin_plus <= self.argmax:
            raise ValueError("domin_plus must be a subset of argmax")


def boundary_profile(a: SignedVector, x: SignedVector) -> BoundaryProfile:
    if len(a) != len(x) + 1:
        raise ValueError("dimension mismatch")
    terms = []
    x0 = pos(0)
    for k, (ak, xk) in enumerate(zip(a.entries, (x0,) + x.entries)):
        p = mul(ak, xk)
        if p.sign != ZERO:
            terms.append((k, p))
    if not terms:
        return BoundaryProfile(frozenset(), frozenset())
    top = max(p._mag for _, p in terms)
    argmax = frozenset(k for k, p in terms if p._mag == top)
    dominp = frozenset(k for k, p in terms if p._mag == top and p.sign == POS)
    return BoundaryProfile(argmax, dominp)


def parse_halfspace(text: str) -> Halfspace:
    """Parse ``kind [a0, a1, ..., ad]`` with kind in open/closed/semi/hyp."""
    parts = text.strip().split(None, 1)
    if len(parts) != 2:
        raise ValueError(f"bad halfspace literal {text!r}")
    kind_token, vec = parts
    try:
        kind = Kind(kind_token)
    except ValueError:
        raise ValueError(f"unknown halfspace kind {kind_token!r}") from None
    return Halfspace(parse_vector(vec), kind)
