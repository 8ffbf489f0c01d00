"""The symmetrized semiring of signed tropical numbers.

An element carries a sign tag (positive, negative, balanced, or the zero
element) and an exact rational magnitude.  Addition keeps the operand of
strictly larger magnitude and balances ties with conflicting signs;
multiplication adds magnitudes and multiplies signs, with balanced
absorbing.  The zero element is a dedicated variant, never a sentinel
magnitude.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

# Sign tags.  NEG/POS multiply like -1/+1; BAL absorbs; ZERO annihilates.
ZERO = 0
POS = 1
NEG = -1
BAL = 2

_SIGN_CHARS = {POS: "+", NEG: "-", BAL: "b", ZERO: "o"}

Rat = Fraction


def _rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class SymNum:
    """One element of the symmetrized semiring.

    Immutable.  ``mag`` is unobservable on the zero element; all zero
    values compare equal and hash alike.
    """

    __slots__ = ("sign", "_mag")

    def __init__(self, sign: int, mag=None):
        if sign not in (POS, NEG, BAL, ZERO):
            raise ValueError(f"bad sign tag {sign!r}")
        if sign == ZERO:
            mag = None
        elif mag is None:
            raise ValueError("non-zero element needs a magnitude")
        else:
            mag = _rat(mag)
        object.__setattr__(self, "sign", sign)
        object.__setattr__(self, "_mag", mag)

    def __setattr__(self, name, value):
        raise AttributeError("SymNum is immutable")

    @property
    def mag(self) -> Fraction:
        if self.sign == ZERO:
            raise ValueError("the zero element has no magnitude")
        return self._mag

    @property
    def is_zero(self) -> bool:
        return self.sign == ZERO

    @property
    def is_balanced(self) -> bool:
        return self.sign == BAL

    @property
    def is_signed(self) -> bool:
        """True for elements of the signed tropical numbers (no balance)."""
        return self.sign != BAL

    def __eq__(self, other):
        if not isinstance(other, SymNum):
            return NotImplemented
        return self.sign == other.sign and self._mag == other._mag

    def __hash__(self):
        return hash((self.sign, self._mag))

    # Semiring operations.

    def __add__(self, other: "SymNum") -> "SymNum":
        return add(self, other)

    def __mul__(self, other: "SymNum") -> "SymNum":
        return mul(self, other)

    def __neg__(self) -> "SymNum":
        s = self.sign
        if s == POS:
            return SymNum(NEG, self._mag)
        if s == NEG:
            return SymNum(POS, self._mag)
        return self

    def __abs__(self) -> "SymNum":
        if self.sign in (ZERO, POS):
            return self
        return SymNum(POS, self._mag)

    def balance(self) -> "SymNum":
        if self.sign in (ZERO, BAL):
            return self
        return SymNum(BAL, self._mag)

    def lsum(self, other: "SymNum") -> "SymNum":
        """Left sum: keep self on magnitude ties, else ordinary addition."""
        if self.sign == ZERO:
            return self if other.sign == ZERO else other
        if other.sign == ZERO:
            return self
        if self._mag == other._mag:
            return self
        return self if self._mag > other._mag else other

    def recip(self) -> "SymNum":
        """Multiplicative inverse (negated magnitude, same sign)."""
        if self.sign == ZERO:
            raise ZeroDivisionError("the zero element has no inverse")
        return SymNum(self.sign, -self._mag)

    # Order relations.  gt/teq follow the extended relations; the rich
    # comparisons expose the total order on signed elements and refuse
    # balanced operands, so sorting signed values stays safe.

    def gt(self, other: "SymNum") -> bool:
        return add(self, -other).sign == POS

    def teq(self, other: "SymNum") -> bool:
        """Relation `a ⊖ b is positive or balanced` (not antisymmetric)."""
        return add(self, -other).sign != NEG

    def geq(self, other: "SymNum") -> bool:
        return self == other or self.gt(other)

    def _order_key(self):
        if self.sign == BAL:
            raise TypeError("balanced elements are not totally ordered")
        if self.sign == ZERO:
            return (0, 0)
        return (self.sign, self.sign * self._mag)

    def __lt__(self, other: "SymNum") -> bool:
        return self._order_key() < other._order_key()

    def __le__(self, other: "SymNum") -> bool:
        return self._order_key() <= other._order_key()

    def __gt__(self, other: "SymNum") -> bool:
        return self._order_key() > other._order_key()

    def __ge__(self, other: "SymNum") -> bool:
        return self._order_key() >= other._order_key()

    def __str__(self) -> str:
        if self.sign == ZERO:
            return "o"
        return _SIGN_CHARS[self.sign] + _fmt_rat(self._mag)

    def __repr__(self) -> str:
        return f"SymNum({str(self)!r})"


def _fmt_rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


_ZERO_SINGLETON = SymNum(ZERO)


def zero() -> SymNum:
    return _ZERO_SINGLETON


def pos(mag) -> SymNum:
    return SymNum(POS, mag)


def neg(mag) -> SymNum:
    return SymNum(NEG, mag)


def bal(mag) -> SymNum:
    return SymNum(BAL, mag)


def add(a: SymNum, b: SymNum) -> SymNum:
    """Tropical addition: larger magnitude wins, sign conflicts balance."""
    if a.sign == ZERO:
        return b
    if b.sign == ZERO:
        return a
    am, bm = a._mag, b._mag
    if am > bm:
        return a
    if bm > am:
        return b
    if a.sign == b.sign:
        return a
    return SymNum(BAL, am)


_SIGN_MUL = {
    (POS, POS): POS, (POS, NEG): NEG, (NEG, POS): NEG, (NEG, NEG): POS,
    (POS, BAL): BAL, (NEG, BAL): BAL, (BAL, POS): BAL, (BAL, NEG): BAL,
    (BAL, BAL): BAL,
}


def mul(a: SymNum, b: SymNum) -> SymNum:
    """Tropical multiplication: magnitudes add, signs multiply."""
    if a.sign == ZERO or b.sign == ZERO:
        return _ZERO_SINGLETON
    return SymNum(_SIGN_MUL[(a.sign, b.sign)], a._mag + b._mag)


NEGATE = "NEGATE"
BALANCE = "BALANCE"
ABS = "ABS"
TSGN = "TSGN"


def unary(kind: str, a: SymNum):
    """Unary operations; TSGN returns the sign tag, the others a SymNum."""
    if kind == NEGATE:
        return -a
    if kind == BALANCE:
        return a.balance()
    if kind == ABS:
        return abs(a)
    if kind == TSGN:
        return a.sign
    raise ValueError(f"unknown unary kind {kind!r}")


@dataclass(frozen=True)
class Relation:
    """Outcome of comparing two elements under the extended relations."""

    gt: bool
    teq: bool
    eq: bool

    @property
    def geq(self) -> bool:
        return self.gt or self.eq


def compare(a: SymNum, b: SymNum) -> Relation:
    d = add(a, -b)
    return Relation(gt=d.sign == POS, teq=d.sign != NEG, eq=a == b)


@dataclass(frozen=True)
class Interval:
    """A closed one-dimensional interval in the total order on signed values."""

    lo: SymNum
    hi: SymNum

    def __post_init__(self):
        if self.lo.sign == BAL or self.hi.sign == BAL:
            raise ValueError("interval endpoints must be signed")
        if not self.lo <= self.hi:
            raise ValueError("interval needs lo <= hi")

    @property
    def is_singleton(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, x: SymNum) -> bool:
        if x.sign == BAL:
            return False
        return self.lo <= x <= self.hi

    def sample(self) -> list[SymNum]:
        """Endpoints plus an order-interior point when the interval is fat."""
        if self.is_singleton:
            return [self.lo]
        pts = [self.lo, self.hi]
        mid = midpoint(self.lo, self.hi)
        if mid not in pts:
            pts.append(mid)
        return pts

    def __str__(self) -> str:
        if self.is_singleton:
            return f"{{{self.lo}}}"
        return f"[{self.lo}, {self.hi}]"


def midpoint(a: SymNum, b: SymNum) -> SymNum:
    """Some element strictly between a < b; witnesses density of the order."""
    if not a < b:
        raise ValueError("midpoint needs a < b")
    if a.sign == b.sign:
        return SymNum(a.sign, (a._mag + b._mag) / 2)
    if a.sign == NEG and b.sign == POS:
        return _ZERO_SINGLETON
    if a.sign == NEG:  # b is the zero element
        return SymNum(NEG, a._mag - 1)
    # a is the zero element, b positive
    return SymNum(POS, b._mag - 1)


def uncomp(a: SymNum) -> Interval:
    """The interval of signed values left undetermined by a balanced sum."""
    if a.sign == BAL:
        return Interval(SymNum(NEG, a._mag), SymNum(POS, a._mag))
    return Interval(a, a)


_RAT_RE = r"[+-]?(?:\d+(?:\.\d+)?|\.\d+)(?:/\d+)?"
_TOKEN_RE = re.compile(
    r"^\s*(?:(o)|([+\-b])\s*(?:(" + _RAT_RE + r")|\((\s*" + _RAT_RE + r"\s*)\)))\s*$"
)


def parse_symnum(text: str) -> SymNum:
    """Parse tokens like ``+2``, ``-3/2``, ``b4``, ``b-1``, ``-(-1)``, ``o``."""
    m = _TOKEN_RE.match(text)
    if not m:
        raise ValueError(f"bad symmetrized-number token {text!r}")
    if m.group(1):
        return _ZERO_SINGLETON
    sign = {"+": POS, "-": NEG, "b": BAL}[m.group(2)]
    raw = (m.group(3) or m.group(4)).strip()
    return SymNum(sign, Fraction(raw))
