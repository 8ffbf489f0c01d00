"""An exact ordered non-Archimedean field of rational Puiseux expressions.

Elements are ratios of finite sums of rational-coefficient, rational-
exponent powers of a formal parameter t, thought of as arbitrarily large.
The order compares leading behavior: an element is positive when the
leading coefficient of its canonical numerator is positive.  Canonical
form divides out the polynomial gcd in a common formal root of t and
normalizes the denominator's leading coefficient to one, so equality is
structural.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import lcm

from tropconvex.semiring import NEG, POS, ZERO, SymNum, zero as _tzero
from tropconvex.vectors import SignedVector

Terms = tuple  # tuple of (exponent, coefficient) pairs, exponent descending


def _strip(d: dict) -> dict:
    return {e: c for e, c in d.items() if c != 0}


def _terms(d: dict) -> Terms:
    return tuple(sorted(d.items(), reverse=True))


def _mul_dict(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            v = out.get(e)
            out[e] = ca * cb if v is None else v + ca * cb
    return _strip(out)


def _add_dict(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e)
        out[e] = c if v is None else v + c
    return _strip(out)


# dense integer-exponent polynomial helpers for gcd reduction

def _poly_deg(p: dict) -> int:
    return max(p) if p else -1


def _poly_divmod(a: dict, b: dict):
    q: dict = {}
    r = dict(a)
    db = _poly_deg(b)
    lb = b[db]
    while r and _poly_deg(r) >= db:
        dr = _poly_deg(r)
        coef = r[dr] / lb
        q[dr - db] = coef
        for e, c in b.items():
            k = e + dr - db
            v = r.get(k, Fraction(0)) - coef * c
            if v:
                r[k] = v
            else:
                r.pop(k, None)
    return q, r


def _poly_gcd(a: dict, b: dict) -> dict:
    a, b = dict(a), dict(b)
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    d = _poly_deg(a)
    if d >= 0 and a[d] != 1:
        lead = a[d]
        a = {e: c / lead for e, c in a.items()}
    return a


def _canonical(num: dict, den: dict):
    num, den = _strip(num), _strip(den)
    if not den:
        raise ZeroDivisionError("denominator is zero")
    if not num:
        return (), ((Fraction(0), Fraction(1)),)
    if den != {Fraction(0): Fraction(1)}:
        n = lcm(*(e.denominator for e in list(num) + list(den)))
        a, b = min(num), min(den)
        P = {int((e - a) * n): c for e, c in num.items()}
        Q = {int((e - b) * n): c for e, c in den.items()}
        G = _poly_gcd(P, Q)
        if _poly_deg(G) > 0:
            P, _ = _poly_divmod(P, G)
            Q, _ = _poly_divmod(Q, G)
        lead = Q[_poly_deg(Q)]
        shift = a - b
        num = {Fraction(e, n) + shift: c / lead for e, c in P.items()}
        den = {Fraction(e, n): c / lead for e, c in Q.items()}
        if den == {Fraction(0): Fraction(1)}:
            den = {Fraction(0): Fraction(1)}
    return _terms(num), _terms(den)


_ONE_TERMS = ((Fraction(0), Fraction(1)),)


class PuiseuxNum:
    """A ratio of finite formal sums of rational powers of t."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, dict):
            num_d = {Fraction(e): Fraction(c) for e, c in num.items()}
        else:
            num_d = {Fraction(e): Fraction(c) for e, c in num}
        if den is None:
            den_d = {Fraction(0): Fraction(1)}
        elif isinstance(den, dict):
            den_d = {Fraction(e): Fraction(c) for e, c in den.items()}
        else:
            den_d = {Fraction(e): Fraction(c) for e, c in den}
        n, d = _canonical(num_d, den_d)
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    def __setattr__(self, name, value):
        raise AttributeError("PuiseuxNum is immutable")

    # constructors

    @staticmethod
    def zero() -> "PuiseuxNum":
        return _P_ZERO

    @staticmethod
    def one() -> "PuiseuxNum":
        return _P_ONE

    @staticmethod
    def monomial(coeff, exp) -> "PuiseuxNum":
        c = Fraction(coeff)
        if c == 0:
            return _P_ZERO
        return PuiseuxNum({Fraction(exp): c})

    @staticmethod
    def from_rational(q) -> "PuiseuxNum":
        return PuiseuxNum.monomial(Fraction(q), 0)

    # structure

    @property
    def is_zero(self) -> bool:
        return not self.num

    def _num_dict(self) -> dict:
        return dict(self.num)

    def _den_dict(self) -> dict:
        return dict(self.den)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PuiseuxNum.from_rational(other)
        if not isinstance(other, PuiseuxNum):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # field arithmetic

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return PuiseuxNum.from_rational(other)
        if isinstance(other, PuiseuxNum):
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == _ONE_TERMS and o.den == _ONE_TERMS:
            return PuiseuxNum(_add_dict(self._num_dict(), o._num_dict()))
        n = _add_dict(
            _mul_dict(self._num_dict(), o._den_dict()),
            _mul_dict(o._num_dict(), self._den_dict()),
        )
        return PuiseuxNum(n, _mul_dict(self._den_dict(), o._den_dict()))

    __radd__ = __add__

    def __neg__(self):
        return PuiseuxNum({e: -c for e, c in self.num}, self._den_dict())

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PuiseuxNum(
            _mul_dict(self._num_dict(), o._num_dict()),
            _mul_dict(self._den_dict(), o._den_dict()),
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("division by zero Puiseux expression")
        return PuiseuxNum(
            _mul_dict(self._num_dict(), o._den_dict()),
            _mul_dict(self._den_dict(), o._num_dict()),
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if k < 0:
            return _P_ONE / self ** (-k)
        out = _P_ONE
        p = self
        while k:
            if k & 1:
                out = out * p
            p = p * p
            k >>= 1
        return out

    # order: sign of the leading numerator coefficient (denominator is
    # normalized positive)

    def _lead_sign(self) -> int:
        if not self.num:
            return 0
        c = self.num[0][1]
        return 1 if c > 0 else -1

    def __gt__(self, other):
        o = self._coerce(other)
        return (self - o)._lead_sign() > 0

    def __lt__(self, other):
        o = self._coerce(other)
        return (self - o)._lead_sign() < 0

    def __ge__(self, other):
        o = self._coerce(other)
        return (self - o)._lead_sign() >= 0

    def __le__(self, other):
        o = self._coerce(other)
        return (self - o)._lead_sign() <= 0

    def __str__(self):
        num = _fmt_terms(self.num)
        if self.den == _ONE_TERMS:
            return num
        return f"({num}) / ({_fmt_terms(self.den)})"

    def __repr__(self):
        return f"PuiseuxNum({str(self)!r})"


_P_ZERO = PuiseuxNum({})
_P_ONE = PuiseuxNum({Fraction(0): Fraction(1)})
t = PuiseuxNum({Fraction(1): Fraction(1)})


ADD, SUB, MUL, DIV = "ADD", "SUB", "MUL", "DIV"


def field_op(kind: str, p: PuiseuxNum, q: PuiseuxNum) -> PuiseuxNum:
    if kind == ADD:
        return p + q
    if kind == SUB:
        return p - q
    if kind == MUL:
        return p * q
    if kind == DIV:
        return p / q
    raise ValueError(f"unknown field op {kind!r}")


class PuiseuxVector:
    """Fixed-length tuple of Puiseux expressions."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        object.__setattr__(self, "entries", tuple(entries))
        if not self.entries:
            raise ValueError("vectors must have length >= 1")

    def __setattr__(self, name, value):
        raise AttributeError("PuiseuxVector is immutable")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    def __eq__(self, other):
        if not isinstance(other, PuiseuxVector):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other):
        return PuiseuxVector(a + b for a, b in zip(self.entries, other.entries))

    def scale(self, s: PuiseuxNum):
        return PuiseuxVector(s * e for e in self.entries)

    def __str__(self):
        return "[" + ", ".join(str(e) for e in self.entries) + "]"

    def __repr__(self):
        return f"PuiseuxVector({str(self)!r})"


def sval(p):
    """Signed valuation: signed leading exponent; vectors map componentwise."""
    if isinstance(p, PuiseuxVector):
        return SignedVector(sval(e) for e in p)
    if isinstance(p, (list, tuple)):
        return SignedVector(sval(e) for e in p)
    if p.is_zero:
        return _tzero()
    e_num, c = p.num[0]
    e_den = p.den[0][0]
    return SymNum(POS if c > 0 else NEG, e_num - e_den)


def lc(p: PuiseuxNum) -> Fraction:
    """Leading coefficient, zero for the zero expression."""
    if p.is_zero:
        return Fraction(0)
    return p.num[0][1] / p.den[0][1]


def lift_canonical(x: SignedVector) -> PuiseuxVector:
    """Coordinatewise monomial lift sigma * t^|x_i|, with zero lifting to 0."""
    out = []
    for e in x.entries:
        if e.sign == ZERO:
            out.append(_P_ZERO)
        else:
            out.append(PuiseuxNum.monomial(1 if e.sign == POS else -1, e._mag))
    return PuiseuxVector(out)


def lift_typed(x: SignedVector, J, inflate: int = None) -> PuiseuxVector:
    """Monomial lift with coefficient d+1 on positive coordinates in J and
    -(d+1) on negative coordinates outside J; J uses 1-based indices.

    ``inflate`` overrides the coefficient, for lifting halfspace
    coefficient vectors whose inflation is tied to the point dimension.
    """
    d = len(x)
    big = inflate if inflate is not None else d + 1
    J = frozenset(J)
    if not J <= set(range(1, d + 1)):
        raise ValueError("J must be a subset of the coordinate indices")
    out = []
    for i, e in enumerate(x.entries, start=1):
        if e.sign == ZERO:
            out.append(_P_ZERO)
        elif e.sign == POS and i in J:
            out.append(PuiseuxNum.monomial(big, e._mag))
        elif e.sign == NEG and i not in J:
            out.append(PuiseuxNum.monomial(-big, e._mag))
        else:
            out.append(PuiseuxNum.monomial(1 if e.sign == POS else -1, e._mag))
    return PuiseuxVector(out)


# -- text format --------------------------------------------------------------

def _fmt_exp(e: Fraction) -> str:
    if e == 1:
        return "t"
    if e.denominator == 1 and e >= 0:
        return f"t^{e.numerator}"
    s = str(e.numerator) if e.denominator == 1 else f"{e.numerator}/{e.denominator}"
    return "t^{" + s + "}"


def _fmt_terms(terms: Terms) -> str:
    if not terms:
        return "0"
    chunks = []
    for idx, (e, c) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        coeff = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
        if e == 0:
            body = coeff
        elif mag == 1:
            body = _fmt_exp(e)
        else:
            body = f"{coeff}*{_fmt_exp(e)}"
        if idx == 0:
            chunks.append(body if sign == "+" else "-" + body)
        else:
            chunks.append(f" {sign} {body}")
    return "".join(chunks)


_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*"
    r"(?:(?P<coeff>\d+(?:\.\d+)?(?:/\d+)?)\s*\*?\s*)?"
    r"(?P<t>t(?:\^(?:\{(?P<bexp>[^}]*)\}|(?P<exp>-?\d+(?:/\d+)?)))?)?"
)


def _parse_terms(text: str) -> dict:
    out: dict = {}
    pos_ = 0
    text = text.strip()
    if not text:
        raise ValueError("empty Puiseux literal")
    while pos_ < len(text):
        m = _TERM_RE.match(text, pos_)
        if not m or m.end() == pos_ or (m.group("coeff") is None and m.group("t") is None):
            raise ValueError(f"bad Puiseux literal near {text[pos_:]!r}")
        sign = -1 if m.group("sign") == "-" else 1
        coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
        if m.group("t"):
            raw = m.group("bexp") if m.group("bexp") is not None else m.group("exp")
            exp = Fraction(raw) if raw is not None else Fraction(1)
        else:
            exp = Fraction(0)
        e, c = Fraction(exp), sign * coeff
        out[e] = out.get(e, Fraction(0)) + c
        pos_ = m.end()
    return out


def parse_puiseux(text: str) -> PuiseuxNum:
    """Parse sums of c*t^e terms, optionally a ratio ``(..) / (..)``."""
    text = text.strip()
    m = re.match(r"^\((?P<num>.*)\)\s*/\s*\((?P<den>.*)\)$", text)
    if m:
        return PuiseuxNum(_parse_terms(m.group("num")), _parse_terms(m.group("den")))
    return PuiseuxNum(_parse_terms(text))
