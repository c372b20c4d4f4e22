"""Exact arithmetic in Q(l), the rationals extended by a root l of 2X^2+X+3.

Elements are written a + b*l with rational a, b.  The defining relation
2*l^2 + l + 3 = 0 drives every reduction: l^2 = (-3 - l)/2, the two roots
sum to -1/2 and multiply to 3/2.  Complex embeddings are never used;
l stays an abstract root throughout.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

Rational = Fraction


class FieldParseError(ValueError):
    """Malformed field-element text; `pos` is the offset of the bad token."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


def _normalize(an: int, bn: int, den: int) -> tuple[int, int, int]:
    # canonical triple: (an + bn*l)/den with den > 0 and gcd(an, bn, den) = 1
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        an, bn, den = -an, -bn, -den
    g = math.gcd(math.gcd(an, bn), den)
    if g > 1:
        an //= g
        bn //= g
        den //= g
    return an, bn, den


class FieldElement:
    """Immutable element a + b*l of Q(l), stored as one reduced fraction
    (an + bn*l)/den."""

    __slots__ = ("an", "bn", "den")

    def __init__(self, a=0, b=0):
        a = Fraction(a)
        b = Fraction(b)
        den = a.denominator * b.denominator // math.gcd(a.denominator, b.denominator)
        an = a.numerator * (den // a.denominator)
        bn = b.numerator * (den // b.denominator)
        object.__setattr__(self, "an", an)
        object.__setattr__(self, "bn", bn)
        object.__setattr__(self, "den", den)

    @classmethod
    def _raw(cls, an: int, bn: int, den: int) -> "FieldElement":
        self = object.__new__(cls)
        an, bn, den = _normalize(an, bn, den)
        object.__setattr__(self, "an", an)
        object.__setattr__(self, "bn", bn)
        object.__setattr__(self, "den", den)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    @property
    def a(self) -> Fraction:
        return Fraction(self.an, self.den)

    @property
    def b(self) -> Fraction:
        return Fraction(self.bn, self.den)

    def as_pair(self) -> tuple[Fraction, Fraction]:
        return self.a, self.b

    def triple(self) -> tuple[int, int, int]:
        return self.an, self.bn, self.den

    @classmethod
    def from_triple(cls, t: tuple[int, int, int]) -> "FieldElement":
        return cls._raw(*t)

    def is_zero(self) -> bool:
        return self.an == 0 and self.bn == 0

    def is_rational(self) -> bool:
        return self.bn == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return (self.an, self.bn, self.den) == (other.an, other.bn, other.den)
        if isinstance(other, (int, Fraction)):
            return self.bn == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.bn == 0:
            return hash(Fraction(self.an, self.den))
        return hash((self.an, self.bn, self.den))

    def __add__(self, other) -> "FieldElement":
        other = _coerce(other)
        return FieldElement._raw(
            self.an * other.den + other.an * self.den,
            self.bn * other.den + other.bn * self.den,
            self.den * other.den,
        )

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        return FieldElement._raw(-self.an, -self.bn, self.den)

    def __sub__(self, other) -> "FieldElement":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "FieldElement":
        return (-self) + _coerce(other)

    def __mul__(self, other) -> "FieldElement":
        other = _coerce(other)
        a1, b1, a2, b2 = self.an, self.bn, other.an, other.bn
        # (a1+b1*l)(a2+b2*l) with l^2 = (-3-l)/2, over a common factor of 2
        return FieldElement._raw(
            2 * a1 * a2 - 3 * b1 * b2,
            2 * (a1 * b2 + b1 * a2) - b1 * b2,
            2 * self.den * other.den,
        )

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        # 1/x = conj(x)/N(x); the norm N(x) = a^2 - ab/2 + 3b^2/2 is rational
        # and positive for x != 0.
        c = self.conj()
        n = self * c
        assert n.bn == 0
        return FieldElement._raw(c.an * n.den, c.bn * n.den, c.den * n.an)

    def __truediv__(self, other) -> "FieldElement":
        return self * _coerce(other).inverse()

    def __rtruediv__(self, other) -> "FieldElement":
        return _coerce(other) * self.inverse()

    def conj(self) -> "FieldElement":
        # l -> lbar = -1/2 - l, an involutive field automorphism
        return FieldElement._raw(2 * self.an - self.bn, -2 * self.bn, 2 * self.den)

    def __pow__(self, k: int) -> "FieldElement":
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __str__(self) -> str:
        return format_field_element(self)

    def __repr__(self) -> str:
        return f"FieldElement({self.a!r}, {self.b!r})"


def _coerce(x) -> FieldElement:
    if isinstance(x, FieldElement):
        return x
    if isinstance(x, (int, Fraction)):
        return FieldElement(x)
    raise TypeError(f"cannot coerce {type(x).__name__} into Q(l)")


ZERO = FieldElement(0)
ONE = FieldElement(1)
HALF = FieldElement(Fraction(1, 2))
LAMBDA = FieldElement(0, 1)
LAMBDA_BAR = LAMBDA.conj()


def format_field_element(x: FieldElement) -> str:
    """Canonical text form: "a/b", "c/d*l" or "a/b + c/d*l" with reduced
    fractions; parse_field_element round-trips it."""
    a, b = x.as_pair()
    if b == 0:
        return _format_rational(a)
    lpart = "l" if abs(b) == 1 else f"{_format_rational(abs(b))}*l"
    if a == 0:
        return lpart if b > 0 else f"-{lpart}"
    sign = "+" if b > 0 else "-"
    return f"{_format_rational(a)} {sign} {lpart}"


def _format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


_TOKEN = re.compile(r"\s*(?:(\d+)|([+\-*/])|(l)\b)")


def parse_field_element(text: str) -> FieldElement:
    """Parse "a/b + c/d*l" style text (whitespace insignificant)."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            bad = text[pos:].lstrip()[0]
            raise FieldParseError(f"unexpected character {bad!r}", pos)
        kind = m.lastindex
        tokens.append((("num", "op", "l")[kind - 1], m.group(kind), m.start(kind)))
        pos = m.end()
    return _parse_tokens(tokens, len(text))


def _parse_tokens(tokens, endpos) -> FieldElement:
    i = 0
    total = ZERO

    def peek():
        return tokens[i] if i < len(tokens) else (None, None, endpos)

    first = True
    while i < len(tokens):
        sign = 1
        kind, val, p = peek()
        if kind == "op" and val in "+-":
            if val == "-":
                sign = -1
            i += 1
        elif not first:
            raise FieldParseError("expected '+' or '-' between terms", p)
        first = False
        kind, val, p = peek()
        coeff = None
        if kind == "num":
            num = int(val)
            i += 1
            kind, val, _ = peek()
            if kind == "op" and val == "/":
                i += 1
                kind, val, p2 = peek()
                if kind != "num":
                    raise FieldParseError("expected digits after '/'", p2)
                if int(val) == 0:
                    raise FieldParseError("zero denominator", p2)
                coeff = Fraction(num, int(val))
                i += 1
            else:
                coeff = Fraction(num)
            kind, val, _ = peek()
            if kind == "op" and val == "*":
                i += 1
                kind, val, p2 = peek()
                if kind != "l":
                    raise FieldParseError("expected 'l' after '*'", p2)
                total = total + FieldElement(0, sign * coeff)
                i += 1
                continue
            if kind == "l":
                total = total + FieldElement(0, sign * coeff)
                i += 1
                continue
            total = total + FieldElement(sign * coeff)
            continue
        if kind == "l":
            total = total + FieldElement(0, sign)
            i += 1
            continue
        raise FieldParseError("expected a rational or 'l'", p)
    if first:
        raise FieldParseError("empty field-element text", 0)
    return total


def rational_sqrt(q: Fraction):
    """Exact square root of a rational, or None when q is not a square."""
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def field_sqrts(x: FieldElement) -> list[FieldElement]:
    """All square roots of x inside Q(l) (empty, or a +/- pair; [0] for 0).

    Solving (a + b*l)^2 = c + d*l splits into a^2 - 3b^2/2 = c and
    2ab - b^2/2 = d; eliminating a leaves a biquadratic in b with rational
    coefficients, so only rational square roots are ever needed.
    """
    c, d = x.as_pair()
    if x.is_zero():
        return [ZERO]
    roots = []
    if d == 0:
        r = rational_sqrt(c)
        if r is not None:
            roots.append(FieldElement(r))
            roots.append(FieldElement(-r))
    if d != 0:
        # 23 t^2 + (16c - 4d) t - 4 d^2 = 0 with t = b^2
        disc = (16 * c - 4 * d) ** 2 + 4 * 23 * 4 * d * d
        rdisc = rational_sqrt(disc)
        if rdisc is not None:
            for t in {((4 * d - 16 * c) + rdisc) / 46, ((4 * d - 16 * c) - rdisc) / 46}:
                if t <= 0:
                    continue
                b = rational_sqrt(t)
                if b is None:
                    continue
                for bb in (b, -b):
                    a = (2 * d + bb * bb) / (4 * bb)
                    cand = FieldElement(a, bb)
                    if cand * cand == x and cand not in roots:
                        roots.append(cand)
    return sorted(roots, key=lambda r: (r.a, r.b))
