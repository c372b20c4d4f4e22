"""Univariate polynomials over Q(l) (dense, ascending coefficients)."""

from __future__ import annotations

from baric.numberfield import ONE, ZERO, FieldElement, format_field_element


class UniPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def constant(cls, c: FieldElement) -> "UniPoly":
        return cls([c])

    @classmethod
    def x_minus(cls, alpha: FieldElement) -> "UniPoly":
        return cls([-alpha, ONE])

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        # degree of the zero polynomial is reported as -1
        return len(self.coeffs) - 1

    def leading(self) -> FieldElement:
        return self.coeffs[-1] if self.coeffs else ZERO

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == ONE

    def coeff(self, k: int) -> FieldElement:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self.coeff(k) + other.coeff(k) for k in range(n)])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self.coeff(k) - other.coeff(k) for k in range(n)])

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero() or other.is_zero():
            return UniPoly([])
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    def scale(self, c: FieldElement) -> "UniPoly":
        return UniPoly([a * c for a in self.coeffs])

    def evaluate(self, x: FieldElement) -> FieldElement:
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, divisor: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dl = divisor.degree()
        inv_lead = divisor.leading().inverse()
        quot = [ZERO] * max(len(rem) - dl, 0)
        while len(rem) - 1 >= dl and rem:
            k = len(rem) - 1 - dl
            f = rem[-1] * inv_lead
            quot[k] = f
            for i, c in enumerate(divisor.coeffs):
                rem[k + i] = rem[k + i] - f * c
            while rem and rem[-1].is_zero():
                rem.pop()
        return UniPoly(quot), UniPoly(rem)

    def divides(self, other: "UniPoly") -> bool:
        _, rem = other.divmod(self)
        return rem.is_zero()

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            xpart = "" if k == 0 else ("X" if k == 1 else f"X^{k}")
            a, b = c.as_pair()
            if a != 0 and b != 0:
                sign, body = "+", f"({format_field_element(c)})"
            elif b != 0:
                sign = "+" if b > 0 else "-"
                body = format_field_element(FieldElement(0, abs(b)))
            else:
                sign = "+" if a > 0 else "-"
                body = format_field_element(FieldElement(abs(a)))
            if xpart and body == "1":
                body = ""
            text = f"{body}*{xpart}" if body and xpart else (body or xpart)
            if not pieces:
                pieces.append(text if sign == "+" else f"-{text}")
            else:
                pieces.append(f" {sign} {text}")
        return "".join(pieces)

    def __repr__(self):
        return f"UniPoly({self})"


ZERO_POLY = UniPoly([])
ONE_POLY = UniPoly([ONE])
