"""Expression grammar, partial linearization and symbolic identity checkers.

The grammar: products by "*" or juxtaposition of parenthesized factors,
"x^k" for principal powers (left-nested), "w(expr)^k" for weight factors,
and rational / l-coefficients.  Sums may appear inside parentheses and are
distributed, so bracketed identities parse directly.

Checking an identity on an algebra means evaluating its defect on generic
elements and asking for the zero polynomial vector, which over Q(l) is
equivalent to the identity holding for every element.
"""

from __future__ import annotations

import re
from collections import Counter
from fractions import Fraction

from baric.algebra import Algebra, Element, WeightFunction, alg_mul
from baric.numberfield import LAMBDA, ONE, ZERO, FieldElement
from baric.sympoly import (
    GenericElement,
    MultiPoly,
    generic_element,
    generic_elements,
    generic_mul,
    weight_poly,
)
from baric.terms import (
    IdentityExpr,
    MagmaTerm,
    expand_in_t,
    format_expr,
    mul,
    principal_power_term,
    var,
)


class ExprParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class UnboundVariable(ValueError):
    pass


_EXPR_TOKEN = re.compile(r"\s*(?:(\d+)|([+\-*/^()])|([A-Za-z_][A-Za-z0-9_]*))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _EXPR_TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise ExprParseError(f"unexpected character {text[pos:].lstrip()[0]!r}", pos)
        kind = m.lastindex
        tokens.append((("num", "op", "ident")[kind - 1], m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.next()
        if val != value:
            raise ExprParseError(f"expected {value!r}", pos)

    def parse(self) -> IdentityExpr:
        expr = self.parse_sum()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ExprParseError(f"unexpected {val!r}", pos)
        return expr

    def parse_sum(self) -> IdentityExpr:
        total = IdentityExpr.zero()
        first = True
        while True:
            kind, val, pos = self.peek()
            sign = 1
            if kind == "op" and val in "+-":
                self.next()
                if val == "-":
                    sign = -1
            elif not first:
                break
            term = self.parse_product()
            total = total + (term if sign == 1 else -term)
            first = False
            kind, val, _ = self.peek()
            if not (kind == "op" and val in "+-"):
                break
        return total

    def parse_product(self) -> IdentityExpr:
        out = self.parse_factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.next()
                out = out * self.parse_factor()
            elif (kind == "op" and val == "(") or (kind == "ident" and val == "w"):
                # juxtaposition of parenthesized / weight factors
                out = out * self.parse_factor()
            else:
                return out

    def parse_factor(self) -> IdentityExpr:
        base = self.parse_primary()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.next()
            k2, v2, p2 = self.next()
            if k2 != "num":
                raise ExprParseError("expected an integer exponent", p2)
            exp = int(v2)
            if exp < 1:
                raise ExprParseError("exponent must be >= 1", p2)
            base = base ** exp
        return base

    def parse_primary(self) -> IdentityExpr:
        kind, val, pos = self.next()
        if kind == "num":
            num = int(val)
            k2, v2, _ = self.peek()
            if k2 == "op" and v2 == "/":
                self.next()
                k3, v3, p3 = self.next()
                if k3 != "num" or int(v3) == 0:
                    raise ExprParseError("expected a nonzero integer denominator", p3)
                return IdentityExpr.scalar(FieldElement(Fraction(num, int(v3))))
            return IdentityExpr.scalar(FieldElement(num))
        if kind == "op" and val == "(":
            inner = self.parse_sum()
            self.expect(")")
            return inner
        if kind == "ident":
            if val == "l":
                return IdentityExpr.scalar(LAMBDA)
            if val == "w":
                self.expect("(")
                inner = self.parse_sum()
                self.expect(")")
                try:
                    return inner.apply_weight()
                except ValueError as exc:
                    raise ExprParseError(str(exc), pos) from None
            return IdentityExpr.from_term(var(val))
        raise ExprParseError(f"unexpected {val!r}" if val else "unexpected end of input", pos)


def expr_parse(text: str) -> IdentityExpr:
    return _Parser(text).parse()


def expr_format(expr: IdentityExpr) -> str:
    return format_expr(expr)


# --- partial linearization -------------------------------------------------

def linearize(expr: IdentityExpr, name: str, new_name: str, order: int) -> IdentityExpr:
    """Coefficient of t^order in expr[name := name + t*new_name].

    Expansion uses bilinearity of the product and linearity of the weight;
    the raw t-coefficient is returned, with no 1/k! normalization.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    memo: dict = {}
    result = IdentityExpr.zero()
    for (term, wkey), coeff in expr.monomials.items():
        # polynomial in t with IdentityExpr coefficients, truncated at `order`
        parts = [IdentityExpr.scalar(coeff)]
        for wt, k in wkey:
            expansion = expand_in_t(wt, name, new_name, memo)
            wpoly = []
            for d in range(max(expansion) + 1):
                bucket = IdentityExpr.zero()
                for t2, m in expansion.get(d, {}).items():
                    bucket = bucket + IdentityExpr.weight_factor(t2).scale(FieldElement(m))
                wpoly.append(bucket)
            for _ in range(k):
                parts = _tpoly_mul(parts, wpoly, order)
        if term is not None:
            expansion = expand_in_t(term, name, new_name, memo)
            tpoly = []
            for d in range(max(expansion) + 1):
                bucket = IdentityExpr.zero()
                for t2, m in expansion.get(d, {}).items():
                    bucket = bucket + IdentityExpr.from_term(t2, FieldElement(m))
                tpoly.append(bucket)
            parts = _tpoly_mul(parts, tpoly, order)
        if len(parts) > order:
            result = result + parts[order]
    return result


def _tpoly_mul(p, q, order):
    out = [IdentityExpr.zero()] * min(order + 1, len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a.is_zero() or i > order:
            continue
        for j, b in enumerate(q):
            if i + j > order:
                break
            if b.is_zero():
                continue
            out[i + j] = out[i + j] + a * b
    return out


def mixed_linearize(expr: IdentityExpr, name: str, first: str, second: str) -> IdentityExpr:
    """Order-2 linearization with two distinct fresh variables: the t*s
    coefficient of expr[name := name + t*first + s*second]."""
    return linearize(linearize(expr, name, first, 1), name, second, 1)


# --- evaluation ------------------------------------------------------------

def eval_expr(algebra: Algebra, w: WeightFunction | None, expr: IdentityExpr, bindings: dict):
    """Evaluate an IdentityExpr under variable bindings.

    Bindings map variable names to Element or GenericElement (mixes are
    promoted).  Weight factors need `w`; passing None fails only if the
    expression mentions them.
    """
    for name in expr.variables():
        if name not in bindings:
            raise UnboundVariable(f"variable {name!r} is not bound")

    generic_ctx = None
    for v in bindings.values():
        if isinstance(v, GenericElement):
            generic_ctx = v.ctx
            break
    values = {}
    for name, v in bindings.items():
        if generic_ctx is not None and isinstance(v, Element):
            values[name] = GenericElement(generic_ctx, [generic_ctx.const(c) for c in v.coords])
        else:
            values[name] = v

    memo: dict = {}

    def ev(term: MagmaTerm):
        got = memo.get(term)
        if got is not None:
            return got
        if term.is_leaf():
            out = values[term.name]
        elif generic_ctx is not None:
            out = generic_mul(algebra, ev(term.left), ev(term.right))
        else:
            out = alg_mul(algebra, ev(term.left), ev(term.right))
        memo[term] = out
        return out

    def wt_of(value):
        if w is None:
            raise ValueError("expression has weight factors but no weight function given")
        if isinstance(value, GenericElement):
            return weight_poly(algebra, w, value)
        return w.of(value)

    if generic_ctx is not None:
        total = GenericElement(generic_ctx, [generic_ctx.zero()] * algebra.dim)
    else:
        total = algebra.zero_element()
    for (term, wkey), coeff in expr.monomials.items():
        if term is None:
            raise ValueError("scalar-only monomial cannot be evaluated as an element")
        scalar = coeff
        wparts = []
        for wt, k in wkey:
            val = wt_of(ev(wt))
            for _ in range(k):
                wparts.append(val)
        piece = ev(term)
        if generic_ctx is not None:
            weight_acc = generic_ctx.const(scalar)
            for p in wparts:
                weight_acc = weight_acc * (p if isinstance(p, MultiPoly) else generic_ctx.const(p))
            piece = piece.scale(weight_acc)
        else:
            for p in wparts:
                scalar = scalar * p
            piece = piece.scale(scalar)
        total = total + piece
    return total


# --- standard defects and checkers -----------------------------------------

DEG6_DEFECT = expr_parse("2*(x^2)*(x^4) - w(x)^2*(x^4) - w(x)^4*(x^2)")
BERNSTEIN_DEFECT = expr_parse("(x^2)^2 - w(x)^2*(x^2)")
JORDAN_DEFECT = expr_parse("(x^2)*(y*x) - ((x^2)*y)*x")


def pa_defect(i: int, j: int) -> IdentityExpr:
    """x^i * x^j - x^(i+j), the power-associativity defect for one pair."""
    x = var("x")
    lhs = mul(principal_power_term(x, i), principal_power_term(x, j))
    return IdentityExpr.from_term(lhs) - IdentityExpr.from_term(principal_power_term(x, i + j))


def check_deg6(algebra: Algebra, w: WeightFunction) -> bool:
    """Does 2*x^2*x^4 = w(x)^2*x^4 + w(x)^4*x^2 hold identically?"""
    x = generic_element(algebra, "x")
    return eval_expr(algebra, w, DEG6_DEFECT, {"x": x}).is_zero()


def check_bernstein(algebra: Algebra, w: WeightFunction) -> bool:
    """Does (x^2)^2 = w(x)^2*x^2 hold identically?"""
    x = generic_element(algebra, "x")
    return eval_expr(algebra, w, BERNSTEIN_DEFECT, {"x": x}).is_zero()


def check_jordan(algebra: Algebra) -> bool:
    """Does x^2(yx) = (x^2 y)x hold identically (no weight involved)?"""
    x, y = generic_elements(algebra, ["x", "y"])
    return eval_expr(algebra, None, JORDAN_DEFECT, {"x": x, "y": y}).is_zero()


def check_power_associative(algebra: Algebra, d: int = 6) -> bool:
    """Check x^i x^j = x^(i+j) for all i, j >= 2 with i + j <= d.

    Pairs with i = 1 hold by the definition of principal powers, so degree
    d covers every power identity up to total degree d.
    """
    if d < 4:
        raise ValueError("degree bound must be >= 4")
    x = generic_element(algebra, "x")
    powers = [None, x]
    for k in range(2, d + 1):
        powers.append(generic_mul(algebra, x, powers[-1]))
    for i in range(2, d - 1):
        for j in range(i, d - i + 1):
            lhs = generic_mul(algebra, powers[i], powers[j])
            if not (lhs - powers[i + j]).is_zero():
                return False
    return True
