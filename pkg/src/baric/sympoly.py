"""Sparse multivariate polynomials over Q(l) and generic algebra elements.

Identity checking works by expanding products of generic elements (one fresh
variable per coordinate) and comparing coefficients exactly.  Over an
infinite field this coefficient comparison is equivalent to checking the
identity on every element, so no density or specialization arguments are
needed at runtime.

Exponent vectors are tuples aligned to a PolyContext, which fixes the
variable set of one computation up front.
"""

from __future__ import annotations

from baric import _kernel as K
from baric.numberfield import ZERO, FieldElement, format_field_element


class ArityError(ValueError):
    pass


class PolyContext:
    """Ordered, immutable set of variable names shared by related polynomials."""

    __slots__ = ("names", "index")

    def __init__(self, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "index", {n: i for i, n in enumerate(names)})

    def __setattr__(self, name, value):
        raise AttributeError("PolyContext is immutable")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def var(self, name: str) -> "MultiPoly":
        i = self.index.get(name)
        if i is None:
            raise KeyError(f"unknown variable {name!r}")
        e = [0] * self.nvars
        e[i] = 1
        return MultiPoly(self, {tuple(e): K.ONE_T})

    def const(self, c: FieldElement) -> "MultiPoly":
        if c.is_zero():
            return MultiPoly(self, {})
        return MultiPoly(self, {(0,) * self.nvars: c.triple()})

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def one(self) -> "MultiPoly":
        return MultiPoly(self, {(0,) * self.nvars: K.ONE_T})

    def __repr__(self):
        return f"PolyContext({list(self.names)})"


class MultiPoly:
    """Polynomial as a dict from exponent tuple to reduced coefficient triple."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: PolyContext, terms: dict):
        self.ctx = ctx
        self.terms = terms

    def _check(self, other: "MultiPoly"):
        if self.ctx is not other.ctx and self.ctx.names != other.ctx.names:
            raise ArityError("polynomials from different variable contexts")

    def __add__(self, other):
        if isinstance(other, FieldElement):
            other = self.ctx.const(other)
        self._check(other)
        return MultiPoly(self.ctx, K.poly_add(self.terms, other.terms))

    def __sub__(self, other):
        if isinstance(other, FieldElement):
            other = self.ctx.const(other)
        self._check(other)
        return MultiPoly(self.ctx, K.poly_sub(self.terms, other.terms))

    def __neg__(self):
        return self.scale(FieldElement(-1))

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            return self.scale(other)
        self._check(other)
        return MultiPoly(self.ctx, K.poly_mul(self.terms, other.terms))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = self.ctx.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c: FieldElement) -> "MultiPoly":
        return MultiPoly(self.ctx, K.poly_scale(self.terms, c.triple()))

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant(self) -> FieldElement:
        c = self.terms.get((0,) * self.ctx.nvars)
        return FieldElement.from_triple(c) if c else ZERO

    def coefficient(self, exps) -> FieldElement:
        c = self.terms.get(tuple(exps))
        return FieldElement.from_triple(c) if c else ZERO

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, name: str) -> int:
        i = self.ctx.index[name]
        return max((e[i] for e in self.terms), default=0)

    def variables_used(self):
        used = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used.add(self.ctx.names[i])
        return used

    def coeff_of(self, name: str, k: int) -> "MultiPoly":
        """Coefficient of name^k, as a polynomial with that variable removed
        from the exponents (still in the same context)."""
        i = self.ctx.index[name]
        out = {}
        for e, c in self.terms.items():
            if e[i] == k:
                e2 = e[:i] + (0,) + e[i + 1:]
                out[e2] = K.fe_add(out[e2], c) if e2 in out else c
        return MultiPoly(self.ctx, {e: c for e, c in out.items() if c[0] or c[1]})

    def substitute(self, name: str, replacement: "MultiPoly") -> "MultiPoly":
        self._check(replacement)
        i = self.ctx.index[name]
        powers = {0: self.ctx.one()}

        def rpow(k):
            if k not in powers:
                powers[k] = rpow(k - 1) * replacement
            return powers[k]

        out = self.ctx.zero()
        for e, c in self.terms.items():
            k = e[i]
            rest = MultiPoly(self.ctx, {e[:i] + (0,) + e[i + 1:]: c})
            out = out + (rest * rpow(k) if k else rest)
        return out

    def evaluate(self, point) -> FieldElement:
        point = list(point)
        if len(point) != self.ctx.nvars:
            raise ArityError(f"expected {self.ctx.nvars} values, got {len(point)}")
        powcache = [{0: FieldElement(1)} for _ in point]

        def vpow(i, k):
            cache = powcache[i]
            if k not in cache:
                cache[k] = vpow(i, k - 1) * point[i]
            return cache[k]

        total = ZERO
        for e, c in self.terms.items():
            v = FieldElement.from_triple(c)
            for i, k in enumerate(e):
                if k:
                    v = v * vpow(i, k)
            total = total + v
        return total

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]))

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ctx.names == other.ctx.names and self.terms == other.terms

    def __hash__(self):
        return hash((self.ctx.names, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            fe = FieldElement.from_triple(c)
            vars_part = "*".join(
                f"{n}^{k}" if k > 1 else n
                for n, k in zip(self.ctx.names, e) if k
            )
            pieces.append(_join_coeff(fe, vars_part, first=not pieces))
        return "".join(pieces)

    def __repr__(self):
        return f"MultiPoly({self})"


def _join_coeff(fe: FieldElement, tail: str, first: bool) -> str:
    """Render one monomial with a deterministic sign/parenthesis policy."""
    a, b = fe.as_pair()
    if a != 0 and b != 0:
        body = f"({format_field_element(fe)})"
        sign = "+"
    elif b != 0:
        sign = "+" if b > 0 else "-"
        body = "l" if abs(b) == 1 else f"{format_field_element(FieldElement(0, abs(b)))}"
    else:
        sign = "+" if a > 0 else "-"
        body = format_field_element(FieldElement(abs(a)))
    if tail:
        body = tail if body == "1" else f"{body}*{tail}"
    prefix = "" if first and sign == "+" else ("-" if first else f" {sign} ")
    return prefix + body


class GenericElement:
    """Algebra element whose coordinates are polynomials in formal variables."""

    __slots__ = ("ctx", "coords")

    def __init__(self, ctx: PolyContext, coords):
        self.ctx = ctx
        self.coords = tuple(coords)

    def __add__(self, other: "GenericElement") -> "GenericElement":
        return GenericElement(self.ctx, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "GenericElement") -> "GenericElement":
        return GenericElement(self.ctx, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "GenericElement":
        return GenericElement(self.ctx, [-a for a in self.coords])

    def scale(self, c) -> "GenericElement":
        if isinstance(c, FieldElement):
            return GenericElement(self.ctx, [a.scale(c) for a in self.coords])
        return GenericElement(self.ctx, [a * c for a in self.coords])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __eq__(self, other):
        if not isinstance(other, GenericElement):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def generic_element(algebra, prefix: str, ctx: PolyContext | None = None) -> GenericElement:
    """Element with coordinate i bound to the fresh variable <prefix><i+1>."""
    names = [f"{prefix}{i + 1}" for i in range(algebra.dim)]
    if ctx is None:
        ctx = PolyContext(names)
    return GenericElement(ctx, [ctx.var(n) for n in names])


def generic_elements(algebra, prefixes) -> list[GenericElement]:
    """Several generic elements sharing one context (disjoint variable sets)."""
    names = [f"{p}{i + 1}" for p in prefixes for i in range(algebra.dim)]
    ctx = PolyContext(names)
    return [generic_element(algebra, p, ctx) for p in prefixes]


def generic_mul(algebra, x: GenericElement, y: GenericElement) -> GenericElement:
    """Bilinear product through the structure constants, coordinate by
    coordinate."""
    if len(x.coords) != algebra.dim or len(y.coords) != algebra.dim:
        raise ArityError("element dimension does not match the algebra")
    if x.ctx.names != y.ctx.names:
        raise ArityError("generic elements from different variable contexts")
    ctx = x.ctx
    coords = [ctx.zero() for _ in range(algebra.dim)]
    for i in range(algebra.dim):
        for j in range(i, algebra.dim):
            entries = algebra.products(i, j)
            if not entries:
                continue
            if i == j:
                cross = x.coords[i] * y.coords[i]
            else:
                cross = x.coords[i] * y.coords[j] + x.coords[j] * y.coords[i]
            if cross.is_zero():
                continue
            for k, c in entries:
                coords[k] = coords[k] + cross.scale(c)
    return GenericElement(ctx, coords)


def weight_poly(algebra, w, x: GenericElement) -> MultiPoly:
    """The weight of a generic element, as a linear polynomial."""
    out = x.ctx.zero()
    for wi, ci in zip(w.weights, x.coords):
        if not wi.is_zero():
            out = out + ci.scale(wi)
    return out
