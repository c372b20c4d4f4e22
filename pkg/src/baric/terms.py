"""Free commutative nonassociative terms and weighted identity expressions.

A MagmaTerm is a binary product tree over named variables with unordered
children; the constructor sorts each pair by a fixed total order (degree
first, then structure), so commutatively-equal terms are structurally equal.

An IdentityExpr is a finite sum of monomials  coeff * prod_j w(t_j)^k_j * t
where the t_j and t are MagmaTerms and w(.) marks weight factors.  Weight
factors stay opaque symbols (w(x^3*y) is not rewritten) until either an
algebra evaluates them or expand_weights() applies multiplicativity
w(u*v) = w(u)*w(v) explicitly.
"""

from __future__ import annotations

from collections import Counter

from baric.numberfield import ONE, ZERO, FieldElement, format_field_element


class MagmaTerm:
    __slots__ = ("name", "left", "right", "degree", "key")

    def __init__(self, name=None, left=None, right=None):
        if name is not None:
            object.__setattr__(self, "name", name)
            object.__setattr__(self, "left", None)
            object.__setattr__(self, "right", None)
            object.__setattr__(self, "degree", 1)
            object.__setattr__(self, "key", (1, name))
        else:
            if left.key > right.key:
                left, right = right, left
            object.__setattr__(self, "name", None)
            object.__setattr__(self, "left", left)
            object.__setattr__(self, "right", right)
            object.__setattr__(self, "degree", left.degree + right.degree)
            object.__setattr__(self, "key", (self.degree, left.key, right.key))

    def __setattr__(self, name, value):
        raise AttributeError("MagmaTerm is immutable")

    def is_leaf(self) -> bool:
        return self.name is not None

    def __eq__(self, other):
        if not isinstance(other, MagmaTerm):
            return NotImplemented
        return self.key == other.key

    def __lt__(self, other: "MagmaTerm"):
        return self.key < other.key

    def __hash__(self):
        return hash(self.key)

    def variables(self) -> Counter:
        if self.is_leaf():
            return Counter({self.name: 1})
        out = self.left.variables()
        out.update(self.right.variables())
        return out

    def power_of_leaf(self):
        """(name, k) when the term is the principal power x^k of a leaf."""
        if self.is_leaf():
            return self.name, 1
        if self.left.is_leaf():
            sub = self.right.power_of_leaf()
            if sub is not None and sub[0] == self.left.name:
                return self.left.name, sub[1] + 1
        return None

    def format(self, outer_parens: bool = True) -> str:
        if self.is_leaf():
            return self.name
        p = self.power_of_leaf()
        if p is not None:
            return f"{p[0]}^{p[1]}"
        inner = f"{self.left.format()}*{self.right.format()}"
        return f"({inner})" if outer_parens else inner

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"MagmaTerm({self})"


def var(name: str) -> MagmaTerm:
    return MagmaTerm(name=name)

def mul(s: MagmaTerm, t: MagmaTerm) -> MagmaTerm:
    return MagmaTerm(left=s, right=t)

def principal_power_term(t: MagmaTerm, k: int) -> MagmaTerm:
    """t^k with the left-nested convention t^(k+1) = t * t^k."""
    if k < 1:
        raise ValueError("power must be >= 1")
    out = t
    for _ in range(k - 1):
        out = mul(t, out)
    return out


# a monomial key is (term | None, wkey) with wkey a sorted tuple of
# (MagmaTerm, exponent) pairs
def _wkey(wfactors) -> tuple:
    items = [(t, k) for t, k in wfactors.items() if k]
    items.sort(key=lambda item: (item[0].key, item[1]))
    return tuple(items)


def _merge_wkeys(w1, w2) -> tuple:
    c = Counter(dict(w1))
    for t, k in w2:
        c[t] += k
    return _wkey(c)


def _mono_degree(term, wkey) -> int:
    d = term.degree if term is not None else 0
    return d + sum(t.degree * k for t, k in wkey)


def _mono_sort_key(mono):
    term, wkey = mono
    tkey = term.key if term is not None else (0,)
    return (_mono_degree(term, wkey), tkey, tuple((t.key, k) for t, k in wkey))


class IdentityExpr:
    """Canonical sum of weighted magma monomials with Q(l) coefficients."""

    __slots__ = ("monomials",)

    def __init__(self, monomials=None):
        object.__setattr__(self, "monomials", dict(monomials or {}))

    def __setattr__(self, name, value):
        raise AttributeError("IdentityExpr is immutable")

    @classmethod
    def zero(cls) -> "IdentityExpr":
        return cls()

    @classmethod
    def scalar(cls, c: FieldElement) -> "IdentityExpr":
        if c.is_zero():
            return cls()
        return cls({(None, ()): c})

    @classmethod
    def from_term(cls, term: MagmaTerm, coeff: FieldElement = ONE) -> "IdentityExpr":
        if coeff.is_zero():
            return cls()
        return cls({(term, ()): coeff})

    @classmethod
    def weight_factor(cls, term: MagmaTerm) -> "IdentityExpr":
        return cls({(None, ((term, 1),)): ONE})

    def is_zero(self) -> bool:
        return not self.monomials

    def __add__(self, other: "IdentityExpr") -> "IdentityExpr":
        out = dict(self.monomials)
        for key, c in other.monomials.items():
            s = out.get(key, ZERO) + c
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return IdentityExpr(out)

    def __neg__(self) -> "IdentityExpr":
        return IdentityExpr({k: -c for k, c in self.monomials.items()})

    def __sub__(self, other: "IdentityExpr") -> "IdentityExpr":
        return self + (-other)

    def scale(self, c: FieldElement) -> "IdentityExpr":
        if c.is_zero():
            return IdentityExpr()
        return IdentityExpr({k: v * c for k, v in self.monomials.items()})

    def __mul__(self, other: "IdentityExpr") -> "IdentityExpr":
        out: dict = {}
        for (t1, w1), c1 in self.monomials.items():
            for (t2, w2), c2 in other.monomials.items():
                if t1 is None:
                    t = t2
                elif t2 is None:
                    t = t1
                else:
                    t = mul(t1, t2)
                key = (t, _merge_wkeys(w1, w2))
                s = out.get(key, ZERO) + c1 * c2
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return IdentityExpr(out)

    def __pow__(self, k: int) -> "IdentityExpr":
        # left-nested repeated product, matching principal powers on terms
        if k < 1:
            raise ValueError("power must be >= 1")
        out = self
        for _ in range(k - 1):
            out = self * out
        return out

    def apply_weight(self) -> "IdentityExpr":
        """w(.) of this expression: each monomial's term moves into the
        weight factors (w is linear and scalars pass through)."""
        out = IdentityExpr()
        for (t, wk), c in self.monomials.items():
            if t is None:
                raise ValueError("weight of a scalar-only monomial is not defined")
            out = out + IdentityExpr({(None, _merge_wkeys(wk, ((t, 1),))): c})
        return out

    def homogeneous_degree(self):
        """Common total degree of all monomials, or None if mixed/zero."""
        degs = {_mono_degree(t, w) for (t, w) in self.monomials}
        return degs.pop() if len(degs) == 1 else None

    def expand_weights(self) -> "IdentityExpr":
        """Apply w(u*v) = w(u)*w(v): every weight factor becomes a product of
        leaf weight factors."""
        out: dict = {}
        for (t, wk), c in self.monomials.items():
            flat = Counter()
            for wt, k in wk:
                for name, m in wt.variables().items():
                    flat[var(name)] += m * k
            key = (t, _wkey(flat))
            s = out.get(key, ZERO) + c
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return IdentityExpr(out)

    def rename_variables(self, mapping: dict) -> "IdentityExpr":
        def rename_term(t: MagmaTerm) -> MagmaTerm:
            if t.is_leaf():
                return var(mapping.get(t.name, t.name))
            return mul(rename_term(t.left), rename_term(t.right))

        out = IdentityExpr()
        for (t, wk), c in self.monomials.items():
            t2 = rename_term(t) if t is not None else None
            flat = Counter()
            for wt, k in wk:
                flat[rename_term(wt)] += k
            out = out + IdentityExpr({(t2, _wkey(flat)): c})
        return out

    def proportionality_factor(self, other: "IdentityExpr"):
        """f with self = f * other (None when not proportional; both nonzero)."""
        if self.is_zero() or other.is_zero():
            return None
        if set(self.monomials) != set(other.monomials):
            return None
        factor = None
        for key, c in self.monomials.items():
            ratio = c / other.monomials[key]
            if factor is None:
                factor = ratio
            elif factor != ratio:
                return None
        return factor

    def sorted_monomials(self):
        return sorted(self.monomials.items(), key=lambda kv: _mono_sort_key(kv[0]))

    def variables(self) -> set:
        out = set()
        for (t, wk) in self.monomials:
            if t is not None:
                out.update(t.variables())
            for wt, _ in wk:
                out.update(wt.variables())
        return out

    def __eq__(self, other):
        if not isinstance(other, IdentityExpr):
            return NotImplemented
        return self.monomials == other.monomials

    def __hash__(self):
        return hash(frozenset(self.monomials.items()))

    def __str__(self):
        return format_expr(self)

    def __repr__(self):
        return f"IdentityExpr({self})"


def format_expr(expr: IdentityExpr) -> str:
    """Canonical text form, re-parseable by the expression grammar."""
    if expr.is_zero():
        return "0"
    pieces = []
    for (term, wkey), coeff in expr.sorted_monomials():
        tail_parts = []
        for wt, k in wkey:
            w = f"w({wt.format(outer_parens=False)})"
            tail_parts.append(w if k == 1 else f"{w}^{k}")
        if term is not None:
            tail_parts.append(term.format())
        a, b = coeff.as_pair()
        if a != 0 and b != 0:
            sign = "+"
            body = f"({format_field_element(coeff)})"
        elif b != 0:
            sign = "+" if b > 0 else "-"
            mag = FieldElement(0, abs(b))
            body = format_field_element(mag)
        else:
            sign = "+" if a > 0 else "-"
            body = format_field_element(FieldElement(abs(a)))
        if tail_parts and body == "1":
            body = ""
        parts = ([body] if body else []) + tail_parts
        text = "*".join(parts)
        if not pieces:
            pieces.append(text if sign == "+" else f"-{text}")
        else:
            pieces.append(f" {sign} {text}")
    return "".join(pieces)


def expand_in_t(term: MagmaTerm, name: str, new_name: str, memo=None) -> dict:
    """Expansion of term[name := name + t*new_name] grouped by t-degree.

    Returns {degree: Counter of MagmaTerm multiplicities}; multiplicities
    come from commutative collection of the distributed products.
    """
    if memo is None:
        memo = {}
    cached = memo.get(term)
    if cached is not None:
        return cached
    if term.is_leaf():
        if term.name == name:
            out = {0: Counter({term: 1}), 1: Counter({var(new_name): 1})}
        else:
            out = {0: Counter({term: 1})}
    else:
        le = expand_in_t(term.left, name, new_name, memo)
        ri = expand_in_t(term.right, name, new_name, memo)
        out = {}
        for dl, cl in le.items():
            for dr, cr in ri.items():
                bucket = out.setdefault(dl + dr, Counter())
                for tl, ml in cl.items():
                    for tr, mr in cr.items():
                        bucket[mul(tl, tr)] += ml * mr
        out = {d: c for d, c in out.items() if c}
    memo[term] = out
    return out
