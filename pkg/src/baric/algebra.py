"""Finite-dimensional commutative algebras given by structure constants.

The product table is stored for index pairs i <= j only and read
symmetrically, so commutativity holds by construction.  Elements are plain
coordinate vectors; every operation is pure.
"""

from __future__ import annotations

from baric.numberfield import ONE, ZERO, FieldElement


class DimensionMismatch(ValueError):
    pass


class Algebra:
    """dim, basis names and the table gamma[i][j][k] with e_i e_j = sum_k gamma*e_k."""

    __slots__ = ("dim", "basis_names", "_table")

    def __init__(self, dim: int, basis_names, table):
        if dim < 1:
            raise ValueError("dimension must be positive")
        basis_names = tuple(basis_names)
        if len(basis_names) != dim:
            raise ValueError("basis name count does not match dimension")
        if len(set(basis_names)) != dim:
            raise ValueError("duplicate basis names")
        norm = {}
        for (i, j), entries in table.items():
            if not (0 <= i <= j < dim):
                raise ValueError(f"bad product pair ({i}, {j}); need 0 <= i <= j < dim")
            acc: dict[int, FieldElement] = {}
            for k, c in entries:
                if not 0 <= k < dim:
                    raise ValueError(f"bad product target index {k}")
                acc[k] = acc.get(k, ZERO) + c
            cleaned = tuple((k, c) for k, c in sorted(acc.items()) if not c.is_zero())
            if cleaned:
                norm[(i, j)] = cleaned
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "basis_names", basis_names)
        object.__setattr__(self, "_table", norm)

    def __setattr__(self, name, value):
        raise AttributeError("Algebra is immutable")

    def products(self, i: int, j: int):
        """Nonzero coordinates of e_i * e_j, symmetric in (i, j)."""
        if i > j:
            i, j = j, i
        return self._table.get((i, j), ())

    def table_items(self):
        return sorted(self._table.items())

    def basis_element(self, i: int) -> "Element":
        return Element([ONE if k == i else ZERO for k in range(self.dim)])

    def zero_element(self) -> "Element":
        return Element([ZERO] * self.dim)

    def conjugate(self) -> "Algebra":
        """Same basis with every structure constant conjugated (l -> lbar)."""
        table = {
            key: [(k, c.conj()) for k, c in entries]
            for key, entries in self._table.items()
        }
        return Algebra(self.dim, self.basis_names, table)

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return (self.dim, self.basis_names, self._table) == (other.dim, other.basis_names, other._table)

    def __repr__(self):
        return f"Algebra(dim={self.dim}, basis={list(self.basis_names)})"


class Element:
    """Coordinate vector in the basis of some algebra."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        object.__setattr__(self, "coords", tuple(coords))

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    def __add__(self, other: "Element") -> "Element":
        return Element([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "Element") -> "Element":
        return Element([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "Element":
        return Element([-a for a in self.coords])

    def scale(self, c: FieldElement) -> "Element":
        return Element([a * c for a in self.coords])

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.coords)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"Element({[str(c) for c in self.coords]})"


class WeightFunction:
    """Linear functional given by its values on the basis."""

    __slots__ = ("weights",)

    def __init__(self, weights):
        object.__setattr__(self, "weights", tuple(weights))

    def __setattr__(self, name, value):
        raise AttributeError("WeightFunction is immutable")

    def of(self, x: Element) -> FieldElement:
        s = ZERO
        for wi, xi in zip(self.weights, x.coords):
            if not wi.is_zero() and not xi.is_zero():
                s = s + wi * xi
        return s

    def is_zero(self) -> bool:
        return all(w.is_zero() for w in self.weights)

    def conjugate(self) -> "WeightFunction":
        return WeightFunction([w.conj() for w in self.weights])

    def __eq__(self, other):
        if not isinstance(other, WeightFunction):
            return NotImplemented
        return self.weights == other.weights

    def __hash__(self):
        return hash(self.weights)

    def __repr__(self):
        return f"WeightFunction({[str(w) for w in self.weights]})"


def alg_mul(algebra: Algebra, x: Element, y: Element) -> Element:
    if len(x.coords) != algebra.dim or len(y.coords) != algebra.dim:
        raise DimensionMismatch("element dimension does not match the algebra")
    coords = [ZERO] * algebra.dim
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
                coords[k] = coords[k] + cross * c
    return Element(coords)


def principal_power(algebra: Algebra, x: Element, k: int) -> Element:
    """x, x^2 = x*x, x^(k+1) = x * x^k."""
    if k < 1:
        raise ValueError("principal power needs k >= 1")
    acc = x
    for _ in range(k - 1):
        acc = alg_mul(algebra, x, acc)
    return acc


def plenary_power(algebra: Algebra, x: Element, k: int) -> Element:
    """x^[1] = x, x^[k+1] = x^[k] * x^[k] (iterated squaring)."""
    if k < 1:
        raise ValueError("plenary power needs k >= 1")
    acc = x
    for _ in range(k - 1):
        acc = alg_mul(algebra, acc, acc)
    return acc


def verify_weight(algebra: Algebra, w: WeightFunction):
    """Check multiplicativity w(e_i e_j) = w(e_i) w(e_j) on all basis pairs.

    Returns (ok, violations) where violations lists offending basis-name
    pairs; the zero functional is rejected outright.
    """
    if len(w.weights) != algebra.dim:
        raise DimensionMismatch("weight length does not match the algebra")
    violations = []
    for i in range(algebra.dim):
        for j in range(i, algebra.dim):
            lhs = ZERO
            for k, c in algebra.products(i, j):
                lhs = lhs + c * w.weights[k]
            if lhs != w.weights[i] * w.weights[j]:
                violations.append((algebra.basis_names[i], algebra.basis_names[j]))
    ok = not violations and not w.is_zero()
    return ok, violations


def verify_idempotent(algebra: Algebra, w: WeightFunction, e: Element) -> bool:
    """e*e = e, e nonzero, and weight exactly 1."""
    if e.is_zero():
        return False
    if w.of(e) != ONE:
        return False
    return alg_mul(algebra, e, e) == e


def format_element(algebra: Algebra, x: Element) -> str:
    """Deterministic display such as "e1 + (1/4 + 1/4*l)*e3"."""
    from baric.numberfield import format_field_element

    parts = []
    for name, c in zip(algebra.basis_names, x.coords):
        if c.is_zero():
            continue
        text = format_field_element(c)
        if text == "1":
            piece = name
        elif text == "-1":
            piece = f"-{name}"
        else:
            if " " in text:
                text = f"({text})"
            piece = f"{text}*{name}"
        parts.append(piece)
    if not parts:
        return "0"
    out = parts[0]
    for piece in parts[1:]:
        if piece.startswith("-"):
            out += f" - {piece[1:]}"
        else:
            out += f" + {piece}"
    return out
