"""The .alg file format: dimension, basis, products, optional weight and
named elements.

    # comment
    dim = 3
    basis = e1 e2 e3
    product e1 e2 = 1/2*e2 + e3     # pairs not listed multiply to zero
    weight e1 = 1                   # optional block; omitted entries are 0
    element idem = e1 + (1/4 + 1/4*l)*e3

Coefficients use the field-element grammar ("l" is the quadratic generator);
composite coefficients are parenthesized.  Loading validates every name and
any declared weight; dumps(loads(text)) is canonical and stable.
"""

from __future__ import annotations

from baric.algebra import Algebra, Element, WeightFunction, format_element, verify_weight
from baric.numberfield import ZERO, FieldParseError, format_field_element, parse_field_element


class AlgebraFileError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class LoadedAlgebra:
    __slots__ = ("algebra", "weight", "elements")

    def __init__(self, algebra: Algebra, weight: WeightFunction | None, elements: dict):
        self.algebra = algebra
        self.weight = weight
        self.elements = dict(elements)

    def __eq__(self, other):
        if not isinstance(other, LoadedAlgebra):
            return NotImplemented
        return (
            self.algebra == other.algebra
            and self.weight == other.weight
            and self.elements == other.elements
        )


def _split_sum(text: str):
    """Split on top-level +/- (parenthesis aware); yields signed chunks."""
    chunks = []
    depth = 0
    current = []
    sign = 1
    seen_content = False
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError("unbalanced ')'")
        if depth == 0 and ch in "+-" and not seen_content:
            if ch == "-":
                sign = -sign
            continue
        if depth == 0 and ch in "+-":
            chunks.append((sign, "".join(current).strip()))
            current = []
            sign = 1 if ch == "+" else -1
            seen_content = False
            continue
        if not ch.isspace():
            seen_content = True
        current.append(ch)
    if depth != 0:
        raise ValueError("unbalanced '('")
    tail = "".join(current).strip()
    if tail:
        chunks.append((sign, tail))
    return chunks


def _strip_outer_parens(text: str) -> str:
    text = text.strip()
    while text.startswith("(") and text.endswith(")"):
        depth = 0
        wraps = True
        for i, ch in enumerate(text):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0 and i != len(text) - 1:
                    wraps = False
                    break
        if not wraps:
            break
        text = text[1:-1].strip()
    return text


def parse_element_expr(text: str, algebra: Algebra) -> Element:
    """Parse "e1 + (1/4 + 1/4*l)*e3" style element sums against a basis."""
    coords = [ZERO] * algebra.dim
    try:
        chunks = _split_sum(text)
    except ValueError as exc:
        raise AlgebraFileError(f"bad element expression: {exc}") from None
    if not chunks:
        raise AlgebraFileError("empty element expression")
    for sign, chunk in chunks:
        depth = 0
        star = -1
        for i, ch in enumerate(chunk):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "*" and depth == 0:
                star = i
        if star == -1:
            coeff_text, name = "1", chunk.strip()
        else:
            coeff_text, name = chunk[:star], chunk[star + 1:].strip()
        if star == -1 and name == "0":
            continue  # explicit zero element
        if name not in algebra.basis_names:
            raise AlgebraFileError(f"unknown basis element {name!r}")
        try:
            c = parse_field_element(_strip_outer_parens(coeff_text))
        except FieldParseError as exc:
            raise AlgebraFileError(f"bad coefficient {coeff_text.strip()!r}: {exc}") from None
        idx = algebra.basis_names.index(name)
        coords[idx] = coords[idx] + (c if sign > 0 else -c)
    return Element(coords)


def loads(text: str) -> LoadedAlgebra:
    dim = None
    basis = None
    products = {}
    weight_entries = {}
    element_lines = []
    saw_weight = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword = line.split("=", 1)[0].split()[0] if line else ""
        if keyword == "dim":
            _, _, value = line.partition("=")
            if dim is not None:
                raise AlgebraFileError("duplicate dim line", lineno)
            try:
                dim = int(value.strip())
            except ValueError:
                raise AlgebraFileError(f"bad dimension {value.strip()!r}", lineno) from None
            if dim < 1:
                raise AlgebraFileError("dimension must be positive", lineno)
        elif keyword == "basis":
            _, _, value = line.partition("=")
            if basis is not None:
                raise AlgebraFileError("duplicate basis line", lineno)
            basis = tuple(value.split())
            if dim is None:
                raise AlgebraFileError("basis line before dim line", lineno)
            if len(basis) != dim:
                raise AlgebraFileError(
                    f"expected {dim} basis names, got {len(basis)}", lineno
                )
            if len(set(basis)) != len(basis):
                raise AlgebraFileError("duplicate basis names", lineno)
        elif keyword == "product":
            if basis is None:
                raise AlgebraFileError("product line before basis line", lineno)
            head, _, value = line.partition("=")
            names = head.split()[1:]
            if len(names) != 2:
                raise AlgebraFileError("product needs exactly two basis names", lineno)
            for nm in names:
                if nm not in basis:
                    raise AlgebraFileError(f"unknown basis element {nm!r}", lineno)
            i, j = sorted(basis.index(nm) for nm in names)
            if (i, j) in products:
                raise AlgebraFileError(
                    f"duplicate product for pair {basis[i]} {basis[j]}", lineno
                )
            products[(i, j)] = (value.strip(), lineno)
        elif keyword == "weight":
            if basis is None:
                raise AlgebraFileError("weight line before basis line", lineno)
            saw_weight = True
            head, _, value = line.partition("=")
            names = head.split()[1:]
            if len(names) != 1 or names[0] not in basis:
                raise AlgebraFileError("weight needs one declared basis name", lineno)
            idx = basis.index(names[0])
            if idx in weight_entries:
                raise AlgebraFileError(f"duplicate weight for {names[0]}", lineno)
            try:
                weight_entries[idx] = parse_field_element(value.strip())
            except FieldParseError as exc:
                raise AlgebraFileError(str(exc), lineno) from None
        elif keyword == "element":
            if basis is None:
                raise AlgebraFileError("element line before basis line", lineno)
            head, _, value = line.partition("=")
            names = head.split()[1:]
            if len(names) != 1:
                raise AlgebraFileError("element needs exactly one label", lineno)
            element_lines.append((names[0], value.strip(), lineno))
        else:
            raise AlgebraFileError(f"unrecognized line {line!r}", lineno)

    if dim is None or basis is None:
        raise AlgebraFileError("file must declare dim and basis")

    table = {}
    algebra_probe = Algebra(dim, basis, {})
    for (i, j), (value, lineno) in products.items():
        try:
            elem = parse_element_expr(value, algebra_probe)
        except AlgebraFileError as exc:
            raise AlgebraFileError(str(exc), lineno) from None
        table[(i, j)] = [(k, c) for k, c in enumerate(elem.coords) if not c.is_zero()]
    algebra = Algebra(dim, basis, table)

    weight = None
    if saw_weight:
        weight = WeightFunction([weight_entries.get(i, ZERO) for i in range(dim)])
        ok, violations = verify_weight(algebra, weight)
        if not ok:
            raise AlgebraFileError(
                "declared weight is not multiplicative (or is zero); "
                f"violating pairs: {violations}"
            )

    elements = {}
    for label, value, lineno in element_lines:
        if label in elements:
            raise AlgebraFileError(f"duplicate element label {label!r}", lineno)
        try:
            elements[label] = parse_element_expr(value, algebra)
        except AlgebraFileError as exc:
            raise AlgebraFileError(str(exc), lineno) from None
    return LoadedAlgebra(algebra, weight, elements)


def load(path) -> LoadedAlgebra:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def dumps(loaded: LoadedAlgebra) -> str:
    algebra = loaded.algebra
    lines = [f"dim = {algebra.dim}", "basis = " + " ".join(algebra.basis_names)]
    for (i, j), entries in algebra.table_items():
        coords = [ZERO] * algebra.dim
        for k, c in entries:
            coords[k] = c
        value = format_element(algebra, Element(coords))
        lines.append(f"product {algebra.basis_names[i]} {algebra.basis_names[j]} = {value}")
    if loaded.weight is not None:
        for name, c in zip(algebra.basis_names, loaded.weight.weights):
            lines.append(f"weight {name} = {format_field_element(c)}")
    for label, elem in loaded.elements.items():
        lines.append(f"element {label} = {format_element(algebra, elem)}")
    return "\n".join(lines) + "\n"
