"""Peirce decomposition relative to a weight-1 idempotent.

Left multiplication by an idempotent e, restricted to the weight kernel,
satisfies 4*L^4 + 5*L^2 - 3*L = 0 on every algebra obeying the degree-6
identity, so its minimal polynomial splits over {0, 1/2, l, lbar} without
repeated roots and the kernel decomposes into exact eigenspaces.  This
module computes those eigenspace bases, the component product rules, the
Peirce projections, and the nilpotency identity suites that hold when some
components vanish.
"""

from __future__ import annotations

from typing import NamedTuple

from baric import linalg
from baric.algebra import (
    Algebra,
    Element,
    WeightFunction,
    alg_mul,
    format_element,
    verify_idempotent,
)
from baric.numberfield import HALF, LAMBDA, LAMBDA_BAR, ONE, ZERO, FieldElement
from baric.sympoly import GenericElement, PolyContext, generic_mul
from baric.unipoly import UniPoly

TAGS = ("0", "1/2", "l", "lbar")
EIGENVALUES = {"0": ZERO, "1/2": HALF, "l": LAMBDA, "lbar": LAMBDA_BAR}

# monic X*(X - 1/2)*(X - l)*(X - lbar); 4x this is the operator identity above
OPERATOR_POLY = UniPoly([ZERO, FieldElement(-3, 0) / FieldElement(4), FieldElement(5, 0) / FieldElement(4), ZERO, ONE])


class InvalidIdempotent(ValueError):
    pass


class DecompositionError(ValueError):
    """The restricted operator does not split over {0, 1/2, l, lbar}; the
    message names the offending factor.  Signals an algebra outside the
    degree-6 class (or inconsistent input)."""


class SuiteHypothesisError(ValueError):
    pass


class LeftMultOperator:
    """Matrix of x -> e*x, plus its restriction to the weight kernel."""

    __slots__ = ("algebra", "weight", "e", "matrix", "kernel_basis", "restricted")

    def __init__(self, algebra, weight, e, matrix, kernel_basis, restricted):
        self.algebra = algebra
        self.weight = weight
        self.e = e
        self.matrix = matrix
        self.kernel_basis = kernel_basis
        self.restricted = restricted


def left_mult(algebra: Algebra, w: WeightFunction, e: Element) -> LeftMultOperator:
    if not verify_idempotent(algebra, w, e):
        raise InvalidIdempotent(
            f"{format_element(algebra, e)} is not a weight-1 idempotent"
        )
    n = algebra.dim
    columns = [alg_mul(algebra, e, algebra.basis_element(j)) for j in range(n)]
    matrix = [[columns[j].coords[i] for j in range(n)] for i in range(n)]
    kernel_rows = linalg.nullspace([list(w.weights)], n)
    kernel_basis = [Element(row) for row in kernel_rows]
    kernel_cols = [list(v.coords) for v in kernel_basis]
    restricted_cols = []
    for v in kernel_basis:
        img = alg_mul(algebra, e, v)
        coords = linalg.solve_in_span(kernel_cols, list(img.coords))
        if coords is None:
            raise DecompositionError("image of the weight kernel left the kernel")
        restricted_cols.append(coords)
    m = len(kernel_basis)
    restricted = [[restricted_cols[j][i] for j in range(m)] for i in range(m)]
    return LeftMultOperator(algebra, w, e, matrix, kernel_basis, restricted)


def minimal_polynomial(op: LeftMultOperator) -> UniPoly:
    """Monic minimal polynomial of the kernel-restricted operator."""
    return UniPoly(linalg.minimal_polynomial_coeffs(op.restricted))


class PeirceDecomposition:
    """e, the four eigencomponent bases, and the associated projections."""

    __slots__ = ("algebra", "weight", "e", "operator", "components", "_projections")

    def __init__(self, algebra, weight, e, operator, components):
        self.algebra = algebra
        self.weight = weight
        self.e = e
        self.operator = operator
        self.components = components
        n = algebra.dim
        basis = [list(e.coords)]
        selectors = {"e": [0]}
        for tag in TAGS:
            selectors[tag] = []
            for v in components[tag]:
                selectors[tag].append(len(basis))
                basis.append(list(v.coords))
        cols = [[basis[j][i] for j in range(n)] for i in range(n)]
        aug = [cols[i] + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        red, pivots = linalg.rref(aug)
        if pivots != list(range(n)):
            raise DecompositionError("component bases do not span the algebra")
        inverse = [row[n:] for row in red]
        projections = {}
        for tag, idxs in selectors.items():
            proj = [[ZERO] * n for _ in range(n)]
            for i in range(n):
                for j in range(n):
                    s = ZERO
                    for k in idxs:
                        s = s + basis[k][i] * inverse[k][j]
                    proj[i][j] = s
            projections[tag] = proj
        self._projections = projections

    def dim(self, tag: str) -> int:
        return len(self.components[tag])

    def empty(self, tag: str) -> bool:
        return not self.components[tag]

    def project(self, x: Element, tag: str) -> Element:
        """Component of x in Ke (tag "e") or A_tag under the direct sum."""
        return Element(linalg.mat_vec(self._projections[tag], list(x.coords)))

    def project_generic(self, x: GenericElement, tag: str) -> GenericElement:
        mat = self._projections[tag]
        n = self.algebra.dim
        coords = []
        for i in range(n):
            acc = x.ctx.zero()
            for j in range(n):
                if not mat[i][j].is_zero():
                    acc = acc + x.coords[j].scale(mat[i][j])
            coords.append(acc)
        return GenericElement(x.ctx, coords)


def peirce_decompose(algebra: Algebra, w: WeightFunction, e: Element) -> PeirceDecomposition:
    """Exact eigenspace bases of the restricted operator for {0, 1/2, l, lbar}.

    Raises DecompositionError (naming the factor) when the minimal
    polynomial has a repeated root or a root outside the eigenvalue set.
    """
    op = left_mult(algebra, w, e)
    minpoly = minimal_polynomial(op)
    rem = minpoly
    for tag in TAGS:
        alpha = EIGENVALUES[tag]
        if rem.degree() >= 1 and rem.evaluate(alpha).is_zero():
            rem, r = rem.divmod(UniPoly.x_minus(alpha))
            assert r.is_zero()
    if rem.degree() >= 1:
        for tag in TAGS:
            if rem.evaluate(EIGENVALUES[tag]).is_zero():
                raise DecompositionError(
                    f"minimal polynomial {minpoly} has repeated factor (X - {EIGENVALUES[tag]})"
                )
        raise DecompositionError(
            f"minimal polynomial {minpoly} has factor {rem} with no roots in {{0, 1/2, l, lbar}}"
        )
    kernel_cols = [list(v.coords) for v in op.kernel_basis]
    m = len(op.kernel_basis)
    components = {}
    for tag in TAGS:
        alpha = EIGENVALUES[tag]
        shifted = [
            [op.restricted[i][j] - (alpha if i == j else ZERO) for j in range(m)]
            for i in range(m)
        ]
        vectors = []
        for coords in linalg.nullspace(shifted, m):
            ambient = [ZERO] * algebra.dim
            for c, basis_vec in zip(coords, op.kernel_basis):
                if not c.is_zero():
                    for i in range(algebra.dim):
                        ambient[i] = ambient[i] + c * basis_vec.coords[i]
            vectors.append(Element(ambient))
        components[tag] = vectors
    total = 1 + sum(len(v) for v in components.values())
    if total != algebra.dim:
        raise DecompositionError(
            f"components span dimension {total}, expected {algebra.dim}"
        )
    return PeirceDecomposition(algebra, w, e, op, components)


class RuleResult(NamedTuple):
    name: str
    left: str
    right: str
    targets: tuple
    passed: bool
    witnesses: tuple  # (u, v, product) formatted triples for failures


PRODUCT_RULES = (
    ("i", "0", "0", ("1/2",)),
    ("ii", "1/2", "1/2", ("0", "l", "lbar")),
    ("iii", "l", "lbar", ()),
    ("iv", "l", "l", ()),
    ("v", "lbar", "lbar", ()),
    ("vi", "0", "1/2", ("1/2", "l", "lbar")),
    ("vii", "l", "1/2", ("1/2", "0", "lbar")),
    ("viii", "lbar", "1/2", ("1/2", "0", "l")),
    ("ix", "0", "l", ("1/2",)),
    ("x", "0", "lbar", ("1/2",)),
)


def check_product_rules(algebra: Algebra, D: PeirceDecomposition) -> list[RuleResult]:
    """The ten component product rules, checked on all basis-vector pairs by
    exact span membership."""
    results = []
    for name, lt, rt, targets in PRODUCT_RULES:
        span = [list(v.coords) for tag in targets for v in D.components[tag]]
        witnesses = []
        left_basis = D.components[lt]
        right_basis = D.components[rt]
        for a, u in enumerate(left_basis):
            for b, v in enumerate(right_basis):
                if lt == rt and b < a:
                    continue
                p = alg_mul(algebra, u, v)
                if linalg.solve_in_span(span, list(p.coords)) is None:
                    witnesses.append(
                        (
                            format_element(algebra, u),
                            format_element(algebra, v),
                            format_element(algebra, p),
                        )
                    )
        results.append(RuleResult(name, lt, rt, targets, not witnesses, tuple(witnesses)))
    return results


class SuiteItem(NamedTuple):
    label: str
    passed: bool
    detail: str


class SuiteReport(NamedTuple):
    suite: str
    required_empty: tuple
    items: tuple

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)


# identity suites, keyed by which components the hypothesis forces to zero
SUITES = {
    "null-half": ("l", "lbar"),
    "half-lbar": ("l", "0"),
    "half-l": ("lbar", "0"),
    "no-null": ("0",),
}


def applicable_suites(D: PeirceDecomposition) -> list[str]:
    return [name for name, empty in SUITES.items() if all(D.empty(t) for t in empty)]


def check_lemma_suite(algebra: Algebra, D: PeirceDecomposition, suite: str) -> SuiteReport:
    """Run one nilpotency identity suite on generic component elements.

    Generic means one fresh variable per basis vector of each component, so
    a pass is an identity over the whole component, not a basis spot-check.
    """
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; options: {sorted(SUITES)}")
    required_empty = SUITES[suite]
    for tag in required_empty:
        if not D.empty(tag):
            raise SuiteHypothesisError(
                f"suite {suite} requires A_{tag} = 0, but dim A_{tag} = {D.dim(tag)}"
            )

    prefixes = {"0": "n", "1/2": "h", "l": "u", "lbar": "v"}
    names = []
    for tag in TAGS:
        if tag in required_empty:
            continue
        names.extend(f"{prefixes[tag]}{i + 1}" for i in range(D.dim(tag)))
    ctx = PolyContext(names)

    def generic_component(tag: str) -> GenericElement:
        coords = [ctx.zero() for _ in range(algebra.dim)]
        for i, vec in enumerate(D.components[tag]):
            v = ctx.var(f"{prefixes[tag]}{i + 1}")
            for k in range(algebra.dim):
                if not vec.coords[k].is_zero():
                    coords[k] = coords[k] + v.scale(vec.coords[k])
        return GenericElement(ctx, coords)

    def m(a, b):
        return generic_mul(algebra, a, b)

    def proj(a, tag):
        return D.project_generic(a, tag)

    items = []

    def add(label, value: GenericElement, detail=""):
        items.append(SuiteItem(label, value.is_zero(), detail))

    if suite == "null-half":
        x0 = generic_component("0")
        xh = generic_component("1/2")
        add("i", m(m(x0, x0), m(x0, x0)))
        add("ii", m(xh, m(xh, xh)))
        add("iii", m(m(xh, xh), m(xh, xh)))
        add("iv", m(xh, m(x0, x0)))
        add("v", m(xh, m(xh, x0)))
        add("vi", m(m(x0, xh), m(x0, xh)))
        add("vii", m(m(xh, xh), m(x0, xh)))
    elif suite in ("half-lbar", "half-l"):
        xh = generic_component("1/2")
        xc = generic_component("lbar" if suite == "half-lbar" else "l")
        add("i", m(xh, m(xh, xh)))
        add("ii", m(xc, m(xh, xc)))
        add("iii", m(xh, m(xh, xc)))
        add("iv", m(m(xh, xh), xc))
        add("v", m(m(xh, xh), m(xh, xh)))
        add("vi", m(m(xc, xh), m(xc, xh)))
        add("vii", m(m(xh, xh), m(xc, xh)))
    else:  # no-null
        xh = generic_component("1/2")
        xl = generic_component("l")
        xb = generic_component("lbar")
        inclusions = (
            ("A_1/2*A_1/2 in A_l+A_lbar", "1/2", "1/2", ("l", "lbar")),
            ("A_1/2*A_l in A_1/2+A_lbar", "1/2", "l", ("1/2", "lbar")),
            ("A_1/2*A_lbar in A_1/2+A_l", "1/2", "lbar", ("1/2", "l")),
            ("A_l*A_l = 0", "l", "l", ()),
            ("A_lbar*A_lbar = 0", "lbar", "lbar", ()),
            ("A_l*A_lbar = 0", "l", "lbar", ()),
        )
        for label, lt, rt, targets in inclusions:
            span = [list(v.coords) for tag in targets for v in D.components[tag]]
            ok = True
            for a, u in enumerate(D.components[lt]):
                for b, v in enumerate(D.components[rt]):
                    if lt == rt and b < a:
                        continue
                    p = alg_mul(algebra, u, v)
                    if linalg.solve_in_span(span, list(p.coords)) is None:
                        ok = False
            items.append(SuiteItem(label, ok, ""))
        lam = LAMBDA
        lbar = LAMBDA_BAR
        sq_h = m(xh, xh)
        add(
            "i",
            proj(
                m(xh, proj(sq_h, "l")).scale(lam + ONE)
                + m(xh, proj(sq_h, "lbar")).scale(lbar + ONE),
                "1/2",
            ),
            "outermost projection applied to the whole bracket",
        )
        hl = m(xh, xl)
        add(
            "ii",
            proj(m(xh, proj(hl, "lbar")), "l").scale(FieldElement(2) * lam + FieldElement(3))
            + proj(m(xh, proj(hl, "1/2")), "l").scale(lam + FieldElement(6)),
            "outermost projection applied to each product",
        )
        add("iii", m(xl, m(xl, xh)))
        add("iv", m(xb, m(xb, xh)))
        add("v", proj(m(xl, m(xb, xh)), "lbar"))
        add("vi", proj(m(xb, m(xl, xh)), "l"))
        add(
            "vii",
            m(xl, m(xb, xh)).scale(FieldElement(2) * lam - ONE)
            + m(xb, m(xl, xh)).scale(FieldElement(2) * lbar - ONE),
        )
    return SuiteReport(suite, required_empty, tuple(items))
