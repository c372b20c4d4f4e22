"""Solvers for weight functions and idempotents on small algebras.

Both problems are quadratic systems in the coordinates.  They are solved by
branch-and-substitute elimination: repeatedly pull out a variable that occurs
linearly with an invertible constant coefficient, solve univariate quadratics
exactly inside Q(l), and branch on product-shaped equations.  That covers
every system a dimension <= 3 algebra can produce here; anything the moves
cannot triangularize raises SolverStuck rather than guessing.

Solution sets are returned as families: concrete points, or coordinate
polynomials in one (or more) free parameters.
"""

from __future__ import annotations

from baric.algebra import Algebra, Element, WeightFunction, verify_weight
from baric.numberfield import ONE, ZERO, FieldElement, field_sqrts
from baric.sympoly import GenericElement, MultiPoly, PolyContext, generic_mul

SOLVER_DIM_LIMIT = 3


class UnsupportedDimension(ValueError):
    pass


class SolverStuck(RuntimeError):
    pass


class SolutionFamily:
    """All coordinates as polynomials in the listed parameters (none = a point)."""

    __slots__ = ("params", "coords")

    def __init__(self, params, coords):
        self.params = tuple(params)
        self.coords = tuple(coords)

    def is_point(self) -> bool:
        return not self.params

    def point(self) -> Element:
        if not self.is_point():
            raise ValueError("family with parameters is not a single point")
        return Element([c.constant() for c in self.coords])

    def instantiate(self, values) -> Element:
        values = list(values)
        if len(values) != len(self.params):
            raise ValueError("parameter count mismatch")
        return Element([c.evaluate(values) for c in self.coords])

    def describe(self, basis_names) -> str:
        parts = []
        for name, poly in zip(basis_names, self.coords):
            text = str(poly)
            if text == "0":
                continue
            if text == "1":
                parts.append(name)
            elif set(text) <= set("0123456789/-") or text in self.params:
                parts.append(f"{text}*{name}")
            else:
                parts.append(f"({text})*{name}")
        body = " + ".join(parts) if parts else "0"
        if self.params:
            return f"{body}  for any {', '.join(self.params)}"
        return body

    def __eq__(self, other):
        if not isinstance(other, SolutionFamily):
            return NotImplemented
        return self.params == other.params and self.coords == other.coords

    def __hash__(self):
        return hash((self.params, self.coords))


def _univariate_roots(eq: MultiPoly, var: str) -> list[FieldElement]:
    """Roots in Q(l) of an equation using only `var`, degree <= 2."""
    deg = eq.degree_in(var)
    c0 = eq.coeff_of(var, 0).constant()
    c1 = eq.coeff_of(var, 1).constant()
    if deg == 1:
        return [-c0 / c1]
    c2 = eq.coeff_of(var, 2).constant()
    disc = c1 * c1 - FieldElement(4) * c2 * c0
    roots = []
    for s in field_sqrts(disc):
        r = (-c1 + s) / (FieldElement(2) * c2)
        if r not in roots:
            roots.append(r)
    return sorted(roots, key=str)


def _divide_by_var(eq: MultiPoly, var: str) -> MultiPoly:
    i = eq.ctx.index[var]
    terms = {}
    for e, c in eq.terms.items():
        e2 = list(e)
        e2[i] -= 1
        terms[tuple(e2)] = c
    return MultiPoly(eq.ctx, terms)


def solve_quadratic_system(ctx: PolyContext, equations) -> list[dict[str, MultiPoly]]:
    """All solutions of the system, as maps var -> polynomial in the
    remaining free variables (free variables map to themselves)."""
    solutions = []
    seen = set()

    def assign(equations, assignments, var, value: MultiPoly):
        # `value` never mentions `var` itself (it is a coeff_of(var, ...) slice
        # or a constant), so a single substitution pass is enough
        new_eqs = [eq.substitute(var, value) for eq in equations]
        new_assign = {v: p.substitute(var, value) for v, p in assignments.items()}
        new_assign[var] = value
        return new_eqs, new_assign

    def run(equations, assignments):
        equations = [eq for eq in equations if not eq.is_zero()]
        for eq in equations:
            if eq.is_constant():
                return  # nonzero constant: inconsistent branch
        if not equations:
            sol = dict(assignments)
            for name in ctx.names:
                sol.setdefault(name, ctx.var(name))
            key = tuple(sorted((v, tuple(sorted(p.terms.items()))) for v, p in sol.items()))
            if key not in seen:
                seen.add(key)
                solutions.append(sol)
            return

        # move 1: variable occurring linearly with a constant coefficient;
        # prefer the substitution with the lowest-degree right hand side
        best = None
        for eq in equations:
            for var in sorted(eq.variables_used()):
                if eq.degree_in(var) != 1:
                    continue
                lead = eq.coeff_of(var, 1)
                if not lead.is_constant():
                    continue
                rest = eq.coeff_of(var, 0)
                cand = (rest.total_degree(), ctx.names.index(var), eq, var, lead, rest)
                if best is None or cand[:2] < best[:2]:
                    best = cand
        if best is not None and best[0] <= 1:
            _, _, eq, var, lead, rest = best
            value = rest.scale(-lead.constant().inverse())
            run(*assign([e for e in equations if e is not eq], assignments, var, value))
            return

        # move 2: univariate equation of degree <= 2, solved exactly in Q(l)
        for eq in equations:
            used = eq.variables_used()
            if len(used) == 1:
                var = next(iter(used))
                if eq.degree_in(var) <= 2:
                    rest = [e for e in equations if e is not eq]
                    for root in _univariate_roots(eq, var):
                        run(*assign(rest, assignments, var, ctx.const(root)))
                    return

        # move 3: every term divisible by some variable: branch var = 0 / quotient
        for eq in equations:
            for var in sorted(eq.variables_used()):
                if eq.coeff_of(var, 0).is_zero():
                    rest = [e for e in equations if e is not eq]
                    run(*assign(rest + [eq], assignments, var, ctx.zero()))
                    run(rest + [_divide_by_var(eq, var)], assignments)
                    return

        # move 4: fall back to the deferred linear substitution (degree growth)
        if best is not None:
            _, _, eq, var, lead, rest = best
            value = rest.scale(-lead.constant().inverse())
            run(*assign([e for e in equations if e is not eq], assignments, var, value))
            return

        raise SolverStuck(
            "quadratic system not triangularizable by the supported moves: "
            + "; ".join(str(e) for e in equations)
        )

    run(list(equations), {})
    return solutions


def _check_dim(algebra: Algebra):
    if algebra.dim > SOLVER_DIM_LIMIT:
        raise UnsupportedDimension(
            f"solver supports dimension <= {SOLVER_DIM_LIMIT}; "
            f"got {algebra.dim} (verification operations have no such bound)"
        )


def find_weights(algebra: Algebra) -> list[WeightFunction]:
    """All nonzero multiplicative weight functions of a dim <= 3 algebra."""
    _check_dim(algebra)
    n = algebra.dim
    ctx = PolyContext([f"w{i + 1}" for i in range(n)])
    equations = []
    for i in range(n):
        for j in range(i, n):
            eq = ctx.var(ctx.names[i]) * ctx.var(ctx.names[j])
            for k, c in algebra.products(i, j):
                eq = eq - ctx.var(ctx.names[k]).scale(c)
            equations.append(eq)
    out = []
    for sol in solve_quadratic_system(ctx, equations):
        coords = []
        for name in ctx.names:
            poly = sol[name]
            if not poly.is_constant():
                raise SolverStuck("weight system unexpectedly left a free parameter")
            coords.append(poly.constant())
        w = WeightFunction(coords)
        if w.is_zero() or w in out:
            continue
        ok, violations = verify_weight(algebra, w)
        assert ok, f"solver produced a non-multiplicative weight: {violations}"
        out.append(w)
    return sorted(out, key=lambda w: tuple(str(c) for c in w.weights))


def find_idempotents(algebra: Algebra, w: WeightFunction) -> list[SolutionFamily]:
    """All weight-1 idempotents of a dim <= 3 algebra, as solution families.

    The affine slice w(x) = 1 removes one coordinate up front; the remaining
    quadratic system x*x = x is eliminated exactly.
    """
    _check_dim(algebra)
    n = algebra.dim
    if all(c.is_zero() for c in w.weights):
        raise ValueError("weight function is identically zero")
    ctx = PolyContext([f"x{i + 1}" for i in range(n)])
    x = GenericElement(ctx, [ctx.var(name) for name in ctx.names])
    square = generic_mul(algebra, x, x)
    equations = [square.coords[k] - x.coords[k] for k in range(n)]

    pivot = next(i for i in range(n) if not w.weights[i].is_zero())
    slice_value = ctx.const(ONE)
    for i in range(n):
        if i != pivot and not w.weights[i].is_zero():
            slice_value = slice_value - ctx.var(ctx.names[i]).scale(w.weights[i])
    slice_value = slice_value.scale(w.weights[pivot].inverse())
    equations = [eq.substitute(ctx.names[pivot], slice_value) for eq in equations]

    families = []
    for sol in solve_quadratic_system(ctx, equations):
        sol[ctx.names[pivot]] = slice_value
        for name in ctx.names:
            if name != ctx.names[pivot]:
                sol[ctx.names[pivot]] = sol[ctx.names[pivot]].substitute(name, sol[name])
        free = sorted(
            {v for name in ctx.names for v in sol[name].variables_used()},
            key=ctx.names.index,
        )
        pnames = ["t"] if len(free) == 1 else [f"t{i + 1}" for i in range(len(free))]
        pctx = PolyContext(pnames)
        rename = dict(zip(free, pnames))
        coords = [_rename_poly(sol[name], pctx, rename) for name in ctx.names]
        fam = SolutionFamily(pnames if free else (), coords)
        if fam not in families:
            families.append(fam)
    return sorted(families, key=lambda f: (len(f.params), tuple(str(c) for c in f.coords)))


def _rename_poly(poly: MultiPoly, new_ctx: PolyContext, rename: dict[str, str]) -> MultiPoly:
    out = {}
    for e, c in poly.terms.items():
        e2 = [0] * new_ctx.nvars
        for i, k in enumerate(e):
            if k:
                e2[new_ctx.index[rename[poly.ctx.names[i]]]] = k
        out[tuple(e2)] = c
    return MultiPoly(new_ctx, out)
