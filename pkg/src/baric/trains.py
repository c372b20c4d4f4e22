"""Principal train equations: discovery, the (X - a)-multiplication calculus,
and classification of the low-rank cases.

A principal train equation of rank n says
x^n + g_1*w(x)*x^(n-1) + ... + g_(n-1)*w(x)^(n-1)*x = 0 identically, with n
minimal.  The defect is linear in the g_i, so discovery is an exact linear
solve over the coefficients of the generic defect, tried at increasing rank.
"""

from __future__ import annotations

from typing import NamedTuple

from baric import linalg
from baric.algebra import Algebra, WeightFunction
from baric.identities import eval_expr
from baric.numberfield import HALF, LAMBDA, LAMBDA_BAR, ONE, ZERO, FieldElement
from baric.sympoly import generic_element, generic_mul, weight_poly
from baric.terms import IdentityExpr, principal_power_term, var
from baric.unipoly import UniPoly

DEFAULT_MAX_RANK = 8

# candidate train roots, tried in this fixed order
ROOT_ORDER = (
    ("0", ZERO),
    ("1", ONE),
    ("1/2", HALF),
    ("l", LAMBDA),
    ("lbar", LAMBDA_BAR),
)


class TrainEquation(NamedTuple):
    rank: int
    gammas: tuple  # g_1 .. g_(rank-1)


def find_train_equation(
    algebra: Algebra, w: WeightFunction, max_rank: int = DEFAULT_MAX_RANK
) -> TrainEquation | None:
    """Smallest-rank principal train equation with rank <= max_rank, or None.

    For each candidate rank the unknown coefficient vector must make every
    monomial of every coordinate of the generic defect vanish; the resulting
    linear system is solved exactly (free coefficients pinned to zero).
    """
    if max_rank < 2:
        raise ValueError("max_rank must be >= 2")
    x = generic_element(algebra, "x")
    wx = weight_poly(algebra, w, x)
    powers = [None, x]
    for _ in range(max_rank - 1):
        powers.append(generic_mul(algebra, x, powers[-1]))
    wpow = [x.ctx.one()]
    for _ in range(max_rank - 1):
        wpow.append(wpow[-1] * wx)

    for n in range(2, max_rank + 1):
        target = powers[n]
        columns = [
            [wpow[i] * powers[n - i].coords[k] for k in range(algebra.dim)]
            for i in range(1, n)
        ]
        rows = []
        rhs = []
        for k in range(algebra.dim):
            monomials = set(target.coords[k].terms)
            for col in columns:
                monomials.update(col[k].terms)
            for e in sorted(monomials):
                rows.append([col[k].coefficient(e) for col in columns])
                rhs.append(-target.coords[k].coefficient(e))
        aug = [row + [b] for row, b in zip(rows, rhs)]
        red, pivots = linalg.rref(aug)
        if n - 1 in pivots:
            continue  # inconsistent: no equation at this rank
        gammas = [ZERO] * (n - 1)
        for r, p in enumerate(pivots):
            gammas[p] = red[r][n - 1]
        return TrainEquation(n, tuple(gammas))
    return None


def train_defect_expr(rank: int, gammas) -> IdentityExpr:
    """x^n + sum_i g_i * w(x)^i * x^(n-i) as an identity expression."""
    x = var("x")
    expr = IdentityExpr.from_term(principal_power_term(x, rank))
    for i, g in enumerate(gammas, start=1):
        mono = IdentityExpr.from_term(principal_power_term(x, rank - i), g)
        for _ in range(i):
            mono = mono * IdentityExpr.weight_factor(x)
        expr = expr + mono
    return expr


def satisfies_train_identity(algebra: Algebra, w: WeightFunction, rank: int, gammas) -> bool:
    """Identity-engine check that the given train relation holds identically."""
    x = generic_element(algebra, "x")
    defect = train_defect_expr(rank, gammas)
    return eval_expr(algebra, w, defect, {"x": x}).is_zero()


def phi_apply(alpha: FieldElement, p: UniPoly) -> UniPoly:
    """Multiplication by (X - alpha) on univariate polynomials."""
    return UniPoly.x_minus(alpha) * p


MU = UniPoly([ZERO, -ONE, ONE])  # X^2 - X


def train_poly(eq: TrainEquation) -> UniPoly:
    """X^n + g_1*X^(n-1) + ... + g_(n-1)*X."""
    coeffs = [ZERO] + list(reversed(eq.gammas)) + [ONE]
    return UniPoly(coeffs)


class FactorResult(NamedTuple):
    roots: tuple  # (tag, multiplicity) pairs in ROOT_ORDER order
    remainder: UniPoly | None  # unsplit part of degree >= 1, None on success
    scalar: FieldElement  # leading constant left after extracting the roots

    @property
    def split(self) -> bool:
        return self.remainder is None

    def multiplicity(self, tag: str) -> int:
        return dict(self.roots).get(tag, 0)


def factor_train_poly(p: UniPoly) -> FactorResult:
    """Divide out roots from {0, 1, 1/2, l, lbar} with multiplicity.

    Succeeds iff the polynomial splits over that set; otherwise the unsplit
    remainder comes back for diagnosis.
    """
    roots = []
    rem = p
    for tag, alpha in ROOT_ORDER:
        count = 0
        while rem.degree() >= 1 and rem.evaluate(alpha).is_zero():
            rem, r = rem.divmod(UniPoly.x_minus(alpha))
            assert r.is_zero()
            count += 1
        if count:
            roots.append((tag, count))
    if rem.degree() >= 1:
        return FactorResult(tuple(roots), rem, rem.leading())
    return FactorResult(tuple(roots), None, rem.coeff(0))


def format_factorization(result: FactorResult) -> str:
    pieces = []
    for tag, count in result.roots:
        if tag == "0":
            base = "X"
        else:
            base = f"(X-{tag})"
        pieces.append(base if count == 1 else f"{base}^{count}")
    text = "".join(pieces) if pieces else "1"
    if result.remainder is not None:
        text += f" * [{result.remainder}]"
    return text


class Rank3Result(NamedTuple):
    matched: bool
    gamma: FieldElement | None


def classify_rank3(eq: TrainEquation) -> Rank3Result:
    """Rank-3 equations must be x^3 - (1+g)*w*x^2 + g*w^2*x with
    g in {0, l, lbar}; equivalently g*(2g^2 + g + 3) = 0."""
    if eq.rank != 3:
        raise ValueError(f"expected a rank-3 equation, got rank {eq.rank}")
    g1, g2 = eq.gammas
    g = g2
    if g1 != -(ONE + g):
        return Rank3Result(False, None)
    if not (g * (FieldElement(2) * g * g + g + FieldElement(3))).is_zero():
        return Rank3Result(False, None)
    return Rank3Result(True, g)


class Rank4Form(NamedTuple):
    form: str
    gamma: FieldElement | None
    gammas: tuple


class Rank4Result(NamedTuple):
    matched: bool
    forms: tuple  # Rank4Form entries that matched


def _rank4_forms():
    two = FieldElement(2)
    three_half = FieldElement(3) / two
    forms = []
    for g in (ZERO, LAMBDA, LAMBDA_BAR):
        forms.append(Rank4Form("i", g, (-(ONE + g), g, ZERO)))
    forms.append(Rank4Form("ii", None, (-HALF, ONE, -three_half)))
    for g in (HALF, LAMBDA, LAMBDA_BAR):
        forms.append(
            Rank4Form("iii", g, (-(three_half + g), HALF + three_half * g, -(g / two)))
        )
    for g in (LAMBDA, LAMBDA_BAR):
        forms.append(Rank4Form("iv", g, (-(ONE + two * g), g * (g + two), -(g * g))))
    # root pattern X^2 (X-1) (X-1/2): the iii shape at gamma = 0, which the
    # listed parameter set excludes but the case split produces
    forms.append(Rank4Form("iii0", ZERO, (-three_half, HALF, ZERO)))
    return tuple(forms)


RANK4_FORMS = _rank4_forms()


def classify_rank4(eq: TrainEquation) -> Rank4Result:
    """Match a rank-4 equation against the admissible coefficient families."""
    if eq.rank != 4:
        raise ValueError(f"expected a rank-4 equation, got rank {eq.rank}")
    hits = tuple(f for f in RANK4_FORMS if f.gammas == eq.gammas)
    return Rank4Result(bool(hits), hits)


class RootProfile(NamedTuple):
    matched: bool
    r: int | None  # multiplicity of 1/2
    s: int | None  # multiplicity of l
    t: int | None  # multiplicity of lbar


def train_root_profile(eq: TrainEquation) -> RootProfile:
    """Does the train polynomial factor as X(X-1)(X-1/2)^r(X-l)^s(X-lbar)^t?

    Exponents satisfy r+s+t = rank-2 when they exist.  Meaningful when the
    source algebra has A_0 = 0; the caller is responsible for that
    hypothesis.
    """
    result = factor_train_poly(train_poly(eq))
    if not result.split:
        return RootProfile(False, None, None, None)
    if result.multiplicity("0") != 1 or result.multiplicity("1") != 1:
        return RootProfile(False, None, None, None)
    r = result.multiplicity("1/2")
    s = result.multiplicity("l")
    t = result.multiplicity("lbar")
    assert r + s + t == eq.rank - 2
    return RootProfile(True, r, s, t)
