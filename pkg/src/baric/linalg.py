"""Exact dense linear algebra over Q(l): Gauss-Jordan elimination,
nullspaces, span membership and minimal polynomials.

Matrices are lists of rows of FieldElement.  Everything here is small
(algebra dimension sized), so clarity beats asymptotics.
"""

from __future__ import annotations

from baric.numberfield import ONE, ZERO, FieldElement


def identity(n: int) -> list[list[FieldElement]]:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    n, m, p = len(A), len(B), len(B[0]) if B else 0
    out = [[ZERO] * p for _ in range(n)]
    for i in range(n):
        for k in range(m):
            aik = A[i][k]
            if aik.is_zero():
                continue
            for j in range(p):
                if not B[k][j].is_zero():
                    out[i][j] = out[i][j] + aik * B[k][j]
    return out


def mat_vec(A, v):
    out = []
    for row in A:
        s = ZERO
        for aij, vj in zip(row, v):
            if not aij.is_zero() and not vj.is_zero():
                s = s + aij * vj
        out.append(s)
    return out


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A, c):
    return [[a * c for a in row] for row in A]


def rref(rows):
    """Reduced row echelon form (pivots 1, zeros above and below).

    Returns (new_rows, pivot_columns); input is not modified.
    """
    rows = [list(r) for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if not rows[i][c].is_zero()), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def nullspace(rows, ncols: int):
    """Reduced-echelon basis of the right kernel, deterministic."""
    if not rows:
        return [[ONE if i == j else ZERO for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -red[r][f]
        basis.append(v)
    if not basis:
        return []
    echelon, _ = rref(basis)
    return [row for row in echelon if any(not x.is_zero() for x in row)]


def solve_in_span(vectors, target):
    """Coefficients writing `target` as a combination of `vectors`, or None.

    With an empty vector list the answer is [] iff target is zero.
    """
    if not vectors:
        return [] if all(x.is_zero() for x in target) else None
    n = len(target)
    aug = [[vec[i] for vec in vectors] + [target[i]] for i in range(n)]
    red, pivots = rref(aug)
    ncols = len(vectors)
    if ncols in pivots:
        return None
    coeffs = [ZERO] * ncols
    for r, p in enumerate(pivots):
        coeffs[p] = red[r][ncols]
    return coeffs


def vec_in_span(vectors, target) -> bool:
    return solve_in_span(vectors, target) is not None


def minimal_polynomial_coeffs(M) -> list[FieldElement]:
    """Monic minimal polynomial of a square matrix, ascending coefficients.

    Found as the first linear dependence among the vectorized powers
    I, M, M^2, ...; a 0x0 matrix has minimal polynomial 1.
    """
    n = len(M)
    if n == 0:
        return [ONE]
    powers = [identity(n)]
    vecs = []
    while True:
        cur = powers[-1]
        vec = [cur[i][j] for i in range(n) for j in range(n)]
        combo = solve_in_span(vecs, vec)
        if combo is not None:
            coeffs = [-c for c in combo] + [ONE]
            return coeffs
        vecs.append(vec)
        powers.append(mat_mul(cur, M))
